"""Safety caps for potentially expensive computations.

Defaults are chosen for desk-scale runs.  The environment variable
``DYCKOLAB_CAP`` overrides individual caps with comma-separated
``name=value`` pairs, e.g. ``DYCKOLAB_CAP="enum_len=200,seventhirds_t=4"``.
"""

import os

_DEFAULTS = {
    # longest sequence prefix a census scan may materialize
    "census_prefix": 2**24,
    # longest word accepted by the O(n^2) repetition scans
    "critical_exponent_len": 10**5,
    # longest word length the backtracking enumerator accepts
    "enum_len": 128,
    # iteration caps for the two nesting-level families
    "cubefree_t": 8,
    "seventhirds_t": 3,
    # Rudin-Shapiro block index cap
    "rs_block_n": 7,
    # longest window length for paperfolding scans
    "paperfolding_len": 4096,
}


def get_cap(name: str) -> int:
    if name not in _DEFAULTS:
        raise KeyError(f"unknown cap {name!r}")
    raw = os.environ.get("DYCKOLAB_CAP", "")
    for pair in raw.split(","):
        pair = pair.strip()
        if not pair:
            continue
        if "=" not in pair:
            raise ValueError(
                "DYCKOLAB_CAP entries must look like name=value, got " + pair
            )
        key, _, value = pair.partition("=")
        if key.strip() == name:
            return int(value)
    return _DEFAULTS[name]
