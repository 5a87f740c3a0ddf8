"""Where can a sentinel go so a word becomes a Burrows-Wheeler transform image?

The library computes all such positions with an O(n log n) splay-forest
scan, verifies them through independent characterizations and bounds, and
reproduces exhaustive statistics over small word spaces.
"""

from .bounds import BoundsProfile, bounds_profile, is_bad_cycle
from .errors import (
    BadSentinelCountError,
    EmptyWordError,
    InvalidStateError,
    NotABwtImageError,
    NotNicePositionError,
    TooLargeError,
)
from .nice import (
    NiceReport,
    StepRecord,
    find_nice,
    find_nice_fast_start,
    find_nice_naive,
    reconstruct_preimages,
)
from .perm import (
    Permutation,
    advance_insertion,
    insertion_permutation,
    standard_permutation,
    transpose_cycles,
)
from .pseudo import (
    PseudoCycle,
    enumerate_pseudo_cycles,
    nice_by_characterization,
    shift_set,
    unshift_set,
)
from .splay import SplayForest
from .stats import BwtClass, classify, enumerate_stats
from .words import (
    bwt,
    insert_sentinel,
    inverse_bwt_sentinel,
    is_bwt_image,
    is_lyndon,
    is_primitive,
    rotations,
    runlength_gcd,
    runlengths,
)

__all__ = [
    "BadSentinelCountError",
    "BoundsProfile",
    "BwtClass",
    "EmptyWordError",
    "InvalidStateError",
    "NiceReport",
    "NotABwtImageError",
    "NotNicePositionError",
    "Permutation",
    "PseudoCycle",
    "SplayForest",
    "StepRecord",
    "TooLargeError",
    "advance_insertion",
    "bounds_profile",
    "bwt",
    "classify",
    "enumerate_pseudo_cycles",
    "enumerate_stats",
    "find_nice",
    "find_nice_fast_start",
    "find_nice_naive",
    "insert_sentinel",
    "insertion_permutation",
    "inverse_bwt_sentinel",
    "is_bad_cycle",
    "is_bwt_image",
    "is_lyndon",
    "is_primitive",
    "nice_by_characterization",
    "reconstruct_preimages",
    "rotations",
    "runlength_gcd",
    "runlengths",
    "shift_set",
    "standard_permutation",
    "transpose_cycles",
    "unshift_set",
]

__version__ = "0.1.0"
