"""Orientable and negative orientable sequences over Z_q."""

from .core import HalfInt, RingSequence, negate, pseudoweight, reverse, weight, windows
from .verify import (
    Verdict,
    is_good,
    is_n_window,
    is_negative_orientable,
    is_orientable,
    parity_check,
    run_profile,
)
from .counting import k_count, nos_bound, r_count
from .construct import (
    ConstructionReport,
    maximal_os2,
    nos2_construction1,
    nos_construction2,
    nos_construction3,
)
from .lempel import build_os3, build_os_n, d_beta, inverse_lift, recursive_tower

__version__ = "0.1.0"
