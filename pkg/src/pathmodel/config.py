"""Process-wide knobs.

The Weyl-order bound keeps enumeration-heavy routines away from the E types
unless a caller raises it explicitly.
"""
import os

DEFAULT_WEYL_ORDER_BOUND = 1152  # |W(F4)|

_weyl_order_bound = DEFAULT_WEYL_ORDER_BOUND


def weyl_order_bound() -> int:
    return _weyl_order_bound


def set_weyl_order_bound(n: int) -> None:
    global _weyl_order_bound
    if n < 1:
        raise ValueError("Weyl-order bound must be positive")
    _weyl_order_bound = int(n)


def default_workers() -> int:
    return max(1, int(os.environ.get("PATHMODEL_WORKERS", "1")))
