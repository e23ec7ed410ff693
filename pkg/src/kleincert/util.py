"""Shared small utilities: the infinity weight and exact serialization."""

from __future__ import annotations

from gmpy2 import mpq

__all__ = ["INF", "recip", "ext_str", "p_label", "rat_str"]


class _Infinity:
    """Infinite branching weight; reciprocals of it are exactly 0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INF = _Infinity()


def recip(x) -> mpq:
    """1/x with the convention 1/inf = 0."""
    if x is INF:
        return mpq(0)
    return mpq(1, x)


def ext_str(x) -> str:
    """String form of an integer-or-infinity weight."""
    return "inf" if x is INF else str(x)


def p_label(p) -> str:
    """Check-id suffix for a weight: 'p8', 'pinf', ..."""
    return "pinf" if p is INF else f"p{p}"


def rat_str(q) -> str:
    return str(mpq(q))
