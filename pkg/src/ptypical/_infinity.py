"""Signed infinity sentinels for valuations and breaks.

``INF`` is the valuation of zero; ``NEG_INF`` is the break of a split torsor.
Both compare correctly against ints and Fractions and never equal a number.
"""

from functools import total_ordering


@total_ordering
class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __eq__(self, other):
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __lt__(self, other):
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        return self.sign < 0

    def __hash__(self):
        return hash(("inf", self.sign))

    def __add__(self, other):
        if isinstance(other, _Infinity) and other.sign != self.sign:
            raise ArithmeticError("inf - inf is undefined")
        return self

    __radd__ = __add__

    def __neg__(self):
        return INF if self.sign < 0 else NEG_INF

    def __repr__(self):
        return "INF" if self.sign > 0 else "NEG_INF"

    def __str__(self):
        return "inf" if self.sign > 0 else "-inf"


INF = _Infinity(1)
NEG_INF = _Infinity(-1)


def is_infinite(x) -> bool:
    return isinstance(x, _Infinity)
