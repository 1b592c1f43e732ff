"""Herbrand functions and highest-break bookkeeping in exact rationals."""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from ._infinity import NEG_INF, is_infinite


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class PhiPsi:
    """Continuous increasing piecewise-linear map anchored at phi(0) = 0.

    ``breakpoints[i]`` is where the slope changes to ``slopes[i]``; below the
    first breakpoint the map is the identity.
    """
    breakpoints: tuple[Fraction, ...] = ()
    slopes: tuple[Fraction, ...] = ()
    p: int | None = None

    def __post_init__(self):
        bps = tuple(as_fraction(b) for b in self.breakpoints)
        sl = tuple(as_fraction(s) for s in self.slopes)
        if len(bps) != len(sl):
            raise ValueError("need one slope per breakpoint")
        if any(b < 0 for b in bps):
            raise ValueError("breakpoints must be nonnegative")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if any(s <= 0 for s in sl):
            raise ValueError("slopes must be positive")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "slopes", sl)

    @classmethod
    def identity(cls, p: int | None = None) -> "PhiPsi":
        return cls((), (), p)

    @classmethod
    def from_breaks(cls, breaks, p: int) -> "PhiPsi":
        """Slope divides by p at each listed break; repeats divide repeatedly."""
        merged: dict[Fraction, int] = {}
        for b in breaks:
            b = as_fraction(b)
            merged[b] = merged.get(b, 0) + 1
        bps, slopes, s = [], [], Fraction(1)
        for b in sorted(merged):
            s /= Fraction(p) ** merged[b]
            bps.append(b)
            slopes.append(s)
        return cls(tuple(bps), tuple(slopes), p)

    def breaks_with_multiplicity(self) -> list[Fraction]:
        """Inverse of :meth:`from_breaks`; requires every drop to be a power of p."""
        if self.p is None:
            raise ValueError("no base prime recorded")
        out, prev = [], Fraction(1)
        for b, s in zip(self.breakpoints, self.slopes):
            ratio, k = prev / s, 0
            while ratio > 1 and ratio.denominator == 1 and ratio.numerator % self.p == 0:
                ratio /= self.p
                k += 1
            if ratio != 1 or k == 0:
                raise ValueError("slope drops are not powers of p")
            out.extend([b] * k)
            prev = s
        return out

    def _values(self) -> list[Fraction]:
        vals, prev_x, prev_v, slope = [], Fraction(0), Fraction(0), Fraction(1)
        for b, s in zip(self.breakpoints, self.slopes):
            prev_v = prev_v + slope * (b - prev_x)
            vals.append(prev_v)
            prev_x, slope = b, s
        return vals

    def slope_right_of(self, x) -> Fraction:
        i = bisect_right(self.breakpoints, as_fraction(x))
        return Fraction(1) if i == 0 else self.slopes[i - 1]

    def __call__(self, x) -> Fraction:
        x = as_fraction(x)
        i = bisect_right(self.breakpoints, x)
        if i == 0:
            return x
        b = self.breakpoints[i - 1]
        return self._values()[i - 1] + self.slopes[i - 1] * (x - b)

    def psi(self, y) -> Fraction:
        return psi_eval(self, y)


def phi_single(m, p: int) -> PhiPsi:
    """phi of a degree-p step with break m: x below m, m + (x - m)/p above."""
    m = as_fraction(m)
    if m <= 0:
        raise ValueError("break must be positive")
    return PhiPsi((m,), (Fraction(1, p),), p)


def psi_eval(f: PhiPsi, y) -> Fraction:
    y = as_fraction(y)
    if y < -1:
        raise ValueError(f"{y} lies outside the domain [-1, inf)")
    vals = f._values()
    i = bisect_right(vals, y)
    if i == 0:
        return y
    return f.breakpoints[i - 1] + (y - vals[i - 1]) / f.slopes[i - 1]


def phi_compose(outer: PhiPsi, inner: PhiPsi) -> PhiPsi:
    """outer o inner, with exact merged breakpoints."""
    cand = set(inner.breakpoints) | {psi_eval(inner, b) for b in outer.breakpoints}
    bps, slopes, prev = [], [], Fraction(1)
    for x in sorted(cand):
        s = inner.slope_right_of(x) * outer.slope_right_of(inner(x))
        if s != prev:
            bps.append(x)
            slopes.append(s)
            prev = s
    p = outer.p if outer.p is not None else inner.p
    return PhiPsi(tuple(bps), tuple(slopes), p)


def break_compose(b_base, b_rel, phi_base: PhiPsi):
    """Highest break of a tower from the base break and the relative break."""
    if is_infinite(b_rel):
        if b_rel is not NEG_INF:
            raise ValueError("relative break cannot be +inf")
        return b_base
    lifted = phi_base(b_rel)
    if is_infinite(b_base):
        return lifted
    return max(as_fraction(b_base), lifted)


def tower_break_bound(d: int, ell) -> Fraction:
    """Upper bound d * ell for a length-d tower with parameters of depth <= ell."""
    if d < 1:
        raise ValueError("tower length must be positive")
    ell = as_fraction(ell)
    if ell < 0:
        raise ValueError("depth bound must be nonnegative")
    return d * ell
