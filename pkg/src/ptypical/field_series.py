"""Truncated Laurent series over F_q and Artin-Schreier normal forms.

A :class:`LaurentSeries` stores finitely many nonzero terms inside a window
``[lo, hi)``.  Exponents below ``lo`` are zero; exponents at or above ``hi``
are unknown unless the series is flagged ``exact`` (a Laurent polynomial),
in which case nothing is unknown and ``hi`` is only a declared range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ._infinity import INF, NEG_INF
from .errors import PrecisionExhausted
from .finite_field import (
    FqElem,
    GF,
    coker_representative,
    fq_solve_artin_schreier,
    get_field,
)

DEFAULT_WINDOW = (-64, 64)


class LaurentSeries:
    __slots__ = ("field", "terms", "lo", "hi", "exact")

    def __init__(self, field: GF, terms: Mapping[int, FqElem] | None = None,
                 window: tuple[int, int] = DEFAULT_WINDOW, exact: bool = True):
        lo, hi = window
        clean = {}
        for k, c in (terms or {}).items():
            if not isinstance(c, FqElem):
                c = field(c)
            elif c.field is not field:
                raise ValueError("coefficient from a different field")
            if c.value:
                clean[int(k)] = c
        if clean:
            if exact:
                lo = min(lo, min(clean))
                hi = max(hi, max(clean) + 1)
            else:
                clean = {k: c for k, c in clean.items() if k < hi}
                if clean and min(clean) < lo:
                    raise ValueError(f"term below window start {lo}")
        if lo > hi:
            raise ValueError(f"empty window [{lo}, {hi})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "exact", bool(exact))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_dict(cls, p: int, e: int, coeffs: Mapping[int, object],
                  window=DEFAULT_WINDOW, exact=True) -> "LaurentSeries":
        """Build from ``{exponent: int or coordinate list}``."""
        F = get_field(p, e)
        return cls(F, {k: F(v) for k, v in coeffs.items()}, window, exact)

    @classmethod
    def monomial(cls, field: GF, exponent: int, coeff=1, window=DEFAULT_WINDOW) -> "LaurentSeries":
        return cls(field, {exponent: field(coeff)}, window, True)

    @classmethod
    def zero(cls, field: GF, window=DEFAULT_WINDOW, exact=True) -> "LaurentSeries":
        return cls(field, {}, window, exact)

    def _new(self, terms, lo, hi, exact):
        return LaurentSeries(self.field, terms, (lo, hi), exact)

    # -- inspection ---------------------------------------------------------
    @property
    def p(self) -> int:
        return self.field.p

    @property
    def window(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    @property
    def precision(self):
        """Exponent from which terms are unknown (INF when exact)."""
        return INF if self.exact else self.hi

    def valuation(self):
        """Least exponent with a nonzero coefficient; INF for zero."""
        if self.terms:
            return next(iter(self.terms))
        return INF

    def lower_bound(self):
        # every term of the true series sits at or above this
        if self.terms:
            return next(iter(self.terms))
        return INF if self.exact else self.hi

    def coeff(self, k: int) -> FqElem:
        if not self.exact and k >= self.hi:
            raise PrecisionExhausted(f"coefficient of t^{k} lies beyond precision {self.hi}")
        return self.terms.get(k, self.field.zero())

    def is_zero(self) -> bool:
        """True when no known term is nonzero (the unknown tail is ignored)."""
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def same_terms(self, other: "LaurentSeries") -> bool:
        return self.terms == other.terms

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.field is other.field and self.terms == other.terms
                and self.window == other.window and self.exact == other.exact)

    def __hash__(self):
        return hash((self.field.p, self.field.e, tuple(self.terms.items()), self.window, self.exact))

    def __repr__(self):
        if not self.terms:
            body = "0"
        else:
            body = " + ".join(f"{c!r}*t^{k}" for k, c in self.terms.items())
        tail = "" if self.exact else f" + O(t^{self.hi})"
        return f"LaurentSeries({body}{tail})"

    def truncate(self, hi: int) -> "LaurentSeries":
        """Forget every term at exponent >= hi."""
        if not self.exact:
            hi = min(hi, self.hi)
        return self._new({k: c for k, c in self.terms.items() if k < hi}, min(self.lo, hi), hi, False)

    def split_at_zero(self):
        """(polar part, constant, positive part)."""
        polar = {k: c for k, c in self.terms.items() if k < 0}
        pos = {k: c for k, c in self.terms.items() if k > 0}
        const = self.terms.get(0, self.field.zero())
        return polar, const, pos

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "LaurentSeries"):
        if other.field is not self.field:
            raise ValueError("series over different fields")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            s = c if s is None else s + c
            if s.value:
                terms[k] = s
            else:
                terms.pop(k, None)
        exact = self.exact and other.exact
        if exact:
            hi = max(self.hi, other.hi)
        else:
            hi = min(self.precision, other.precision)
        return self._new(terms, min(self.lo, other.lo), hi, exact)

    def __neg__(self) -> "LaurentSeries":
        return self._new({k: -c for k, c in self.terms.items()}, self.lo, self.hi, self.exact)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c: FqElem) -> "LaurentSeries":
        return self._new({k: v * c for k, v in self.terms.items()}, self.lo, self.hi, self.exact)

    def shift(self, n: int) -> "LaurentSeries":
        """Multiply by t^n."""
        return self._new({k + n: c for k, c in self.terms.items()}, self.lo + n, self.hi + n, self.exact)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        exact = self.exact and other.exact
        lo = self.lo + other.lo
        if exact:
            lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        else:
            hi = min(self.precision + other.lower_bound(), other.precision + self.lower_bound())
            if hi == INF:  # one factor is exactly zero
                return self._new({}, min(self.lo, other.lo), max(self.hi, other.hi), True)
        f = self.field
        terms: dict[int, int] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                k = i + j
                if not exact and k >= hi:
                    continue
                terms[k] = f.add(terms.get(k, 0), f.mul(a.value, b.value))
        out = {k: FqElem(f, v) for k, v in terms.items() if v}
        if not exact:
            lo = min(lo, hi)
        return self._new(out, lo, hi, exact)

    def frobenius(self) -> "LaurentSeries":
        """x -> x^p; exponents are multiplied by p."""
        p = self.p
        terms = {k * p: c ** p for k, c in self.terms.items()}
        if self.exact:
            return self._new(terms, self.lo, self.hi, True)
        lo = min(self.lo * p, self.lo)
        return self._new(terms, min(lo, self.hi * p), self.hi * p, False)

    def __pow__(self, n: int) -> "LaurentSeries":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentSeries(self.field, {0: self.field.one()}, (min(0, self.lo), max(1, self.hi)), True)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result


def frobenius_minus_one(x: LaurentSeries) -> LaurentSeries:
    """x^p - x, with the window narrowed to what is still known."""
    return x.frobenius() - x


# -- Artin-Schreier normal forms ---------------------------------------------

@dataclass(frozen=True)
class ASNormalForm:
    """Canonical representative of a class in k((t)) / (F - 1)k((t))."""
    reduced: LaurentSeries
    m: object  # NEG_INF, 0, or a positive int
    witness: LaurentSeries
    split: bool


def _tail_witness(field: GF, pos: dict[int, FqElem], hi, lo: int) -> dict[int, FqElem]:
    """-(b + b^p + b^{p^2} + ...) truncated below hi, for b with positive support."""
    p = field.p
    acc: dict[int, FqElem] = {}
    cur = dict(pos)
    while cur:
        for k, c in cur.items():
            s = acc.get(k)
            s = c if s is None else s + c
            if s.value:
                acc[k] = s
            else:
                acc.pop(k)
        cur = {k * p: c ** p for k, c in cur.items() if k * p < hi}
    return {k: -c for k, c in acc.items()}


def as_reduce(a: LaurentSeries) -> ASNormalForm:
    """Reduce a modulo (F - 1)k((t)).

    Polar terms at exponents divisible by p are pushed up one at a time
    (c t^{-pn} is traded for c^{1/p} t^{-n}); the constant term is replaced
    by its canonical representative in coker(F - 1, F_q); the positive tail
    is absorbed by the convergent series b + b^p + b^{p^2} + ...
    """
    if a.precision <= 0:
        raise PrecisionExhausted(f"window [{a.lo}, {a.hi}) does not determine the constant term")
    f = a.field
    p = f.p
    polar, const, pos = a.split_at_zero()
    polar = dict(polar)
    witness: dict[int, FqElem] = {}

    while True:
        divisible = [k for k in polar if k % p == 0]
        if not divisible:
            break
        k = min(divisible)
        c = polar.pop(k)
        root = c.pth_root()
        n = k // p
        # a - (root t^n)^p + root t^n
        s = polar.get(n)
        s = root if s is None else s + root
        if s.value:
            polar[n] = s
        else:
            polar.pop(n, None)
        witness[n] = witness.get(n, f.zero()) + root

    rep = coker_representative(const)
    y = fq_solve_artin_schreier(const - rep)
    if y is None:  # pragma: no cover - guaranteed by the choice of rep
        raise AssertionError("constant representative is not in the right coset")
    if y.value:
        witness[0] = witness.get(0, f.zero()) + y

    if a.exact and not pos:
        w_exact, w_hi = True, a.hi
    else:
        w_exact, w_hi = False, a.hi
        for k, c in _tail_witness(f, pos, a.hi, a.lo).items():
            witness[k] = witness.get(k, f.zero()) + c

    reduced_terms = dict(polar)
    if rep.value:
        reduced_terms[0] = rep
    reduced = LaurentSeries(f, reduced_terms, a.window, True)
    w = LaurentSeries(f, witness, (a.lo, w_hi), w_exact)
    if polar:
        m = -min(polar)
    elif rep.value:
        m = 0
    else:
        m = NEG_INF
    return ASNormalForm(reduced=reduced, m=m, witness=w, split=not reduced_terms)


def as_break(a: LaurentSeries):
    """Highest break of k((t))[z]/(z^p - z - a): NEG_INF if split, else m >= 0."""
    return as_reduce(a).m


def torsor_isomorphic(a1: LaurentSeries, a2: LaurentSeries):
    """Decide whether a1 - a2 = y^p - y; returns (bool, y or None)."""
    if a1.field is not a2.field:
        raise ValueError("series over different fields")
    n1, n2 = as_reduce(a1), as_reduce(a2)
    if not n1.reduced.same_terms(n2.reduced):
        return False, None
    return True, n1.witness - n2.witness
