"""Arithmetic in E = k((t))[z]/(z^p - z - a) and second-level AS reduction.

Elements are sum_i c_i z^i with 0 <= i < p.  When a has valuation -m with
p not dividing m, E is totally ramified of degree p with v_E(t) = p and
v_E(z) = -m, and the monomials z^i t^s have pairwise distinct valuations
p*s - i*m.  That bijection with Z drives the reduction loop below.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._infinity import INF, NEG_INF
from .errors import PrecisionExhausted
from .field_series import LaurentSeries, as_reduce
from .finite_field import coker_representative, fq_solve_artin_schreier
from .ramification import break_compose, phi_single


class ExtElem:
    __slots__ = ("base", "coeffs")

    def __init__(self, base: LaurentSeries, coeffs):
        coeffs = tuple(coeffs)
        p = base.p
        if len(coeffs) > p:
            raise ValueError(f"expected at most {p} coefficients")
        pad = LaurentSeries.zero(base.field, base.window)
        coeffs = coeffs + (pad,) * (p - len(coeffs))
        for c in coeffs:
            if c.field is not base.field:
                raise ValueError("coefficient over a different field")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("ExtElem is immutable")

    @classmethod
    def from_base(cls, base: LaurentSeries, c: LaurentSeries) -> "ExtElem":
        return cls(base, (c,))

    @classmethod
    def z(cls, base: LaurentSeries) -> "ExtElem":
        one = LaurentSeries(base.field, {0: base.field.one()}, base.window, True)
        return cls(base, (LaurentSeries.zero(base.field, base.window), one))

    @classmethod
    def one(cls, base: LaurentSeries) -> "ExtElem":
        return cls(base, (LaurentSeries(base.field, {0: base.field.one()}, base.window, True),))

    @classmethod
    def zero(cls, base: LaurentSeries) -> "ExtElem":
        return cls(base, ())

    @property
    def p(self) -> int:
        return self.base.p

    def _check(self, other: "ExtElem"):
        if not (other.base.same_terms(self.base) and other.base.field is self.base.field):
            raise ValueError("elements of different extensions")

    def __add__(self, other: "ExtElem") -> "ExtElem":
        self._check(other)
        return ExtElem(self.base, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ExtElem":
        return ExtElem(self.base, (-c for c in self.coeffs))

    def __sub__(self, other: "ExtElem") -> "ExtElem":
        return self + (-other)

    def __mul__(self, other: "ExtElem") -> "ExtElem":
        return ext_mul(self, other)

    def scale(self, c: LaurentSeries) -> "ExtElem":
        return ExtElem(self.base, (x * c for x in self.coeffs))

    def __pow__(self, n: int) -> "ExtElem":
        result, base = ExtElem.one(self.base), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def frobenius(self) -> "ExtElem":
        """x^p = sum c_i^p (z + a)^i."""
        z_plus_a = ExtElem(self.base, (self.base, ExtElem.z(self.base).coeffs[1]))
        out = ExtElem.zero(self.base)
        power = ExtElem.one(self.base)
        for i, c in enumerate(self.coeffs):
            if i:
                power = power * z_plus_a
            if c.terms or not c.exact:
                out = out + power.scale(c.frobenius())
        return out

    def is_zero(self) -> bool:
        return all(not c.terms for c in self.coeffs)

    def same_terms(self, other: "ExtElem") -> bool:
        return all(a.same_terms(b) for a, b in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        parts = [f"({c!r})*z^{i}" for i, c in enumerate(self.coeffs) if c.terms or not c.exact]
        return "ExtElem(" + (" + ".join(parts) or "0") + ")"

    # -- valuation data -------------------------------------------------------
    def base_break(self) -> int:
        v = self.base.valuation()
        if v is INF or v >= 0 or v % self.p == 0:
            raise ValueError("base parameter must have negative valuation prime to p")
        return -v

    def precision(self):
        """v_E value from which terms are unknown (INF when all slots are exact)."""
        m = self.base_break()
        p = self.p
        return min((p * c.hi - i * m for i, c in enumerate(self.coeffs) if not c.exact), default=INF)

    def monomials(self) -> dict[int, tuple[int, int, object]]:
        """Map v_E value -> (slot i, t-exponent s, coefficient)."""
        m = self.base_break()
        p = self.p
        out = {}
        for i, c in enumerate(self.coeffs):
            for s, coef in c.terms.items():
                out[p * s - i * m] = (i, s, coef)
        return out


def ext_mul(x: ExtElem, y: ExtElem) -> ExtElem:
    """Product in the quotient ring, rewriting z^p as z + a."""
    x._check(y)
    p = x.p
    a = x.base
    prod = [None] * (2 * p - 1)
    for i, ci in enumerate(x.coeffs):
        if not ci.terms and ci.exact:
            continue
        for j, dj in enumerate(y.coeffs):
            if not dj.terms and dj.exact:
                continue
            term = ci * dj
            prod[i + j] = term if prod[i + j] is None else prod[i + j] + term
    for k in range(2 * p - 2, p - 1, -1):
        c = prod[k]
        if c is None:
            continue
        # z^k = z^(k-p) * (z + a)
        up = k - p + 1
        prod[up] = c if prod[up] is None else prod[up] + c
        low = c * a
        prod[k - p] = low if prod[k - p] is None else prod[k - p] + low
    zero = LaurentSeries.zero(a.field, a.window)
    return ExtElem(a, (c if c is not None else zero for c in prod[:p]))


def ext_valuation(x: ExtElem) -> int:
    """Normalized v_E: v_E(t) = p, v_E(z) = -m."""
    mons = x.monomials()
    prec = x.precision()
    if not mons:
        if prec is INF:
            raise ValueError("valuation of the zero element")
        raise PrecisionExhausted("no known term below the precision limit")
    v = min(mons)
    if v >= prec:
        raise PrecisionExhausted("leading term lies beyond the precision limit")
    return v


@dataclass(frozen=True)
class ExtReduction:
    relative_break: object
    reduced: ExtElem
    witness: ExtElem


def _monomial(base: LaurentSeries, i: int, s: int, c) -> ExtElem:
    coeffs = [LaurentSeries.zero(base.field, base.window) for _ in range(base.p)]
    coeffs[i] = LaurentSeries(base.field, {s: c}, base.window, True)
    return ExtElem(base, coeffs)


def ext_as_reduce(b: ExtElem) -> ExtReduction:
    """Reduce b modulo (F - 1)E.

    Negative-valuation terms divisible by p are removed in increasing order
    of valuation; such a term c t^s sits in slot 0, and it is cancelled by
    the leading term of x^p for x = (c / alpha^r)^{1/p} z^r t^{s'} where
    alpha is the leading coefficient of a and r*m = -s mod p.  The constant
    is canonicalised and the positive part absorbed by a convergent series.
    """
    base = b.base
    m = b.base_break()
    p = b.p
    f = base.field
    alpha = base.terms[-m]
    prec = b.precision()
    if not prec > 0:
        raise PrecisionExhausted("element is not known up to valuation 0")

    cur = b
    w = ExtElem.zero(base)
    while True:
        mons = cur.monomials()
        todo = [v for v in mons if v < 0 and v % p == 0]
        if not todo:
            break
        v = min(todo)
        i, s, c = mons[v]
        assert i == 0
        r = (-s * pow(m, -1, p)) % p
        s2 = (s + r * m) // p
        coef = (c / alpha ** r).pth_root()
        x = _monomial(base, r, s2, coef)
        cur = cur - (x.frobenius() - x)
        w = w + x
        if cur.precision() <= 0:
            raise PrecisionExhausted("reduction ran past the precision window")

    const = cur.coeffs[0].terms.get(0, f.zero())
    rep = coker_representative(const)
    y = fq_solve_artin_schreier(const - rep)
    if y.value:
        yx = _monomial(base, 0, 0, y)
        cur = cur - (yx.frobenius() - yx)
        w = w + yx

    mons = cur.monomials()
    keep = [[] for _ in range(p)]
    rest = [[] for _ in range(p)]
    for v, (i, s, c) in mons.items():
        (keep if v <= 0 else rest)[i].append((s, c))
    windows = [c.window for c in cur.coeffs]
    reduced = ExtElem(base, (LaurentSeries(f, dict(keep[i]), base.window, True) for i in range(p)))
    tail = ExtElem(base, (LaurentSeries(f, dict(rest[i]), windows[i], cur.coeffs[i].exact)
                          for i in range(p)))

    # w_tail = -(tail + tail^p + ...), truncated at the precision limit
    limit = cur.precision()
    exact_input = limit is INF
    if exact_input:
        limit = p * base.hi
    acc = ExtElem.zero(base)
    term = tail
    while True:
        mons = term.monomials()
        if not mons or min(mons) >= limit:
            break
        acc = acc + term
        term = term.frobenius()
    if not (exact_input and acc.is_zero()):
        w = _truncate_to(w - acc, limit)

    red_mons = reduced.monomials()
    neg = [v for v in red_mons if v < 0]
    if neg:
        rel = -min(neg)
    elif red_mons:
        rel = 0
    else:
        rel = NEG_INF
    return ExtReduction(relative_break=rel, reduced=reduced, witness=w)


def _truncate_to(x: ExtElem, limit: int) -> ExtElem:
    """Drop every monomial of v_E >= limit, marking slots inexact accordingly."""
    m = x.base_break()
    p = x.p
    out = []
    for i, c in enumerate(x.coeffs):
        # p*s - i*m < limit  <=>  s < (limit + i*m) / p
        hi = -((-(limit + i * m)) // p)
        out.append(c.truncate(hi))
    return ExtElem(x.base, out)


def rebase(coeffs, a: LaurentSeries) -> ExtElem:
    """Rewrite sum c_i z^i, with z^p - z = a, over the reduced form of a.

    If a - a_red = w^p - w then z = z' + w with z'^p - z' = a_red.
    """
    nf = as_reduce(a)
    base = nf.reduced
    shift = ExtElem(base, (nf.witness, ExtElem.z(base).coeffs[1]))
    out = ExtElem.zero(base)
    power = ExtElem.one(base)
    for i, c in enumerate(coeffs):
        if i:
            power = power * shift
        out = out + power.scale(c)
    return out


def tower2_break(a: LaurentSeries, b) -> object:
    """Highest break over k((t)) of the depth-2 tower given by a, then b.

    ``b`` is either an :class:`ExtElem` over a already in reduced form, or a
    sequence of p coefficient series in the variable z with z^p - z = a.
    """
    nf = as_reduce(a)
    if nf.m is NEG_INF or nf.m == 0:
        raise ValueError("first level must be ramified (break > 0); split it with as_reduce first")
    if isinstance(b, ExtElem):
        elem = b if b.base.same_terms(nf.reduced) else rebase(b.coeffs, b.base)
        if not elem.base.same_terms(nf.reduced):
            raise ValueError("second-level element is not over the given first level")
    else:
        elem = rebase(b, a)
    rel = ext_as_reduce(elem).relative_break
    return break_compose(nf.m, rel, phi_single(nf.m, a.p))
