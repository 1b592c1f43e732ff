"""Height functions on Artin-Schreier data over cones.

On a reduced datum (support outside pZ^n, canonical constant) the height
h_lambda is the largest value of lambda on the nonconstant support, and
h_U is its maximum over the vertices of a polytope U.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._infinity import NEG_INF
from .cones import Cone, LinearFunctional, as_functional, cone_contains, lattice_index, m_lambda
from .field_series import LaurentSeries, as_break
from .toric_algebra import ToricDatum, coker_basis_bounded, coker_normal_form, restrict_as


def _check_interior(sigma: Cone, lam: LinearFunctional, points: Iterable = ()):
    if len(lam) != sigma.n:
        raise ValueError("functional has the wrong dimension")
    for r in sigma.rays or ():
        if any(r) and lam(r) <= 0:
            raise ValueError(f"functional is not positive on the ray {tuple(map(str, r))}")
    for v in points:
        if any(v) and lam(v) <= 0:
            raise ValueError(f"functional is not positive at {v}")


def _check_dual(sigma: Cone, lam: LinearFunctional, points: Iterable = ()):
    if len(lam) != sigma.n:
        raise ValueError("functional has the wrong dimension")
    if lam.is_zero():
        raise ValueError("U must avoid the zero functional")
    for r in list(sigma.rays or ()) + list(points):
        if lam(r) < 0:
            raise ValueError("functional in U is not in the dual cone")


def is_reduced(x: ToricDatum) -> bool:
    return coker_normal_form(x)[0] == x


@dataclass(frozen=True)
class HeightQuery:
    datum: ToricDatum
    functional: LinearFunctional
    U: tuple[LinearFunctional, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "functional", as_functional(self.functional))
        if self.U is not None:
            object.__setattr__(self, "U", tuple(as_functional(u) for u in self.U))
        _check_interior(self.datum.cone, self.functional, self.datum.support())
        if not is_reduced(self.datum):
            raise ValueError("datum is not in reduced form")


def _h(x: ToricDatum, lam: LinearFunctional) -> Fraction:
    vals = [lam(v) for v in x.nonconstant_support()]
    return max(vals, default=Fraction(0))


def h_lambda_as(q: HeightQuery | ToricDatum, lam=None) -> Fraction:
    """max lambda(w) over the nonconstant support; 0 when there is none."""
    if not isinstance(q, HeightQuery):
        q = HeightQuery(q, lam)
    return _h(q.datum, q.functional)


def h_U_as(q: HeightQuery | ToricDatum, U: Sequence | None = None, lam=None) -> Fraction:
    """sup over lambda in U of h_lambda; for a polytope U the vertices suffice."""
    if isinstance(q, HeightQuery):
        x, U = q.datum, (q.U if U is None else U)
    else:
        x = q
        if not is_reduced(x):
            raise ValueError("datum is not in reduced form")
    if not U:
        raise ValueError("U must be nonempty")
    U = [as_functional(u) for u in U]
    for u in U:
        _check_dual(x.cone, u, x.support())
    return max(_h(x, u) for u in U)


def ray_coefficients(x: ToricDatum) -> tuple[tuple[int, ...], dict[int, object]]:
    """(v0, {k: c}) with x = sum c [k v0] on a linear cone."""
    v0 = x.cone.generator()
    out = {}
    norm = sum(b * b for b in v0)
    for v, c in x.terms.items():
        k = Fraction(sum(a * b for a, b in zip(v, v0)), norm)
        if k.denominator != 1 or tuple(k * b for b in v0) != v:
            raise ValueError(f"point {v} is not on the ray")
        out[int(k)] = c
    return v0, out


def specialize(x: ToricDatum, window_margin: int = 1) -> LaurentSeries:
    """The ray datum sum c_k [k v0] as the exact Laurent series sum c_k t^{-k}."""
    _, coeffs = ray_coefficients(x)
    top = max(coeffs, default=0)
    return LaurentSeries(x.field, {-k: c for k, c in coeffs.items()},
                         (-top - window_margin, window_margin), True)


def ray_break(x: ToricDatum) -> int:
    """Highest break b of the specialized torsor, with 0 for unramified classes."""
    b = as_break(specialize(x))
    return 0 if b is NEG_INF else int(b)


def c_lambda_linear(x: ToricDatum, lam) -> Fraction:
    """(d'/m_lambda) * b for a datum on a linear cone."""
    lam = as_functional(lam)
    if not x.cone.is_linear():
        raise ValueError("cone is not linear")
    v0 = x.cone.generator()
    if lam(v0) <= 0:
        raise ValueError("functional is not positive on the linear cone")
    b = ray_break(x)
    _, d_prime = lattice_index(lam, x.cone, x.p)
    return Fraction(d_prime) / m_lambda(lam) * b


@dataclass(frozen=True)
class SplitsCheck:
    ok: bool
    lhs: Fraction
    rhs: Fraction

    def __bool__(self):
        return self.ok


def height_splits_check(x: ToricDatum, lam, rays: Sequence[Cone]) -> SplitsCheck:
    """Compare h_lambda(x) with the max of h_lambda over the restrictions to rays."""
    lam = as_functional(lam)
    _check_interior(x.cone, lam, x.support())
    for v in x.nonconstant_support():
        if not any(cone_contains(T, v) for T in rays):
            raise ValueError(f"support point {v} lies on no listed ray")
    lhs = _h(x, lam)
    rhs = max((_h(restrict_as(x, T), lam) for T in rays), default=Fraction(0))
    return SplitsCheck(lhs == rhs, lhs, rhs)


# -- elementary abelian covers ------------------------------------------------
# A cover with group (Z/pZ)^r is given by r data generating it; its height is
# the maximum over every nonzero F_p-combination of the generators.

def span(gens: Sequence[ToricDatum]) -> list[ToricDatum]:
    """Reduced forms of all nonzero F_p-combinations."""
    if not gens:
        return []
    p = gens[0].p
    out = []
    for coeffs in itertools.product(range(p), repeat=len(gens)):
        if not any(coeffs):
            continue
        acc = None
        for c, g in zip(coeffs, gens):
            if c:
                term = g.scale(c)
                acc = term if acc is None else acc + term
        out.append(coker_normal_form(acc)[0])
    return out


def cover_height(gens: Sequence[ToricDatum], lam) -> Fraction:
    lam = as_functional(lam)
    return max((_h(x, lam) for x in span(gens)), default=Fraction(0))


def bounded_support_set(sigma: Cone, lam, ell, p: int) -> list[tuple[int, ...]]:
    """{v in sigma cap Z^n minus pZ^n : lambda(v) <= ell}, finite for interior lambda.

    Writing v as a nonnegative combination of rays r gives
    lambda(v) >= c |v|_inf with c = min lambda(r) / |r|_inf, hence a box.
    """
    lam = as_functional(lam)
    ell = Fraction(ell)
    if sigma.rays is None:
        raise ValueError("cone needs a ray description")
    rays = [r for r in sigma.rays if any(r)]
    if not rays:
        return []
    _check_interior(sigma, lam)
    if ell < 0:
        return []
    c = min(lam(r) / max(abs(x) for x in r) for r in rays)
    box = int(ell / c)
    return [v for v in coker_basis_bounded(sigma, box, p).points if lam(v) <= ell]
