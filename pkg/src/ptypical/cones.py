"""Rational convex cones given by halfspaces (open or closed) and optional rays.

Every cone contains the origin, even when some halfspaces are strict: a
strict condition lambda(v) > 0 is tested on nonzero vectors only.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from operator import mul
from typing import Iterable, Sequence

from . import _linalg

Vector = tuple[Fraction, ...]


def _vec(v) -> Vector:
    return tuple(Fraction(x) for x in v)


def dot(a, b) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


@dataclass(frozen=True)
class Halfspace:
    normal: Vector
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "normal", _vec(self.normal))
        # positive rescaling to integers keeps every sign test unchanged
        den = lcm(*(x.denominator for x in self.normal)) if self.normal else 1
        object.__setattr__(self, "_int_normal", tuple(int(x * den) for x in self.normal))

    def holds(self, v) -> bool:
        val = sum(map(mul, self._int_normal, v))
        return val > 0 if self.strict else val >= 0


def facet_normals(gens: Iterable[Sequence], n: int) -> list[Vector]:
    """Inward normals nu with cone(gens) = {x : nu . x >= 0 for all nu}.

    These also generate the dual cone of cone(gens).  Brute force over
    (d-1)-subsets of generators, where d is the dimension of their span;
    equations for the orthogonal complement are returned as +/- pairs.
    """
    G = [_vec(g) for g in gens if any(x != 0 for x in g)]
    out: list[Vector] = []
    seen = set()

    def add(nu):
        key = _linalg.primitive(nu)
        if key not in seen:
            seen.add(key)
            out.append(_vec(key))

    if not G:
        for i in range(n):
            e = [0] * n
            e[i] = 1
            add(e)
            e[i] = -1
            add(e)
        return out
    for w in _linalg.nullspace(G, n):
        add(w)
        add([-x for x in w])
    span_rows, pivots = _linalg.rref(G)
    B = [r for r in span_rows[: len(pivots)]]
    d = len(B)
    for S in itertools.combinations(G, d - 1):
        if d > 1 and _linalg.rank(list(S)) != d - 1:
            continue
        M = [[dot(b, s) for b in B] for s in S]
        sol = _linalg.nullspace(M, d)
        if len(sol) != 1:
            continue
        alpha = sol[0]
        nu = [sum((alpha[j] * B[j][i] for j in range(d)), Fraction(0)) for i in range(n)]
        vals = [dot(nu, g) for g in G]
        if all(x >= 0 for x in vals):
            add(nu)
        elif all(x <= 0 for x in vals):
            add([-x for x in nu])
    return out


@dataclass(frozen=True)
class Cone:
    n: int
    halfspaces: tuple[Halfspace, ...] = ()
    rays: tuple[Vector, ...] | None = None

    def __post_init__(self):
        hs = tuple(h if isinstance(h, Halfspace) else Halfspace(*h) for h in self.halfspaces)
        for h in hs:
            if len(h.normal) != self.n:
                raise ValueError("halfspace normal has the wrong dimension")
        object.__setattr__(self, "halfspaces", hs)
        if self.rays is not None:
            rays = tuple(_vec(r) for r in self.rays)
            for r in rays:
                if len(r) != self.n:
                    raise ValueError("ray has the wrong dimension")
                if any(x != 0 for x in r) and not all(h.holds(r) for h in hs):
                    raise ValueError(f"ray {r} violates a halfspace")
            object.__setattr__(self, "rays", rays)

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_rays(cls, rays, n: int | None = None) -> "Cone":
        rays = [_vec(r) for r in rays]
        if n is None:
            if not rays:
                raise ValueError("dimension needed for an empty ray list")
            n = len(rays[0])
        nonzero = [r for r in rays if any(x != 0 for x in r)]
        hs = tuple(Halfspace(nu, False) for nu in facet_normals(nonzero, n))
        return cls(n, hs, tuple(nonzero))

    @classmethod
    def from_halfspaces(cls, n: int, halfspaces) -> "Cone":
        """Rays are computed when every halfspace is closed."""
        hs = tuple(h if isinstance(h, Halfspace) else Halfspace(*h) for h in halfspaces)
        rays = None
        if not any(h.strict for h in hs):
            rays = tuple(facet_normals([h.normal for h in hs], n))
        return cls(n, hs, rays)

    # -- predicates ---------------------------------------------------------
    def contains(self, v) -> bool:
        return cone_contains(self, v)

    @property
    def is_closed(self) -> bool:
        return not any(h.strict for h in self.halfspaces)

    @functools.cached_property
    def _sign_tests(self) -> tuple:
        return tuple((h._int_normal, h.strict) for h in self.halfspaces)

    @functools.cached_property
    def _primitive_rays(self) -> frozenset | None:
        if self.rays is None:
            return None
        return frozenset(_linalg.primitive(r) for r in self.rays)

    def is_linear(self) -> bool:
        prims = self._primitive_rays
        return prims is not None and len(prims) == 1

    def generator(self) -> tuple[int, ...]:
        """Primitive lattice generator of a linear cone."""
        if not self.is_linear():
            raise ValueError("not a linear cone")
        return next(iter(self._primitive_rays))

    def intersect(self, other: "Cone") -> "Cone":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        return Cone.from_halfspaces(self.n, self.halfspaces + other.halfspaces)

    def lattice_points(self, box: int):
        """sigma cap Z^n cap [-box, box]^n in lexicographic order."""
        rng = range(-box, box + 1)
        for v in itertools.product(rng, repeat=self.n):
            if cone_contains(self, v):
                yield v


@dataclass(frozen=True)
class LinearFunctional:
    coeffs: Vector

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _vec(self.coeffs))
        den = lcm(*(x.denominator for x in self.coeffs)) if self.coeffs else 1
        object.__setattr__(self, "_int", (tuple(int(x * den) for x in self.coeffs), den))

    def __call__(self, v) -> Fraction:
        ints, den = self._int
        return Fraction(sum(map(mul, ints, v)), den)

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def as_functional(lam) -> LinearFunctional:
    return lam if isinstance(lam, LinearFunctional) else LinearFunctional(lam)


# -- standard cones ----------------------------------------------------------

def ray(v) -> Cone:
    """The linear cone of nonnegative multiples of v."""
    return _ray(tuple(v))


@functools.lru_cache(maxsize=4096)
def _ray(v) -> Cone:
    if not any(x != 0 for x in v):
        raise ValueError("a linear cone needs a nonzero generator")
    return Cone.from_rays([v])


def orthant(n: int) -> Cone:
    return Cone.from_rays([[int(i == j) for j in range(n)] for i in range(n)])


def full_space(n: int) -> Cone:
    gens = []
    for i in range(n):
        gens.append([int(i == j) for j in range(n)])
        gens.append([-int(i == j) for j in range(n)])
    return Cone(n, (), tuple(_vec(g) for g in gens))


def zero_cone(n: int) -> Cone:
    return Cone.from_rays([], n)


# -- operations --------------------------------------------------------------

def cone_contains(sigma: Cone, v) -> bool:
    if len(v) != sigma.n:
        raise ValueError(f"vector of length {len(v)} in a cone of dimension {sigma.n}")
    if not any(v):
        return True
    for normal, strict in sigma._sign_tests:
        val = sum(map(mul, normal, v))
        if val < 0 or (strict and val == 0):
            return False
    return True


def dual_cone(sigma: Cone) -> Cone:
    """{lambda : lambda(v) >= 0 for v in sigma}, one closed halfspace per ray."""
    if sigma.rays is None:
        raise ValueError("dual cone needs a ray description")
    hs = tuple(Halfspace(r, False) for r in sigma.rays if any(x != 0 for x in r))
    return Cone(sigma.n, hs, tuple(facet_normals(sigma.rays, sigma.n)))


def is_very_convex(sigma: Cone) -> bool:
    """True iff the dual cone has nonempty interior, i.e. its generators span."""
    dual = dual_cone(sigma)
    return _linalg.rank(list(dual.rays)) == sigma.n


def prime_to_p_part(d: int, p: int) -> int:
    while d % p == 0:
        d //= p
    return d


def lattice_index(lam, T: Cone, p: int | None = None):
    """[Z^n : (Z^n cap H_lambda) x (Z^n cap (T u -T))] and its prime-to-p part."""
    lam = as_functional(lam)
    if lam.is_zero():
        raise ValueError("zero functional")
    if len(lam) != T.n:
        raise ValueError("dimension mismatch")
    v0 = T.generator()
    if lam(v0) <= 0:
        raise ValueError("functional is not positive on the linear cone")
    ell = _linalg.primitive(lam.coeffs)
    rows = list(_linalg.integer_kernel_basis(ell)) + [v0]
    d = abs(_linalg.det_int(rows))
    if d == 0:  # pragma: no cover - v0 not in H_lambda
        raise ValueError("degenerate lattice")
    return d, (prime_to_p_part(d, p) if p else d)


def m_lambda(lam) -> Fraction:
    """The rational m with m * lambda(Z^n) = Z."""
    lam = as_functional(lam)
    if lam.is_zero():
        raise ValueError("zero functional")
    nums = [c.numerator for c in lam.coeffs if c != 0]
    dens = [c.denominator for c in lam.coeffs if c != 0]
    g = Fraction(gcd(*nums), lcm(*dens))
    return 1 / g
