"""Sparse elements of monoid algebras F_q[sigma cap Z^n] and coker(F - 1).

The cokernel of x -> x^p - x on R_sigma is free on the lattice points of
sigma outside pZ^n (one copy of F_q each) plus the constant classes
coker(F - 1, F_q).  Everything here works at that level, inside a finite
coordinate box |v_i| <= B.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from ._infinity import INF
from .cones import Cone, LinearFunctional, as_functional, cone_contains, full_space, ray
from .finite_field import GF, FqElem, coker_representative, fq_solve_artin_schreier, get_field

Point = tuple[int, ...]


def _is_zero_point(v: Point) -> bool:
    return not any(v)


def is_p_divisible(v: Point, p: int) -> bool:
    """Nonzero and in pZ^n."""
    return any(v) and all(x % p == 0 for x in v)


class ToricDatum:
    """sum c_v [v] over finitely many lattice points of a cone."""

    __slots__ = ("field", "cone", "terms", "box")

    def __init__(self, field: GF, cone: Cone, terms: Mapping[Sequence[int], object] | None = None,
                 box: int = 8, check: bool = True):
        clean: dict[Point, FqElem] = {}
        for v, c in (terms or {}).items():
            v = tuple(int(x) for x in v)
            if not isinstance(c, FqElem):
                c = field(c)
            if c.value:
                clean[v] = c
        if check:
            for v in clean:
                if len(v) != cone.n:
                    raise ValueError(f"point {v} has the wrong dimension")
                if not cone_contains(cone, v):
                    raise ValueError(f"point {v} is not in the cone")
        if clean:
            box = max(box, max(max(abs(x) for x in v) for v in clean))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "cone", cone)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))
        object.__setattr__(self, "box", box)

    def __setattr__(self, name, value):
        raise AttributeError("ToricDatum is immutable")

    @classmethod
    def from_dict(cls, p: int, e: int, cone: Cone, terms, box: int = 8) -> "ToricDatum":
        return cls(get_field(p, e), cone, terms, box)

    @classmethod
    def _trusted(cls, field: GF, cone: Cone, terms: Mapping[Point, FqElem], box: int) -> "ToricDatum":
        """Skip coercion and checks: keys are int tuples, values FqElem."""
        obj = object.__new__(cls)
        clean = {v: c for v, c in terms.items() if c.value}
        if clean:
            box = max(box, max(max(map(abs, v)) for v in clean))
        object.__setattr__(obj, "field", field)
        object.__setattr__(obj, "cone", cone)
        object.__setattr__(obj, "terms", dict(sorted(clean.items())))
        object.__setattr__(obj, "box", box)
        return obj

    def _new(self, terms, cone=None, box=None) -> "ToricDatum":
        return ToricDatum._trusted(self.field, cone or self.cone, terms, self.box if box is None else box)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.cone.n

    def support(self) -> list[Point]:
        return list(self.terms)

    def nonconstant_support(self) -> list[Point]:
        return [v for v in self.terms if any(v)]

    def constant(self) -> FqElem:
        return self.terms.get((0,) * self.n, self.field.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ToricDatum):
            return NotImplemented
        return self.field is other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field.p, self.field.e, tuple(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "ToricDatum(0)"
        return "ToricDatum(" + " + ".join(f"{c!r}[{','.join(map(str, v))}]" for v, c in self.terms.items()) + ")"

    def __add__(self, other: "ToricDatum") -> "ToricDatum":
        if other.field is not self.field:
            raise ValueError("data over different fields")
        terms = dict(self.terms)
        for v, c in other.terms.items():
            s = terms.get(v)
            s = c if s is None else s + c
            if s.value:
                terms[v] = s
            else:
                terms.pop(v, None)
        return self._new(terms, box=max(self.box, other.box))

    def __neg__(self) -> "ToricDatum":
        return self._new({v: -c for v, c in self.terms.items()})

    def __sub__(self, other: "ToricDatum") -> "ToricDatum":
        return self + (-other)

    def scale(self, c) -> "ToricDatum":
        c = self.field(c)
        return self._new({v: x * c for v, x in self.terms.items()})

    def frobenius(self) -> "ToricDatum":
        """x^p: exponent vectors times p, coefficients to the p-th power."""
        p = self.p
        return self._new({tuple(p * x for x in v): c ** p for v, c in self.terms.items()})

    def frobenius_minus_one(self) -> "ToricDatum":
        return self.frobenius() - self


def coker_normal_form(x: ToricDatum) -> tuple[ToricDatum, ToricDatum]:
    """(reduced, witness) with x - reduced = witness^p - witness.

    c[pv] is traded for c^{1/p}[v] until no support point is p-divisible;
    the constant is replaced by its canonical class representative.
    """
    p = x.p
    f = x.field
    terms = dict(x.terms)
    wit: dict[Point, FqElem] = {}
    while True:
        div = [v for v in terms if is_p_divisible(v, p)]
        if not div:
            break
        v = max(div, key=lambda u: (max(abs(c) for c in u), u))
        c = terms.pop(v)
        root = c.pth_root()
        u = tuple(k // p for k in v)
        s = terms.get(u)
        s = root if s is None else s + root
        if s.value:
            terms[u] = s
        else:
            terms.pop(u, None)
        s = wit.get(u)
        s = root if s is None else s + root
        if s.value:
            wit[u] = s
        else:
            wit.pop(u)
    zero = (0,) * x.n
    const = terms.get(zero, f.zero())
    rep = coker_representative(const)
    y = fq_solve_artin_schreier(const - rep)
    if rep.value:
        terms[zero] = rep
    else:
        terms.pop(zero, None)
    if y.value:
        wit[zero] = y
    return x._new(terms), x._new(wit)


def restrict_as(x: ToricDatum, tau: Cone) -> ToricDatum:
    """Keep exactly the terms whose exponent lies in tau."""
    if tau.n != x.n:
        raise ValueError("dimension mismatch")
    return x._new({v: c for v, c in x.terms.items() if cone_contains(tau, v)}, cone=tau)


def v_lambda(x: ToricDatum, lam):
    """min lambda(v) over the support; INF for zero."""
    lam = as_functional(lam)
    if not x.terms:
        return INF
    return min(lam(v) for v in x.terms)


# -- bounded coker bases ------------------------------------------------------

@dataclass(frozen=True)
class CokerBasis:
    cone: Cone
    box: int
    p: int
    points: tuple[Point, ...]
    # coker(F - 1, F_q) has order p for every q = p^e; one slot, p classes
    constant_classes: int = dc_field(default=0)

    def __post_init__(self):
        if not self.constant_classes:
            object.__setattr__(self, "constant_classes", self.p)

    def __len__(self):
        return len(self.points)

    def class_count(self, q: int) -> int:
        return self.constant_classes * q ** len(self.points)


def coker_basis_bounded(sigma: Cone, box: int, p: int) -> CokerBasis:
    """Lattice points of sigma in the box, excluding 0 and pZ^n."""
    if box < 0:
        raise ValueError("box must be nonnegative")
    pts = tuple(v for v in sigma.lattice_points(box) if any(v) and not is_p_divisible(v, p))
    return CokerBasis(sigma, box, p, pts)


@dataclass(frozen=True)
class Diagram:
    """Cones with arrows (i, j) standing for Spec R_{cones[i]} -> Spec R_{cones[j]}."""
    cones: tuple[Cone, ...]
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cones", tuple(self.cones))
        object.__setattr__(self, "arrows", tuple((int(i), int(j)) for i, j in self.arrows))


def split1_diagram(cones: Sequence[Cone]) -> Diagram:
    """Diagram of arrows sigma_i -> sigma_i cap sigma_j for a cover of sigma."""
    nodes = list(cones)
    arrows = []
    index = {}
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            inter = cones[i].intersect(cones[j])
            key = inter.halfspaces
            if key not in index:
                index[key] = len(nodes)
                nodes.append(inter)
            k = index[key]
            arrows.append((i, k))
            arrows.append((j, k))
    return Diagram(tuple(nodes), tuple(arrows))


@dataclass(frozen=True)
class PLimitReport:
    ok: bool
    missing: tuple[Point, ...]
    duplicated: tuple[Point, ...]
    extra: tuple[Point, ...]

    @property
    def discrepancies(self) -> list[tuple[str, Point]]:
        return ([("missing", v) for v in self.missing] + [("duplicated", v) for v in self.duplicated]
                + [("extra", v) for v in self.extra])


def check_p_limit_bounded(diagram: Diagram, target: Cone, box: int, p: int) -> PLimitReport:
    """Compare the colimit of the diagram's bounded coker bases with the target's.

    Contravariance turns an arrow i -> j into the inclusion of the basis of
    cones[j] into that of cones[i]; the colimit glues equal points along
    arrows.  The constant slot is the point 0 of every cone.
    """
    if not diagram.cones:
        raise ValueError("malformed diagram: no cones")
    n = target.n
    zero = (0,) * n
    bases = []
    for c in diagram.cones:
        if c.n != n:
            raise ValueError("malformed diagram: dimension mismatch")
        bases.append(set(coker_basis_bounded(c, box, p).points) | {zero})

    parent: dict[tuple[int, Point], tuple[int, Point]] = {}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for s, basis in enumerate(bases):
        for v in basis:
            parent[(s, v)] = (s, v)
    for i, j in diagram.arrows:
        if not (0 <= i < len(bases) and 0 <= j < len(bases)):
            raise ValueError(f"malformed diagram: arrow {(i, j)} out of range")
        if not bases[j] <= bases[i]:
            raise ValueError(f"malformed diagram: cone {j} is not inside cone {i}")
        for v in bases[j]:
            ra, rb = find((i, v)), find((j, v))
            if ra != rb:
                parent[ra] = rb

    classes: dict[Point, set] = {}
    for node in parent:
        classes.setdefault(node[1], set()).add(find(node))
    tgt = set(coker_basis_bounded(target, box, p).points) | {zero}
    missing = tuple(sorted(v for v in tgt if v not in classes))
    duplicated = tuple(sorted(v for v, cl in classes.items() if v in tgt and len(cl) > 1))
    extra = tuple(sorted(v for v in classes if v not in tgt))
    return PLimitReport(not (missing or duplicated or extra), missing, duplicated, extra)


# -- p-injective / p-surjective / p-faithful ------------------------------------

@dataclass(frozen=True)
class MapDescriptor:
    """R_source -> R_target, optionally followed by completion along v_lambda.

    Completion kills the coker classes of points with lambda(v) > 0, since
    z + z^p + z^{p^2} + ... converges when v_lambda(z) > 0.
    """
    kind: str
    source: Cone
    target: Cone
    functional: LinearFunctional | None = None

    @classmethod
    def inclusion(cls, source: Cone, target: Cone) -> "MapDescriptor":
        return cls("inclusion", source, target)

    @classmethod
    def identity(cls, sigma: Cone) -> "MapDescriptor":
        return cls("identity", sigma, sigma)

    @classmethod
    def completion(cls, sigma: Cone, lam) -> "MapDescriptor":
        return cls("completion", sigma, sigma, as_functional(lam))

    @classmethod
    def katz(cls) -> "MapDescriptor":
        """R[t^-1] -> R((t)): the negative ray into the t-adic completion of R[t, t^-1]."""
        return cls("katz", ray((-1,)), full_space(1), as_functional((1,)))


@dataclass(frozen=True)
class MapProperties:
    p_injective: bool
    p_surjective: bool
    p_faithful: bool
    killed: tuple[Point, ...] = ()
    uncovered: tuple[Point, ...] = ()


def check_map_p_properties(fmap: MapDescriptor, box: int, p: int) -> MapProperties:
    """Decide the three properties on bounded coker bases.

    The maps handled are injective ring maps, so ker(f) = 0 and the kernel
    half of p-injectivity holds trivially; what remains is injectivity and
    surjectivity of the induced map of coker(F - 1).
    """
    if fmap.kind not in ("inclusion", "identity", "completion", "katz"):
        raise ValueError(f"unsupported map class {fmap.kind!r}")
    src = coker_basis_bounded(fmap.source, box, p).points
    tgt_all = set(coker_basis_bounded(fmap.target, box, p).points)
    if not set(src) <= tgt_all:
        raise ValueError("source cone is not contained in the target cone")
    lam = fmap.functional
    if lam is None:
        image, killed, tgt = set(src), (), tgt_all
    else:
        image = {v for v in src if lam(v) <= 0}
        killed = tuple(v for v in src if lam(v) > 0)
        tgt = {v for v in tgt_all if lam(v) <= 0}
    uncovered = tuple(sorted(tgt - image))
    inj = not killed
    surj = not uncovered
    return MapProperties(inj, surj, inj and surj, killed, uncovered)
