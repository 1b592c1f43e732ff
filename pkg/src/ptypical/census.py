"""Exhaustive enumeration of Z/pZ-torsor classes over a bounded cone chart."""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from ._linalg import primitive
from .cones import Cone, as_functional, ray
from .errors import InstanceTooLarge
from .finite_field import GF, coker_constant_representatives, get_field
from .heights import _h, ray_break
from .toric_algebra import CokerBasis, ToricDatum, coker_basis_bounded, restrict_as

BRUTE_FORCE_GUARD = 2 ** 20


@dataclass(frozen=True)
class ASCensus:
    """All reduced data supported on a bounded coker basis.

    Iteration is lexicographic over coefficient assignments (basis points in
    lexicographic order, field elements in coordinate order), with the
    constant class varying slowest.  ``shard=(i, k)`` keeps every k-th datum
    starting at index i, so k disjoint shards cover the census.
    """
    field: GF
    basis: CokerBasis
    shard: tuple[int, int] = (0, 1)

    @property
    def total(self) -> int:
        return self.basis.class_count(self.field.q)

    @property
    def count(self) -> int:
        i, k = self.shard
        return len(range(i, self.total, k))

    def __len__(self):
        return self.count

    def __iter__(self) -> Iterator[ToricDatum]:
        i, k = self.shard
        cone = self.basis.cone
        zero = (0,) * cone.n
        pts = self.basis.points
        elems = list(self.field.elements())
        consts = coker_constant_representatives(self.field)
        stream = itertools.product(consts, *([elems] * len(pts)))
        for c0, *coeffs in itertools.islice(stream, i, None, k):
            terms = {v: c for v, c in zip(pts, coeffs) if c.value}
            if c0.value:
                terms[zero] = c0
            yield ToricDatum._trusted(self.field, cone, terms, self.basis.box)


def enumerate_as_classes(sigma: Cone, box: int, p: int, e: int = 1,
                         shard: tuple[int, int] = (0, 1)) -> ASCensus:
    i, k = shard
    if k < 1 or not 0 <= i < k:
        raise ValueError("shard must be (i, k) with 0 <= i < k")
    return ASCensus(get_field(p, e), coker_basis_bounded(sigma, box, p), (i, k))


def rays_through_support(x: ToricDatum) -> list[Cone]:
    """One linear cone per primitive direction of the nonconstant support."""
    gens = sorted({primitive(v) for v in x.nonconstant_support()})
    return [ray(g) for g in gens]


def verify_splits2_torsor(x: ToricDatum, rays: Sequence[Cone]) -> bool:
    """True iff the nonconstant part of x is the sum of its restrictions to the rays."""
    zero = (0,) * x.n
    body = x._new({v: c for v, c in x.terms.items() if v != zero})
    if any(not T.is_linear() for T in rays):
        raise ValueError("rays must be linear cones")
    distinct = {T.generator(): T for T in rays}
    acc = body._new({})
    for g in sorted(distinct):
        part = restrict_as(body, distinct[g])
        acc = acc + part._new(part.terms, cone=x.cone)
    return acc == body


def _chains(sigma: Cone, box: int, p: int) -> list[list[tuple[int, ...]]]:
    """Orbits v, pv, p^2 v, ... of points in the box, starting outside pZ^n."""
    out = []
    for v in coker_basis_bounded(sigma, box, p).points:
        chain, u = [], v
        while max(map(abs, u)) <= box:
            chain.append(u)
            u = tuple(p * c for c in u)
        out.append(chain)
    return out


def brute_force_isomorphic(a1: ToricDatum, a2: ToricDatum, box: int,
                           guard: int = BRUTE_FORCE_GUARD) -> bool:
    """Search y with support in the box for a1 - a2 = y^p - y.

    y^p - y never mixes distinct orbits {v, pv, ...} nor the constant slot,
    so each orbit is searched on its own; the guard caps q^(orbit length).
    """
    if a1.field is not a2.field:
        raise ValueError("data over different fields")
    f = a1.field
    p, q = f.p, f.q
    d = a1 - a2
    sigma = a1.cone
    zero = (0,) * sigma.n
    covered = {zero}
    elems = list(f.elements())

    if not any(y ** p - y == d.constant() for y in elems):
        return False
    for chain in _chains(sigma, box, p):
        covered.update(chain)
        if q ** len(chain) > guard:
            raise InstanceTooLarge(f"orbit of {chain[0]} needs {q}^{len(chain)} trials")
        top = tuple(p * c for c in chain[-1])
        covered.add(top)
        target = [d.terms.get(u, f.zero()) for u in chain + [top]]
        found = False
        for ys in itertools.product(elems, repeat=len(chain)):
            # coefficient at chain[j] of y^p - y is y_{j-1}^p - y_j; at top it is y_last^p
            ext = ys + (f.zero(),)
            if all((ext[j - 1] ** p if j else f.zero()) - ext[j] == target[j] for j in range(len(ext))):
                found = True
                break
        if not found:
            return False
    return all(v in covered for v in d.terms)


def census_report(sigma: Cone, box: int, p: int, e: int = 1, lam=None, fmt: str = "json") -> str:
    """Per-class support, constant, ray breaks and (optionally) h_lambda."""
    rows = []
    lam = as_functional(lam) if lam is not None else None
    for x in enumerate_as_classes(sigma, box, p, e):
        breaks = {}
        for T in rays_through_support(x):
            part = restrict_as(x, T)
            part = part._new({v: c for v, c in part.terms.items() if any(v)})
            breaks[",".join(map(str, T.generator()))] = ray_break(part)
        row = {
            "support": [list(v) for v in x.nonconstant_support()],
            "coefficients": [list(c.coords) for v, c in x.terms.items() if any(v)],
            "constant": list(x.constant().coords),
            "ray_breaks": breaks,
        }
        if lam is not None:
            row["height"] = str(_h(x, lam))
        rows.append(row)
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        fields = ["support", "coefficients", "constant", "ray_breaks"] + (["height"] if lam is not None else [])
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: (json.dumps(v, sort_keys=True) if not isinstance(v, str) else v) for k, v in row.items()})
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")
