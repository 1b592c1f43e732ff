"""JSON codecs.  Rationals travel as "a/b" strings, field elements as
coordinate lists (a bare integer is read as a packed element value)."""

from __future__ import annotations

from fractions import Fraction

from ._infinity import INF, NEG_INF
from .cones import Cone, Halfspace, LinearFunctional
from .field_series import DEFAULT_WINDOW, LaurentSeries
from .finite_field import GF, FqElem
from .toric_algebra import ToricDatum


def rat(x) -> str:
    if x is INF:
        return "inf"
    if x is NEG_INF:
        return "-inf"
    return str(Fraction(x))


def parse_rat(s):
    if s in ("inf", "+inf"):
        return INF
    if s == "-inf":
        return NEG_INF
    if isinstance(s, float):
        raise ValueError("floating-point values are not accepted; use 'a/b' strings")
    return Fraction(s)


def elem_to_json(c: FqElem) -> list[int]:
    return list(c.coords)


def elem_from_json(field: GF, obj) -> FqElem:
    if isinstance(obj, bool):
        raise ValueError("field element cannot be a boolean")
    if isinstance(obj, int):
        if not 0 <= obj < field.q:
            raise ValueError(f"element value {obj} out of range for F_{field.q}")
        return field.element(obj)
    if isinstance(obj, list):
        if len(obj) > field.e or any(not isinstance(x, int) or not 0 <= x < field.p for x in obj):
            raise ValueError(f"bad coordinate list {obj} for F_{field.q}")
        return field(list(obj) + [0] * (field.e - len(obj)))
    raise ValueError(f"cannot read a field element from {obj!r}")


# -- Laurent series -----------------------------------------------------------

def series_to_json(x: LaurentSeries) -> dict:
    return {
        "terms": [[k, elem_to_json(c)] for k, c in x.terms.items()],
        "window": list(x.window),
        "exact": x.exact,
    }


def series_from_json(field: GF, obj: dict, window=DEFAULT_WINDOW) -> LaurentSeries:
    terms = {}
    for k, c in obj.get("terms", []):
        if not isinstance(k, int) or isinstance(k, bool):
            raise ValueError(f"exponent {k!r} is not an integer")
        if k in terms:
            raise ValueError(f"exponent {k} listed twice")
        terms[k] = elem_from_json(field, c)
    lo, hi = obj.get("window", window)
    return LaurentSeries(field, terms, (int(lo), int(hi)), bool(obj.get("exact", False)))


# -- cones and functionals ----------------------------------------------------

def cone_to_json(c: Cone) -> dict:
    out = {"n": c.n, "halfspaces": [{"normal": [rat(x) for x in h.normal], "strict": h.strict}
                                    for h in c.halfspaces]}
    if c.rays is not None:
        out["rays"] = [[rat(x) for x in r] for r in c.rays]
    return out


def cone_from_json(obj: dict) -> Cone:
    if "rays" in obj and "halfspaces" not in obj:
        return Cone.from_rays([[parse_rat(x) for x in r] for r in obj["rays"]], obj.get("n"))
    if "halfspaces" not in obj:
        raise ValueError("cone needs 'rays' or 'halfspaces'")
    n = obj.get("n")
    hs = []
    for h in obj["halfspaces"]:
        if isinstance(h, dict):
            normal, strict = h["normal"], bool(h.get("strict", False))
        else:
            normal, strict = h, False
        hs.append(Halfspace(tuple(parse_rat(x) for x in normal), strict))
    if n is None:
        if not hs:
            raise ValueError("cone dimension 'n' is required")
        n = len(hs[0].normal)
    if "rays" in obj:
        return Cone(n, tuple(hs), tuple(tuple(parse_rat(x) for x in r) for r in obj["rays"]))
    return Cone.from_halfspaces(n, hs)


def functional_from_json(obj) -> LinearFunctional:
    return LinearFunctional(tuple(parse_rat(x) for x in obj))


def functional_to_json(lam: LinearFunctional) -> list[str]:
    return [rat(x) for x in lam.coeffs]


# -- toric data ---------------------------------------------------------------

def datum_to_json(x: ToricDatum) -> dict:
    return {
        "p": x.field.p,
        "e": x.field.e,
        "cone": cone_to_json(x.cone),
        "terms": [[list(v), elem_to_json(c)] for v, c in x.terms.items()],
        "box": x.box,
    }


def datum_from_json(field: GF, obj: dict, box: int) -> ToricDatum:
    cone = cone_from_json(obj["cone"])
    terms = {}
    for v, c in obj.get("terms", []):
        v = tuple(v)
        if any(not isinstance(a, int) or isinstance(a, bool) for a in v):
            raise ValueError(f"lattice point {list(v)} must have integer coordinates")
        if v in terms:
            raise ValueError(f"point {list(v)} listed twice")
        terms[v] = elem_from_json(field, c)
    b = int(obj.get("box", box))
    for v in terms:
        if max(map(abs, v), default=0) > b:
            raise ValueError(f"point {list(v)} lies outside the box {b}")
    return ToricDatum(field, cone, terms, b)

