"""Shared strategies and generators for the test suite."""

from hypothesis import strategies as st

from ptypical.cones import orthant
from ptypical.finite_field import get_field
from ptypical.toric_algebra import ToricDatum

FIELDS = [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1), (2, 3)]


@st.composite
def field_elements(draw, p, e):
    f = get_field(p, e)
    return f.element(draw(st.integers(0, f.q - 1)))


@st.composite
def laurent_dicts(draw, p, e, lo=-8, hi=4, max_terms=6):
    f = get_field(p, e)
    ks = draw(st.lists(st.integers(lo, hi - 1), max_size=max_terms, unique=True))
    return {k: f.element(draw(st.integers(1, f.q - 1))) for k in ks}


@st.composite
def toric_data(draw, cone=None, p=2, e=1, box=4):
    f = get_field(p, e)
    cone = cone or orthant(2)
    pts = [v for v in cone.lattice_points(box)]
    chosen = draw(st.lists(st.sampled_from(pts), max_size=5, unique=True))
    return ToricDatum(f, cone, {v: f.element(draw(st.integers(1, f.q - 1))) for v in chosen}, box)


def random_datum(rng, cone, p, e, box, max_terms=5):
    f = get_field(p, e)
    pts = list(cone.lattice_points(box))
    k = rng.randint(0, min(max_terms, len(pts)))
    chosen = rng.sample(pts, k)
    return ToricDatum(f, cone, {v: f.element(rng.randrange(1, f.q)) for v in chosen}, box)
