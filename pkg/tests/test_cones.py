import itertools
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptypical._linalg import det_int, integer_kernel_basis, primitive
from ptypical.cones import (Cone, Halfspace, cone_contains, dual_cone, full_space, is_very_convex,
                            lattice_index, m_lambda, orthant, ray, zero_cone)


def test_contains_examples():
    Q1 = orthant(2)
    assert cone_contains(Q1, (1, 2))
    assert not cone_contains(Q1, (-1, 0))
    open_half = Cone(2, (Halfspace((1, 0), True),))
    assert not cone_contains(open_half, (0, 1))
    assert cone_contains(open_half, (0, 0))
    with pytest.raises(ValueError):
        cone_contains(Q1, (1, 2, 3))


def test_dual_examples():
    d = dual_cone(orthant(2))
    assert {primitive(r) for r in d.rays} == {(1, 0), (0, 1)}
    d = dual_cone(full_space(2))
    assert not d.rays
    assert cone_contains(d, (0, 0)) and not cone_contains(d, (1, 0)) and not cone_contains(d, (0, -1))
    d = dual_cone(ray((1, 0)))
    for v in [(1, 5), (1, -5), (0, 1), (0, -1)]:
        assert cone_contains(d, v)
    assert not cone_contains(d, (-1, 0))
    with pytest.raises(ValueError):
        dual_cone(Cone(2, (Halfspace((1, 0), True),)))


def test_very_convex_examples():
    assert is_very_convex(ray((1, 0)))
    assert is_very_convex(orthant(2))
    assert not is_very_convex(Cone.from_halfspaces(2, [((1, 0), False)]))


def test_lattice_index_examples():
    assert lattice_index((0, 1), ray((0, 1)), 2) == (1, 1)
    assert lattice_index((1, 1), ray((1, 1)), 2) == (2, 1)
    assert lattice_index((1, 2), ray((1, 0)), 2) == (1, 1)
    with pytest.raises(ValueError):
        lattice_index((1, -1), ray((1, 1)), 2)


def test_m_lambda_examples():
    assert m_lambda((1, 0)) == 1
    assert m_lambda((2, 4)) == Q(1, 2)
    assert m_lambda((Q(1, 2), Q(1, 3))) == 6
    with pytest.raises(ValueError):
        m_lambda((0, 0))


def test_from_rays_3d():
    c = Cone.from_rays([(1, 0, 0), (0, 1, 0), (1, 1, 1), (0, 0, 1)])
    for v in itertools.product(range(-2, 3), repeat=3):
        assert cone_contains(c, v) == all(x >= 0 for x in v)


def test_from_halfspaces_computes_rays():
    c = Cone.from_halfspaces(2, [((1, 0), False), ((-1, 2), False)])
    assert {primitive(r) for r in c.rays} == {(0, 1), (2, 1)}


def test_zero_cone():
    z = zero_cone(3)
    assert cone_contains(z, (0, 0, 0)) and not cone_contains(z, (1, 0, 0))


small = st.integers(-4, 4)
vec2 = st.tuples(small, small).filter(any)


@given(gens=st.lists(vec2, min_size=1, max_size=4), pts=st.lists(st.tuples(small, small), max_size=10))
def test_duality_and_double_dual(gens, pts):
    sigma = Cone.from_rays(gens)
    dual = dual_cone(sigma)
    for v in pts:
        if cone_contains(sigma, v):
            assert all(sum(a * b for a, b in zip(lam, v)) >= 0 for lam in dual.rays)
    dd = dual_cone(dual)
    for g in gens:
        assert cone_contains(dd, g)


@given(gens=st.lists(vec2, min_size=1, max_size=3), a=small, b=small, c=small, d=small)
def test_convexity(gens, a, b, c, d):
    sigma = Cone.from_rays(gens)
    u, v = (a, b), (c, d)
    if cone_contains(sigma, u) and cone_contains(sigma, v):
        assert cone_contains(sigma, (u[0] + v[0], u[1] + v[1]))
        assert cone_contains(sigma, (3 * u[0], 3 * u[1]))


@given(num=st.lists(st.integers(-6, 6), min_size=2, max_size=3).filter(any),
       c=st.fractions(min_value=Q(1, 5), max_value=7, max_denominator=5))
def test_m_lambda_scale_law(num, c):
    assert m_lambda([c * x for x in num]) == m_lambda(num) / c


def random_unimodular(rng, n):
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(6):
        i, j = rng.sample(range(n), 2)
        k = rng.randint(-2, 2)
        for r in M:
            r[j] += k * r[i]
    assert abs(det_int(M)) == 1
    return M


@pytest.mark.parametrize("n", [2, 3])
def test_lattice_index_unimodular_invariance(n):
    rng = random.Random(n)
    for _ in range(60):
        v0 = tuple(rng.randint(-3, 3) for _ in range(n))
        lam = tuple(rng.randint(-3, 3) for _ in range(n))
        if not any(v0) or sum(a * b for a, b in zip(lam, v0)) <= 0:
            continue
        d = lattice_index(lam, ray(v0), 2)
        U = random_unimodular(rng, n)
        Uinv_T = _inverse_transpose(U)
        v1 = tuple(sum(U[i][j] * v0[j] for j in range(n)) for i in range(n))
        lam1 = tuple(sum(Uinv_T[i][j] * lam[j] for j in range(n)) for i in range(n))
        assert lattice_index(lam1, ray(v1), 2) == d
        # independent oracle: index = |primitive(lam) . primitive(v0)|
        ell, g = primitive(lam), primitive(v0)
        assert d[0] == abs(sum(a * b for a, b in zip(ell, g)))


def _inverse_transpose(U):
    n = len(U)
    det = det_int(U)
    cof = [[(-1) ** (i + j) * det_int([r[:j] + r[j + 1:] for k, r in enumerate(U) if k != i])
            for j in range(n)] for i in range(n)]
    return [[cof[i][j] // det for j in range(n)] for i in range(n)]


def test_integer_kernel_basis_spans():
    for ell in [(3, 5), (2, 4, 6), (0, 0, 7), (6, 10, 15)]:
        B = integer_kernel_basis(ell)
        assert all(sum(a * b for a, b in zip(ell, v)) == 0 for v in B)
        assert len(B) == len(ell) - 1


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=2, max_size=2),
       st.lists(st.integers(-6, 6), min_size=2, max_size=2),
       st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=2, max_size=2))
def test_integer_fast_paths_match_rational_arithmetic(normal, v, w):
    # halfspaces and functionals rescale to integer coefficients internally
    from ptypical.cones import LinearFunctional
    exact = lambda a, b: sum(Q(x) * y for x, y in zip(a, b))
    for strict in (False, True):
        h = Halfspace(tuple(normal), strict)
        for u in (tuple(v), tuple(w)):
            val = exact(normal, u)
            assert h.holds(u) == (val > 0 if strict else val >= 0)
            cone = Cone(2, (h,))
            assert cone_contains(cone, u) == (not any(u) or h.holds(u))
    lam = LinearFunctional(tuple(normal))
    assert lam(tuple(v)) == exact(normal, v) and lam(tuple(w)) == exact(normal, w)
