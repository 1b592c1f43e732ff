import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptypical.finite_field import (GF, coker_constant_representatives, coker_representative,
                                   fq_solve_artin_schreier, get_field, is_prime,
                                   smallest_irreducible)

from helpers import FIELDS


def naive_mul(f, a, b):
    """Schoolbook product of coordinate vectors reduced by the modulus."""
    p, e = f.p, f.e
    x, y = f.to_coords(a), f.to_coords(b)  # ascending degree
    prod = [0] * (2 * e - 1)
    for i, u in enumerate(x):
        for j, v in enumerate(y):
            prod[i + j] = (prod[i + j] + u * v) % p
    mod = smallest_irreducible(p, e)  # ascending, monic
    for d in range(len(prod) - 1, e - 1, -1):
        c = prod[d]
        if c:
            for k in range(e + 1):
                prod[d - e + k] = (prod[d - e + k] - c * mod[k]) % p
    return f.from_coords(prod[:e])


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("p,e", FIELDS)
def test_multiplication_matches_schoolbook(p, e):
    f = get_field(p, e)
    vals = range(f.q) if f.q <= 27 else range(0, f.q, 3)
    for a, b in itertools.product(vals, repeat=2):
        assert f.mul(a, b) == naive_mul(f, a, b)


@pytest.mark.parametrize("p,e", FIELDS)
def test_modulus_is_irreducible_and_smallest(p, e):
    mod = smallest_irreducible(p, e)
    assert mod[-1] == 1 and len(mod) == e + 1
    if 1 < e <= 3:
        # irreducible in degree <= 3 iff no root in F_p
        def has_root(m):
            return any(sum(c * x ** i for i, c in enumerate(m)) % p == 0 for x in range(p))
        assert not has_root(mod)
        smaller = [list(t) + [1] for t in itertools.product(range(p), repeat=e)]
        key = lambda m: tuple(reversed(m[:-1]))
        assert all(has_root(m) for m in smaller if key(m) < key(list(mod)))


def test_small_moduli():
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(3, 2) == (1, 0, 1)
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)


@pytest.mark.parametrize("p,e", FIELDS)
def test_field_axioms_sampled(p, e):
    f = get_field(p, e)
    for a in f.elements():
        assert a + (-a) == f.zero()
        assert a * f.one() == a
        if a.value:
            assert a * a.inverse() == f.one()
        assert a.frobenius(e) == a
        assert a.pth_root() ** p == a


@pytest.mark.parametrize("p,e", FIELDS)
@given(data=st.data())
def test_frobenius_is_ring_map(p, e, data):
    f = get_field(p, e)
    a = f.element(data.draw(st.integers(0, f.q - 1)))
    b = f.element(data.draw(st.integers(0, f.q - 1)))
    assert (a + b) ** p == a ** p + b ** p
    assert (a * b) ** p == a ** p * b ** p


def test_solve_examples():
    f2, f4 = get_field(2, 1), get_field(2, 2)
    assert fq_solve_artin_schreier(f2(0)) == f2(0)
    assert fq_solve_artin_schreier(f2(1)) is None
    w = fq_solve_artin_schreier(f4(1))
    assert w * w + w == f4(1)
    assert w * w + w + f4(1) == f4(0)  # w is a primitive cube root of unity


@pytest.mark.parametrize("p,e", FIELDS)
def test_solve_against_brute_force(p, e):
    f = get_field(p, e)
    image = {}
    for y in f.elements():
        image.setdefault(y ** p - y, []).append(y)
    for b in f.elements():
        y = fq_solve_artin_schreier(b)
        if b in image:
            assert y is not None and y ** p - y == b
            assert y.sort_key() == min(z.sort_key() for z in image[b])
        else:
            assert y is None
        assert (b.trace() == 0) == (b in image)


@pytest.mark.parametrize("p,e", FIELDS)
def test_coker_representatives(p, e):
    f = get_field(p, e)
    reps = coker_constant_representatives(f)
    assert len(reps) == p
    image = {y ** p - y for y in f.elements()}
    for c in f.elements():
        r = coker_representative(c)
        assert c - r in image
        coset = [x for x in f.elements() if c - x in image]
        assert r.sort_key() == min(x.sort_key() for x in coset)
        assert r in reps


def test_f9_representatives():
    f = get_field(3, 2)
    assert [r.value for r in coker_constant_representatives(f)] == [0, 2, 1]


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        GF(4, 1)
    with pytest.raises(ValueError):
        GF(2, 17)
