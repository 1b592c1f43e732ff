import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ptypical import NEG_INF, PrecisionExhausted
from ptypical.as_extension import (ExtElem, ext_as_reduce, ext_mul, ext_valuation, rebase,
                                   tower2_break)
from ptypical.field_series import LaurentSeries, as_reduce, frobenius_minus_one
from ptypical.finite_field import get_field


def S(f, coeffs, window=(-64, 64), exact=True):
    return LaurentSeries(f, {k: f(c) if isinstance(c, int) else c for k, c in coeffs.items()}, window, exact)


F2 = get_field(2, 1)
A1 = S(F2, {-1: 1})


def E(base, *coeffs):
    return ExtElem(base, [S(base.field, c) for c in coeffs])


def test_valuation_examples():
    assert ext_valuation(ExtElem.z(A1)) == -1
    assert ext_valuation(E(A1, {1: 1})) == 2
    assert ext_valuation(E(A1, {}, {1: 1})) == 1
    with pytest.raises(ValueError):
        ext_valuation(ExtElem.zero(A1))


def test_mul_examples():
    z = ExtElem.z(A1)
    assert ext_mul(z, z).same_terms(ExtElem(A1, [A1, S(F2, {0: 1})]))
    x = E(A1, {5: 1, -2: 1}, {3: 1})
    assert (x * ExtElem.one(A1)).same_terms(x)
    zt = E(A1, {1: 1}, {0: 1})
    assert (zt * zt).same_terms(E(A1, {-1: 1, 2: 1}, {0: 1}))


def test_defining_relation_p3():
    f = get_field(3, 1)
    a = S(f, {-2: 1, 1: 2})
    z = ExtElem.z(a)
    assert (z ** 3).same_terms(ExtElem(a, [a, S(f, {0: 1})]))
    assert z.frobenius().same_terms(z ** 3)


def test_reduce_examples():
    r = ext_as_reduce(E(A1, {-1: 1}))
    assert r.relative_break is NEG_INF and r.reduced.is_zero()
    r = ext_as_reduce(E(A1, {}, {-1: 1}))
    assert r.relative_break == 3
    r = ext_as_reduce(ExtElem.zero(A1))
    assert r.relative_break is NEG_INF and r.reduced.is_zero() and r.witness.is_zero()


def test_tower2_examples():
    assert tower2_break(A1, [S(F2, {}), S(F2, {-1: 1})]) == 2
    assert tower2_break(A1, [S(F2, {-1: 1})]) == 1
    assert tower2_break(S(F2, {-3: 1}), []) == 3
    with pytest.raises(ValueError):
        tower2_break(S(F2, {3: 1}, exact=False), [])


def test_rebase_moves_to_reduced_base():
    a = S(F2, {-2: 1})  # reduces to t^-1 with witness t^-1
    b = [S(F2, {}), S(F2, {-1: 1})]
    x = rebase(b, a)
    assert x.base.same_terms(A1)
    # z = z' + t^-1, so z t^-1 = z' t^-1 + t^-2
    assert x.same_terms(E(A1, {-2: 1}, {-1: 1}))
    assert tower2_break(a, b) == tower2_break(A1, x)


def random_elem(rng, base, lo=-4, hi=4, terms=3):
    f = base.field
    coeffs = []
    for _ in range(base.p):
        d = {rng.randrange(lo, hi): f.element(rng.randrange(1, f.q)) for _ in range(rng.randint(0, terms))}
        coeffs.append(LaurentSeries(f, d, base.window, True))
    return ExtElem(base, coeffs)


BASES = [(2, 1, {-1: 1}), (2, 1, {-3: 1, -1: 1}), (3, 1, {-1: 1}), (3, 1, {-2: 2, 1: 1}), (2, 2, {-5: 1})]


@pytest.mark.parametrize("p,e,a", BASES)
def test_valuation_is_multiplicative(p, e, a):
    f = get_field(p, e)
    base = S(f, a)
    rng = random.Random(7)
    for _ in range(40):
        x, y = random_elem(rng, base), random_elem(rng, base)
        if x.is_zero() or y.is_zero():
            continue
        assert ext_valuation(x * y) == ext_valuation(x) + ext_valuation(y)


@pytest.mark.parametrize("p,e,a", BASES)
def test_ring_laws_and_frobenius(p, e, a):
    f = get_field(p, e)
    base = S(f, a)
    rng = random.Random(11)
    for _ in range(20):
        x, y, z = (random_elem(rng, base) for _ in range(3))
        assert ((x * y) * z).same_terms(x * (y * z))
        assert (x * (y + z)).same_terms(x * y + x * z)
        assert x.frobenius().same_terms(x ** p)


@pytest.mark.parametrize("p,e,a", BASES)
def test_reduction_witness_identity(p, e, a):
    f = get_field(p, e)
    base = S(f, a)
    rng = random.Random(13)
    for _ in range(25):
        b = random_elem(rng, base, lo=-6, hi=3)
        r = ext_as_reduce(b)
        resid = b - r.reduced - (r.witness.frobenius() - r.witness)
        limit = p * base.hi
        assert all(v >= limit for v in resid.monomials())
        # reduced part: negative valuations prime to p, or constants
        for v, (i, s, c) in r.reduced.monomials().items():
            assert v <= 0 and (v == 0 or v % p)
        if r.relative_break is not NEG_INF and r.relative_break > 0:
            assert r.relative_break % p
        again = ext_as_reduce(r.reduced)
        assert again.reduced.same_terms(r.reduced)
        assert again.relative_break == r.relative_break


@given(data=st.data())
def test_presentation_invariance(data):
    f = F2
    k = data.draw(st.sampled_from([1, 3, 5]))
    a = S(f, {-k: 1})
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    b = random_elem(rng, a, lo=-3, hi=3)
    # change of presentation at both levels
    x = S(f, {rng.randrange(-2, 3): 1 for _ in range(2)})
    a2 = a + frobenius_minus_one(x)
    y = random_elem(rng, a, lo=-2, hi=2, terms=2)
    b_shift = b + (y.frobenius() - y)
    before = tower2_break(a, b)
    assert tower2_break(a, b_shift) == before
    # over a2 the variable is z2 = z + x, so b is rewritten via z = z2 - x
    nf = as_reduce(a2)
    assert nf.reduced.same_terms(as_reduce(a).reduced)
    assert tower2_break(a2, _substitute(b, x, a2)) == before


def _substitute(b, x, a2):
    """Express sum c_i z^i, z^p - z = a, in terms of z2 = z + x with z2^p - z2 = a2."""
    shift = ExtElem(a2, [-x, LaurentSeries(a2.field, {0: a2.field.one()}, a2.window, True)])
    out, power = ExtElem.zero(a2), ExtElem.one(a2)
    for i, c in enumerate(b.coeffs):
        if i:
            power = power * shift
        out = out + power.scale(c)
    return out


def test_precision_exhausted_on_narrow_window():
    base = S(F2, {-1: 1}, window=(-4, 1))
    b = ExtElem(base, [LaurentSeries(F2, {-4: F2.one()}, (-4, 0), False)])
    with pytest.raises(PrecisionExhausted):
        ext_as_reduce(b)
