import itertools

import pytest

from ptypical.census import (brute_force_isomorphic, census_report, enumerate_as_classes,
                             rays_through_support, verify_splits2_torsor)
from ptypical.cones import Cone, orthant, ray, zero_cone
from ptypical.errors import InstanceTooLarge
from ptypical.finite_field import get_field
from ptypical.toric_algebra import ToricDatum, coker_basis_bounded, coker_normal_form

F2 = get_field(2, 1)
Q2 = orthant(2)
POS = ray((1,))


def D(terms, cone=Q2, f=F2, box=8):
    return ToricDatum(f, cone, terms, box)


def naive_isomorphic(a1, a2, box):
    """Try every y supported on the box points of the cone."""
    f = a1.field
    pts = list(a1.cone.lattice_points(box))
    d = a1 - a2
    for coeffs in itertools.product(list(f.elements()), repeat=len(pts)):
        y = ToricDatum(f, a1.cone, dict(zip(pts, coeffs)), box, check=False)
        if y.frobenius() - y == d:
            return True
    return False


def test_enumerate_examples():
    assert enumerate_as_classes(POS, 3, 2).count == 8
    assert enumerate_as_classes(POS, 0, 2).count == 2
    assert enumerate_as_classes(zero_cone(2), 5, 3).count == 3
    assert len(list(enumerate_as_classes(POS, 3, 2))) == 8


def test_enumeration_is_deterministic_and_shards_partition():
    full = list(enumerate_as_classes(Q2, 2, 2))
    assert full == list(enumerate_as_classes(Q2, 2, 2))
    shards = [list(enumerate_as_classes(Q2, 2, 2, shard=(i, 3))) for i in range(3)]
    assert sum(len(s) for s in shards) == len(full)
    assert set().union(*map(set, shards)) == set(full)
    assert all(coker_normal_form(x)[0] == x for x in full)
    with pytest.raises(ValueError):
        enumerate_as_classes(Q2, 2, 2, shard=(3, 3))


def test_splits2_examples():
    assert verify_splits2_torsor(D({(1, 0): 1, (0, 1): 1}), [ray((1, 0)), ray((0, 1))])
    assert not verify_splits2_torsor(D({(1, 1): 1}), [ray((1, 0)), ray((0, 1))])
    assert verify_splits2_torsor(D({}), [])
    # listing a ray twice does not double its contribution
    assert verify_splits2_torsor(D({(1, 0): 1}), [ray((1, 0)), ray((2, 0))])


def test_brute_force_examples():
    x = D({(1, 0): 1, (0, 3): 1})
    assert brute_force_isomorphic(x, x, 4)
    assert brute_force_isomorphic(D({(2,): 1}, POS), D({(1,): 1}, POS), 4)
    assert not brute_force_isomorphic(D({(1,): 1}, POS), D({}, POS), 4)
    with pytest.raises(InstanceTooLarge):
        brute_force_isomorphic(D({(1,): 1}, POS), D({}, POS), 40, guard=2 ** 4)


@pytest.mark.parametrize("cone,box,p,e", [(POS, 4, 2, 1), (POS, 3, 2, 2), (ray((1, 1)), 3, 2, 1),
                                          (POS, 4, 3, 1)])
def test_brute_force_matches_naive_and_normal_forms(cone, box, p, e):
    f = get_field(p, e)
    pts = list(cone.lattice_points(box))
    data = [ToricDatum(f, cone, dict(zip(pts, c)), box)
            for c in itertools.product(list(f.elements()), repeat=len(pts))]
    data = data[:: max(1, len(data) // 40)]
    for a1, a2 in itertools.product(data, repeat=2):
        expect = coker_normal_form(a1)[0] == coker_normal_form(a2)[0]
        assert brute_force_isomorphic(a1, a2, box) == expect
        if f.q ** len(pts) <= 256 and a1 is data[0]:
            assert naive_isomorphic(a1, a2, box) == expect


@pytest.mark.parametrize("box", [0, 1, 2, 3, 4])
def test_count_law_against_brute_force_classes(box):
    pts = list(POS.lattice_points(box))
    data = [D(dict(zip(pts, c)), POS, box=box) for c in itertools.product([0, 1], repeat=len(pts))]
    classes = []
    for x in data:
        if not any(brute_force_isomorphic(x, r, box) for r in classes):
            classes.append(x)
    census = enumerate_as_classes(POS, box, 2)
    assert census.count == len(classes) == 2 * 2 ** len(coker_basis_bounded(POS, box, 2).points)


def test_reconstruction_for_every_enumerated_datum():
    for x in enumerate_as_classes(Cone.from_rays([(1, 0), (1, 2)]), 3, 2):
        assert verify_splits2_torsor(x, rays_through_support(x))


def test_report_formats():
    js = census_report(POS, 3, 2, lam=(1,))
    assert '"height": "3"' in js
    csv_text = census_report(POS, 3, 2, fmt="csv")
    assert csv_text.splitlines()[0] == "support,coefficients,constant,ray_breaks"
    assert len(csv_text.splitlines()) == 9
    with pytest.raises(ValueError):
        census_report(POS, 1, 2, fmt="xml")
