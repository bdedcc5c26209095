import pytest

from conftest import theorem_grid
from k3clifford import (
    DivisorClass,
    E_CLASS,
    L_CLASS,
    RangeError,
    brute_force_cliff,
    candidate_classes,
    cliff_of_bundle,
    cliff_value,
    contributes,
    gonality,
    make_surface,
    min_cliff,
    safe_radius,
)

D = DivisorClass
WITNESSES = [D(0, 1), D(1, -1)]


def test_cliff_of_bundle():
    assert cliff_of_bundle(4, 2) == 2
    assert cliff_of_bundle(0, 1) == 0
    for g in range(2, 30):
        # canonical bundle: degree 2g-2, h0 = g
        assert cliff_of_bundle(2 * g - 2, g) == 0
    with pytest.raises(ValueError):
        cliff_of_bundle(3, 0)


def test_cliff_value():
    S = make_surface(7, 4)
    assert cliff_value(S, E_CLASS) == 2
    assert cliff_value(S, D(1, -1)) == 2
    assert cliff_value(S, L_CLASS) == -2


def test_cliff_value_agrees_with_bundle_formula():
    # for O_C(E): degree d and h0 = 2
    for g, d in theorem_grid(4, 25):
        S = make_surface(g, d)
        assert cliff_value(S, E_CLASS) == cliff_of_bundle(d, 2)


def test_contributes():
    S = make_surface(7, 4)
    assert contributes(S, E_CLASS).verdict is True
    assert contributes(S, D(1, -1)).verdict is True
    assert contributes(S, D(0, 0)).verdict is False
    assert contributes(S, L_CLASS).verdict is False


def test_twice_E_is_excluded_by_h1_not_by_contribution():
    S = make_surface(9, 4)
    # O_C(2E) does contribute: h0 >= 3 and h1 = h0(O_C(L-2E)) >= chi(L-2E) = 2
    c = contributes(S, D(0, 2))
    assert c.verdict is True
    # but h1(2E) = 1, so it cannot be the class computing Cliff C
    res = brute_force_cliff(S, *safe_radius(S))
    assert D(0, 2) not in res.survivors
    assert res.census.h1_nonvanishing > 0


@pytest.mark.parametrize("g, d", [(7, 4), (3, 2), (3, 3), (20, 11), (4, 2), (60, 31)])
def test_candidate_classes(g, d):
    assert candidate_classes(make_surface(g, d)) == WITNESSES


@pytest.mark.parametrize("g, d", [(7, 6), (10, 7), (3, 4)])
def test_candidate_classes_range(g, d):
    with pytest.raises(RangeError):
        candidate_classes(make_surface(g, d))


def test_min_cliff_examples():
    cert = min_cliff(make_surface(7, 4))
    assert cert.min_cliff == 2 and cert.gonality == 4
    assert list(cert.witnesses) == WITNESSES
    assert cert.convention_branch is None
    assert cert.oracle_agrees

    cert = min_cliff(make_surface(3, 2))
    assert cert.min_cliff == 0 and cert.convention_branch == "hyperelliptic-g3"
    cert = min_cliff(make_surface(3, 3))
    assert cert.min_cliff == 1 and cert.convention_branch == "nonhyperelliptic-g3"
    assert E_CLASS in cert.witnesses


def test_min_cliff_refuses_out_of_range():
    with pytest.raises(RangeError):
        min_cliff(make_surface(10, 7))


@pytest.mark.parametrize("g, d, k", [(10, 6, 6), (3, 2, 2), (8, 3, 3)])
def test_gonality(g, d, k):
    assert gonality(make_surface(g, d)) == k


def test_gonality_sandwich_logged():
    cert = min_cliff(make_surface(8, 3))
    assert any("gon <= 3" in c and "gon >= 3" in c for c in cert.checks)


@pytest.mark.parametrize(
    "g, d, bounds, expected",
    [(7, 4, (2, 5), 2), (9, 4, (2, 6), 2), (3, 2, (2, 4), 0)],
)
def test_brute_force_examples(g, d, bounds, expected):
    res = brute_force_cliff(make_surface(g, d), *bounds)
    assert res.minimum == expected
    assert list(res.survivors) == WITNESSES


def test_brute_force_rejects_small_box():
    S = make_surface(7, 4)
    assert safe_radius(S) == (2, 4)
    with pytest.raises(RangeError):
        brute_force_cliff(S, 1, 1)
    with pytest.raises(RangeError):
        brute_force_cliff(S, 2, 3)


def test_brute_force_genus_three_uses_convention():
    res = brute_force_cliff(make_surface(3, 3), 2, 4)
    assert res.minimum == 1 and res.convention_branch == "nonhyperelliptic-g3"
    # on a plane quartic O_C(E) is a g^1_3 with h1 = 1, so nothing contributes
    assert res.survivors == ()


def test_census_stable_under_doubling():
    for g, d in [(7, 4), (9, 4), (12, 2), (25, 14)]:
        S = make_surface(g, d)
        xs, ys = safe_radius(S)
        a = brute_force_cliff(S, xs, ys)
        b = brute_force_cliff(S, 2 * xs, 2 * ys)
        assert a.census.stable_part() == b.census.stable_part()
        assert a.survivors == b.survivors
        assert b.census.examined > a.census.examined


def test_census_has_no_indeterminates_for_g_at_least_4():
    for g, d in theorem_grid(4, 30):
        cert = min_cliff(make_surface(g, d))
        assert cert.census.indeterminate == 0
