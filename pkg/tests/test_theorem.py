import pytest

from k3clifford import (
    Kind,
    RangeError,
    TheoremQuery,
    bn_bounds,
    realize_clifford,
    realize_gonality,
    sweep,
)


def test_bn_bounds():
    assert bn_bounds(7) == (5, 3)
    assert bn_bounds(4) == (3, 1)
    assert bn_bounds(60) == (31, 29)
    for g in range(2, 100):
        gon, cliff = bn_bounds(g)
        assert cliff == gon - 2


def test_realize_clifford():
    cert = realize_clifford(11, 5)
    assert cert.degree_d == 7 and cert.min_cliff == 5
    cert = realize_clifford(4, 0)
    assert cert.degree_d == 2 and cert.min_cliff == 0


def test_realize_clifford_range_names_bound():
    with pytest.raises(RangeError, match=r"floor\(\(g-1\)/2\) = 5"):
        realize_clifford(11, 6)
    with pytest.raises(RangeError):
        realize_clifford(5, -1)


def test_realize_gonality():
    assert realize_gonality(3, 2).gonality == 2
    assert realize_gonality(10, 6).gonality == 6
    with pytest.raises(RangeError, match=r"floor\(\(g\+3\)/2\) = 6"):
        realize_gonality(10, 7)
    with pytest.raises(RangeError):
        realize_gonality(2, 2)


def test_query_degree():
    assert TheoremQuery(Kind.CLIFFORD, 9, 3).degree == 5
    assert TheoremQuery(Kind.GONALITY, 9, 3).degree == 3


@pytest.mark.parametrize("g", range(4, 40))
def test_cross_consistency(g):
    for k in range(2, bn_bounds(g)[0] + 1):
        assert realize_gonality(g, k).min_cliff == realize_clifford(g, k - 2).min_cliff


def test_sweep_small():
    t = sweep(3, 5)
    # g=3: 2 convention rows + 2 gonality rows; g=4: 2 + 2; g=5: 3 + 3
    assert len(t.rows) == 14
    assert t.all_verified


def test_sweep_g4():
    t = sweep(4, 4)
    assert [(r.kind, r.target) for r in t.rows] == [
        (Kind.CLIFFORD, 0),
        (Kind.CLIFFORD, 1),
        (Kind.GONALITY, 2),
        (Kind.GONALITY, 3),
    ]


def test_sweep_g3_convention_rows():
    t = sweep(3, 3)
    cliff = [r for r in t.rows if r.kind is Kind.CLIFFORD]
    assert [r.convention_branch for r in cliff] == ["hyperelliptic-g3", "nonhyperelliptic-g3"]
    assert [r.target for r in t.rows if r.kind is Kind.GONALITY] == [2, 3]


def test_sweep_range_errors():
    with pytest.raises(RangeError):
        sweep(5, 3)
    with pytest.raises(RangeError):
        sweep(2, 4)


def test_part_a_row_count():
    t = sweep(4, 30)
    for g in range(4, 31):
        n = sum(1 for r in t.rows if r.genus == g and r.kind is Kind.CLIFFORD)
        assert n == (g - 1) // 2 + 1


def test_sweep_deterministic_with_workers():
    assert sweep(3, 12).rows == sweep(3, 12, workers=2).rows
