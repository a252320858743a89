import pytest

from dlchar.unipotent import (
    CuspidalDatum,
    count_unipotent,
    enumerate_X,
    series_breakdown,
    xcirc,
    xcirc_levi,
    xcirc_of_subdiagram,
)
from dlchar.weyl import CartanType, partitions_count


def labels(xs):
    return sorted(str(x) for x in xs)


# ------------------------------------------------------------- xcirc sets ----

def test_xcirc_type_a_empty():
    for n in range(1, 21):
        assert xcirc(CartanType("A", n)) == []


def test_xcirc_b2():
    assert labels(xcirc("B2")) == ["(-1,2)"]


def test_xcirc_bc_side_condition():
    # nonempty exactly at n = l^2 + l
    nonempty = [n for n in range(2, 31) if xcirc(CartanType("B", n))]
    assert nonempty == [2, 6, 12, 20, 30]
    # n = 6: l = 2, omega = (-1)^(n/2) = -1, m = 2^l = 4
    assert labels(xcirc("B6")) == ["(-1,4)"]
    assert xcirc("B6")[0].omega == (2, 1)
    assert xcirc("B6")[0].m == 4


def test_xcirc_d_side_condition():
    nonempty = [n for n in range(4, 40) if xcirc(CartanType("D", n))]
    assert nonempty == [4, 16, 36]
    assert labels(xcirc("D4")) == ["(-1,2)"]
    assert xcirc("D16")[0].m == 8  # l = 2 -> 2^(2l-1)


def test_xcirc_e8_full_list():
    expect = {
        ((1, 0), 8), ((1, 0), 120), ((2, 1), 12),
        ((4, 1), 4), ((4, 3), 4),
        ((3, 1), 6), ((6, 5), 6), ((3, 2), 6), ((6, 1), 6),
        ((5, 1), 5), ((5, 2), 5), ((5, 3), 5), ((5, 4), 5),
    }
    got = {(x.omega, x.m) for x in xcirc("E8")}
    assert got == expect
    assert len(xcirc("E8")) == 13


def test_xcirc_twisted_e6():
    got = {(x.omega, x.m) for x in xcirc("2E6")}
    assert got == {((1, 0), 6), ((3, 1), 3), ((3, 2), 3)}


def test_xcirc_twisted_a():
    nonempty = [n for n in range(2, 21) if xcirc(CartanType("A", n, 2))]
    # n+1 triangular: n+1 in {3, 6, 10, 15, 21}
    assert nonempty == [2, 5, 9, 14, 20]
    assert {(x.omega, x.m) for x in xcirc("2A5")} == {((2, 1), 1)}
    assert {(x.omega, x.m) for x in xcirc("2A2")} == {((2, 1), 1)}


def test_xcirc_twisted_d():
    assert xcirc("2D4") == []
    # n = 9 = (2l+1)^2 with l = 1 -> m = 2^(2l) = 4
    assert {(x.omega, x.m) for x in xcirc(CartanType("D", 9, 2))} == {((1, 0), 4)}
    assert {(x.omega, x.m) for x in xcirc("3D4")} == {((1, 0), 2), ((2, 1), 2)}


@pytest.mark.parametrize("t,count", [
    ("G2", 4), ("F4", 7), ("E6", 2), ("E7", 2), ("E8", 13),
    ("2E6", 3), ("2A5", 1), ("B2", 1), ("D4", 1),
])
def test_cuspidal_counts(t, count):
    assert len(xcirc(t)) == count


# -------------------------------------------------------------- xcirc_levi ----

def test_levi_empty_set():
    assert [(x.omega, x.m) for x in xcirc_levi("E8", [])] == [((1, 0), 1)]


def test_levi_swapped_a2_pair_in_2e6():
    # orbit of size 2, induced automorphism trivial, untwisted A2 is empty
    assert xcirc_levi("2E6", [0, 2, 4, 5]) == []


def test_levi_a5_in_2e6():
    got = xcirc_levi("2E6", [0, 2, 3, 4, 5])
    assert [(x.omega, x.m) for x in got] == [((2, 1), 1)]


def test_levi_d4_in_2e6_gets_flip():
    # D4 subset {1,2,3,4} is sigma-stable; induced twist has order 2 -> empty
    assert xcirc_levi("2E6", [1, 2, 3, 4]) == []


def test_levi_rejects_unstable():
    with pytest.raises(ValueError):
        xcirc_levi("2E6", [0])


def test_product_rule_synthetic_reducible():
    # two disconnected B2 blocks; labels multiply componentwise
    cartan = (
        (2, -1, 0, 0), (-2, 2, 0, 0),
        (0, 0, 2, -1), (0, 0, -2, 2),
    )
    sigma = (0, 1, 2, 3)
    got = xcirc_of_subdiagram(cartan, sigma, [0, 1, 2, 3])
    assert [(x.omega, x.m) for x in got] == [((1, 0), 4)]  # (-1)(-1)=1, 2*2=4
    # swapping the two blocks: one orbit of two components, sigma^2 = id on B2
    sigma_swap = (2, 3, 0, 1)
    got = xcirc_of_subdiagram(cartan, sigma_swap, [0, 1, 2, 3])
    assert [(x.omega, x.m) for x in got] == [((2, 1), 2)]


def test_cuspidal_datum_product():
    a = CuspidalDatum((2, 1), 2)
    b = CuspidalDatum((3, 1), 3)
    assert (a * b).omega == (6, 5)
    assert (a * b).m == 6
    assert CuspidalDatum((4, 2), 1).omega == (2, 1)  # gcd normalization


def test_cuspidal_datum_validation():
    with pytest.raises(ValueError):
        CuspidalDatum((1, 0), 0)
    assert CuspidalDatum((6, 4), 3).omega == (3, 2)


def test_breakdown_totals_match_enumeration():
    for t in ["G2", "F4", "E6", "2E6", "3D4", "2A5", "A4"]:
        assert sum(s.total for s in series_breakdown(t)) == len(enumerate_X(t))


# ------------------------------------------------------------------ census ----

@pytest.mark.parametrize("t,total", [
    ("G2", 10), ("F4", 37), ("E6", 30), ("2E6", 30), ("E7", 76), ("E8", 166),
    ("3D4", 8),
])
def test_census_totals(t, total):
    assert count_unipotent(t) == total


def test_census_type_a_is_partition_count():
    for n in range(1, 9):
        assert count_unipotent(CartanType("A", n)) == partitions_count(n + 1)
    assert count_unipotent("2A5") == partitions_count(6)


def test_e6_series_split():
    split = {(s.J, s.total) for s in series_breakdown("E6")}
    assert split == {((), 25), ((1, 2, 3, 4), 3), (tuple(range(6)), 2)}
    rel = {s.J: [str(t) for t in s.relative_type] for s in series_breakdown("E6")}
    assert rel[(1, 2, 3, 4)] == ["A2"]


def test_g2_series_split():
    split = sorted((s.J, s.total) for s in series_breakdown("G2"))
    assert split == [((), 6), ((0, 1), 4)]


def test_a1_entries():
    entries = enumerate_X("A1")
    assert len(entries) == 2
    assert all(e.J == () and e.x.omega == (1, 0) and e.x.m == 1
               for e in entries)
    assert sorted(e.eps_index for e in entries) == [0, 1]


def test_entries_shape_and_embedding():
    for t in ["G2", "F4", "2E6", "3D4"]:
        ct = CartanType.parse(t)
        entries = enumerate_X(ct)
        assert len(entries) == count_unipotent(ct)
        full = tuple(range(ct.rank))
        cusp = [e for e in entries if e.J == full]
        # the embedding x -> (S, triv, x) hits exactly the J = S entries
        assert sorted((e.x.omega, e.x.m) for e in cusp) == \
            sorted((x.omega, x.m) for x in xcirc(ct))
        assert all(e.eps_index == 0 for e in cusp)
        # eps_index ranges over Irr of the relative group
        for e in entries:
            assert 0 <= e.eps_index
        assert all(e.x.omega_order() in (1, 2, 3, 4, 5, 6) for e in entries)


def test_entries_deterministic():
    assert enumerate_X("F4") == enumerate_X("F4")
