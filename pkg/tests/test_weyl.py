import numpy as np
import pytest

from dlchar.weyl import (
    CartanType,
    ElementStore,
    RootSystem,
    class_count_bruteforce,
    compose,
    inverse,
    partitions_count,
    recognize_coxeter_matrix,
    relative_generators,
    relative_weyl_type,
)
from dlchar.weyl._kernels import EnumerationCapExceeded


# ---------------------------------------------------------------- types ----

def test_parse_and_render():
    assert str(CartanType.parse("a3")) == "A3"
    assert str(CartanType.parse("2A5")) == "2A5"
    assert str(CartanType.parse("3d4")) == "3D4"
    assert str(CartanType.parse("2E6")) == "2E6"
    # C normalizes to B
    assert str(CartanType.parse("C3")) == "B3"


@pytest.mark.parametrize("bad", ["E5", "F3", "G3", "2A1", "2G2", "3D5", "2E7", "X2"])
def test_inadmissible_types(bad):
    with pytest.raises(ValueError):
        CartanType.parse(bad)


def test_partitions():
    assert [partitions_count(n) for n in range(1, 11)] == \
        [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


# ---------------------------------------------------------- root systems ----

@pytest.mark.parametrize("t,count", [
    ("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("D4", 24),
    ("F4", 48), ("A7", 56), ("B5", 50), ("D5", 40), ("E6", 72),
    ("E7", 126), ("E8", 240),
])
def test_root_counts(t, count):
    rs = RootSystem(CartanType.parse(t))
    assert rs.nroots == count
    assert rs.npos * 2 == count
    # closed under negation with index pairing i <-> i + N
    for i in range(rs.npos):
        assert rs.roots[i + rs.npos] == tuple(-c for c in rs.roots[i])


def test_lengths():
    rs = RootSystem(CartanType.parse("A2"))
    assert rs.length(rs.identity) == 0
    assert rs.length(rs.simple_reflection(0)) == 1
    w0 = rs.longest_element()
    assert rs.length(w0) == 3
    assert np.array_equal(compose(w0, w0), rs.identity)


@pytest.mark.parametrize("t", ["A3", "B3", "D4", "G2", "F4", "E6"])
def test_longest_element(t):
    rs = RootSystem(CartanType.parse(t))
    w0 = rs.longest_element()
    assert rs.length(w0) == rs.npos
    assert np.array_equal(compose(w0, w0), rs.identity)
    assert np.array_equal(rs.longest_element([]), rs.identity)
    assert np.array_equal(rs.longest_element([0]), rs.simple_reflection(0))


def test_longest_element_b2_parabolic():
    rs = RootSystem(CartanType.parse("B2"))
    assert rs.length(rs.longest_element([0, 1])) == 4


def test_perms_preserve_negation():
    rs = RootSystem(CartanType.parse("F4"))
    for i in range(rs.rank):
        assert rs.check_preserves_negation(rs.simple_reflection(i))
    assert rs.check_preserves_negation(rs.longest_element())


# ------------------------------------------------------------ enumeration ----

@pytest.mark.parametrize("t,order", [("A1", 2), ("G2", 12), ("B3", 48),
                                     ("D4", 192), ("A5", 720)])
def test_enumeration_sizes(t, order):
    st = ElementStore(t)
    assert st.size == order == CartanType.parse(t).weyl_order()


def test_e6_enumeration_order_crosscheck():
    st = ElementStore("E6")
    assert st.size == 51840


@pytest.mark.parametrize("t", ["B3", "D4", "A4"])
def test_length_generating_function(t):
    st = ElementStore(t)
    coeffs = st.length_generating_coeffs()
    assert sum(coeffs) == st.size
    assert coeffs == coeffs[::-1]  # palindromic
    assert len(coeffs) - 1 == st.root_system.npos


@pytest.mark.parametrize("impl", ["numba", "numpy"])
def test_kernel_paths_agree(impl):
    st = ElementStore("B3", force_impl=impl)
    assert st.size == 48
    assert st.num_conjugacy_classes() == 10
    assert sorted(st.length_generating_coeffs()) == \
        sorted(ElementStore("B3").length_generating_coeffs())


def test_cap_refuses_e8():
    with pytest.raises(EnumerationCapExceeded):
        ElementStore("E8", cap=1000)
    with pytest.raises(EnumerationCapExceeded):
        ElementStore("E8")  # default cap admits E7 but not E8


# ------------------------------------------------------ twisted normalizer ----

def test_twisted_normalizer_a1():
    st = ElementStore("A1")
    rs = st.root_system
    one = rs.identity
    s = rs.simple_reflection(0)
    assert len(st.twisted_normalizer(one, one)) == 2
    assert len(st.twisted_normalizer(one, s)) == 0
    assert len(st.twisted_normalizer(s, s)) == 2


@pytest.mark.parametrize("t", ["A2", "B2", "2A3", "3D4"])
def test_twisted_normalizer_orbit_stabilizer(t):
    ct = CartanType.parse(t)
    st = ElementStore(ct.untwisted)
    rs = st.root_system
    sigma = rs.sigma_perm(ct)
    for idx in [0, st.size // 3, st.size - 1]:
        w = st.perms[idx]
        norm = st.twisted_normalizer(w, w, sigma)
        cls = st.twisted_class_indices(w, sigma)
        assert len(norm) * len(cls) == st.size
        # subgroup: closed under composition
        members = {tuple(st.perms[i]) for i in norm}
        sample = list(norm)[: min(6, len(norm))]
        for a in sample:
            for b in sample:
                assert tuple(compose(st.perms[a], st.perms[b])) in members


# -------------------------------------------------------------- class count ----

@pytest.mark.parametrize("t", ["A1", "A2", "A3", "A4", "A5", "A6",
                               "B2", "B3", "B4", "B5",
                               "D4", "D5", "G2", "F4"])
def test_class_count_vs_bruteforce(t):
    ct = CartanType.parse(t)
    assert ct.class_count() == class_count_bruteforce(ct)


def test_class_count_e6_vs_bruteforce():
    assert CartanType.parse("E6").class_count() == 25
    assert class_count_bruteforce(CartanType.parse("E6")) == 25


def test_class_count_constants():
    assert CartanType.parse("E7").class_count() == 60
    assert CartanType.parse("E8").class_count() == 112
    assert CartanType.parse("A1").class_count() == 2  # p(2)
    assert CartanType.parse("B2").class_count() == 5
    assert CartanType.parse("D4").class_count() == 13


def test_class_count_rejects_twisted():
    with pytest.raises(ValueError):
        CartanType.parse("2A3").class_count()


# ---------------------------------------------------------- relative types ----

def test_relative_type_full_group():
    # J = empty, sigma = id recovers the ambient type
    for t in ["A3", "B3", "D4", "F4", "E6", "E8"]:
        assert [str(x) for x in relative_weyl_type(t, [])] == [t]


@pytest.mark.parametrize("t,expect", [
    ("2A3", "B2"), ("2A5", "B3"), ("3D4", "G2"), ("2E6", "F4"),
])
def test_relative_type_twisted(t, expect):
    assert [str(x) for x in relative_weyl_type(t, [])] == [expect]


def test_relative_type_levis():
    # Bourbaki (0-based): D4 inside E6 is nodes {2,3,4,5} -> indices {1,2,3,4}
    assert [str(x) for x in relative_weyl_type("E6", [1, 2, 3, 4])] == ["A2"]
    # D4 inside E7/E8, E6 inside E7/E8, B2 inside F4
    assert [str(x) for x in relative_weyl_type("E7", [1, 2, 3, 4])] == ["B3"]
    assert [str(x) for x in relative_weyl_type("E8", [1, 2, 3, 4])] == ["F4"]
    assert [str(x) for x in relative_weyl_type("E7", [0, 1, 2, 3, 4, 5])] == ["A1"]
    assert [str(x) for x in relative_weyl_type("E8", [0, 1, 2, 3, 4, 5])] == ["G2"]
    assert [str(x) for x in relative_weyl_type("E8", [0, 1, 2, 3, 4, 5, 6])] == ["A1"]
    assert [str(x) for x in relative_weyl_type("F4", [1, 2])] == ["B2"]
    assert [str(x) for x in relative_weyl_type("2E6", [0, 2, 3, 4, 5])] == ["A1"]


def test_relative_type_whole_set_is_trivial():
    assert relative_weyl_type("E6", list(range(6))) == []


def test_relative_type_invalid_inputs():
    with pytest.raises(ValueError):
        relative_weyl_type("2E6", [0])  # not sigma-stable
    with pytest.raises(ValueError):
        relative_weyl_type("A2", [0])  # generator fails involution check


@pytest.mark.parametrize("t,fixed_order", [
    ("2A3", 8), ("2A5", 48), ("3D4", 12), ("2E6", 1152),
])
def test_relative_generators_generate_sigma_fixed(t, fixed_order):
    ct = CartanType.parse(t)
    st = ElementStore(ct.untwisted)
    sigma = st.root_system.sigma_perm(ct)
    fixed = st.sigma_fixed_indices(sigma)
    assert len(fixed) == fixed_order
    # the canonical generators generate exactly W^sigma
    gens = relative_generators(ct, [], st.root_system)
    seen = {tuple(st.root_system.identity)}
    frontier = [st.root_system.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                img = compose(w, g)
                key = tuple(img)
                if key not in seen:
                    seen.add(key)
                    nxt.append(img)
        frontier = nxt
    assert len(seen) == fixed_order
    fixed_set = {tuple(st.perms[i]) for i in fixed}
    assert seen == fixed_set


def test_relative_generators_match_stabilizer_e6_d4():
    # independent check by enumerating the sigma-fixed normalizer of J
    ct = CartanType.parse("E6")
    st = ElementStore(ct)
    rs = st.root_system
    J = [1, 2, 3, 4]
    jroots = {rs.root_index[tuple(1 if j == i else 0 for j in range(rs.rank))]
              for i in J}
    stab = []
    for idx in range(st.size):
        p = st.perms[idx]
        if {int(p[r]) for r in jroots} == jroots:
            stab.append(tuple(p))
    gens = relative_generators(ct, J, rs)
    seen = {tuple(rs.identity)}
    frontier = [rs.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                img = compose(w, g)
                if tuple(img) not in seen:
                    seen.add(tuple(img))
                    nxt.append(img)
        frontier = nxt
    assert len(seen) == 6  # W(A2)
    assert seen <= set(stab)


# ------------------------------------------------------ coxeter recognition ----

def test_recognize_direct():
    a2 = [[1, 3], [3, 1]]
    assert [str(t) for t in recognize_coxeter_matrix(a2)] == ["A2"]
    b2 = [[1, 4], [4, 1]]
    assert [str(t) for t in recognize_coxeter_matrix(b2)] == ["B2"]
    g2 = [[1, 6], [6, 1]]
    assert [str(t) for t in recognize_coxeter_matrix(g2)] == ["G2"]
    f4 = [[1, 3, 2, 2], [3, 1, 4, 2], [2, 4, 1, 3], [2, 2, 3, 1]]
    assert [str(t) for t in recognize_coxeter_matrix(f4)] == ["F4"]
    a1a1 = [[1, 2], [2, 1]]
    assert [str(t) for t in recognize_coxeter_matrix(a1a1)] == ["A1", "A1"]


def test_recognize_rejects_h3():
    h3 = [[1, 5, 2], [5, 1, 3], [2, 3, 1]]
    with pytest.raises(ValueError):
        recognize_coxeter_matrix(h3)


def test_inverse_helper():
    rs = RootSystem(CartanType.parse("B3"))
    w = rs.longest_element([0, 1])
    assert np.array_equal(compose(w, inverse(w)), rs.identity)
