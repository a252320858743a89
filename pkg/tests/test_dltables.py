from fractions import Fraction

import pytest

from dlchar.cyclotomic import sqrt_delta_q, zeta
from dlchar.dltables import (
    degree_data,
    get_table,
    gl2_table,
    green_functions,
    inner_product,
    lemma_app3_check,
    luconj_check,
    orthocomplement_basis,
    projector_report,
    semisimple_and_depth,
    sl2_table,
    uniform_projector,
    verify_dl_identities,
)
from dlchar.qpoly import Q


# ------------------------------------------------------------ table shapes ----

def test_sl2_q7_counts():
    t = sl2_table(7)
    assert t.num_classes == 11 == 7 + 4
    assert t.num_chars == 11


def test_sl2_q5_degree_multiset():
    t = sl2_table(5)
    assert sorted(int(d) for d in t.degrees()) == [1, 2, 2, 3, 3, 4, 4, 5, 6]


def test_sl2_q3_no_rho_family():
    # (q-3)/2 = 0: the principal-series family is empty at q = 3
    t = sl2_table(3)
    assert not any(lbl.startswith("rho") and lbl[3:].isdigit()
                   for lbl in t.char_labels)
    assert t.num_chars == 7


def test_sl2_rejects_bad_q():
    from dlchar.dltables import build_sl2
    for q in (2, 4, 8, 15, 51):
        with pytest.raises(ValueError):
            build_sl2(q)


def test_gl2_counts():
    assert gl2_table(3).num_classes == 8
    t = gl2_table(5)
    assert sum(d * d for d in t.degrees()) == 480
    assert sum(1 for d in t.degrees() if d == 1) == 4  # q-1 linear characters


# ---------------------------------------------------------- inner products ----

def test_inner_product_r1_triv():
    t = sl2_table(7)
    vals = t.r_values("1", 0)
    assert inner_product(t, vals, vals) == 2


def test_inner_product_cross_toral():
    t = sl2_table(7)
    a = t.r_values("1", 1)
    b = t.r_values("s", 1)
    assert inner_product(t, a, b) == 0


def test_inner_product_length_mismatch():
    t = sl2_table(5)
    with pytest.raises(ValueError):
        inner_product(t, t.values[0], t.values[0][:-1])


# --------------------------------------------------------------- identities ----

@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_sl2_identities(q):
    verify_dl_identities(sl2_table(q))


@pytest.mark.parametrize("q", [3, 5])
def test_gl2_identities(q):
    verify_dl_identities(gl2_table(q))


def test_rs_dimension_q7():
    t = sl2_table(7)
    from dlchar.dltables.verify import r_degree
    assert r_degree(t, "s", 1) == -6  # -q^-N |G:T0[s]| = -336/(7*8)


def test_green_values():
    for q in (5, 7):
        t = sl2_table(q)
        g = green_functions(t)
        assert g["1"] == [q + 1, 1, 1]
        assert g["s"] == [-(q - 1), 1, 1]
    g = green_functions(gl2_table(3))
    assert g["1"] == [4, 1]
    assert g["s"] == [-2, 1]


# ------------------------------------------------------- projector and luconj ----

@pytest.mark.parametrize("q", [3, 5, 7])
def test_sl2_projector_rank(q):
    rep = projector_report(sl2_table(q))
    assert rep["rank"] == q + 2
    assert not rep["identity"]


@pytest.mark.parametrize("q", [3, 5])
def test_gl2_projector_is_identity(q):
    rep = projector_report(gl2_table(q))
    assert rep["identity"]
    assert rep["rank"] == q * q - 1


@pytest.mark.parametrize("q", [3, 5, 7])
def test_sl2_luconj(q):
    rep = luconj_check(sl2_table(q))
    assert rep["ambient_classes"] == q + 2
    assert rep["pattern"]["J-supported"] in ("u1", "u2")


def test_orthocomplement_values_q5():
    # delta = +1 at q = 5: values +-sqrt(5) on J, J'
    t = sl2_table(5)
    u1, u2 = orthocomplement_basis(t)
    rep = luconj_check(t)
    u_j = u1 if rep["pattern"]["J-supported"] == "u1" else u2
    j, jp = t.class_index("J"), t.class_index("J'")
    root5 = sqrt_delta_q(5)
    assert u_j[j] in (root5, -root5)
    assert u_j[jp] == -u_j[j]
    assert u_j[j] * u_j[j] == 5
    # the documented labeling realizes +tau on J for u2
    assert rep["pattern"] == {"J-supported": "u2", "sign_at_J": "+tau",
                              "sign_at_-J": "+delta*tau"}


def test_gl2_luconj_all_classes():
    rep = luconj_check(gl2_table(3))
    assert rep["ambient_classes"] == 8


def test_uniform_projector_fixes_r_and_kills_complement():
    t = sl2_table(7)
    vals = t.r_values("s", 2)
    assert uniform_projector(t, vals) == vals
    u1, u2 = orthocomplement_basis(t)
    assert all(v == 0 for v in uniform_projector(t, u1))
    assert all(v == 0 for v in uniform_projector(t, u2))


# ------------------------------------------------------------- lemma app3 ----

def test_lemma_app3_sl2_q5():
    t = sl2_table(5)
    rep = lemma_app3_check(t, "I")
    assert rep[("1", "J")] == 1 and rep[("s", "J")] == 1
    assert rep[("1", "I")] == 6 and rep[("s", "I")] == -4
    rep = lemma_app3_check(t, "-I")
    assert rep[("1", "-J")] == 1
    assert rep[("1", "J")] == 0


def test_lemma_app3_sl2_q7_regular():
    rep = lemma_app3_check(sl2_table(7), "a1")
    assert rep[("1", "a1")] == 1
    assert rep[("1", "b1")] == 0
    assert rep[("1", "a2")] == 0


def test_lemma_app3_gl2():
    g = gl2_table(3)
    lemma_app3_check(g, "a0")
    lemma_app3_check(g, "a1")
    rep = lemma_app3_check(g, "c0,1")
    assert rep[("1", "c0,1")] == 1
    assert all(v == 0 for k, v in rep.items() if k[1] != "c0,1")


def test_lemma_app3_rejects_unsupported():
    t = sl2_table(5)
    with pytest.raises(ValueError):
        lemma_app3_check(t, "b1")
    with pytest.raises(ValueError):
        lemma_app3_check(t, "J")


# ----------------------------------------------------- degrees and semisimple ----

def test_sl2_degree_polynomials():
    t = sl2_table(5)
    dd = {lbl: d for lbl, d in zip(t.char_labels, degree_data(t))}
    assert dd["1"].poly == 1
    assert dd["St"].poly == Q
    assert dd["rho1"].poly == Q + 1
    assert dd["pi1"].poly == Q - 1
    assert dd["rho0'"].poly == (Q + 1) * Fraction(1, 2)
    assert dd["pi0'"].poly == (Q - 1) * Fraction(1, 2)
    assert all(d.club for d in dd.values())


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_sl2_n_values(q):
    t = sl2_table(q)
    halves = {"rho0'", "rho0''", "pi0'", "pi0''"}
    for lbl, d in zip(t.char_labels, degree_data(t)):
        assert d.n == (2 if lbl in halves else 1)


def test_sl2_semisimple_suite():
    t = sl2_table(5)
    rep = semisimple_and_depth(t)
    st = t.char_index("St")
    assert st not in rep["semisimple"]
    assert rep["averages"][st].is_zero()
    assert rep["averages"][t.char_index("rho0'")] == 1
    cusp = {t.char_labels[i] for i in rep["cuspidal"]}
    assert cusp == {"pi1", "pi2", "pi0'", "pi0''"}
    # depth zero exactly on cuspidals
    for i, d in enumerate(rep["depth"]):
        assert (d == 0) == (i in rep["cuspidal"])


def test_sl2_exceptional_component_has_two_semisimple():
    t = sl2_table(5)
    rep = semisimple_and_depth(t)
    comp = next(c for c in rep["components"]
                if t.char_index("rho0'") in c)
    assert len([i for i in comp if i in rep["semisimple"]]) == 2


@pytest.mark.parametrize("q", [3, 5])
def test_gl2_semisimple_suite(q):
    rep = semisimple_and_depth(gl2_table(q))
    # exactly one semisimple per component is asserted inside


def test_get_table():
    assert get_table("sl2", 5) is sl2_table(5)
    assert get_table("GL2", 3) is gl2_table(3)
    with pytest.raises(ValueError):
        get_table("Sp4", 5)


# ----------------------------------------------------------- value spot checks ----

def test_sl2_character_values_q7():
    t = sl2_table(7)
    eps = lambda k: zeta(6, k)
    row = t.row("rho1")
    assert row[t.class_index("I")] == 8
    assert row[t.class_index("a1")] == eps(1) + eps(-1)
    assert row[t.class_index("b1")] == 0
    st = t.row("St")
    assert st[t.class_index("I")] == 7
    assert st[t.class_index("b1")] == -1


def test_gl2_character_values_q5():
    t = gl2_table(5)
    val = t.row("U1")[t.class_index("c0,1")]
    assert val == zeta(4, 1)
    assert t.row("V0")[t.class_index("b0")] == 0
    assert t.row("X1")[t.class_index("a0")] == 4
