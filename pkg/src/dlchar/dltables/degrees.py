"""Degree polynomials of the table rows and the invariants they carry.

Every row gets its polynomial from the multiplicity table through the root
datum; the checks tie the polynomial world to the character table: values
at q recover degrees, divisibility in Q[q] holds against the order
polynomial and the relevant torus quotients, the standard shape flag is
true throughout, and cuspidality read off from inner products agrees with
the (q-1)-adic criterion.  The weighted unipotent average singles out the
semisimple rows, which must be exactly the rows with vanishing q-valuation.
"""

from __future__ import annotations

from ..qpoly import Q
from ..rootdata import degree_polynomial, group_order_poly, torus_order_poly

__all__ = ["degree_data", "semisimple_and_depth"]


def degree_data(table):
    """Per-row DegreePolynomial, with the polynomial identities certified."""
    cache = getattr(table, "_degree_cache", None)
    if cache is not None:
        return cache
    datum = table.datum
    order = group_order_poly(datum)
    mults = table.mult_table()
    out = []
    for i in range(table.num_chars):
        dd = degree_polynomial(mults[i], datum)
        label = table.char_labels[i]
        if dd.poly.eval_at(table.q) != table.degrees()[i]:
            raise AssertionError(
                f"degree polynomial of {label} misses the degree at q={table.q}")
        if not dd.poly.divides(order):
            raise AssertionError(f"degree polynomial of {label} does not "
                                 "divide the order polynomial")
        for (wk, _theta) in mults[i]:
            quo = order.divexact(torus_order_poly(datum, wk))
            if not dd.poly.divides(quo):
                raise AssertionError(
                    f"degree polynomial of {label} does not divide "
                    f"|G|/|T_w| for an occurring w")
        if not dd.club:
            raise AssertionError(f"degree polynomial of {label} fails the "
                                 "leading/trailing shape")
        out.append(dd)
    table._degree_cache = out
    return out


def unipotent_average(table, row_idx):
    """Weighted average over the regular unipotent classes.

    The component groups A(u) have trivial Frobenius action here (forced:
    |A(u)| <= 2 and F fixes each class), so all weights are 1.
    """
    reg = table.unipotent_classes[1:]
    acc = table.values[row_idx][reg[0]]
    for c in reg[1:]:
        acc = acc + table.values[row_idx][c]
    return acc


def cuspidal_rows_from_table(table):
    """Rows orthogonal to every R_1^theta (= every proper HC induction)."""
    out = set()
    for i in range(table.num_chars):
        if all(table.r_vector("1", theta)[i] == 0
               for theta in table.theta_indices("1")):
            out.add(i)
    return out


def semisimple_and_depth(table):
    """Semisimple rows, depth values, and the cuspidality criterion."""
    degs = degree_data(table)
    semisimple = set()
    avs = []
    for i in range(table.num_chars):
        av = unipotent_average(table, i)
        avs.append(av)
        if not av.is_zero():
            semisimple.add(i)
    a_zero = {i for i, d in enumerate(degs) if d.a == 0}
    if semisimple != a_zero:
        raise AssertionError("semisimple rows disagree with a = 0 rows")

    s_sigma = len(table.datum.sigma_orbits)
    depth = []
    cuspidal_poly = set()
    for i, d in enumerate(degs):
        dval = d.poly.valuation(Q - 1)
        depth.append(s_sigma - dval)
        if dval >= s_sigma:
            cuspidal_poly.add(i)
    cuspidal_tab = cuspidal_rows_from_table(table)
    if cuspidal_poly != cuspidal_tab:
        raise AssertionError(
            "cuspidality from inner products disagrees with the (q-1)-adic "
            "criterion")
    if any(d < 0 for d in depth):
        raise AssertionError("negative depth")

    components = table.graph_components()
    for comp in components:
        found = [i for i in comp if i in semisimple]
        if not found:
            raise AssertionError("a graph component has no semisimple row")
        if table.group == "GL2" and len(found) != 1:
            raise AssertionError(
                "a GL2 graph component has more than one semisimple row")
    return {
        "semisimple": semisimple,
        "averages": avs,
        "cuspidal": cuspidal_tab,
        "depth": depth,
        "components": components,
    }
