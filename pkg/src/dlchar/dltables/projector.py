"""The orthogonal projector onto the span of the virtual characters.

The projector is materialized as an exact matrix M acting on class
functions (values indexed by conjugacy classes).  Three independent
constructions must agree: the plain average over all (w, theta), the
Gram-matrix least-squares projection onto the distinct virtual characters,
and the sum over twisted conjugacy classes of the Weyl group weighted by
normalizer orders taken from the Weyl engine.  Idempotence, self-adjointness
and the trace (= rank) are then certified on M itself.
"""

from __future__ import annotations

from fractions import Fraction

from ..cyclotomic import cyc
from .core import inner_product
from .verify import weyl_a1_normalizer_sizes

__all__ = [
    "projector_matrix",
    "projector_report",
    "apply_matrix",
    "uniform_projector",
    "luconj_check",
    "orthocomplement_basis",
]


def _class_weights(table):
    return [Fraction(s, table.group_order) for s in table.class_sizes]


def _distinct_with_orbit_sizes(table):
    out = []
    for w in table.w_labels:
        seen = {}
        for theta in table.theta_indices(w):
            can = table.theta_canonical(w, theta)
            seen[can] = seen.get(can, 0) + 1
        for can, orbit in sorted(seen.items(), key=lambda kv: str(kv[0])):
            out.append((w, can, orbit))
    return out


def _norm(table, w, theta):
    vec = table.r_vector(w, theta)
    return sum(m * m for m in vec)


def _rank_one_accumulate(table, items):
    """Sum of weight * R (x) conj(R) * class-weight over the given items."""
    n = table.num_classes
    weights = _class_weights(table)
    m = [[cyc(0)] * n for _ in range(n)]
    for w, theta, coeff in items:
        vals = table.r_values(w, theta)
        scaled = [vals[cp].conj() * (weights[cp] * coeff) for cp in range(n)]
        for c in range(n):
            vc = vals[c]
            if vc.is_zero():
                continue
            row = m[c]
            for cp in range(n):
                if not scaled[cp].is_zero():
                    row[cp] = row[cp] + vc * scaled[cp]
    return m


def projector_matrix(table, form="w-sum"):
    """The projector as an exact matrix over the cyclotomics."""
    if form == "w-sum":
        # (1/|W|) sum over all (w, theta): each distinct R appears once per
        # theta in its Weyl orbit, and orbit * <R,R> = |W| makes the plain
        # average the orthogonal projection
        items = [(w, can, Fraction(orbit, 2))
                 for w, can, orbit in _distinct_with_orbit_sizes(table)]
        return _rank_one_accumulate(table, items)
    if form == "sigma-class":
        # sum over sigma-classes of W with 1/|N(w,w)| weights from the engine
        sizes, _ = weyl_a1_normalizer_sizes()
        items = [(w, can, Fraction(orbit, sizes[(w, w)]))
                 for w, can, orbit in _distinct_with_orbit_sizes(table)]
        return _rank_one_accumulate(table, items)
    if form == "gram":
        return _gram_projector(table)
    raise ValueError(f"unknown projector form {form!r}")


def _gram_projector(table):
    """Least-squares projection onto the distinct R's via the Gram matrix."""
    distinct = table.distinct_r()
    k = len(distinct)
    gram = [[Fraction(sum(a * b for a, b in zip(table.r_vector(*r1),
                                                table.r_vector(*r2))))
             for r2 in distinct] for r1 in distinct]
    weights = _class_weights(table)
    n = table.num_classes
    rvals = [table.r_values(*r) for r in distinct]
    cols = []
    for cp in range(n):
        rhs = [rvals[i][cp].conj() * weights[cp] for i in range(k)]
        coeffs = _solve_rational_system([row[:] for row in gram], rhs)
        col = [cyc(0)] * n
        for i in range(k):
            if coeffs[i].is_zero():
                continue
            vals = rvals[i]
            for c in range(n):
                if not vals[c].is_zero():
                    col[c] = col[c] + coeffs[i] * vals[c]
        cols.append(col)
    return [[cols[cp][c] for cp in range(n)] for c in range(n)]


def _solve_rational_system(mat, rhs):
    """Solve mat x = rhs with rational mat and cyclotomic rhs."""
    k = len(mat)
    rhs = list(rhs)
    for col in range(k):
        piv = next((r for r in range(col, k) if mat[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular Gram matrix")
        mat[col], mat[piv] = mat[piv], mat[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = Fraction(1) / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        rhs[col] = rhs[col] * inv
        for r in range(k):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                rhs[r] = rhs[r] - rhs[col] * f
    return rhs


def apply_matrix(table, m, f):
    n = table.num_classes
    out = []
    for c in range(n):
        acc = cyc(0)
        for cp in range(n):
            if f[cp] and not m[c][cp].is_zero():
                acc = acc + m[c][cp] * f[cp]
        out.append(acc)
    return out


def uniform_projector(table, f):
    """Project a class function onto the span of the virtual characters."""
    cache = getattr(table, "_projector_cache", None)
    if cache is None:
        cache = table._projector_cache = projector_matrix(table, "w-sum")
    return apply_matrix(table, cache, f)


def _is_identity(table, m):
    for c in range(table.num_classes):
        for cp in range(table.num_classes):
            want = 1 if c == cp else 0
            if m[c][cp] != want:
                return False
    return True


def projector_report(table):
    """Build the projector, certify its properties, and return a report."""
    m = projector_matrix(table, "w-sum")
    for form in ("gram", "sigma-class"):
        other = projector_matrix(table, form)
        for c in range(table.num_classes):
            for cp in range(table.num_classes):
                if m[c][cp] != other[c][cp]:
                    raise AssertionError(
                        f"projector forms w-sum and {form} disagree at "
                        f"({table.class_labels[c]}, {table.class_labels[cp]})")
    n = table.num_classes
    is_id = _is_identity(table, m)
    if not is_id:
        # idempotence: M^2 = M
        for c in range(n):
            for cp in range(n):
                acc = cyc(0)
                for k in range(n):
                    if not (m[c][k].is_zero() or m[k][cp].is_zero()):
                        acc = acc + m[c][k] * m[k][cp]
                if acc != m[c][cp]:
                    raise AssertionError("projector is not idempotent")
    # self-adjointness: w_c M[c][cp] = conj(M[cp][c]) w_cp
    weights = _class_weights(table)
    for c in range(n):
        for cp in range(n):
            if m[c][cp] * weights[c] != m[cp][c].conj() * weights[cp]:
                raise AssertionError("projector is not self-adjoint")
    trace = cyc(0)
    for c in range(n):
        trace = trace + m[c][c]
    rank = trace.to_fraction()
    if rank.denominator != 1 or int(rank) != len(table.distinct_r()):
        raise AssertionError(
            f"projector rank {rank} != number of distinct virtual characters")
    # P fixes every virtual character
    if not is_id:
        for w, theta in table.distinct_r():
            vals = table.r_values(w, theta)
            if apply_matrix(table, m, vals) != vals:
                raise AssertionError(f"projector moves R_{w}^{theta}")
    return {"matrix": m, "rank": int(rank), "identity": is_id}


def orthocomplement_basis(table):
    """The two exact class functions spanning the complement of the uniform
    space for the SL2 table.

    Up to scalars of absolute value 1 these are the characteristic functions
    of the two cuspidal character sheaves of SL2, supported on the classes
    of J and -J respectively; here they arise purely from the table rows.
    """
    if table.group != "SL2":
        raise ValueError("the orthocomplement basis is an SL2 feature")
    half = Fraction(1, 2)

    def combo(c1, c2, c3, c4):
        rows = [table.row("rho0'"), table.row("rho0''"),
                table.row("pi0'"), table.row("pi0''")]
        return [(rows[0][c] * c1 + rows[1][c] * c2 + rows[2][c] * c3
                 + rows[3][c] * c4) * half
                for c in range(table.num_classes)]

    u1 = combo(1, -1, 1, -1)
    u2 = combo(1, -1, -1, 1)
    return u1, u2


def luconj_check(table):
    """Characteristic functions of F-stable ambient classes are uniform.

    For SL2 additionally: the single-class function at J is NOT uniform and
    its non-uniform part expands exactly in the two orthocomplement
    functions, whose value pattern matches the expected one up to the
    documented labeling and sign freedom.
    """
    rep = projector_report(table)
    m = rep["matrix"]
    n = table.num_classes
    groups = {}
    for c, gid in enumerate(table.ambient_class_id):
        groups.setdefault(gid, []).append(c)
    for gid, members in groups.items():
        ind = [cyc(1 if c in members else 0) for c in range(n)]
        if apply_matrix(table, m, ind) != ind:
            raise AssertionError(
                f"ambient-class function {gid} is not fixed by the projector")
    report = {"ambient_classes": len(groups), "rank": rep["rank"]}
    if table.group == "SL2":
        if len(groups) != table.q + 2:
            raise AssertionError("SL2 must have q+2 F-stable ambient classes")
        cj = table.class_index("J")
        ind = [cyc(1 if c == cj else 0) for c in range(n)]
        pj = apply_matrix(table, m, ind)
        if pj == ind:
            raise AssertionError("the single-class function at J must not be uniform")
        u1, u2 = orthocomplement_basis(table)
        for i, u in enumerate((u1, u2)):
            for j, v in enumerate((u1, u2)):
                want = 1 if i == j else 0
                if inner_product(table, u, v) != want:
                    raise AssertionError("orthocomplement basis not orthonormal")
            if any(x != 0 for x in apply_matrix(table, m, u)):
                raise AssertionError("orthocomplement function not killed by P")
        resid = [a - b for a, b in zip(ind, pj)]
        c1 = inner_product(table, resid, u1)
        c2 = inner_product(table, resid, u2)
        rebuilt = [u1[c] * c1 + u2[c] * c2 for c in range(n)]
        if rebuilt != resid:
            raise AssertionError(
                "(1 - P) at J does not expand in the orthocomplement basis")
        report["expansion"] = (c1, c2)
        report["pattern"] = _pattern_check(table, u1, u2)
    return report


def _pattern_check(table, u1, u2):
    """Match the two functions against the expected value table.

    One function vanishes outside {J, J'} with opposite values there; the
    other vanishes outside {-J, -J'}; all four nonzero values square to
    delta*q.  Returns which function sits on the unipotent pair and the
    realized sign relative to the table's tau.
    """
    idx = {lbl: table.class_index(lbl) for lbl in ("J", "J'", "-J", "-J'")}
    others = [c for c in range(table.num_classes) if c not in idx.values()]

    def classify(u):
        if any(u[c] != 0 for c in others):
            return None
        on_j = u[idx["J"]] != 0 or u[idx["J'"]] != 0
        on_mj = u[idx["-J"]] != 0 or u[idx["-J'"]] != 0
        if on_j == on_mj:
            return None
        pair = ("J", "J'") if on_j else ("-J", "-J'")
        a, b = u[idx[pair[0]]], u[idx[pair[1]]]
        if a != -b or a * a != table.delta * table.q:
            return None
        return pair[0], a

    k1, k2 = classify(u1), classify(u2)
    if k1 is None or k2 is None or (k1[0] == "J") == (k2[0] == "J"):
        raise AssertionError(
            "orthocomplement functions do not match the expected value table")
    on_j = k1 if k1[0] == "J" else k2
    on_mj = k2 if k1[0] == "J" else k1
    return {
        "J-supported": "u1" if k1[0] == "J" else "u2",
        "sign_at_J": "+tau" if on_j[1] == table.tau else "-tau",
        "sign_at_-J": "+delta*tau" if on_mj[1] == table.tau * table.delta
        else "-delta*tau",
    }
