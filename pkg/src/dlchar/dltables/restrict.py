"""The regular-embedding suite: restriction from GL2 to SL2.

The class map sends an SL2 class to the GL2 class containing it: both
unipotent classes J, J' fuse into the single GL2 class b_0 (they are
conjugate under diag(nu, 1)), central elements go to central classes, and
the torus classes match by eigenvalue data (a^l has eigenvalues g^l, g^-l;
b^m sits in the anisotropic torus as h^(m(q-1))).

The suite certifies: multiplicity-free restriction with orbit size r
dividing 2, restriction of virtual characters matching the character
restriction of the torus parameters, the degree-polynomial relation
r * D_constituent = D_ambient, the multiplicity-transfer formula through
the linear-character action, and the equality of the restriction-series
partition with the graph components.
"""

from __future__ import annotations

from .core import inner_product
from .degrees import degree_data, semisimple_and_depth

__all__ = ["class_restriction_map", "restrict_class_function",
           "restriction_decomposition", "restriction_suite"]


def class_restriction_map(sl2, gl2):
    """For each SL2 class index, the index of the GL2 class containing it."""
    q = sl2.q
    n2 = q * q - 1
    half = (q - 1) // 2

    def aniso(t):
        t %= n2
        return f"d{min(t, (q * t) % n2)}"

    out = []
    for label in sl2.class_labels:
        if label == "I":
            tgt = "a0"
        elif label == "-I":
            tgt = f"a{half}"
        elif label in ("J", "J'"):
            tgt = "b0"
        elif label in ("-J", "-J'"):
            tgt = f"b{half}"
        elif label.startswith("a"):
            l = int(label[1:])
            u, v = sorted((l % (q - 1), (-l) % (q - 1)))
            tgt = f"c{u},{v}"
        else:
            m = int(label[1:])
            tgt = aniso(m * (q - 1))
        out.append(gl2.class_index(tgt))
    return out


def restrict_class_function(sl2, gl2, values):
    cmap = class_restriction_map(sl2, gl2)
    return [values[cmap[c]] for c in range(sl2.num_classes)]


def restriction_decomposition(sl2, gl2):
    """Constituents of each GL2 row on SL2: list of lists of SL2 row indices."""
    cache = getattr(gl2, "_restriction_cache", None)
    if cache is not None:
        return cache
    out = []
    for i in range(gl2.num_chars):
        restricted = restrict_class_function(sl2, gl2, gl2.values[i])
        parts = []
        for j in range(sl2.num_chars):
            mult = inner_product(sl2, restricted, sl2.values[j])
            if mult.is_zero():
                continue
            if mult != 1:
                raise AssertionError(
                    f"restriction of {gl2.char_labels[i]} is not "
                    f"multiplicity-free: <.,{sl2.char_labels[j]}> = {mult}")
            parts.append(j)
        rebuilt = [sum_rows(sl2, parts, c) for c in range(sl2.num_classes)]
        if rebuilt != restricted:
            raise AssertionError(
                f"restriction of {gl2.char_labels[i]} is not a 0/1 sum of rows")
        out.append(parts)
    gl2._restriction_cache = out
    return out


def sum_rows(table, rows, c):
    acc = table.values[rows[0]][c]
    for r in rows[1:]:
        acc = acc + table.values[r][c]
    return acc


def _theta_restriction_index(sl2, gl2, w, theta):
    q = sl2.q
    if w == "1":
        i, j = theta
        return (i - j) % (q - 1)
    return theta % (q + 1)


def restriction_suite(sl2, gl2):
    """Run the whole embedding battery; returns a report dict."""
    if sl2.q != gl2.q:
        raise ValueError("tables must share q")
    q = sl2.q
    parts = restriction_decomposition(sl2, gl2)
    report = {}

    # orbit sizes r: multiplicity-free, r in {1, 2}, r divides |(Z/Z0)_F| = 2
    rs = [len(p) for p in parts]
    if any(r not in (1, 2) for r in rs):
        raise AssertionError("restriction orbit size outside {1, 2}")
    report["r_values"] = rs

    # restriction of the virtual characters (per torus character index)
    for w in sl2.w_labels:
        seen = set()
        for theta_t in gl2.theta_indices(w):
            restricted = restrict_class_function(
                sl2, gl2, gl2.r_values(w, theta_t))
            target = _theta_restriction_index(sl2, gl2, w, theta_t)
            if restricted != sl2.r_values(w, target):
                raise AssertionError(
                    f"virtual character restriction fails at w={w}, "
                    f"theta={theta_t}")
            seen.add(target)
        if seen != set(sl2.theta_indices(w)):
            raise AssertionError("torus character restriction is not onto")
    report["virtual character restriction"] = True

    # degree polynomial relation: D_constituent = D_ambient / r
    sl2_deg = degree_data(sl2)
    gl2_deg = degree_data(gl2)
    for i, p in enumerate(parts):
        for j in p:
            if sl2_deg[j].poly * len(p) != gl2_deg[i].poly:
                raise AssertionError(
                    f"degree polynomial relation fails for "
                    f"{gl2.char_labels[i]} -> {sl2.char_labels[j]}")
    report["degree relation"] = True

    # multiplicity transfer through the linear-character action
    _multiplicity_transfer(sl2, gl2, parts)
    report["multiplicity transfer"] = True

    # restriction series = graph components
    series = _restriction_series(sl2, gl2, parts)
    comps = sl2.graph_components()
    if sorted(series) != comps:
        raise AssertionError("restriction series do not match the graph "
                             "components")
    if len(comps) != q + 1:
        raise AssertionError(f"SL2 graph must have q+1 components, got "
                             f"{len(comps)}")
    report["series"] = series
    report["components"] = comps
    return report


def _semisimple_of_component(gl2):
    rep = semisimple_and_depth(gl2)
    out = {}
    for comp in rep["components"]:
        ss = [i for i in comp if i in rep["semisimple"]]
        for i in comp:
            out[i] = ss[0]
    return out


def _stabilizer(gl2, row):
    q = gl2.q
    return [t for t in range(q - 1) if gl2.linear_twist(t, row) == row]


def _multiplicity_transfer(sl2, gl2, parts):
    """<R_w^theta, rho_i> = sum over the twist orbit of <R_w^theta~, rho~>.

    Checked for every GL2 row, every w, every SL2 torus character theta and
    every extension theta~ lying under a virtual character containing the
    semisimple row of the component; when no extension does, the SL2
    multiplicity must vanish.
    """
    q = sl2.q
    ss_of = _semisimple_of_component(gl2)
    for i, p in enumerate(parts):
        rho0 = ss_of[i]
        stab = _stabilizer(gl2, rho0)
        orbit = sorted({gl2.linear_twist(t, i) for t in stab})
        # r = |stabilizer of the row| inside the stabilizer of rho0
        if len(orbit) * len(p) != len(stab):
            raise AssertionError("orbit-stabilizer mismatch in the "
                                 "multiplicity transfer")
        for w in sl2.w_labels:
            extensions = {}
            for theta_t in gl2.theta_indices(w):
                target = _theta_restriction_index(sl2, gl2, w, theta_t)
                extensions.setdefault(target, []).append(theta_t)
            for theta in sl2.theta_indices(w):
                lhs = {sl2.r_vector(w, theta)[j] for j in p}
                if len(lhs) != 1:
                    raise AssertionError(
                        "constituents with different multiplicities")
                lhs = lhs.pop()
                qualifying = [
                    tt for tt in extensions[theta]
                    if gl2.r_vector(w, tt)[rho0] != 0]
                if not qualifying:
                    if lhs != 0:
                        raise AssertionError(
                            f"nonzero multiplicity with no qualifying "
                            f"extension at w={w}, theta={theta}")
                    continue
                for tt in qualifying:
                    rhs = sum(gl2.r_vector(w, tt)[j] for j in orbit)
                    if lhs != rhs:
                        raise AssertionError(
                            f"multiplicity transfer fails at "
                            f"{gl2.char_labels[i]}, w={w}, theta={theta}")


def _restriction_series(sl2, gl2, parts):
    """Partition of SL2 rows by the twist orbits of GL2 components."""
    ss_of = _semisimple_of_component(gl2)
    q = gl2.q
    # orbit representatives of the full twist action on semisimple rows
    reps = {}
    for i in set(ss_of.values()):
        orbit = {gl2.linear_twist(t, i) for t in range(q - 1)}
        reps[min(orbit)] = sorted(orbit)
    series = []
    for rep_row, orbit in sorted(reps.items()):
        block = set()
        for i, comp_ss in ss_of.items():
            if comp_ss in orbit:
                block.update(parts[i])
        series.append(sorted(block))
    return series
