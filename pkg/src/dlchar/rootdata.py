"""Root data: character lattice, Weyl action, order and degree polynomials.

A RootDatum packages the combinatorial skeleton of a connected reductive
group with Frobenius: the character lattice X = Z^rank, integer matrices for
the simple reflections acting on X, and a finite-order matrix phi0 with
lambda(F(t)) = q * phi0(lambda)(t).  Split groups take phi0 = identity;
twisted data supply phi0 explicitly (the SU3 datum uses -w0 of SL3).

The built-in data are hardcoded matrices; constructing root data from the
abstract classification is out of scope.  Weyl groups of built-ins are tiny,
so elements are enumerated as matrices keyed by BFS words over the
generators (key "e" is the identity, "12" means s1*s2 applied left to
right in the product ordering w = s1*s2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .cyclotomic import CycNum, prime_power, zeta
from .qpoly import ONE, Q, QPoly, QRatFun

__all__ = [
    "RootDatum",
    "FiniteTorusStructure",
    "DegreePolynomial",
    "builtin_datum",
    "BUILTIN_NAMES",
    "smith_normal_form",
    "torus_order_poly",
    "group_order_poly",
    "steinberg_identity_check",
    "t1_factorization_check",
    "finite_torus_structure",
    "compute_Z",
    "theta_from_lambda",
    "theta_order",
    "theta_value",
    "degree_polynomial",
]


# ----------------------------------------------------------- integer matrices

def mat_mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                       for j in range(n)) for i in range(n))


def mat_vec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def mat_eye(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_order(a, bound=64):
    acc = a
    n = len(a)
    for k in range(1, bound + 1):
        if acc == mat_eye(n):
            return k
        acc = mat_mul(acc, a)
    raise ValueError("matrix order exceeds bound")


def _char_poly(m):
    """det(q*I - m) as a QPoly, by cofactor expansion (small ranks only)."""
    n = len(m)
    entries = [[QPoly([-m[i][j]]) + (Q if i == j else 0) for j in range(n)]
               for i in range(n)]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        total = QPoly()
        r = rows[0]
        rest = rows[1:]
        for k, c in enumerate(cols):
            minor = det(rest, cols[:k] + cols[k + 1:])
            term = entries[r][c] * minor
            total = total + term if k % 2 == 0 else total - term
        return total

    return det(tuple(range(n)), tuple(range(n)))


def _mat_inv_int(a):
    """Inverse of an integer matrix with det +-1, exact."""
    n = len(a)
    aug = [[Fraction(a[i][j]) for j in range(n)] +
           [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = tuple(tuple(int(aug[i][n + j]) for j in range(n)) for i in range(n))
    return out


def smith_normal_form(m):
    """Smith normal form of an integer matrix: D = U M V.

    Returns (diag, U, V) with U, V unimodular and diag the nonnegative
    invariant factors d1 | d2 | ... as a tuple.
    """
    n = len(m)
    a = [list(row) for row in m]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(n):
        while True:
            # find pivot: smallest nonzero |entry| in the remaining block
            piv = None
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if a[i][j] and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            if a[t][t] < 0:
                negate_row(t)
            dirty = False
            for i in range(t + 1, n):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # divisibility fix-up: pivot must divide the rest of the block
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(bad, t, 1)
    diag = tuple(a[i][i] for i in range(n))
    return diag, tuple(tuple(r) for r in u), tuple(tuple(r) for r in v)


# ----------------------------------------------------------------- the datum

class RootDatum:
    def __init__(self, name, gens, phi0, num_positive_roots, dim_z0,
                 z0_order_poly=None):
        self.name = name
        self.rank = len(phi0)
        self.gens = tuple(tuple(tuple(r) for r in g) for g in gens)
        self.phi0 = tuple(tuple(r) for r in phi0)
        self.N = num_positive_roots
        self.dim_z0 = dim_z0
        self.z0_order = z0_order_poly if z0_order_poly is not None \
            else (Q - 1) ** dim_z0
        self.phi0_inv = _mat_inv_int(self.phi0)
        mat_order(self.phi0)  # must be finite
        for g in self.gens:
            if mat_mul(g, g) != mat_eye(self.rank):
                raise ValueError(f"{name}: generator is not an involution")
        for i in range(len(self.gens)):
            for j in range(i + 1, len(self.gens)):
                if mat_order(mat_mul(self.gens[i], self.gens[j])) not in (2, 3, 4, 6):
                    raise ValueError(f"{name}: braid order out of range")
        self._enumerate()
        self._sigma_setup()
        order = group_order_poly(self)
        if order.degree != 2 * self.N + self.rank:
            raise AssertionError(f"{name}: order polynomial degree mismatch")

    def _enumerate(self):
        ident = mat_eye(self.rank)
        self.elements = {"e": ident}
        self.lengths = {"e": 0}
        frontier = [("e", ident)]
        while frontier:
            nxt = []
            for word, m in frontier:
                for i, g in enumerate(self.gens, start=1):
                    m2 = mat_mul(m, g)
                    if m2 not in self._seen():
                        key = f"{i}" if word == "e" else word + str(i)
                        self.elements[key] = m2
                        self.lengths[key] = self.lengths[word] + 1
                        nxt.append((key, m2))
            frontier = nxt
        self._by_matrix = {m: k for k, m in self.elements.items()}

    def _seen(self):
        return set(self.elements.values())

    def _sigma_setup(self):
        # sigma(w) = phi0^-1 w phi0 permutes the generators
        self.sigma_gen_perm = []
        for g in self.gens:
            img = mat_mul(self.phi0_inv, mat_mul(g, self.phi0))
            try:
                idx = self.gens.index(img)
            except ValueError:
                raise ValueError(f"{self.name}: phi0 does not normalize the "
                                 "generator set") from None
            self.sigma_gen_perm.append(idx)
        # orbits of sigma on the simple reflections
        seen = set()
        self.sigma_orbits = []
        for i in range(len(self.gens)):
            if i in seen:
                continue
            orb = []
            x = i
            while x not in seen:
                seen.add(x)
                orb.append(x)
                x = self.sigma_gen_perm[x]
            self.sigma_orbits.append(tuple(sorted(orb)))

    def sigma_of(self, key):
        m = mat_mul(self.phi0_inv, mat_mul(self.elements[key], self.phi0))
        return self._by_matrix[m]

    def sigma_fixed_keys(self):
        return [k for k in self.elements if self.sigma_of(k) == k]

    def weyl_keys(self):
        return sorted(self.elements, key=lambda k: (self.lengths[k], k))

    def order(self):
        return len(self.elements)

    def action(self, key):
        return self.elements[key]

    def length(self, key):
        return self.lengths[key]

    def reflections(self):
        """All reflections: conjugates of the generators."""
        gens = set(self.gens)
        out = set()
        for m in self.elements.values():
            minv = _mat_inv_int(m)
            for g in gens:
                out.add(mat_mul(m, mat_mul(g, minv)))
        return {self._by_matrix[m] for m in out}

    def __repr__(self):
        return f"RootDatum({self.name}, rank {self.rank}, N={self.N})"


def _perm_mat(n, perm):
    return tuple(tuple(1 if i == perm[j] else 0 for j in range(n))
                 for i in range(n))


def _builtins():
    out = {}
    out["SL2"] = lambda: RootDatum("SL2", [((-1,),)], ((1,),), 1, 0)
    out["GL2"] = lambda: RootDatum(
        "GL2", [_perm_mat(2, (1, 0))], mat_eye(2), 1, 1)
    sl3_gens = [((0, 1), (1, 0)), ((1, -1), (0, -1))]
    out["SL3"] = lambda: RootDatum("SL3", sl3_gens, mat_eye(2), 3, 0)
    out["GL3"] = lambda: RootDatum(
        "GL3", [_perm_mat(3, (1, 0, 2)), _perm_mat(3, (0, 2, 1))],
        mat_eye(3), 3, 1)
    out["Sp4"] = lambda: RootDatum(
        "Sp4", [_perm_mat(2, (1, 0)), ((1, 0), (0, -1))], mat_eye(2), 4, 0)
    # SU3: the SL3 lattice with phi0 = -w0
    out["SU3"] = lambda: RootDatum("SU3", sl3_gens, ((1, 0), (1, -1)), 3, 0)
    return out


_BUILTINS = _builtins()
BUILTIN_NAMES = tuple(sorted(_BUILTINS))
_CACHE = {}


def builtin_datum(name):
    key = name.upper() if name.upper() in ("SL2", "GL2", "SL3", "GL3", "SU3") \
        else name.capitalize()
    if key not in _BUILTINS:
        raise KeyError(f"unknown root datum {name!r}; built-ins: {BUILTIN_NAMES}")
    if key not in _CACHE:
        _CACHE[key] = _BUILTINS[key]()
    return _CACHE[key]


# ------------------------------------------------------------------ operations

def torus_order_poly(datum, w):
    """|T_w| = det(q id - phi0^-1 w) in Z[q], monic of degree rank."""
    m = mat_mul(datum.phi0_inv, datum.action(w))
    poly = _char_poly(m)
    if not poly.is_monic() or poly.degree != datum.rank:
        raise AssertionError("torus order polynomial must be monic of full rank")
    return poly


def group_order_poly(datum):
    """|G| = q^N |T_1| sum_{w sigma-fixed} q^l(w)."""
    gen = QPoly()
    for k in datum.sigma_fixed_keys():
        gen = gen + QPoly.monomial(datum.length(k))
    return QPoly.monomial(datum.N) * torus_order_poly(datum, "e") * gen


def steinberg_identity_check(datum):
    """|G| = q^(2N) (|W|^-1 sum_w 1/|T_w|)^-1, exactly in Q(q)."""
    total = QRatFun(QPoly())
    for k in datum.weyl_keys():
        total = total + QRatFun(ONE, torus_order_poly(datum, k))
    total = total * Fraction(1, datum.order())
    rhs = QRatFun(QPoly.monomial(2 * datum.N)) / total
    return rhs == QRatFun(group_order_poly(datum))


def t1_factorization_check(datum):
    """|T_1| = |Z0| prod over sigma-orbits J of (q^|J| - 1)."""
    rhs = datum.z0_order
    for orb in datum.sigma_orbits:
        rhs = rhs * (QPoly.monomial(len(orb)) - 1)
    return torus_order_poly(datum, "e") == rhs


@dataclass(frozen=True)
class FiniteTorusStructure:
    """X/(F'-1)X with F' = q0 phi0 w^-1: the character group of T0[w]."""

    w: str
    q0: int
    invariant_factors: tuple
    basis_map: tuple      # unimodular U with x -> Ux mod d the projection
    generators: tuple     # columns of U^-1: lattice lifts of the generators

    def group_order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out


def finite_torus_structure(datum, w, q0):
    if q0 < 2:
        raise ValueError("q0 must be at least 2")
    prime_power(q0)
    winv = _mat_inv_int(datum.action(w))
    fprime = mat_mul(datum.phi0, winv)
    m = tuple(tuple(q0 * fprime[i][j] - (1 if i == j else 0)
                    for j in range(datum.rank)) for i in range(datum.rank))
    diag, u, v = smith_normal_form(m)
    expected = torus_order_poly(datum, w).eval_at(q0)
    got = 1
    for d in diag:
        got *= d
    if got != expected:
        raise AssertionError(f"invariant factor product {got} != |T_w|({q0}) = {expected}")
    uinv = _mat_inv_int(u)
    gens = tuple(tuple(row[j] for row in uinv) for j in range(datum.rank))
    return FiniteTorusStructure(w, q0, diag, u, gens)


def compute_Z(datum, lam, n, q0):
    """The set {w : q0 phi0(lam) - w(lam) in nX}, with witnesses lam_w.

    Returns [(w_key, lam_w)] over all of W; lam_w is the exact quotient
    (q0 phi0(lam) - w(lam)) / n, uniquely determined by w.
    """
    p, _ = prime_power(q0)
    if n < 1 or gcd(n, p) != 1:
        raise ValueError("n must be positive and coprime to the characteristic")
    lam = tuple(lam)
    target = mat_vec(datum.phi0, lam)
    target = tuple(q0 * c for c in target)
    out = []
    for key in datum.weyl_keys():
        moved = mat_vec(datum.action(key), lam)
        diff = tuple(a - b for a, b in zip(target, moved))
        if all(c % n == 0 for c in diff):
            out.append((key, tuple(c // n for c in diff)))
    return out


def theta_from_lambda(struct, lam_w):
    """Image of lam_w in the character group, in invariant-factor coordinates."""
    coords = mat_vec(struct.basis_map, tuple(lam_w))
    return tuple(c % d if d else c
                 for c, d in zip(coords, struct.invariant_factors))


def theta_order(struct, theta):
    out = 1
    for c, d in zip(theta, struct.invariant_factors):
        if d:
            out = lcm(out, d // gcd(d, c) if c else 1)
    return out


def theta_value(struct, theta, element_coords):
    """Value of the character at the torus element with the given coordinates."""
    val = CycNum.from_rational(1)
    for c, a, d in zip(theta, element_coords, struct.invariant_factors):
        if d > 1:
            val = val * zeta(d, c * a)
    return val


@dataclass(frozen=True)
class DegreePolynomial:
    poly: QPoly
    a: int          # q-valuation
    A: int          # degree
    n: int          # denominator
    club: bool      # leading/trailing +-1/n with integral middle


def degree_polynomial(mults, datum):
    """Degree polynomial from a multiplicity table {(w_key, theta): int}.

    Computes |W|^-1 sum_w sum_theta (-1)^l(w) m_(w,theta) q^-N |G| / |T_w|
    and its invariants (a, A, n) plus the shape flag: leading and trailing
    coefficients +-1/n, all intermediate coefficients integers.
    """
    per_w = {}
    for (w, _theta), mult in mults.items():
        per_w[w] = per_w.get(w, 0) + mult
    order = group_order_poly(datum)
    qn = QPoly.monomial(datum.N)
    total = QPoly()
    for w, c in per_w.items():
        if not c:
            continue
        frac = order.divexact(qn * torus_order_poly(datum, w))
        sign = -1 if datum.length(w) % 2 else 1
        total = total + frac * (sign * c)
    poly = total * Fraction(1, datum.order())
    if poly.is_zero():
        raise ValueError("degree polynomial vanished: inconsistent multiplicities")
    a = poly.valuation(Q)
    big_a = poly.degree
    n = poly.denominator_clearing()
    club = (abs(poly[big_a]) == Fraction(1, n)
            and abs(poly[a]) == Fraction(1, n)
            and all(poly[i].denominator == 1 for i in range(a + 1, big_a)))
    if not (0 <= a <= big_a <= datum.N and datum.order() % n == 0):
        raise AssertionError("degree polynomial invariants out of range")
    return DegreePolynomial(poly, a, big_a, n, club)
