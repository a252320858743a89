"""Combinatorial parametrization of unipotent characters.

The cuspidal label sets attach to each irreducible twisted type a finite set
of pairs (omega, m): a root of unity stored as a normalized (order, exponent)
pair and a positive integer.  The full label set of a type is fanned out over
sigma-stable parabolic subsets J: each J with nonempty cuspidal set for its
Levi contributes one entry per irreducible character of the relative Weyl
group, counted through the type-recognition machinery (no enumeration of W,
so E8 is cheap).

Everything here is integer combinatorics; roots of unity are exponent pairs
multiplied by exponent arithmetic, never floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm

from .weyl import CartanType, RootSystem, relative_class_count, relative_weyl_type
from .weyl.cartan import recognize_coxeter_matrix
from .weyl.engine import sigma_orbits

__all__ = [
    "CuspidalDatum",
    "XEntry",
    "SeriesInfo",
    "xcirc",
    "xcirc_levi",
    "enumerate_X",
    "count_unipotent",
    "series_breakdown",
]


def _normalize_root(order, exp):
    exp %= order
    if exp == 0:
        return (1, 0)
    g = gcd(order, exp)
    return (order // g, exp // g)


@dataclass(frozen=True, order=True)
class CuspidalDatum:
    """A cuspidal label (omega, m): omega = zeta_order^exp, gcd-normalized."""

    omega: tuple
    m: int

    def __post_init__(self):
        n, k = self.omega
        object.__setattr__(self, "omega", _normalize_root(n, k))
        if self.m < 1:
            raise ValueError("m must be a positive integer")

    def __mul__(self, other):
        n1, k1 = self.omega
        n2, k2 = other.omega
        n = lcm(n1, n2)
        return CuspidalDatum((n, k1 * (n // n1) + k2 * (n // n2)),
                             self.m * other.m)

    def omega_order(self):
        return self.omega[0]

    def __str__(self):
        n, k = self.omega
        if n == 1:
            w = "1"
        elif n == 2:
            w = "-1"
        else:
            w = f"z{n}" if k == 1 else f"z{n}^{k}"
        return f"({w},{self.m})"


_ONE = (1, 0)
_MINUS = (2, 1)
_I = (4, 1)
_MINUS_I = (4, 3)
_THETA = (3, 1)
_THETA2 = (3, 2)
_MINUS_THETA = (6, 5)   # -zeta_3
_MINUS_THETA2 = (6, 1)  # -zeta_3^2


def _sign(parity):
    return _MINUS if parity % 2 else _ONE


def xcirc(ctype):
    """Cuspidal labels of one irreducible (possibly twisted) type."""
    ctype = CartanType.parse(ctype) if isinstance(ctype, str) else ctype
    s, n, d = ctype.series, ctype.rank, ctype.twist
    out = []
    if d == 1:
        if s == "A":
            pass
        elif s == "B":
            l = (isqrt(4 * n + 1) - 1) // 2
            if l >= 1 and l * l + l == n:
                out = [(_sign(n // 2), 2 ** l)]
        elif s == "D":
            l = isqrt(n // 4)
            if l >= 1 and 4 * l * l == n:
                out = [(_sign(n // 4), 2 ** (2 * l - 1))]
        elif s == "G":
            out = [(_ONE, 6), (_MINUS, 2), (_THETA, 3), (_THETA2, 3)]
        elif s == "F":
            out = [(_ONE, 8), (_ONE, 24), (_MINUS, 4), (_I, 4), (_MINUS_I, 4),
                   (_THETA, 3), (_THETA2, 3)]
        elif n == 6:
            out = [(_THETA, 3), (_THETA2, 3)]
        elif n == 7:
            out = [(_I, 2), (_MINUS_I, 2)]
        else:  # E8
            out = [(_ONE, 8), (_ONE, 120), (_MINUS, 12), (_I, 4), (_MINUS_I, 4),
                   (_THETA, 6), (_MINUS_THETA, 6), (_THETA2, 6),
                   (_MINUS_THETA2, 6),
                   ((5, 1), 5), ((5, 2), 5), ((5, 3), 5), ((5, 4), 5)]
    elif s == "A":
        # nonempty exactly when n+1 is a triangular number l(l-1)/2
        l = (1 + isqrt(1 + 8 * (n + 1))) // 2
        if l * (l - 1) // 2 == n + 1:
            out = [(_sign((n + 1) // 2), 1)]
    elif s == "D" and d == 2:
        r = isqrt(n)
        if r * r == n and r % 2 == 1 and r >= 3:
            l = (r - 1) // 2
            out = [(_ONE, 2 ** (2 * l))]
    elif s == "D" and d == 3:
        out = [(_ONE, 2), (_MINUS, 2)]
    else:  # 2E6
        out = [(_ONE, 6), (_THETA, 3), (_THETA2, 3)]
    return [CuspidalDatum(w, m) for w, m in out]


def _component_split(cartan, nodes):
    """Connected components of the sub-diagram on the given nodes."""
    nodes = sorted(nodes)
    seen = set()
    comps = []
    for v in nodes:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nodes:
                if y not in seen and cartan[x][y] != 0:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def _component_type(cartan, comp):
    """Cartan type of one connected sub-diagram (B covers C)."""
    idx = {v: i for i, v in enumerate(comp)}
    r = len(comp)
    mat = [[1 if i == j else 2 for j in range(r)] for i in range(r)]
    for a in comp:
        for b in comp:
            if a != b and cartan[a][b] != 0:
                prod = cartan[a][b] * cartan[b][a]
                mat[idx[a]][idx[b]] = {1: 3, 2: 4, 3: 6}[prod]
    types = recognize_coxeter_matrix(mat)
    if len(types) != 1:
        raise AssertionError("connected component recognized as reducible")
    return types[0]


def _perm_order(perm, domain):
    order = 1
    for v in domain:
        x = perm[v]
        k = 1
        while x != v:
            x = perm[x]
            k += 1
        order = lcm(order, k)
    return order


def xcirc_levi(ambient, J, sigma_nodes=None):
    """Cuspidal labels of the Levi on a sigma-stable subset J.

    Splits J into sigma-orbits of connected components; an orbit of h
    components contributes the labels of one component twisted by the
    induced automorphism sigma^h, and orbits multiply componentwise as
    (omega*omega', m*m').  J = empty set gives the trivial-group label
    {(1, 1)}.
    """
    ambient = CartanType.parse(ambient) if isinstance(ambient, str) else ambient
    sigma = sigma_nodes if sigma_nodes is not None else ambient.diagram_automorphism()
    J = sorted(set(J))
    if sorted(sigma[j] for j in J) != J:
        raise ValueError(f"subset {J} is not sigma-stable in {ambient}")
    return xcirc_of_subdiagram(ambient.cartan_matrix(), sigma, J)


def xcirc_of_subdiagram(cartan, sigma, J):
    """The xcirc_levi computation on a raw (possibly reducible) diagram."""
    J = sorted(set(J))
    if not J:
        return [CuspidalDatum(_ONE, 1)]
    comps = _component_split(cartan, J)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = ci
    # orbits of sigma on components
    seen = set()
    factors = []
    for ci, comp in enumerate(comps):
        if ci in seen:
            continue
        h = 0
        cj = ci
        while True:
            seen.add(cj)
            h += 1
            cj = comp_of[sigma[comps[cj][0]]]
            if cj == ci:
                break
        # induced automorphism on the chosen component: sigma^h
        tau = {}
        for v in comp:
            x = v
            for _ in range(h):
                x = sigma[x]
            tau[v] = x
        base = _component_type(cartan, comp)
        twist = _perm_order(tau, comp)
        factors.append(CartanType(base.series, base.rank, twist))
    # product of the factor label sets
    out = [CuspidalDatum(_ONE, 1)]
    for ftype in factors:
        fx = xcirc(ftype)
        if not fx:
            return []
        out = [a * b for a in out for b in fx]
    return sorted(out)


@dataclass(frozen=True, order=True)
class XEntry:
    """One unipotent-character label (J, eps, x)."""

    J: tuple
    eps_index: int
    relative_type: tuple
    x: CuspidalDatum


@dataclass(frozen=True)
class SeriesInfo:
    J: tuple
    relative_type: tuple
    cuspidals: int
    irr_count: int

    @property
    def total(self):
        return self.cuspidals * self.irr_count


def _stable_subsets(ctype):
    sigma = ctype.diagram_automorphism()
    orbits = sigma_orbits(range(ctype.rank), sigma)
    # sigma-stable subsets = unions of node orbits
    for mask in range(1 << len(orbits)):
        J = []
        for i, orb in enumerate(orbits):
            if mask >> i & 1:
                J.extend(orb)
        yield tuple(sorted(J))


def series_breakdown(ctype):
    """All Harish-Chandra series with nonempty cuspidal sets, sorted by J."""
    ctype = CartanType.parse(ctype) if isinstance(ctype, str) else ctype
    sigma = ctype.diagram_automorphism()
    rs = RootSystem(ctype.untwisted)
    out = []
    for J in _stable_subsets(ctype):
        x0 = xcirc_levi(ctype, J, sigma)
        if not x0:
            continue
        rel = tuple(relative_weyl_type(ctype, J, rs))
        out.append(SeriesInfo(J, rel, len(x0), relative_class_count(rel)))
    return sorted(out, key=lambda s: (len(s.J), s.J))


def enumerate_X(ctype):
    """All labels (J, eps, x), sorted lexicographically by (J, eps, x)."""
    ctype = CartanType.parse(ctype) if isinstance(ctype, str) else ctype
    sigma = ctype.diagram_automorphism()
    rs = RootSystem(ctype.untwisted)
    entries = []
    for J in _stable_subsets(ctype):
        x0 = xcirc_levi(ctype, J, sigma)
        if not x0:
            continue
        rel = tuple(relative_weyl_type(ctype, J, rs))
        nirr = relative_class_count(rel)
        for eps in range(nirr):
            for x in x0:
                entries.append(XEntry(J, eps, rel, x))
    return sorted(entries, key=lambda e: (e.J, e.eps_index, e.x))


def count_unipotent(ctype):
    """Total number of unipotent-character labels of the given type."""
    return sum(s.total for s in series_breakdown(ctype))
