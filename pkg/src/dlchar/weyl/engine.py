"""Element stores, twisted normalizers and relative Weyl groups.

The element store enumerates a whole Weyl group breadth-first from the
simple reflections (numba or numpy kernels, see _kernels).  Groups beyond
the full-storage threshold keep only element hashes and lengths; every
enumeration is verified against the closed-form group order, which also
certifies hash collision freedom.

Relative Weyl groups of sigma-stable parabolic subsets are computed without
any enumeration, from the canonical longest-element generators, so the E8
census stays cheap.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels
from .cartan import CartanType, recognize_coxeter_matrix
from .rootsystem import RootSystem, compose, inverse

__all__ = [
    "ElementStore",
    "default_cap",
    "relative_weyl_type",
    "relative_class_count",
    "class_count_bruteforce",
    "sigma_orbits",
]

_FULL_STORE_LIMIT = 200_000


def default_cap():
    return int(os.environ.get("DLCHAR_WEYL_CAP", 3_000_000))


class ElementStore:
    """All elements of a Weyl group, with lengths, reachable by index."""

    def __init__(self, ctype, cap=None, keep_perms=None, force_impl=None):
        ctype = CartanType.parse(ctype) if isinstance(ctype, str) else ctype
        self.ctype = ctype.untwisted
        self.root_system = RootSystem(self.ctype)
        cap = cap if cap is not None else default_cap()
        expected = self.ctype.weyl_order()
        if expected > cap:
            raise _kernels.EnumerationCapExceeded(
                f"|W({self.ctype})| = {expected} exceeds cap {cap}; "
                "use the non-enumerative operations")
        if keep_perms is None:
            keep_perms = expected <= _FULL_STORE_LIMIT
        # the known order bounds the BFS, keeping hash tables tight
        perms, lengths, total = _kernels.enumerate_group(
            self.root_system.simple_perms, expected, keep_perms,
            force=force_impl)
        if total != expected:
            raise AssertionError(
                f"enumerated {total} elements of W({self.ctype}), "
                f"expected {expected} (hash collision or bad generators)")
        self.perms = perms
        self.lengths = lengths
        self.size = total
        self._force_impl = force_impl
        if perms is not None:
            pows = _kernels.hash_powers(self.root_system.nroots)
            hashes = _kernels.row_hash(perms, pows)
            order = np.argsort(hashes, kind="stable")
            self.sorted_hashes = hashes[order]
            self.sorted_to_row = order.astype(np.int64)
            if np.any(self.sorted_hashes[1:] == self.sorted_hashes[:-1]):
                raise AssertionError("hash collision inside a verified store")
            self._pows = pows

    def _need_perms(self):
        if self.perms is None:
            raise RuntimeError(
                f"W({self.ctype}) was enumerated hash-only; full element "
                "storage is disabled beyond the storage threshold")

    def index_of(self, perm):
        self._need_perms()
        h = _kernels.row_hash(perm[None, :], self._pows)[0]
        pos = int(np.searchsorted(self.sorted_hashes, h))
        if pos >= self.size or self.sorted_hashes[pos] != h:
            raise KeyError("permutation is not an element of this group")
        idx = int(self.sorted_to_row[pos])
        if not np.array_equal(self.perms[idx], perm):
            raise KeyError("permutation is not an element of this group")
        return idx

    def length_generating_coeffs(self):
        """Coefficients of sum_w q^l(w), lowest degree first."""
        counts = np.bincount(self.lengths)
        return [int(c) for c in counts]

    def conjugacy_class_ids(self, twist_perm=None):
        """Class ids under x -> g x g^-1 (or g x sigma(g)^-1 when twisted)."""
        self._need_perms()
        gens = self.root_system.simple_perms
        if twist_perm is None:
            left = gens
            right = gens
        else:
            # sigma(s_i) is again a simple reflection
            left = gens
            right = np.stack([
                compose(twist_perm, compose(g, inverse(twist_perm)))
                for g in gens])
        return _kernels.class_ids(self.perms, left, right,
                                  self.sorted_hashes, self.sorted_to_row,
                                  force=self._force_impl)

    def num_conjugacy_classes(self, twist_perm=None):
        ids = self.conjugacy_class_ids(twist_perm)
        return int(ids.max()) + 1

    def sigma_fixed_indices(self, sigma_perm):
        """Indices of elements with sigma(x) = x."""
        self._need_perms()
        sig_inv = inverse(sigma_perm)
        conj = sigma_perm[self.perms[:, sig_inv]]
        mask = np.all(conj == self.perms, axis=1)
        return np.nonzero(mask)[0]

    def twisted_normalizer(self, w, w_prime, sigma_perm=None):
        """Indices of {x : x w sigma(x)^-1 = w'}; full scan of the store."""
        self._need_perms()
        if sigma_perm is None:
            sigma_perm = self.root_system.identity
        sig_inv = inverse(sigma_perm)
        # x w sigma(x)^-1 = w'  <=>  x o w = w' o sigma(x)
        lhs = self.perms[:, w]
        sig_x = sigma_perm[self.perms[:, sig_inv]]
        rhs = np.take_along_axis(
            np.broadcast_to(w_prime, sig_x.shape), sig_x, axis=1)
        mask = np.all(lhs == rhs, axis=1)
        return np.nonzero(mask)[0]

    def twisted_class_indices(self, w, sigma_perm=None):
        """Orbit of w under x -> g x sigma(g)^-1, as store indices."""
        self._need_perms()
        ids = self.conjugacy_class_ids(twist_perm=sigma_perm)
        return np.nonzero(ids == ids[self.index_of(w)])[0]


def sigma_orbits(nodes, node_perm):
    """Orbits of a node permutation on a set of node indices, sorted."""
    nodes = sorted(nodes)
    seen = set()
    orbits = []
    for v in nodes:
        if v in seen:
            continue
        orb = []
        x = v
        while x not in seen:
            seen.add(x)
            orb.append(x)
            x = node_perm[x]
            if x not in nodes and x != v:
                raise ValueError("node set is not stable under the permutation")
        orbits.append(tuple(sorted(orb)))
    return orbits


def relative_weyl_type(ctype, J, root_system=None):
    """Type of the relative Weyl group of a sigma-stable subset J.

    For each sigma-orbit O on the complement of J the canonical generator is
    w0(J u O) * w0(J); their pairwise product orders assemble a Coxeter
    matrix which is then recognized.  Valid whenever these generators are
    involutions normalizing the simple roots of J (always the case for the
    subsets carrying cuspidal data); otherwise raises ValueError.
    """
    ctype = CartanType.parse(ctype) if isinstance(ctype, str) else ctype
    rs = root_system or RootSystem(ctype.untwisted)
    sigma_nodes = ctype.diagram_automorphism()
    J = sorted(set(J))
    if sorted(sigma_nodes[j] for j in J) != J:
        raise ValueError(f"subset {J} is not stable under the twist of {ctype}")
    complement = [i for i in range(ctype.rank) if i not in J]
    orbits = sigma_orbits(complement, sigma_nodes)
    if not orbits:
        return []
    w0J = rs.longest_element(J)
    simple_idx = {i: rs.root_index[tuple(1 if j == i else 0
                                         for j in range(rs.rank))]
                  for i in J}
    gens = []
    for orb in orbits:
        c = compose(rs.longest_element(J + list(orb)), w0J)
        if np.array_equal(c, rs.identity):
            raise ValueError(f"degenerate canonical generator for orbit {orb}")
        if not np.array_equal(compose(c, c), rs.identity):
            raise ValueError(
                f"canonical generator for orbit {orb} is not an involution; "
                f"{ctype} with J={J} is outside the valid regime")
        jroots = {simple_idx[i] for i in J}
        if {int(c[r]) for r in jroots} != jroots:
            raise ValueError(
                f"canonical generator for orbit {orb} does not normalize J")
        gens.append(c)
    r = len(gens)
    mat = [[1] * r for _ in range(r)]
    for a in range(r):
        for b in range(a + 1, r):
            try:
                order = rs.element_order(compose(gens[a], gens[b]), bound=30)
            except ValueError:
                raise ValueError("generator product order exceeds any finite "
                                 "Weyl bond; unrecognized Coxeter matrix") from None
            mat[a][b] = mat[b][a] = order
    return recognize_coxeter_matrix(mat)


def relative_generators(ctype, J, root_system=None):
    """The canonical generators used by relative_weyl_type, as permutations."""
    ctype = CartanType.parse(ctype) if isinstance(ctype, str) else ctype
    rs = root_system or RootSystem(ctype.untwisted)
    sigma_nodes = ctype.diagram_automorphism()
    J = sorted(set(J))
    complement = [i for i in range(ctype.rank) if i not in J]
    w0J = rs.longest_element(J)
    return [compose(rs.longest_element(J + list(orb)), w0J)
            for orb in sigma_orbits(complement, sigma_nodes)]


def relative_class_count(types):
    """Number of irreducible characters of a product of Weyl groups."""
    out = 1
    for t in types:
        out *= t.class_count()
    return out


def class_count_bruteforce(ctype, force_impl=None):
    """Conjugacy classes counted by explicit orbit closure (the oracle)."""
    store = ElementStore(ctype, keep_perms=True, force_impl=force_impl)
    return store.num_conjugacy_classes()
