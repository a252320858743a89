"""Root systems with Weyl group elements realized as permutations of roots.

Roots are integer coordinate vectors over the simple basis, positives first
(sorted by height then lexicographically), negatives mirrored so that the
negation pairing is index i <-> i + N.  A Weyl element is an int16 array p
with p[i] the image index of root i; products compose as v[w] ("apply w,
then v"), so lengths, inverses and longest elements are all O(#roots).
"""

from __future__ import annotations

import numpy as np

__all__ = ["RootSystem", "compose", "inverse", "identity_perm"]


def compose(v, w):
    """The group product v*w: apply w first, then v."""
    return v[w]


def inverse(p):
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


def identity_perm(m):
    return np.arange(m, dtype=np.int16)


class RootSystem:
    def __init__(self, ctype):
        if ctype.twist != 1:
            ctype = ctype.untwisted
        self.ctype = ctype
        self.rank = ctype.rank
        self.cartan = ctype.cartan_matrix()
        roots = self._close_roots()
        pos = sorted((r for r in roots if min(r) >= 0),
                     key=lambda r: (sum(r), r))
        self.npos = len(pos)
        self.roots = pos + [tuple(-c for c in r) for r in pos]
        self.nroots = len(self.roots)
        self.root_index = {r: i for i, r in enumerate(self.roots)}
        self.simple_perms = np.stack(
            [self._reflection_perm(i) for i in range(self.rank)])
        expected = ctype.num_positive_roots()
        if self.npos != expected:
            raise AssertionError(
                f"{ctype}: built {self.npos} positive roots, expected {expected}")

    def _reflect(self, i, root):
        pairing = sum(self.cartan[i][j] * root[j] for j in range(self.rank))
        out = list(root)
        out[i] -= pairing
        return tuple(out)

    def _close_roots(self):
        simple = [tuple(1 if j == i else 0 for j in range(self.rank))
                  for i in range(self.rank)]
        roots = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for r in frontier:
                for i in range(self.rank):
                    img = self._reflect(i, r)
                    if img not in roots:
                        roots.add(img)
                        nxt.append(img)
            frontier = nxt
        return roots

    def _reflection_perm(self, i):
        perm = np.empty(self.nroots, dtype=np.int16)
        for idx, r in enumerate(self.roots):
            perm[idx] = self.root_index[self._reflect(i, r)]
        return perm

    # -- basic element operations ---------------------------------------

    @property
    def identity(self):
        return identity_perm(self.nroots)

    def simple_reflection(self, i):
        return self.simple_perms[i]

    def length(self, p):
        """Number of positive roots sent to negative roots."""
        return int(np.count_nonzero(p[: self.npos] >= self.npos))

    def neg_index(self, i):
        return i + self.npos if i < self.npos else i - self.npos

    def check_preserves_negation(self, p):
        n = self.npos
        return bool(np.array_equal((p[:n] + n) % (2 * n), p[n:]))

    def longest_element(self, J=None):
        """Longest element of the standard parabolic W_J, by greedy descent.

        Repeatedly right-multiplies by a generator in J whose simple root is
        still sent to a positive root; terminates after #pos(W_J) steps and
        never enumerates W_J, so it is usable for E8.
        """
        J = list(range(self.rank)) if J is None else sorted(J)
        w = self.identity
        simple_idx = [self.root_index[tuple(1 if j == i else 0
                                            for j in range(self.rank))]
                      for i in J]
        while True:
            progressed = False
            for i, ri in zip(J, simple_idx):
                if w[ri] < self.npos:
                    w = compose(w, self.simple_perms[i])
                    progressed = True
                    break
            if not progressed:
                return w

    def diagram_aut_perm(self, node_perm):
        """Extend a Cartan-preserving node permutation to the roots."""
        C = self.cartan
        for i in range(self.rank):
            for j in range(self.rank):
                if C[node_perm[i]][node_perm[j]] != C[i][j]:
                    raise ValueError("node permutation does not preserve the Cartan matrix")
        perm = np.empty(self.nroots, dtype=np.int16)
        for idx, r in enumerate(self.roots):
            img = [0] * self.rank
            for j, c in enumerate(r):
                img[node_perm[j]] = c
            perm[idx] = self.root_index[tuple(img)]
        return perm

    def sigma_perm(self, ctype=None):
        """Root permutation of the twist of ctype (defaults to own type)."""
        ct = ctype or self.ctype
        return self.diagram_aut_perm(ct.diagram_automorphism())

    def element_order(self, p, bound=200):
        acc = p
        for k in range(1, bound + 1):
            if np.array_equal(acc, self.identity):
                return k
            acc = compose(acc, p)
        raise ValueError(f"element order exceeds bound {bound}")
