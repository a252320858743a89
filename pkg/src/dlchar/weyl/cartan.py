"""Cartan types, Cartan matrices, diagram automorphisms, class counts.

Node numbering follows Bourbaki throughout (internally 0-based): for D_n the
fork nodes are n-1 and n, for E-types node 2 hangs off node 4, for F_4 the
double bond sits between nodes 2 and 3.  Twisted types are written with a
leading twist order, e.g. "2A5", "3D4", "2E6".

Type C is normalized to B on construction: the two series share Weyl group,
root count and class count, which is all this package needs from the type.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

__all__ = ["CartanType", "recognize_coxeter_matrix", "partitions_count"]

_ADMISSIBLE_TWISTS = {
    ("A", 2), ("D", 2), ("D", 3), ("E", 2),
}


@dataclass(frozen=True)
class CartanType:
    series: str
    rank: int
    twist: int = 1

    def __post_init__(self):
        s, n, d = self.series, self.rank, self.twist
        if s == "C":
            object.__setattr__(self, "series", "B")
            s = "B"
        if s not in "ABDEFG":
            raise ValueError(f"unknown series {self.series!r}")
        if n < 1:
            raise ValueError("rank must be positive")
        if s == "B" and n < 2:
            raise ValueError("type B needs rank >= 2")
        if s == "D" and n < 4:
            raise ValueError("type D needs rank >= 4")
        if s == "E" and n not in (6, 7, 8):
            raise ValueError("type E exists for ranks 6, 7, 8 only")
        if s == "F" and n != 4:
            raise ValueError("type F exists for rank 4 only")
        if s == "G" and n != 2:
            raise ValueError("type G exists for rank 2 only")
        if d != 1:
            if (s, d) not in _ADMISSIBLE_TWISTS:
                raise ValueError(f"no twist of order {d} on type {s}{n}")
            if s == "A" and n < 2:
                raise ValueError("twisted A needs rank >= 2")
            if s == "D" and d == 3 and n != 4:
                raise ValueError("triality twist exists on D4 only")
            if s == "E" and n != 6:
                raise ValueError("twisted E exists on E6 only")
        object.__setattr__(self, "rank", int(n))
        object.__setattr__(self, "twist", int(d))

    @staticmethod
    def parse(text):
        """Parse strings like "A3", "2a5", "3D4", "2E6" (case-insensitive)."""
        t = text.strip().upper()
        if not t:
            raise ValueError("empty type string")
        twist = 1
        if t[0] in "123" and len(t) > 1 and t[1].isalpha():
            twist = int(t[0])
            t = t[1:]
        series = t[0]
        try:
            rank = int(t[1:])
        except ValueError:
            raise ValueError(f"cannot parse Cartan type {text!r}") from None
        return CartanType(series, rank, twist)

    def __str__(self):
        tw = str(self.twist) if self.twist != 1 else ""
        return f"{tw}{self.series}{self.rank}"

    @property
    def untwisted(self):
        return CartanType(self.series, self.rank)

    def num_positive_roots(self):
        s, n = self.series, self.rank
        if s == "A":
            return n * (n + 1) // 2
        if s == "B":
            return n * n
        if s == "D":
            return n * (n - 1)
        if s == "G":
            return 6
        if s == "F":
            return 24
        return {6: 36, 7: 63, 8: 120}[n]

    def weyl_order(self):
        s, n = self.series, self.rank
        if s == "A":
            return factorial(n + 1)
        if s == "B":
            return 2 ** n * factorial(n)
        if s == "D":
            return 2 ** (n - 1) * factorial(n)
        if s == "G":
            return 12
        if s == "F":
            return 1152
        return {6: 51840, 7: 2903040, 8: 696729600}[n]

    def cartan_matrix(self):
        """Cartan matrix C with C[i][j] = <alpha_j, alpha_i^vee>."""
        n = self.rank
        C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

        def bond(i, j, cij=-1, cji=-1):
            C[i][j] = cij
            C[j][i] = cji

        s = self.series
        if s in ("A", "B", "G", "F"):
            for i in range(n - 1):
                bond(i, i + 1)
            if s == "B" and n >= 2:
                # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
                C[n - 1][n - 2] = -2
            if s == "G":
                C[0][1] = -3
            if s == "F":
                C[2][1] = -2
        elif s == "D":
            for i in range(n - 3):
                bond(i, i + 1)
            bond(n - 3, n - 2)
            bond(n - 3, n - 1)
        else:  # E
            chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
            for a, b in zip(chain, chain[1:]):
                bond(a, b)
            bond(1, 3)
        return tuple(tuple(row) for row in C)

    def diagram_automorphism(self):
        """The node permutation realizing the twist, as a tuple on 0..rank-1."""
        n, d = self.rank, self.twist
        if d == 1:
            return tuple(range(n))
        s = self.series
        if s == "A":
            return tuple(n - 1 - i for i in range(n))
        if s == "D" and d == 2:
            perm = list(range(n))
            perm[n - 2], perm[n - 1] = perm[n - 1], perm[n - 2]
            return tuple(perm)
        if s == "D" and d == 3:
            # triality on D4: 1 -> 3 -> 4 -> 1 in Bourbaki numbering
            return (2, 1, 3, 0)
        # 2E6: 1<->6, 3<->5
        return (5, 1, 4, 3, 2, 0)

    def class_count(self):
        """Number of conjugacy classes of the (untwisted) Weyl group."""
        if self.twist != 1:
            raise ValueError("class_count is defined for untwisted types")
        s, n = self.series, self.rank
        if s == "A":
            return partitions_count(n + 1)
        if s == "B":
            return sum(partitions_count(k) * partitions_count(n - k)
                       for k in range(n + 1))
        if s == "D":
            return _type_d_class_count(n)
        if s == "G":
            return 6
        if s == "F":
            return 25
        # E7/E8 values are pinned transitively by the census totals
        return {6: 25, 7: 60, 8: 112}[n]


@lru_cache(maxsize=None)
def partitions_count(n):
    """p(n), the number of integer partitions."""
    dp = [1] + [0] * n
    for part in range(1, n + 1):
        for j in range(part, n + 1):
            dp[j] += dp[j - part]
    return dp[n]


@lru_cache(maxsize=None)
def _partitions_list(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_list(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _type_d_class_count(n):
    """Carter's count for W(D_n).

    Pairs (alpha, beta) with |alpha| + |beta| = n and beta having evenly many
    parts; pairs (alpha, empty) with all parts of alpha even count twice.
    """
    total = 0
    for k in range(n + 1):
        evens = sum(1 for b in _partitions_list(k) if len(b) % 2 == 0)
        total += partitions_count(n - k) * evens
    total += sum(1 for a in _partitions_list(n)
                 if a and all(part % 2 == 0 for part in a))
    return total


def recognize_coxeter_matrix(mat):
    """Recognize a finite-Weyl Coxeter matrix as a list of CartanTypes.

    mat[i][j] is the order of the product of generators i and j (diagonal
    entries 1).  Components are recognized up to isomorphism; B covers C.
    Raises ValueError when the graph is not a finite Weyl diagram.
    """
    r = len(mat)
    for i in range(r):
        if mat[i][i] != 1:
            raise ValueError("Coxeter matrix diagonal must be 1")
        for j in range(r):
            if mat[i][j] != mat[j][i]:
                raise ValueError("Coxeter matrix must be symmetric")
    adj = [[j for j in range(r) if j != i and mat[i][j] >= 3] for i in range(r)]
    seen = [False] * r
    out = []
    for start in range(r):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(_recognize_component(comp, mat, adj))
    return sorted(out, key=lambda t: (t.series, t.rank))


def _recognize_component(nodes, mat, adj):
    r = len(nodes)
    if r == 1:
        return CartanType("A", 1)
    edges = [(i, j) for a, i in enumerate(nodes) for j in nodes[a + 1:]
             if mat[i][j] >= 3]
    if len(edges) != r - 1:
        raise ValueError("Coxeter graph component is not a tree")
    labels = sorted(mat[i][j] for i, j in edges)
    degree = {v: len(adj[v]) for v in nodes}
    branch = [v for v in nodes if degree[v] >= 3]
    if not branch:
        # path
        if labels[-1] == 3:
            return CartanType("A", r)
        big = [(i, j) for i, j in edges if mat[i][j] > 3]
        if len(big) != 1 or labels.count(labels[-1]) != 1:
            raise ValueError(f"unrecognized path labels {labels}")
        i, j = big[0]
        label = mat[i][j]
        if label == 6:
            if r == 2:
                return CartanType("G", 2)
            raise ValueError("bond of order 6 in a rank > 2 diagram")
        if label == 4:
            if r == 2:
                return CartanType("B", 2)
            if degree[i] == 1 or degree[j] == 1:
                return CartanType("B", r)
            if r == 4:
                return CartanType("F", 4)
            raise ValueError("interior bond of order 4 outside F4")
        raise ValueError(f"unrecognized bond order {label}")
    if len(branch) > 1 or degree[branch[0]] > 3 or labels[-1] != 3:
        raise ValueError("not a finite Weyl diagram")
    # single trivalent node, all bonds simple: D or E
    b = branch[0]
    arms = []
    for first in adj[b]:
        ln = 1
        prev, cur = b, first
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            ln += 1
        arms.append(ln)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return CartanType("D", r)
    if arms == [1, 2, 2]:
        return CartanType("E", 6)
    if arms == [1, 2, 3]:
        return CartanType("E", 7)
    if arms == [1, 2, 4]:
        return CartanType("E", 8)
    raise ValueError(f"branch arms {arms} do not match a finite Weyl diagram")
