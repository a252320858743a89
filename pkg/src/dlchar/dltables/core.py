"""Shared infrastructure for the rank-1 generic character tables.

A table bundles exact class data (labels, sizes, unipotent flags, fusion
into classes of the ambient algebraic group), the full matrix of character
values over the cyclotomics, and the torus-indexed family of virtual
characters given as integer vectors over the rows.  The two concrete
builders (split SL2 and GL2 for odd q) instantiate symbolic templates per
q; nothing here assumes the templates are correct, since the verification
suites certify them through orthogonality and the dimension, scalar
product, Green function and regular character identities, which
over-determine the data.
"""

from __future__ import annotations

from fractions import Fraction

from ..cyclotomic import CycNum, cyc

__all__ = ["GenericTable", "inner_product", "class_function_eq"]


def inner_product(table, f, g):
    """Standard scalar product (1/|G|) sum |C| f(C) conj(g(C))."""
    if len(f) != len(g) or len(f) != table.num_classes:
        raise ValueError("class function length mismatch")
    acc = cyc(0)
    for size, a, b in zip(table.class_sizes, f, g):
        if a and b:
            acc = acc + a * b.conj() * size
    return acc * Fraction(1, table.group_order)


def class_function_eq(f, g):
    return all(a == b for a, b in zip(f, g))


class GenericTable:
    """Base for the concrete SL2/GL2 tables.

    Subclasses populate, in __init__:
      class_labels, class_sizes, unipotent_classes (indices),
      ambient_class_id (fusion into algebraic-group classes),
      char_labels, values (rows of CycNum), datum (RootDatum),
      w_labels ("1", "s") with datum_keys, torus_sizes, theta counts,
    and implement the theta hooks below.
    """

    group = "?"

    # ---- hooks implemented per group ----------------------------------

    def theta_indices(self, w):
        raise NotImplementedError

    def theta_weyl_image(self, w, theta):
        """Action of the nontrivial Weyl element on Irr(T0[w])."""
        raise NotImplementedError

    def decomp(self, w, theta):
        """Integer row vector of the virtual character for (w, theta)."""
        raise NotImplementedError

    def theta_value(self, w, theta, class_label):
        """theta evaluated at a semisimple class representative in T0[w]."""
        raise NotImplementedError

    # ---- generic machinery ---------------------------------------------

    @property
    def num_classes(self):
        return len(self.class_labels)

    @property
    def num_chars(self):
        return len(self.char_labels)

    def class_index(self, label):
        return self.class_labels.index(label)

    def char_index(self, label):
        return self.char_labels.index(label)

    def row(self, label):
        return self.values[self.char_index(label)]

    def degrees(self):
        return [self.values[i][0].to_fraction() for i in range(self.num_chars)]

    def theta_canonical(self, w, theta):
        """Canonical representative of the Weyl orbit of theta."""
        img = self.theta_weyl_image(w, theta)
        return min(theta, img)

    def r_vector(self, w, theta):
        return self.decomp(w, self.theta_canonical(w, theta))

    def r_values(self, w, theta):
        key = (w, self.theta_canonical(w, theta))
        cache = getattr(self, "_r_cache", None)
        if cache is None:
            cache = self._r_cache = {}
        if key not in cache:
            vec = self.r_vector(w, theta)
            vals = []
            for c in range(self.num_classes):
                acc = cyc(0)
                for r, mult in enumerate(vec):
                    if mult:
                        acc = acc + self.values[r][c] * mult
                vals.append(acc)
            cache[key] = vals
        return cache[key]

    def distinct_r(self):
        """All distinct virtual characters: list of (w, canonical theta)."""
        out = []
        for w in self.w_labels:
            seen = set()
            for theta in self.theta_indices(w):
                can = self.theta_canonical(w, theta)
                if can not in seen:
                    seen.add(can)
                    out.append((w, can))
        return out

    def r_multiplicity(self, w, theta, char_idx):
        return self.r_vector(w, theta)[char_idx]

    def inner(self, f, g):
        return inner_product(self, f, g)

    def char_inner(self, i, j):
        return inner_product(self, self.values[i], self.values[j])

    def check_first_orthogonality(self):
        for i in range(self.num_chars):
            for j in range(i, self.num_chars):
                got = self.char_inner(i, j)
                want = 1 if i == j else 0
                if got != want:
                    raise AssertionError(
                        f"{self.group}(q={self.q}): <{self.char_labels[i]},"
                        f"{self.char_labels[j]}> = {got}, expected {want}")

    def check_second_orthogonality(self):
        for c in range(self.num_classes):
            for d in range(c, self.num_classes):
                acc = cyc(0)
                for r in range(self.num_chars):
                    acc = acc + self.values[r][c] * self.values[r][d].conj()
                if c == d:
                    want = cyc(Fraction(self.group_order, self.class_sizes[c]))
                else:
                    want = cyc(0)
                if acc != want:
                    raise AssertionError(
                        f"{self.group}(q={self.q}): column orthogonality fails "
                        f"at {self.class_labels[c]},{self.class_labels[d]}")

    def check_degree_sum(self):
        total = sum(d * d for d in self.degrees())
        if total != self.group_order:
            raise AssertionError(
                f"{self.group}(q={self.q}): sum of squared degrees {total} "
                f"!= |G| = {self.group_order}")
        if sum(self.class_sizes) != self.group_order:
            raise AssertionError("class sizes do not sum to |G|")

    def graph_components(self):
        """Connected components of the graph joining characters that share
        a virtual character; returned as a sorted partition of row indices."""
        parent = list(range(self.num_chars))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        for w, theta in self.distinct_r():
            support = [i for i, m in enumerate(self.r_vector(w, theta)) if m]
            for a, b in zip(support, support[1:]):
                union(a, b)
        comps = {}
        for i in range(self.num_chars):
            comps.setdefault(find(i), []).append(i)
        return sorted(sorted(c) for c in comps.values())

    def mult_table(self):
        """{(datum w key, theta): multiplicity} per character row."""
        out = [dict() for _ in range(self.num_chars)]
        for w in self.w_labels:
            dk = self.datum_keys[w]
            for theta in self.theta_indices(w):
                vec = self.r_vector(w, theta)
                for i, m in enumerate(vec):
                    if m:
                        out[i][(dk, theta)] = m
        return out
