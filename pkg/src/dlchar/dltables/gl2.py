"""The generic character table of GL2(F_q), q an odd prime power.

Class and character parameters are discrete logarithms: g is a fixed
generator of F_q^x and h one of F_(q^2)^x with g = h^(q+1), so all values
are powers of eps = zeta_(q-1) and zeta = zeta_(q^2-1).  Classes:

    a_u = diag(g^u, g^u)            central,        q-1 classes, size 1
    b_u = g^u * unipotent           non-semisimple, q-1 classes, size q^2-1
    c_{u,v} = diag(g^u, g^v), u<v   split regular,  (q-1)(q-2)/2, size q(q+1)
    d_t = h^t with t not in (q+1)Z  anisotropic,    q(q-1)/2,     size q(q-1)

(d_t is identified with d_(qt)).  Characters: U_i = alpha_i o det,
V_i = U_i (x) Steinberg, principal series W_{i,j} (i < j), and cuspidal
X_k for k mod q^2-1 not divisible by q+1, identified with X_(qk).

The split torus characters are pairs (i, j) swapped by the Weyl group; the
anisotropic torus characters are k acted on by k -> qk.
"""

from __future__ import annotations

from ..cyclotomic import cyc, prime_power, zeta
from ..rootdata import builtin_datum
from .core import GenericTable

__all__ = ["GL2Table", "build_gl2", "GL2_Q_CAP"]

GL2_Q_CAP = 49


def _aniso_reps(q):
    """Canonical reps of {t : (q+1) does not divide t} mod t ~ qt."""
    n = q * q - 1
    reps = []
    for t in range(n):
        if t % (q + 1) == 0:
            continue
        if min(t, (q * t) % n) == t:
            reps.append(t)
    return reps


class GL2Table(GenericTable):
    group = "GL2"

    def __init__(self, q):
        p, f = prime_power(q)
        if p == 2 or q < 3 or q > GL2_Q_CAP:
            raise ValueError(f"GL2 table needs an odd prime power 3 <= q <= {GL2_Q_CAP}")
        self.q = q
        self.p = p
        self.group_order = q * (q - 1) * (q * q - 1)
        self.datum = builtin_datum("GL2")
        self.w_labels = ("1", "s")
        self.datum_keys = {"1": "e", "s": "1"}
        self.torus_sizes = {"1": (q - 1) ** 2, "s": q * q - 1}

        self.split_pairs = [(u, v) for u in range(q - 1)
                            for v in range(u + 1, q - 1)]
        self.aniso_reps = _aniso_reps(q)
        self.class_labels = ([f"a{u}" for u in range(q - 1)]
                             + [f"b{u}" for u in range(q - 1)]
                             + [f"c{u},{v}" for u, v in self.split_pairs]
                             + [f"d{t}" for t in self.aniso_reps])
        self.class_sizes = ([1] * (q - 1) + [q * q - 1] * (q - 1)
                            + [q * (q + 1)] * len(self.split_pairs)
                            + [q * (q - 1)] * len(self.aniso_reps))
        self.unipotent_classes = [0, q - 1]  # a0 = I and b0 = J
        self.ambient_class_id = list(range(len(self.class_labels)))

        self.char_labels = ([f"U{i}" for i in range(q - 1)]
                            + [f"V{i}" for i in range(q - 1)]
                            + [f"W{i},{j}" for i, j in self.split_pairs]
                            + [f"X{k}" for k in self.aniso_reps])
        self.values = self._build_values()

    def _build_values(self):
        q = self.q
        n2 = q * q - 1
        eps = lambda k: zeta(q - 1, k)
        zz = lambda k: zeta(n2, k)
        rows = []
        for i in range(q - 1):
            row = [eps(2 * i * u) for u in range(q - 1)]
            row += [eps(2 * i * u) for u in range(q - 1)]
            row += [eps(i * (u + v)) for u, v in self.split_pairs]
            row += [eps(i * t) for t in self.aniso_reps]
            rows.append(row)
        for i in range(q - 1):
            row = [eps(2 * i * u) * q for u in range(q - 1)]
            row += [cyc(0)] * (q - 1)
            row += [eps(i * (u + v)) for u, v in self.split_pairs]
            row += [-eps(i * t) for t in self.aniso_reps]
            rows.append(row)
        for i, j in self.split_pairs:
            row = [eps((i + j) * u) * (q + 1) for u in range(q - 1)]
            row += [eps((i + j) * u) for u in range(q - 1)]
            row += [eps(i * u + j * v) + eps(i * v + j * u)
                    for u, v in self.split_pairs]
            row += [cyc(0)] * len(self.aniso_reps)
            rows.append(row)
        for k in self.aniso_reps:
            row = [eps(k * u) * (q - 1) for u in range(q - 1)]
            row += [-eps(k * u) for u in range(q - 1)]
            row += [cyc(0)] * len(self.split_pairs)
            row += [-(zz(k * t) + zz(k * q * t)) for t in self.aniso_reps]
            rows.append(row)
        return rows

    # ---- torus character hooks ------------------------------------------

    def theta_indices(self, w):
        q = self.q
        if w == "1":
            return [(i, j) for i in range(q - 1) for j in range(q - 1)]
        return list(range(q * q - 1))

    def theta_weyl_image(self, w, theta):
        if w == "1":
            return (theta[1], theta[0])
        return (self.q * theta) % (self.q * self.q - 1)

    def decomp(self, w, theta):
        q = self.q
        vec = [0] * self.num_chars
        if w == "1":
            i, j = theta
            if i == j:
                vec[self.char_index(f"U{i}")] = 1
                vec[self.char_index(f"V{i}")] = 1
            else:
                vec[self.char_index(f"W{min(i, j)},{max(i, j)}")] = 1
        else:
            k = theta
            if k % (q + 1) == 0:
                i = (k // (q + 1)) % (q - 1)
                vec[self.char_index(f"U{i}")] = 1
                vec[self.char_index(f"V{i}")] = -1
            else:
                rep = min(k, (q * k) % (q * q - 1))
                vec[self.char_index(f"X{rep}")] = -1
        return vec

    def theta_value(self, w, theta, class_label):
        q = self.q
        if class_label.startswith("a"):
            u = int(class_label[1:])
            if w == "1":
                i, j = theta
                return zeta(q - 1, (i + j) * u)
            return zeta(q * q - 1, theta * (q + 1) * u)
        if class_label.startswith("c") and w == "1":
            u, v = map(int, class_label[1:].split(","))
            i, j = theta
            return zeta(q - 1, i * u + j * v)
        if class_label.startswith("d") and w == "s":
            t = int(class_label[1:])
            return zeta(q * q - 1, theta * t)
        raise ValueError(f"{class_label} has no representative in T0[{w}]")

    # ---- Theta = Irr(G/ SL2-like kernel) action ---------------------------

    def linear_twist(self, t, char_idx):
        """Index of (alpha_t o det) * row, computed on labels."""
        q = self.q
        label = self.char_labels[char_idx]
        if label.startswith("U") or label.startswith("V"):
            i = int(label[1:])
            return self.char_index(f"{label[0]}{(i + t) % (q - 1)}")
        if label.startswith("W"):
            i, j = map(int, label[1:].split(","))
            i2, j2 = sorted(((i + t) % (q - 1), (j + t) % (q - 1)))
            return self.char_index(f"W{i2},{j2}")
        k = int(label[1:])
        k2 = (k + t * (q + 1)) % (q * q - 1)
        rep = min(k2, (q * k2) % (q * q - 1))
        return self.char_index(f"X{rep}")


def build_gl2(q):
    """Build and certify the GL2(F_q) table (orthogonality + counting)."""
    t = GL2Table(q)
    if t.num_classes != q * q - 1 or t.num_chars != q * q - 1:
        raise AssertionError(f"GL2(q={q}): expected q^2-1 classes and characters")
    t.check_degree_sum()
    t.check_first_orthogonality()
    t.check_second_orthogonality()
    return t
