"""The generic character table of SL2(F_q), q an odd prime power.

Conventions: eps = zeta_(q-1) and eta = zeta_(q+1) are the fixed primitive
roots; tau is the exact square root of delta*q with delta = (-1)^((q-1)/2)
(a quadratic Gauss sum for prime q, rescaled for prime powers).  Classes:

    I, -I, J, J', -J, -J', a^l (1 <= l <= (q-3)/2), b^m (1 <= m <= (q-1)/2)

with J = [[1,1],[0,1]] and J' its non-square-parameter twin; a generates
the split torus of order q-1, b the anisotropic one of order q+1.  The
split torus characters theta_i send a -> eps^i; the anisotropic theta'_j
send b -> eta^j; both tori carry the inversion action of the Weyl group.

The four degree-(q+-1)/2 rows carry tau; which of the primed/double-primed
labels takes +tau is a genuine labeling freedom and is fixed here by
rho0'(J) = (1 + tau)/2 and pi0'(J) = (-1 - tau)/2.
"""

from __future__ import annotations

from fractions import Fraction

from ..cyclotomic import cyc, prime_power, sqrt_delta_q, zeta
from ..rootdata import builtin_datum
from .core import GenericTable

__all__ = ["SL2Table", "build_sl2", "SL2_Q_CAP"]

SL2_Q_CAP = 49


class SL2Table(GenericTable):
    group = "SL2"

    def __init__(self, q):
        p, f = prime_power(q)
        if p == 2 or q < 3 or q > SL2_Q_CAP:
            raise ValueError(f"SL2 table needs an odd prime power 3 <= q <= {SL2_Q_CAP}")
        self.q = q
        self.p = p
        self.group_order = q * (q * q - 1)
        self.delta = (-1) ** ((q - 1) // 2)
        self.tau = sqrt_delta_q(q)
        self.datum = builtin_datum("SL2")
        self.w_labels = ("1", "s")
        self.datum_keys = {"1": "e", "s": "1"}
        self.torus_sizes = {"1": q - 1, "s": q + 1}

        na = (q - 3) // 2
        nb = (q - 1) // 2
        self.class_labels = (["I", "-I", "J", "J'", "-J", "-J'"]
                             + [f"a{l}" for l in range(1, na + 1)]
                             + [f"b{m}" for m in range(1, nb + 1)])
        half = (q * q - 1) // 2
        self.class_sizes = ([1, 1, half, half, half, half]
                            + [q * (q + 1)] * na + [q * (q - 1)] * nb)
        self.unipotent_classes = [0, 2, 3]
        # F-stable classes of the algebraic group fuse J ~ J' and -J ~ -J'
        self.ambient_class_id = [0, 1, 2, 2, 3, 3] + \
            [4 + i for i in range(na + nb)]

        self.char_labels = (["1", "St"]
                            + [f"rho{i}" for i in range(1, na + 1)]
                            + [f"pi{j}" for j in range(1, nb + 1)]
                            + ["rho0'", "rho0''", "pi0'", "pi0''"])
        self.values = self._build_values(na, nb)

    def _build_values(self, na, nb):
        q = self.q
        eps = lambda k: zeta(q - 1, k)
        eta = lambda k: zeta(q + 1, k)
        tau = self.tau
        delta = self.delta
        one = cyc(1)
        half = Fraction(1, 2)

        rows = []
        # trivial
        rows.append([one] * self.num_classes)
        # Steinberg
        st = [cyc(q), cyc(q), cyc(0), cyc(0), cyc(0), cyc(0)]
        st += [one] * na + [cyc(-1)] * nb
        rows.append(st)
        # principal series rho_i, values eps^(il) + eps^(-il) on a^l
        for i in range(1, na + 1):
            sgn = (-1) ** i
            row = [cyc(q + 1), cyc(sgn * (q + 1)), one, one, cyc(sgn), cyc(sgn)]
            row += [eps(i * l) + eps(-i * l) for l in range(1, na + 1)]
            row += [cyc(0)] * nb
            rows.append(row)
        # discrete series pi_j, values -(eta^(jm) + eta^(-jm)) on b^m
        for j in range(1, nb + 1):
            sgn = (-1) ** j
            row = [cyc(q - 1), cyc(sgn * (q - 1)), cyc(-1), cyc(-1),
                   cyc(-sgn), cyc(-sgn)]
            row += [cyc(0)] * na
            row += [-(eta(j * m) + eta(-j * m)) for m in range(1, nb + 1)]
            rows.append(row)
        # the four half-discriminant rows
        plus = (one + tau) * half
        minus = (one - tau) * half
        dplus = plus * delta
        dminus = minus * delta
        rho_deg = Fraction(q + 1, 2)
        alt_a = [cyc((-1) ** l) for l in range(1, na + 1)]
        rows.append([cyc(rho_deg), cyc(rho_deg) * delta, plus, minus,
                     dplus, dminus] + alt_a + [cyc(0)] * nb)
        rows.append([cyc(rho_deg), cyc(rho_deg) * delta, minus, plus,
                     dminus, dplus] + alt_a + [cyc(0)] * nb)
        pi_deg = Fraction(q - 1, 2)
        mplus = (-one - tau) * half   # pi0'(J)
        mminus = (-one + tau) * half  # pi0''(J)
        alt_b = [cyc(-((-1) ** m)) for m in range(1, nb + 1)]
        rows.append([cyc(pi_deg), cyc(pi_deg) * (-delta), mplus, mminus,
                     mplus * (-delta), mminus * (-delta)] + [cyc(0)] * na + alt_b)
        rows.append([cyc(pi_deg), cyc(pi_deg) * (-delta), mminus, mplus,
                     mminus * (-delta), mplus * (-delta)] + [cyc(0)] * na + alt_b)
        return rows

    # ---- torus character hooks ------------------------------------------

    def theta_indices(self, w):
        return list(range(self.torus_sizes[w]))

    def theta_weyl_image(self, w, theta):
        return (-theta) % self.torus_sizes[w]

    def decomp(self, w, theta):
        q = self.q
        na = (q - 3) // 2
        vec = [0] * self.num_chars
        if w == "1":
            if theta == 0:
                vec[self.char_index("1")] = 1
                vec[self.char_index("St")] = 1
            elif theta == (q - 1) // 2:
                vec[self.char_index("rho0'")] = 1
                vec[self.char_index("rho0''")] = 1
            else:
                vec[self.char_index(f"rho{theta}")] = 1
        else:
            if theta == 0:
                vec[self.char_index("1")] = 1
                vec[self.char_index("St")] = -1
            elif theta == (q + 1) // 2:
                vec[self.char_index("pi0'")] = -1
                vec[self.char_index("pi0''")] = -1
            else:
                vec[self.char_index(f"pi{theta}")] = -1
        return vec

    def theta_value(self, w, theta, class_label):
        """theta at a semisimple representative lying in T0[w]."""
        q = self.q
        if class_label == "I":
            return cyc(1)
        if class_label == "-I":
            if w == "1":
                return zeta(q - 1, theta * (q - 1) // 2)
            return zeta(q + 1, theta * (q + 1) // 2)
        if class_label.startswith("a") and w == "1":
            return zeta(q - 1, theta * int(class_label[1:]))
        if class_label.startswith("b") and w == "s":
            return zeta(q + 1, theta * int(class_label[1:]))
        raise ValueError(f"{class_label} has no representative in T0[{w}]")


def build_sl2(q):
    """Build and certify the SL2(F_q) table (orthogonality + counting)."""
    t = SL2Table(q)
    if t.num_classes != q + 4 or t.num_chars != q + 4:
        raise AssertionError(f"SL2(q={q}): expected q+4 classes and characters")
    t.check_degree_sum()
    t.check_first_orthogonality()
    t.check_second_orthogonality()
    return t
