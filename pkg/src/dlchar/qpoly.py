"""Polynomials and rational functions in the indeterminate q over Q.

QPoly stores coefficients lowest-degree first with no trailing zeros; the
zero polynomial is the empty sequence.  QRatFun keeps the denominator monic
and coprime to the numerator, so equality is structural.  These carry the
order polynomials of the finite groups of Lie type and the degree
polynomials of their irreducible characters; exactness is mandatory, hence
Fraction coefficients throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

__all__ = ["QPoly", "QRatFun", "Q", "ONE", "ZERO"]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational coefficient: {x!r}")


class QPoly:
    """A polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c):
        return QPoly([c])

    @staticmethod
    def monomial(deg, c=1):
        return QPoly([0] * deg + [c])

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, deg):
        if 0 <= deg < len(self.coeffs):
            return self.coeffs[deg]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly.const(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return QPoly([c * f for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = QPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.leading()
        quo = [Fraction(0)] * max(0, len(rem) - dq)
        for top in range(len(rem) - 1, dq - 1, -1):
            c = rem[top] * inv
            if c:
                quo[top - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[top - dq + j] -= c * b
        return QPoly(quo), QPoly(rem)

    def divexact(self, other):
        """Exact quotient; raises if other does not divide self."""
        quo, rem = self.divmod(other)
        if not rem.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return quo

    def divides(self, other):
        """True when self divides other in Q[q]."""
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    def gcd(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a * (1 / a.leading())

    def eval_at(self, q0):
        """Exact evaluation at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def valuation(self, at):
        """Largest i with at^i dividing self; rational scalars are ignored."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial")
        if at.degree < 1:
            raise ValueError("valuation at a constant")
        v = 0
        p = self
        while True:
            quo, rem = p.divmod(at)
            if not rem.is_zero():
                return v
            v += 1
            p = quo

    def denominator_clearing(self):
        """Smallest positive integer n with n*self in Z[q]."""
        if self.is_zero():
            raise ValueError("denominator of the zero polynomial")
        return lcm(*[c.denominator for c in self.coeffs])

    def derivative(self):
        return QPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for deg in range(self.degree, -1, -1):
            c = self.coeffs[deg]
            if not c:
                continue
            if deg == 0:
                body = str(abs(c))
            else:
                var = "q" if deg == 1 else f"q^{deg}"
                body = var if abs(c) == 1 else f"{abs(c)}*{var}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = body if sign == "+" else f"-{body}"
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"QPoly({self})"

    def to_json(self):
        return [[deg, f"{c.numerator}/{c.denominator}"]
                for deg, c in enumerate(self.coeffs) if c]

    @staticmethod
    def from_json(pairs):
        if not pairs:
            return QPoly()
        top = max(deg for deg, _ in pairs)
        cs = [Fraction(0)] * (top + 1)
        for deg, s in pairs:
            cs[deg] = Fraction(s)
        return QPoly(cs)


Q = QPoly([0, 1])
ONE = QPoly([1])
ZERO = QPoly()


class QRatFun:
    """A rational function num/den over Q, den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, (int, Fraction)):
            num = QPoly.const(num)
        if isinstance(den, (int, Fraction)):
            den = QPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = num.gcd(den)
        num = num.divexact(g)
        den = den.divexact(g)
        lead = den.leading()
        self.num = num * (1 / lead)
        self.den = den * (1 / lead)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            other = QRatFun(other)
        if not isinstance(other, QRatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (QPoly, int, Fraction)):
            other = QRatFun(other)
        if not isinstance(other, QRatFun):
            return NotImplemented
        return QRatFun(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRatFun(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QRatFun) else QRatFun(other) * -1)

    def __mul__(self, other):
        if isinstance(other, (QPoly, int, Fraction)):
            other = QRatFun(other)
        if not isinstance(other, QRatFun):
            return NotImplemented
        return QRatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return QRatFun(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (QPoly, int, Fraction)):
            other = QRatFun(other)
        return self * other.inverse()

    def is_polynomial(self):
        return self.den == ONE

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError(f"{self} is not polynomial")
        return self.num

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"QRatFun({self})"
