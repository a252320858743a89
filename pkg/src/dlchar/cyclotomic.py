"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A value is stored as a sparse integer-exponent dictionary over a canonical
monomial basis of Q(zeta_n), with the order n reduced to the conductor of the
value.  The canonical basis used here is the tensor basis: writing
n = prod p^a, an exponent k is admissible when, for every prime p | n, the
CRT digit of k at p has top sub-digit < p-1.  There are exactly phi(n) such
exponents and the corresponding roots of unity are linearly independent over
Q, so representations are unique and equality is structural.

Rational numbers are the order-1 case and round-trip losslessly, which keeps
callers that only ever produce rational values free of cyclotomic overhead.
All values are immutable; every operation returns a fresh canonical value.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "CycNum",
    "zeta",
    "cyc",
    "gauss_sum",
    "sqrt_delta_q",
    "is_prime",
    "prime_power",
]


@lru_cache(maxsize=None)
def _factor(n):
    """Prime factorization as a tuple of (p, p**a) pairs, increasing p."""
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            pa = 1
            while m % p == 0:
                m //= p
                pa *= p
            out.append((p, pa))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, m))
    return tuple(out)


@lru_cache(maxsize=None)
def _crt_data(n):
    """Per-prime digit extraction data for order n.

    Returns tuples (p, pa, cofactor, inv) with cofactor = n//pa and
    inv = cofactor^-1 mod pa; the digit of exponent k at p is
    (k * inv) % pa and zeta_n^k = prod_p zeta_pa^digit.
    """
    data = []
    for p, pa in _factor(n):
        cof = n // pa
        data.append((p, pa, cof, pow(cof, -1, pa)))
    return tuple(data)


def _canonicalize(n, terms):
    """Reduce {exponent: Fraction} at order n to the canonical form.

    Performs exponent folding mod n, the per-prime rewriting that eliminates
    top sub-digits equal to p-1 (the sparse analogue of reduction modulo the
    n-th cyclotomic polynomial), zero stripping, and conductor reduction.
    Returns (order, dict).
    """
    if n == 1:
        c = sum(terms.values(), Fraction(0))
        return 1, ({0: c} if c else {})
    work = {}
    for k, c in terms.items():
        if c:
            k %= n
            work[k] = work.get(k, Fraction(0)) + c
    for p, pa, cof, inv in _crt_data(n):
        sub = pa // p
        out = {}
        for k, c in work.items():
            if not c:
                continue
            d = (k * inv) % pa
            if d // sub == p - 1:
                r = d % sub
                for i in range(p - 1):
                    k2 = (k + (i * sub + r - d) * cof) % n
                    out[k2] = out.get(k2, Fraction(0)) - c
            else:
                out[k] = out.get(k, Fraction(0)) + c
        work = out
    work = {k: c for k, c in work.items() if c}
    if not work:
        return 1, {}
    # conductor reduction: strip prime factors the value does not need
    while n > 1:
        reduced = False
        for p, pa, cof, inv in _crt_data(n):
            digits = [(k * inv) % pa for k in work]
            if pa == p:
                if any(d != 0 for d in digits):
                    continue
            else:
                if any(d % p != 0 for d in digits):
                    continue
            m = n // p
            new = {}
            for k, c in work.items():
                rest = {}
                for p2, pa2, cof2, inv2 in _crt_data(n):
                    d2 = (k * inv2) % pa2
                    if p2 == p:
                        d2 //= p
                        pa2 //= p
                    if pa2 > 1:
                        rest[pa2] = d2
                k2 = sum(d2 * (m // pa2) for pa2, d2 in rest.items()) % m if m > 1 else 0
                new[k2] = new.get(k2, Fraction(0)) + c
            work = new
            n = m
            reduced = True
            break
        if not reduced:
            break
    if n == 1:
        c = sum(work.values(), Fraction(0))
        return 1, ({0: c} if c else {})
    return n, work


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into a cyclotomic number")


class CycNum:
    """An element of some cyclotomic field Q(zeta_n), in canonical form.

    The stored order is the conductor of the value (order 1 for rationals),
    so equality and hashing are structural.  Arithmetic with values of
    different orders lifts to the lcm and re-reduces.
    """

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order=1, coeffs=None, _raw=True):
        if _raw:
            order, coeffs = _canonicalize(order, coeffs or {})
        self.order = order
        self.coeffs = coeffs if coeffs is not None else {}
        self._hash = None

    # -- constructors --------------------------------------------------

    @staticmethod
    def _make(order, coeffs):
        n, d = _canonicalize(order, coeffs)
        v = CycNum.__new__(CycNum)
        v.order = n
        v.coeffs = d
        v._hash = None
        return v

    @staticmethod
    def from_rational(r):
        r = _as_fraction(r)
        v = CycNum.__new__(CycNum)
        v.order = 1
        v.coeffs = {0: r} if r else {}
        v._hash = None
        return v

    @staticmethod
    def zeta(n, k=1):
        """The root of unity zeta_n^k, canonicalized."""
        if n < 1:
            raise ValueError("order of a root of unity must be >= 1")
        return CycNum._make(n, {k % n: Fraction(1)})

    # -- predicates and conversions -------------------------------------

    def is_zero(self):
        return not self.coeffs

    def is_rational(self):
        return self.order == 1

    def to_fraction(self):
        if self.order != 1:
            raise ValueError(f"{self} is not rational")
        return self.coeffs.get(0, Fraction(0))

    def __complex__(self):
        return sum(
            (complex(c) * cmath.exp(2j * cmath.pi * k / self.order)
             for k, c in self.coeffs.items()),
            0j,
        )

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -------------------------------------------------

    def _lifted(self, n):
        if n == self.order:
            return self.coeffs
        step = n // self.order
        return {k * step: c for k, c in self.coeffs.items()}

    def __add__(self, other):
        if not isinstance(other, CycNum):
            try:
                other = CycNum.from_rational(other)
            except TypeError:
                return NotImplemented
        n = lcm(self.order, other.order)
        a = dict(self._lifted(n))
        for k, c in other._lifted(n).items():
            a[k] = a.get(k, Fraction(0)) + c
        return CycNum._make(n, a)

    __radd__ = __add__

    def __neg__(self):
        v = CycNum.__new__(CycNum)
        v.order = self.order
        v.coeffs = {k: -c for k, c in self.coeffs.items()}
        v._hash = None
        return v

    def __sub__(self, other):
        if not isinstance(other, CycNum):
            try:
                other = CycNum.from_rational(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            try:
                f = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not f:
                return CycNum.from_rational(0)
            v = CycNum.__new__(CycNum)
            v.order = self.order
            v.coeffs = {k: c * f for k, c in self.coeffs.items()}
            v._hash = None
            return v
        if self.order == 1:
            return other * self.to_fraction()
        if other.order == 1:
            return self * other.to_fraction()
        n = lcm(self.order, other.order)
        a = self._lifted(n)
        b = other._lifted(n)
        prod = {}
        for k1, c1 in a.items():
            for k2, c2 in b.items():
                k = (k1 + k2) % n
                prod[k] = prod.get(k, Fraction(0)) + c1 * c2
        return CycNum._make(n, prod)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return (self ** (-e)).inverse()
        out = CycNum.from_rational(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self):
        """Complex conjugation, zeta -> zeta^-1."""
        return CycNum._make(self.order, {-k: c for k, c in self.coeffs.items()})

    def inverse(self):
        """Multiplicative inverse, via exact linear algebra over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.order == 1:
            return CycNum.from_rational(1 / self.to_fraction())
        n = self.order
        basis = _canonical_exponents(n)
        index = {k: i for i, k in enumerate(basis)}
        dim = len(basis)
        # columns: canonical form of self * zeta^b for each basis exponent b
        mat = [[Fraction(0)] * dim for _ in range(dim)]
        for j, b in enumerate(basis):
            col = CycNum._make(n, {(k + b) % n: c for k, c in self.coeffs.items()})
            lifted = col._lifted(n)
            for k, c in lifted.items():
                mat[index[k]][j] = c
        rhs = [Fraction(0)] * dim
        rhs[index[0]] = Fraction(1)
        sol = _solve_fraction_system(mat, rhs)
        return CycNum._make(n, {basis[i]: sol[i] for i in range(dim)})

    def __truediv__(self, other):
        if isinstance(other, CycNum):
            if other.order == 1:
                return self * (1 / other.to_fraction())
            return self * other.inverse()
        try:
            f = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self * (1 / f)

    def __rtruediv__(self, other):
        return CycNum.from_rational(_as_fraction(other)) / self

    # -- comparisons -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.order == 1 and self.to_fraction() == other
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, frozenset(self.coeffs.items())))
        return self._hash

    # -- rendering and serialization --------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in sorted(self.coeffs):
            c = self.coeffs[k]
            if k == 0:
                term = str(c) if c > 0 else f"-{-c}"
            else:
                mono = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{c}*{mono}" if c > 0 else f"-{-c}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"CycNum({self})"

    def to_json(self):
        return {
            "order": self.order,
            "coeffs": [[k, f"{c.numerator}/{c.denominator}"]
                       for k, c in sorted(self.coeffs.items())],
        }

    @staticmethod
    def from_json(obj):
        coeffs = {int(k): Fraction(s) for k, s in obj["coeffs"]}
        return CycNum._make(int(obj["order"]), coeffs)


@lru_cache(maxsize=None)
def _canonical_exponents(n):
    """Sorted tuple of the phi(n) admissible exponents at order n."""
    data = _crt_data(n)
    out = []
    for k in range(n):
        ok = True
        for p, pa, cof, inv in data:
            if ((k * inv) % pa) // (pa // p) == p - 1:
                ok = False
                break
        if ok:
            out.append(k)
    return tuple(out)


def _solve_fraction_system(mat, rhs):
    """Gaussian elimination over Q; mat is modified in place."""
    dim = len(mat)
    for col in range(dim):
        piv = next((r for r in range(col, dim) if mat[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        mat[col], mat[piv] = mat[piv], mat[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        rhs[col] *= inv
        for r in range(dim):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
                rhs[r] -= f * rhs[col]
    return rhs


def zeta(n, k=1):
    return CycNum.zeta(n, k)


def cyc(x):
    """Coerce a rational or CycNum into a CycNum."""
    if isinstance(x, CycNum):
        return x
    return CycNum.from_rational(x)


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q):
    """Return (p, f) with q = p^f, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = _factor(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    p = fac[0][0]
    f = 0
    m = q
    while m > 1:
        m //= p
        f += 1
    return p, f


def gauss_sum(q):
    """The quadratic Gauss sum sum_a legendre(a, q) zeta_q^a for odd prime q.

    Squares to (-1)^((q-1)/2) * q exactly.
    """
    if q == 2 or not is_prime(q):
        raise ValueError(f"gauss_sum needs an odd prime, got {q}")
    terms = {}
    for a in range(1, q):
        ls = pow(a, (q - 1) // 2, q)
        terms[a] = Fraction(1) if ls == 1 else Fraction(-1)
    return CycNum._make(q, terms)


def sqrt_delta_q(q):
    """An exact square root of delta*q, delta = (-1)^((q-1)/2), q an odd prime power.

    For q = p^f with f odd this is p^((f-1)/2) * gauss_sum(p); for f even,
    delta*q is the perfect square (p^(f/2))^2 and the root is rational.
    """
    p, f = prime_power(q)
    if p == 2:
        raise ValueError("sqrt_delta_q needs odd q")
    if f % 2 == 0:
        return cyc(p ** (f // 2))
    return gauss_sum(p) * (p ** ((f - 1) // 2))
