"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis 1, z, ..., z^(phi(m)-1) reduced
modulo the m-th cyclotomic polynomial, so equality of elements is
equality of coefficient vectors.  Coefficients are `fractions.Fraction`.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num: list, den: list) -> tuple[list, list]:
    """Quotient and remainder of integer/rational coefficient polynomials."""
    num = list(num)
    q = [0] * max(0, len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c == 0:
            continue
        f = Fraction(c, 1) / lead if lead != 1 else c
        q[i] = f
        for j, d in enumerate(den):
            num[i + j] -= f * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the m-th cyclotomic polynomial.

    Computed by dividing x^m - 1 by the product of Phi_d over proper
    divisors d of m; all intermediate quotients are exact.
    """
    if m < 1:
        raise ValueError("order must be >= 1")
    if m == 1:
        return (-1, 1)
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q, r = _poly_divmod(p, list(cyclotomic_polynomial(d)))
            if r:
                raise AssertionError("cyclotomic division not exact")
            p = q
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Fraction")


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reductions of z^d for d = 0..2*phi(m)-2 modulo Phi_m."""
    phi = euler_phi(m)
    poly = cyclotomic_polynomial(m)
    # z^phi = -(poly[0] + ... + poly[phi-1] z^(phi-1)); Phi_m is monic
    rows: list[tuple[Fraction, ...]] = []
    cur = [Fraction(0)] * phi
    cur[0] = Fraction(1)
    for _ in range(2 * phi - 1):
        rows.append(tuple(cur))
        top = cur[phi - 1]
        nxt = [Fraction(0)] + cur[: phi - 1]
        if top:
            for j in range(phi):
                nxt[j] -= top * poly[j]
        cur = nxt
    return tuple(rows)


class CyclotomicNumber:
    """An element of Q(zeta_m) in canonical reduced form."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > 2 * phi - 1:
            # arbitrary degree: exact polynomial remainder modulo Phi_m
            _, rem = _poly_divmod(cs, list(cyclotomic_polynomial(order)))
            cs = [_as_fraction(c) for c in rem] + [Fraction(0)] * (phi - len(rem))
        elif len(cs) > phi:
            # product-sized vectors: reduce through the cached power table
            table = _power_table(order)
            red = [Fraction(0)] * phi
            for d, c in enumerate(cs):
                if c == 0:
                    continue
                if d < phi:
                    red[d] += c
                else:
                    for j, r in enumerate(table[d]):
                        red[j] += c * r
            cs = red
        else:
            cs = cs + [Fraction(0)] * (phi - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(x, order: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber(order, [_as_fraction(x)])

    @staticmethod
    def zeta_power(m: int, k: int = 1) -> "CyclotomicNumber":
        k %= m
        phi = euler_phi(m)
        if k < phi:
            c = [Fraction(0)] * (k + 1)
            c[k] = Fraction(1)
            return CyclotomicNumber(m, c)
        c = [Fraction(0)] * (k + 1)
        c[k] = Fraction(1)
        return CyclotomicNumber(m, c)

    # -- order manipulation -------------------------------------------

    def to_order(self, m: int) -> "CyclotomicNumber":
        """Embed into Q(zeta_m); m must be a multiple of self.order."""
        if m == self.order:
            return self
        if m % self.order:
            raise ValueError(f"cannot embed order {self.order} into {m}")
        step = m // self.order
        c = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for d, x in enumerate(self.coeffs):
            c[d * step] = x
        return CyclotomicNumber(m, c)

    @staticmethod
    def _aligned(a: "CyclotomicNumber", b) -> tuple["CyclotomicNumber", "CyclotomicNumber"]:
        if isinstance(b, (int, Fraction)):
            b = CyclotomicNumber.from_rational(b, 1)
        if not isinstance(b, CyclotomicNumber):
            raise TypeError(f"cannot combine CyclotomicNumber with {type(b).__name__}")
        if a.order == b.order:
            return a, b
        m = a.order * b.order // gcd(a.order, b.order)
        return a.to_order(m), b.to_order(m)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        a, b = self._aligned(self, other)
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicNumber) else -_as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return CyclotomicNumber(self.order, [x * f for x in self.coeffs])
        a, b = self._aligned(self, other)
        n = len(a.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    prod[i + j] += x * y
        return CyclotomicNumber(a.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Exact inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        # invariants through the loop: s*a = r (mod Phi_m)
        r0, r1 = phi_poly, _poly_trim([Fraction(c) for c in self.coeffs])
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            s = list(s0)
            s += [Fraction(0)] * (len(q) + len(s1) - 1 - len(s))
            for i, qc in enumerate(q):
                if qc == 0:
                    continue
                for j, sc in enumerate(s1):
                    s[i + j] -= qc * sc
            r0, r1, s0, s1 = r1, _poly_trim(r), s1, _poly_trim(s)
        if not r1:
            raise ZeroDivisionError("element not invertible (zero divisor?)")
        c = r1[0]
        return CyclotomicNumber(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return CyclotomicNumber(self.order, [x / f for x in self.coeffs])
        a, b = self._aligned(self, other)
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = CyclotomicNumber.from_rational(1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates and conversions -----------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.coeffs[0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._aligned(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def complex_value(self) -> complex:
        """Numeric embedding sending zeta_m to exp(2*pi*i/m)."""
        z = cmath.exp(2j * cmath.pi / self.order)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            elif d == 1:
                terms.append(f"{c}*z{self.order}")
            else:
                terms.append(f"{c}*z{self.order}^{d}")
        return "Cyc(" + " + ".join(terms) + ")"


def zeta(m: int, k: int = 1) -> CyclotomicNumber:
    """The root of unity zeta_m^k as an exact cyclotomic number."""
    return CyclotomicNumber.zeta_power(m, k)


def cyc_mul(a: CyclotomicNumber, b: CyclotomicNumber) -> CyclotomicNumber:
    if a.order != b.order:
        raise ValueError("order mismatch: embed into a common order first")
    return a * b


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()


def cyc_embed_complex(a: CyclotomicNumber) -> complex:
    return a.complex_value()
