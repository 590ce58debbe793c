"""Exact arithmetic in cyclotomic fields Q(zeta_m).

An element is stored as rational coefficients on the power basis
``1, zeta_m, ..., zeta_m^{phi(m)-1}``, reduced modulo the m-th cyclotomic
polynomial, so the coefficient vector is canonical.  Mixed-order operands
are lifted to the least common multiple of their orders.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from sympy import Poly, cyclotomic_poly, symbols

_X = symbols("x")


@lru_cache(maxsize=None)
def _phi_coeffs(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first (monic)."""
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(m, _X), _X).all_coeffs()))


def _reduce(m: int, poly: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a polynomial in zeta_m (any length) to canonical form."""
    phi = _phi_coeffs(m)
    d = len(phi) - 1
    p = [Fraction(0)] * max(len(poly), m)
    # fold ζ^m = 1 first so the polynomial has degree < m
    for i, c in enumerate(poly):
        p[i % m] += c
    p = p[:m]
    for i in range(m - 1, d - 1, -1):
        c = p[i]
        if c:
            p[i] = Fraction(0)
            for k in range(d):
                if phi[k]:
                    p[i - d + k] -= c * phi[k]
    return tuple(p[:d])


class CyclotomicScalar:
    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        self.coeffs = _reduce(order, [Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> CyclotomicScalar:
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, q) -> CyclotomicScalar:
        return cls._raw(1, (Fraction(q),))

    @classmethod
    def root_of_unity(cls, m: int, k: int = 1) -> CyclotomicScalar:
        """``zeta_m^k`` with ``zeta_m = exp(2 pi i / m)``."""
        poly = [Fraction(0)] * m
        poly[k % m] = Fraction(1)
        return cls(m, poly)

    def lift(self, m: int) -> CyclotomicScalar:
        if m == self.order:
            return self
        if m % self.order:
            raise ValueError(f"cannot lift order {self.order} to {m}")
        step = m // self.order
        poly = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            poly[i * step] = c
        return CyclotomicScalar._raw(m, _reduce(m, poly))

    def _common(self, other) -> tuple[CyclotomicScalar, CyclotomicScalar]:
        if not isinstance(other, CyclotomicScalar):
            other = CyclotomicScalar.rational(other)
        m = math.lcm(self.order, other.order)
        return self.lift(m), other.lift(m)

    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return CyclotomicScalar._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, CyclotomicScalar) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        m = a.order
        if m == 1:
            return CyclotomicScalar._raw(1, (a.coeffs[0] * b.coeffs[0],))
        prod = [Fraction(0)] * (2 * len(a.coeffs))
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicScalar._raw(m, _reduce(m, prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CyclotomicScalar):
            if not other.is_rational():
                raise NotImplementedError("division by an irrational cyclotomic")
            other = other.coeffs[0]
        q = Fraction(other)
        return CyclotomicScalar._raw(self.order, tuple(c / q for c in self.coeffs))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = CyclotomicScalar.rational(1)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> CyclotomicScalar:
        """Complex conjugate: zeta -> zeta^{-1}."""
        m = self.order
        poly = [Fraction(0)] * m
        for i, c in enumerate(self.coeffs):
            poly[(-i) % m] += c
        return CyclotomicScalar._raw(m, _reduce(m, poly))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __complex__(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum((complex(c) * z**i for i, c in enumerate(self.coeffs)), 0j)

    def __eq__(self, other) -> bool:
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses orders, no cheap canonical hash

    def __repr__(self) -> str:
        if self.is_rational():
            return f"CyclotomicScalar({self.coeffs[0]})"
        terms = [f"{c}*z{self.order}^{i}" for i, c in enumerate(self.coeffs) if c]
        return "CyclotomicScalar(" + " + ".join(terms) + ")"

    __str__ = __repr__


ZERO = CyclotomicScalar.rational(0)
ONE = CyclotomicScalar.rational(1)

Matrix = tuple  # tuple of row tuples of CyclotomicScalar


def mat_identity(d: int, scale: CyclotomicScalar = ONE) -> Matrix:
    return tuple(tuple(scale if i == j else ZERO for j in range(d)) for i in range(d))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    d, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = []
    for i in range(d):
        row = a[i]
        acc = [ZERO] * cols
        for t in range(k):
            x = row[t]
            if x.is_zero():
                continue
            brow = b[t]
            for j in range(cols):
                y = brow[j]
                if not y.is_zero():
                    acc[j] = acc[j] + x * y
        out.append(tuple(acc))
    return tuple(out)


def mat_scale(a: Matrix, s) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in a)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def trace(a: Matrix) -> CyclotomicScalar:
    out = ZERO
    for i in range(len(a)):
        out = out + a[i][i]
    return out


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb)
        for ra in a
        for rb in b
    )


def block_monomial(d_outer: int, d_inner: int, placement: dict) -> Matrix:
    """Block matrix with ``placement[(i, j)]`` as the (i, j) block, zero elsewhere."""
    d = d_outer * d_inner
    rows = [[ZERO] * d for _ in range(d)]
    for (i, j), blk in placement.items():
        for r in range(d_inner):
            for c in range(d_inner):
                rows[i * d_inner + r][j * d_inner + c] = blk[r][c]
    return tuple(tuple(r) for r in rows)
