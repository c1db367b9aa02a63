"""Truncated exponential generating functions over an exact ring.

A series of order N stores coefficients a_0..a_N and stands for
sum a_n t^n / n!.  Coefficients may be Fraction scalars or XPoly values, or
any commutative exact ring elements supporting +, -, * and equality; mixed
Fraction/XPoly series combine through the coercion XPoly already provides.

Binary operations require equal orders.  There is no implicit truncation;
callers cut a series down with ``truncate`` before combining.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import XPoly


def _ring_inverse(c):
    if isinstance(c, XPoly):
        if c.degree > 0:
            raise ValueError("constant term is not invertible in the ring")
        c = c.coeff(0)
        if c == 0:
            raise ValueError("constant term is zero, no reciprocal")
        return XPoly.const(Fraction(1) / c)
    c = Fraction(c)
    if c == 0:
        raise ValueError("constant term is zero, no reciprocal")
    return Fraction(1) / c


class EgfSeries:
    """Immutable truncated EGF with exact coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if not cs:
            raise ValueError("a series needs at least the order-0 coefficient")
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> "EgfSeries":
        zero = value * 0
        return cls([value] + [zero] * order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, n: int):
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside order {self.order}")
        return self._coeffs[n]

    def truncate(self, order: int) -> "EgfSeries":
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return EgfSeries(self._coeffs[: order + 1])

    def _check_order(self, other: "EgfSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}"
            )

    def add(self, other: "EgfSeries") -> "EgfSeries":
        self._check_order(other)
        return EgfSeries([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def sub(self, other: "EgfSeries") -> "EgfSeries":
        self._check_order(other)
        return EgfSeries([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def scale(self, scalar) -> "EgfSeries":
        return EgfSeries([c * scalar for c in self._coeffs])

    def mul(self, other: "EgfSeries") -> "EgfSeries":
        """Product of EGFs, i.e. binomial convolution of coefficients."""
        self._check_order(other)
        a, b = self._coeffs, other._coeffs
        out = []
        for n in range(len(a)):
            acc = a[0] * b[n]
            for i in range(1, n + 1):
                acc = acc + math.comb(n, i) * (a[i] * b[n - i])
            out.append(acc)
        return EgfSeries(out)

    def pow(self, m: int) -> "EgfSeries":
        if m < 0:
            raise ValueError("exponent must be nonnegative")
        if m == 0:
            return EgfSeries.constant(Fraction(1), self.order)
        result = self
        for _ in range(m - 1):
            result = result.mul(self)
        return result

    def reciprocal(self) -> "EgfSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a = self._coeffs
        r0 = _ring_inverse(a[0])
        r = [r0]
        for n in range(1, len(a)):
            acc = math.comb(n, 1) * (a[1] * r[n - 1])
            for i in range(2, n + 1):
                acc = acc + math.comb(n, i) * (a[i] * r[n - i])
            r.append(-(r0 * acc))
        return EgfSeries(r)

    def __eq__(self, other) -> bool:
        if isinstance(other, EgfSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"EgfSeries({list(self._coeffs)!r})"


def compose(outer_coeffs: Sequence, inner: EgfSeries) -> EgfSeries:
    """Substitute ``inner`` into the ordinary power series sum c_m z^m.

    ``outer_coeffs`` lists the ordinary (not EGF) coefficients c_0, c_1, ...
    and must reach at least index inner.order; later entries cannot affect
    the truncation and are ignored.  The inner series must have zero
    constant term, otherwise the substitution would need infinitely many
    outer terms.
    """
    n = inner.order
    a0 = inner.coeff(0)
    if not a0 == a0 * 0:
        raise ValueError("inner series must have zero constant term")
    outer = list(outer_coeffs)
    if len(outer) < n + 1:
        raise ValueError(
            f"need outer coefficients through index {n}, got {len(outer)}"
        )
    outer = outer[: n + 1]
    result = EgfSeries.constant(outer[n], n)
    for m in range(n - 1, -1, -1):
        result = result.mul(inner)
        result = result.add(EgfSeries.constant(outer[m], n))
    return result
