"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable


class RationalSeries:
    """``c_0 + c_1 x + ... + c_T x^T``, arithmetic exact through order ``T``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("series needs at least one coefficient")
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"RationalSeries({[str(c) for c in self.coeffs]})"

    # -- standard series --

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls([1], order)

    @classmethod
    def exp(cls, order: int) -> "RationalSeries":
        return cls([Fraction(1, factorial(k)) for k in range(order + 1)])

    @classmethod
    def neg_log1m(cls, order: int) -> "RationalSeries":
        """``-ln(1 - x) = sum_{k>=1} x^k / k``."""
        return cls([0] + [Fraction(1, k) for k in range(1, order + 1)])

    @classmethod
    def geometric(cls, order: int) -> "RationalSeries":
        return cls([1] * (order + 1))

    # -- arithmetic --

    def _order_with(self, other: "RationalSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        t = self._order_with(other)
        return RationalSeries(self[k] + other[k] for k in range(t + 1))

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        t = self._order_with(other)
        return RationalSeries(self[k] - other[k] for k in range(t + 1))

    def __mul__(self, other) -> "RationalSeries":
        if isinstance(other, (int, Fraction)):
            return RationalSeries(c * other for c in self.coeffs)
        t = self._order_with(other)
        out = [Fraction(0)] * (t + 1)
        for i in range(t + 1):
            a = self.coeffs[i]
            if a:
                for j in range(t + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return RationalSeries(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RationalSeries":
        result = RationalSeries.one(self.order)
        for _ in range(k):
            result = result * self
        return result

    def times_exp(self) -> "RationalSeries":
        return self * RationalSeries.exp(self.order)

    def over_one_minus_x(self) -> "RationalSeries":
        """Divide by ``1 - x``: running partial sums."""
        out, acc = [], Fraction(0)
        for c in self.coeffs:
            acc += c
            out.append(acc)
        return RationalSeries(out)

    def compose_neg_log1m(self) -> "RationalSeries":
        """Substitute ``x -> -ln(1 - x)``; exact because the inner series has no constant term."""
        inner = RationalSeries.neg_log1m(self.order)
        result = RationalSeries([self.coeffs[0]], self.order)
        power = RationalSeries.one(self.order)
        for k in range(1, self.order + 1):
            power = power * inner
            if self.coeffs[k]:
                result = result + power * self.coeffs[k]
        return result

    def egf_coefficient(self, n: int) -> Fraction:
        """``n! [x^n]``, the n-th term of the sequence this EGF encodes."""
        return self[n] * factorial(n)
