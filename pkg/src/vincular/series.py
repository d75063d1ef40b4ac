"""Truncated formal power series over the integers.

A series of order N stores coefficients of x^0..x^N; every operation keeps
the result exact and truncates to the smaller order of its operands.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = ["TruncatedSeries"]


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int) -> TruncatedSeries:
        c = list(coeffs)[:order + 1]
        return cls(tuple(c + [0] * (order + 1 - len(c))))

    @classmethod
    def constant(cls, c: int, order: int) -> TruncatedSeries:
        return cls.from_coeffs([c], order)

    @classmethod
    def monomial(cls, power: int, order: int, c: int = 1) -> TruncatedSeries:
        return cls.from_coeffs([0] * power + [c], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient, None for the zero series."""
        return next((i for i, c in enumerate(self.coeffs) if c), None)

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs(self.coeffs, order)

    def _lift(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * a for a in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, m: int) -> TruncatedSeries:
        """Multiply by x^m (m >= 0), keeping the order."""
        if m < 0:
            raise ValueError("use divide_by_x_power for negative shifts")
        return TruncatedSeries.from_coeffs([0] * m + list(self.coeffs), self.order)

    def divide_by_x_power(self, m: int) -> TruncatedSeries:
        """Exact division by x^m; the order drops by m."""
        if any(self.coeffs[:m]):
            raise ValueError(f"series is not divisible by x^{m}")
        if m > self.order:
            raise ValueError("nothing left after division")
        return TruncatedSeries(self.coeffs[m:])

    def sqrt(self) -> TruncatedSeries:
        """Square root with constant term 1, by the coefficient recurrence.

        Raises ValueError if the root has non-integral coefficients.
        """
        if self.coeffs[0] != 1:
            raise ValueError("sqrt needs constant term 1")
        s = [Fraction(1)]
        for n in range(1, self.order + 1):
            acc = sum((s[i] * s[n - i] for i in range(1, n)), Fraction(0))
            s.append((self.coeffs[n] - acc) / 2)
        if any(c.denominator != 1 for c in s):
            raise ValueError("square root is not an integer series")
        return TruncatedSeries(tuple(int(c) for c in s))

    def to_list(self) -> list[int]:
        return list(self.coeffs)
