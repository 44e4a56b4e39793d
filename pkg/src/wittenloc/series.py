"""Truncated power series in one formal variable.

Coefficients may be any scalar type closed under ring operations and
division by integers: complex, Fraction, GaussianRational or
FormalPolynomial.  All arithmetic truncates at a fixed order, so products
and exponentials of nilpotent-tail series are finite computations.
"""

from __future__ import annotations


class PowerSeries:
    """Coefficient list ``c[0] + c[1] x + ... + c[order] x^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1 if coeffs else 0
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[: order + 1]
        self.coeffs = coeffs
        self.order = order

    @classmethod
    def zero(cls, order):
        return cls([], order)

    @classmethod
    def one(cls, order):
        return cls([1], order)

    @classmethod
    def variable(cls, order):
        return cls([0, 1], order)

    def coefficient(self, n):
        return self.coeffs[n] if 0 <= n <= self.order else 0

    def _common_order(self, other):
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            c = list(self.coeffs)
            c[0] = c[0] + other
            return PowerSeries(c, self.order)
        n = self._common_order(other)
        return PowerSeries(
            [self.coefficient(k) + other.coefficient(k) for k in range(n + 1)], n
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, PowerSeries) else -1 * other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        n = self._common_order(other)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(0, n + 1 - i):
                b = other.coefficient(j)
                out[i + j] = out[i + j] + a * b
        return PowerSeries(out, n)

    def __rmul__(self, other):
        return PowerSeries([other * c for c in self.coeffs], self.order)

    def exp(self):
        """exp of a series with zero constant term.

        Uses the derivative recurrence E' = f' E, so only ring operations
        and division by integers are required.
        """
        if self.coeffs[0] != 0:
            raise ValueError("exp requires zero constant term")
        n = self.order
        out = [0] * (n + 1)
        out[0] = 1
        for m in range(1, n + 1):
            acc = 0
            for k in range(1, m + 1):
                acc = acc + k * self.coefficient(k) * out[m - k]
            out[m] = acc / m
        return PowerSeries(out, n)

    def log(self):
        """log of a series with constant term 1 (same recurrence scheme)."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        out = [0] * (n + 1)
        for m in range(1, n + 1):
            acc = m * self.coefficient(m)
            for k in range(1, m):
                acc = acc - k * out[k] * self.coefficient(m - k)
            out[m] = acc / m
        return PowerSeries(out, n)

    def compose(self, inner):
        """self(inner(x)); inner must have zero constant term."""
        if inner.coefficient(0) != 0:
            raise ValueError("composition requires zero inner constant term")
        n = min(self.order, inner.order)
        result = PowerSeries([self.coefficient(n)], n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self.coefficient(k)
        return result

    def shift_up(self, k=1):
        """Multiply by x^k."""
        return PowerSeries([0] * k + self.coeffs, self.order + k)

    def shift_down(self, k=1):
        """Divide by x^k; the k lowest coefficients must vanish."""
        for c in self.coeffs[:k]:
            if c != 0:
                raise ValueError("series not divisible by the variable")
        return PowerSeries(self.coeffs[k:], self.order - k)

    def truncate(self, order):
        return PowerSeries(self.coeffs, order)

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = max(self.order, other.order)
        return all(self.coefficient(k) == other.coefficient(k) for k in range(n + 1))

    def __repr__(self):
        return f"PowerSeries({self.coeffs!r})"


# The domain-facing alias: coefficients are usually complex.
ComplexSeries = PowerSeries
