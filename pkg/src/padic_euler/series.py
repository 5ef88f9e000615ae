"""Dense truncated power series with exact coefficients.

Coefficients are plain t-power coefficients (no factorial normalization);
callers apply n! at the boundary when reading exponential-type expansions.
Elements may be Fraction or CycElem; inversion requires an invertible
constant term.
"""

from __future__ import annotations

from fractions import Fraction


def _inv_element(x):
    if isinstance(x, Fraction):
        if x == 0:
            raise ZeroDivisionError("series constant term is zero")
        return 1 / x
    return x.inverse()


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(coeffs)

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1

    @property
    def _zero(self):
        return self.coeffs[0] * 0

    @classmethod
    def exponential(cls, rate, n_max: int) -> "TruncatedSeries":
        """exp(rate * t) truncated at degree n_max, rational coefficients."""
        out = [Fraction(1)]
        for n in range(1, n_max + 1):
            out.append(out[-1] * rate / n)
        return cls(out)

    def _check(self, other: "TruncatedSeries"):
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("truncation order mismatch")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            n = len(self.coeffs)
            out = [self._zero for _ in range(n)]
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j in range(n - i):
                    out[i + j] += a * other.coeffs[j]
            return TruncatedSeries(out)
        return TruncatedSeries(a * other for a in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries([self._zero + 1] + [self._zero] * self.n_max)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "TruncatedSeries":
        c0_inv = _inv_element(self.coeffs[0])
        n = len(self.coeffs)
        out = [c0_inv] + [self._zero] * (n - 1)
        for k in range(1, n):
            acc = self._zero
            for j in range(1, k + 1):
                acc += self.coeffs[j] * out[k - j]
            out[k] = -(c0_inv * acc)
        return TruncatedSeries(out)

    def coefficient_with_factorial(self, n: int):
        """n! times the t^n coefficient (exponential generating convention)."""
        f = 1
        for j in range(2, n + 1):
            f *= j
        return self.coeffs[n] * f

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"
