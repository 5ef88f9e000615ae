"""Euler numbers, their higher-order variants, and the matching polynomials.

Conventions: E_n are the coefficients of 2/(e^t + 1) = sum E_n t^n/n!
(so E_0 = 1, E_1 = -1/2, odd-free at even index >= 2), and the order-r
numbers E_n^{(r)} come from the r-th power of that kernel.  Everything is
an exact Fraction.  Three independent computation routes are exposed so
they can be checked against each other:

* the defining recurrence (order 1) plus binomial convolution for order r,
* a direct order-r recurrence obtained by clearing the denominator
  (coefficients S_m = sum_j C(r,j) j^m, with 0^0 = 1),
* truncated power-series expansion of the generating function.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DomainError
from .series import TruncatedSeries


class EulerTable:
    """Memo table for E_n^{(r)}, keyed by (r, n); write-once per key."""

    def __init__(self):
        self._entries: dict[tuple[int, int], Fraction] = {}

    def get(self, r: int, n: int) -> Fraction:
        if r < 1:
            raise DomainError(f"order r must be >= 1, got {r}")
        if n < 0:
            raise DomainError(f"index n must be >= 0, got {n}")
        key = (r, n)
        if key not in self._entries:
            self._entries[key] = self._compute(r, n)
        return self._entries[key]

    def _compute(self, r: int, n: int) -> Fraction:
        if n == 0:
            return Fraction(1)
        if r == 1:
            # E_n = -(1/2) sum_{k<n} C(n,k) E_k
            s = sum(comb(n, k) * self.get(1, k) for k in range(n))
            return Fraction(-1, 2) * s
        # binomial convolution of the order r-1 row with the order 1 row
        return sum(
            comb(n, k) * self.get(r - 1, k) * self.get(1, n - k) for k in range(n + 1)
        )

    def __len__(self):
        return len(self._entries)


_TABLE = EulerTable()


def euler_number(n: int) -> Fraction:
    """E_n via the defining recurrence."""
    return _TABLE.get(1, n)


def euler_number_multi(n: int, r: int) -> Fraction:
    """E_n^{(r)} via binomial convolution (memoized)."""
    return _TABLE.get(r, n)


def euler_number_multi_recurrence(n: int, r: int) -> Fraction:
    """E_n^{(r)} via the cleared-denominator recurrence; independent route.

    2^r E_n^{(r)} = - sum_{k<n} C(n,k) E_k^{(r)} S_{n-k} with
    S_m = sum_{j=0}^{r} C(r,j) j^m and 0^0 = 1.
    """
    if r < 1:
        raise DomainError(f"order r must be >= 1, got {r}")
    if n < 0:
        raise DomainError(f"index n must be >= 0, got {n}")

    def power_sum(m: int) -> int:
        return sum(comb(r, j) * (1 if m == 0 else j**m) for j in range(r + 1))

    row = [Fraction(1)]
    for i in range(1, n + 1):
        s = sum(comb(i, k) * row[k] * power_sum(i - k) for k in range(i))
        row.append(-s / 2**r)
    return row[n]


def euler_polynomial_multi(n: int, r: int, x) -> Fraction:
    """E_n^{(r)}(x) = sum_l C(n,l) E_l^{(r)} x^(n-l), exact in x."""
    x = Fraction(x)
    acc = Fraction(0)
    xpow = Fraction(1)
    for l in range(n, -1, -1):
        acc += comb(n, l) * _TABLE.get(r, l) * xpow
        xpow *= x
    return acc


def series_expand_multi(n_max: int, r: int, x) -> list[Fraction]:
    """E_n^{(r)}(x) for n = 0..n_max by truncated-series arithmetic.

    Expands 2^r e^(x t) / (e^t + 1)^r and reads off n! times the t^n
    coefficient; serves as the oracle for the recurrence routes.
    """
    if r < 1:
        raise DomainError(f"order r must be >= 1, got {r}")
    x = Fraction(x)
    exp_t = TruncatedSeries.exponential(Fraction(1), n_max)
    kernel = TruncatedSeries(
        [exp_t.coeffs[0] + 1, *exp_t.coeffs[1:]]
    ) ** r
    series = kernel.inverse() * TruncatedSeries.exponential(x, n_max) * (2**r)
    return [series.coefficient_with_factorial(n) for n in range(n_max + 1)]
