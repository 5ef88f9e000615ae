"""Character-twisted multiple Euler numbers and l-values at negative integers.

All sums run over r-tuples (a_1..a_r) with a_i in {1..F}; this is the index
range forced by expanding the generating function termwise, and the computed
values are independent of the admissible modulus F (an odd multiple of the
character modulus).  The printed-elsewhere variant over {0..F-1} differs for
r >= 2 and is available behind ``index_base=0`` for comparison only.

Values live in Q(zeta_m), m the character order, and are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .characters import DirichletCharacter
from .cyclotomic import CycElem
from .errors import DomainError
from .euler import euler_number_multi, euler_polynomial_multi
from .series import TruncatedSeries


def sum_multiplicities(F: int, r: int, base: int = 1) -> list[int]:
    """counts[t] = number of r-tuples with entries in {base..base+F-1} summing to t."""
    counts = [1]
    for _ in range(r):
        new = [0] * (len(counts) + base + F - 1)
        for t, c in enumerate(counts):
            if c:
                for a in range(base, base + F):
                    new[t + a] += c
        counts = new
    return counts


def _validate_modulus(chi: DirichletCharacter, F: int):
    if F < 1 or F % 2 == 0:
        raise DomainError(f"F must be a positive odd integer, got {F}")
    if F % chi.modulus != 0:
        raise DomainError(f"F={F} is not a multiple of the modulus {chi.modulus}")


@dataclass(frozen=True)
class LNegQuery:
    """Evaluation request for l_r(-n, chi) at modulus F."""

    n: int
    r: int
    chi: DirichletCharacter
    F: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"n must be >= 0, got {self.n}")
        if self.r < 1:
            raise DomainError(f"r must be >= 1, got {self.r}")
        _validate_modulus(self.chi, self.F)


def generalized_euler_number(
    n: int, r: int, chi: DirichletCharacter, F: int, index_base: int = 1
) -> CycElem:
    """F^n sum over tuples of chi(sum) (-1)^sum E_n^{(r)}(sum/F), exact.

    Independent of the admissible F; with index_base=0 the comparison
    variant over {0..F-1} is computed instead (not F-stable for r >= 2).
    """
    _validate_modulus(chi, F)
    if n < 0 or r < 1:
        raise DomainError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    if index_base not in (0, 1):
        raise DomainError(f"index_base must be 0 or 1, got {index_base}")
    counts = sum_multiplicities(F, r, base=index_base)
    m = chi.order
    acc = CycElem.zero(m)
    for t, cnt in enumerate(counts):
        if not cnt:
            continue
        k = chi.value_exponent(t)
        if k is None:
            continue
        weight = cnt * (-1) ** t * euler_polynomial_multi(n, r, Fraction(t, F))
        acc = acc + CycElem.root_power(m, k) * weight
    return acc * Fraction(F) ** n


def generalized_euler_numbers_gf(
    n_max: int, r: int, chi: DirichletCharacter, index_base: int = 1
) -> list[CycElem]:
    """Coefficients n = 0..n_max of the twisted generating function.

    Expands 2^r sum_{a_i} (-1)^sum chi(sum) e^(t sum) / (e^(f t) + 1)^r by
    truncated-series arithmetic over Q(zeta_m).  This is the adjudicating
    oracle for the finite-sum routes.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    f = chi.modulus
    m = chi.order
    zero = CycElem.zero(m)

    counts = sum_multiplicities(f, r, base=index_base)
    num_coeffs = [zero for _ in range(n_max + 1)]
    for t, cnt in enumerate(counts):
        if not cnt:
            continue
        k = chi.value_exponent(t)
        if k is None:
            continue
        w = CycElem.root_power(m, k) * (cnt * (-1) ** t * 2**r)
        # e^(t_sum * t): j-th coefficient t_sum^j / j!
        fact = 1
        for j in range(n_max + 1):
            if j:
                fact *= j
            num_coeffs[j] = num_coeffs[j] + w * Fraction(t**j, fact)
    numerator = TruncatedSeries(num_coeffs)

    exp_ft = TruncatedSeries.exponential(Fraction(f), n_max)
    den_coeffs = [CycElem.from_rational(m, c) for c in exp_ft.coeffs]
    den_coeffs[0] = den_coeffs[0] + 1
    denominator = TruncatedSeries(den_coeffs) ** r

    series = numerator * denominator.inverse()
    return [series.coefficient_with_factorial(n) for n in range(n_max + 1)]


def _partial_zeta_value(n: int, t: int, F: int, r: int) -> Fraction:
    return Fraction(F) ** n * (-1) ** t * euler_polynomial_multi(n, r, Fraction(t, F))


def _partial_zeta_value_binomial(n: int, t: int, F: int, r: int) -> Fraction:
    acc = Fraction(0)
    for k in range(n + 1):
        acc += comb(n, k) * Fraction(F, t) ** k * euler_number_multi(k, r)
    return (-1) ** t * Fraction(t) ** n * acc


def _validate_tuple(a_tuple, F: int, r: int):
    if len(a_tuple) != r:
        raise DomainError(f"expected {r} residues, got {len(a_tuple)}")
    if F < 1 or F % 2 == 0:
        raise DomainError(f"F must be a positive odd integer, got {F}")
    for a in a_tuple:
        if not 1 <= a <= F:
            raise DomainError(f"residue {a} outside 1..{F}")


def partial_zeta_neg(n: int, a_tuple, F: int, r: int) -> Fraction:
    """Value at s = -n of the residue-class zeta: F^n (-1)^sum E_n^{(r)}(sum/F)."""
    _validate_tuple(a_tuple, F, r)
    return _partial_zeta_value(n, sum(a_tuple), F, r)


def partial_zeta_neg_binomial(n: int, a_tuple, F: int, r: int) -> Fraction:
    """Same value through the truncated binomial expansion in (F/sum)^k.

    The k-sum is finite at s = -n because C(n, k) vanishes for k > n;
    agreement with :func:`partial_zeta_neg` is a tested identity.
    """
    _validate_tuple(a_tuple, F, r)
    return _partial_zeta_value_binomial(n, sum(a_tuple), F, r)


def l_value_neg(q: LNegQuery, route: str = "partial_zeta", index_base: int = 1) -> CycElem:
    """l_r(-n, chi) as the character-weighted sum of partial zeta values.

    route="binomial" evaluates each class through the truncated binomial
    form instead; both routes must agree with
    :func:`generalized_euler_number` (interpolation identity).
    """
    if route not in ("partial_zeta", "binomial"):
        raise DomainError(f"unknown route {route!r}")
    if index_base not in (0, 1):
        raise DomainError(f"index_base must be 0 or 1, got {index_base}")
    if route == "binomial" and index_base == 0:
        raise DomainError("binomial route is undefined at tuple sum 0 (use index_base=1)")
    counts = sum_multiplicities(q.F, q.r, base=index_base)
    m = q.chi.order
    acc = CycElem.zero(m)
    for t, cnt in enumerate(counts):
        if not cnt:
            continue
        k = q.chi.value_exponent(t)
        if k is None:
            continue
        if route == "partial_zeta":
            value = _partial_zeta_value(q.n, t, q.F, q.r)
        else:
            value = _partial_zeta_value_binomial(q.n, t, q.F, q.r)
        acc = acc + CycElem.root_power(m, k) * (cnt * value)
    return acc
