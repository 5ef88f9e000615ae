"""The p-adic l-function of character-twisted multiple Euler sums.

The defining sum runs over r-tuples a_i in {1..F} (F an odd multiple of
both p and the character modulus) and is restricted to tuples whose sum is
prime to p: the principal-unit power <sum>^(-s) is undefined otherwise, and
the restricted index set is exactly the one under which the interpolation
identity closes.  At s = -n the inner binomial series terminates at m = n
and every quantity is an exact residue modulo p^(prec + guard), so the
identities hold digit-for-digit.

Twisted characters: chi_n = chi * omega^(-n) is evaluated as the primitive
product character.  Its conductor is f when (p-1) | n (the omega part is
trivial) and f*p otherwise; in particular chi_n(p) = chi(p) when (p-1) | n
and 0 otherwise, and for (p-1) | n the twist is nonzero even at p-divisible
arguments.

The p-divisible tuples are re-counted with multiplicity (one contribution
of beta = sum/p per tuple): that multiset convention is what makes the
full sum split exactly into the prime-to-p part plus p^n chi_n(p) times
the level-(F/p) correction term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .characters import DirichletCharacter
from .errors import DomainError, PrecisionError, UnsupportedEmbedding
from .euler import euler_number_multi, euler_polynomial_multi
from .lvalues import sum_multiplicities
from .padic import (
    PadicContext,
    PadicNum,
    _angle_residue,
    _log_unit_residue,
    _teichmuller_residue,
    binom_neg_s,
    root_of_unity_residue,
    series_cutoff,
)


@dataclass(frozen=True)
class PadicLQuery:
    """Parameters of one p-adic l-function evaluation."""

    p: int
    r: int
    chi: DirichletCharacter
    F: int
    ctx: PadicContext

    def __post_init__(self):
        if self.ctx.p != self.p:
            raise DomainError(f"context prime {self.ctx.p} != {self.p}")
        if self.r < 1:
            raise DomainError(f"r must be >= 1, got {self.r}")
        f = self.chi.modulus
        if gcd(f, self.p) != 1:
            raise DomainError(f"character modulus {f} must be prime to p={self.p}")
        if not self.chi.is_primitive:
            raise DomainError("character must be primitive (conductor = modulus)")
        if self.F % 2 == 0 or self.F % self.p != 0 or self.F % f != 0:
            raise DomainError(
                f"F={self.F} must be an odd multiple of both p={self.p} and f={f}"
            )
        if (self.p - 1) % self.chi.order != 0:
            raise UnsupportedEmbedding(
                f"character order {self.chi.order} does not divide p-1 = {self.p - 1}"
            )

    @property
    def work_prec(self) -> int:
        return self.ctx.work_prec

    @property
    def work_modulus(self) -> int:
        return self.p**self.work_prec

    def char_residue(self, a: int) -> int | None:
        """Residue mod p^work of the embedded chi(a), or None when zero."""
        k = self.chi.value_exponent(a)
        if k is None:
            return None
        root = root_of_unity_residue(self.p, self.work_prec, self.chi.order)
        return pow(root, k, self.work_modulus)


def _twisted_residue(q: PadicLQuery, n: int, a: int) -> int | None:
    """chi_n(a) = (chi * omega^(-n))(a) as a residue, None when zero."""
    p = q.p
    if n % (p - 1) == 0:
        # omega^(-n) is trivial: chi_n is chi itself, conductor f
        return q.char_residue(a)
    if a % p == 0:
        return None  # conductor of chi_n is f*p
    c = q.char_residue(a)
    if c is None:
        return None
    w = _teichmuller_residue(p, q.work_prec, a % p)
    return c * pow(w, (-n) % (p - 1), q.work_modulus) % q.work_modulus


def char_twisted(chi: DirichletCharacter, n: int, a: int, q: PadicLQuery) -> PadicNum:
    """Value of the twisted character chi_n at a, at the query's precision."""
    if chi != q.chi:
        raise DomainError("query was built for a different character")
    res = _twisted_residue(q, n, a)
    if res is None:
        return PadicNum.zero(q.p, q.ctx.prec)
    return PadicNum(q.p, 0, res, q.work_prec).cap(q.ctx.prec)


def _exact_binom_neg(s, m: int) -> Fraction:
    """C(-s, m) for an exact integer or rational s."""
    num = Fraction(1)
    for j in range(m):
        num *= -s - j
    den = 1
    for j in range(2, m + 1):
        den *= j
    return num / den


def _validate_s(s, p: int):
    if isinstance(s, int):
        return
    if isinstance(s, Fraction):
        if s.denominator % p == 0:
            raise DomainError(f"s={s} lies outside Z_p (denominator divisible by {p})")
        return
    if isinstance(s, PadicNum):
        if s.p != p:
            raise DomainError(f"s has prime {s.p}, expected {p}")
        if not s.is_zero and s.val < 0:
            raise DomainError("s lies outside the convergence disk (|s|_p > 1)")
        return
    raise DomainError(f"unsupported s of type {type(s).__name__}")


def _mseries_exact(q: PadicLQuery, s, t: int) -> Fraction:
    """sum_m C(-s,m) (F/t)^m E_m^{(r)} for exact s, as an exact fraction.

    Terminates at m = n for s = -n; otherwise truncated once the term
    valuation bound m(1 - 1/(p-1)) clears the working precision (p | F, so
    each term gains at least one p beyond the m! loss).
    """
    if isinstance(s, int) and s <= 0:
        top = -s
    else:
        top = series_cutoff(q.p, q.work_prec)
    ratio = Fraction(q.F, t)
    acc = Fraction(0)
    power = Fraction(1)
    for m in range(top + 1):
        if m:
            power *= ratio
        acc += _exact_binom_neg(s, m) * power * euler_number_multi(m, q.r)
    return acc


def _frac_residue(x: Fraction, p: int, prec: int) -> int:
    if x.denominator % p == 0:
        raise DomainError(f"{x} is not p-integral at p={p}")
    mod = p**prec
    return x.numerator * pow(x.denominator, -1, mod) % mod


def l_padic(s, q: PadicLQuery) -> PadicNum:
    """The p-adic l-function at s (an int, Fraction, or PadicNum in Z_p).

    Exact-integer and rational s go through residue arithmetic with no
    precision loss; a PadicNum s uses tracked-precision series throughout.
    """
    _validate_s(s, q.p)
    if isinstance(s, PadicNum):
        return _l_padic_tracked(s, q)
    p, W, mod = q.p, q.work_prec, q.work_modulus
    counts = sum_multiplicities(q.F, q.r, base=1)
    total = 0
    for t, cnt in enumerate(counts):
        if not cnt or t % p == 0:
            continue
        c = q.char_residue(t)
        if c is None:
            continue
        if isinstance(s, int):
            ang = pow(_angle_residue(p, W, t), -s, mod)
        else:
            ang = _angle_residue(p, W, t)
            num, den = (-s).numerator, (-s).denominator
            ang = pow(pow(ang, num, mod), pow(den, -1, (p - 1) * p ** (W - 1)), mod)
        mser = _frac_residue(_mseries_exact(q, s, t), p, W)
        sign = -1 if t % 2 else 1
        total = (total + sign * cnt * c * ang * mser) % mod
    return PadicNum(p, 0, total, W).cap(q.ctx.prec)


def _l_padic_tracked(s: PadicNum, q: PadicLQuery) -> PadicNum:
    p, W = q.p, q.work_prec
    counts = sum_multiplicities(q.F, q.r, base=1)
    cutoff = series_cutoff(p, W)
    acc = PadicNum.zero(p, W)
    for t, cnt in enumerate(counts):
        if not cnt or t % p == 0:
            continue
        c = q.char_residue(t)
        if c is None:
            continue
        ang = PadicNum(p, 0, _angle_residue(p, W, t), W)
        z = ang - 1
        angpow = PadicNum.from_int(1, p, W)
        zk = PadicNum.from_int(1, p, W)
        for k in range(1, cutoff + 1):
            zk = zk * z
            angpow = angpow + binom_neg_s(s, k) * zk
        mser = PadicNum.zero(p, W)
        ratio = Fraction(q.F, t)
        power = Fraction(1)
        for m in range(cutoff + 1):
            if m:
                power *= ratio
            e_m = euler_number_multi(m, q.r)
            if e_m == 0:
                continue  # exact zero term; keep the min-precision rule honest
            mser = mser + binom_neg_s(s, m) * (power * e_m)
        sign = -1 if t % 2 else 1
        acc = acc + angpow * mser * (sign * cnt * c)
    if acc.prec < q.ctx.prec:
        raise PrecisionError(
            f"only {acc.prec} digits guaranteed, target {q.ctx.prec}",
            digits_guaranteed=acc.prec,
        )
    return acc.cap(q.ctx.prec)


def _twisted_euler_residue(q: PadicLQuery, n: int) -> int:
    """E_{n, chi_n} at level F: the full twisted tuple sum, mod p^work."""
    p, W, mod = q.p, q.work_prec, q.work_modulus
    counts = sum_multiplicities(q.F, q.r, base=1)
    total = 0
    for t, cnt in enumerate(counts):
        if not cnt:
            continue
        c = _twisted_residue(q, n, t)
        if c is None:
            continue
        # F^n E_n^{(r)}(t/F) = sum_l C(n,l) E_l^{(r)} t^(n-l) F^l, p-integral
        val = Fraction(q.F) ** n * euler_polynomial_multi(n, q.r, Fraction(t, q.F))
        sign = -1 if t % 2 else 1
        total = (total + sign * cnt * c * _frac_residue(val, p, W)) % mod
    return total


def euler_number_twisted(n: int, q: PadicLQuery) -> PadicNum:
    """The twisted Euler number E_{n, chi_n} at level F, embedded in Z_p."""
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return PadicNum(q.p, 0, _twisted_euler_residue(q, n), q.work_prec).cap(q.ctx.prec)


def _p_part_residue(q: PadicLQuery, n: int) -> int:
    p, W, mod = q.p, q.work_prec, q.work_modulus
    counts = sum_multiplicities(q.F, q.r, base=1)
    Fp = q.F // p
    total = 0
    for t, cnt in enumerate(counts):
        if not cnt or t % p != 0:
            continue
        beta = t // p
        c = _twisted_residue(q, n, beta)
        if c is None:
            continue
        # (F/p)^n E_n^{(r)}(beta/(F/p)); beta/(F/p) = t/F
        val = Fraction(Fp) ** n * euler_polynomial_multi(n, q.r, Fraction(t, q.F))
        sign = -1 if beta % 2 else 1
        total = (total + sign * cnt * c * _frac_residue(val, p, W)) % mod
    return total


def euler_number_twisted_p_part(n: int, q: PadicLQuery) -> PadicNum:
    """Level-(F/p) twisted sum over the tuples whose sum is divisible by p.

    Each such tuple contributes once through beta = sum/p (multiset
    convention); p^n chi_n(p) times this value is what the full twisted sum
    exceeds its prime-to-p part by.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    return PadicNum(q.p, 0, _p_part_residue(q, n), q.work_prec).cap(q.ctx.prec)


def l_padic_interp(n: int, q: PadicLQuery) -> PadicNum:
    """l_padic(-n) assembled from twisted Euler numbers, series-free.

    E_{n, chi_n} - p^n chi_n(p) E*_{n, chi_n}: the independent route against
    which the series evaluation at s = -n is verified.
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    p, W, mod = q.p, q.work_prec, q.work_modulus
    total = _twisted_euler_residue(q, n)
    chi_n_p = _twisted_residue(q, n, p)
    if chi_n_p is not None:
        total = (total - pow(p, n) * chi_n_p * _p_part_residue(q, n)) % mod
    return PadicNum(p, 0, total, W).cap(q.ctx.prec)


# -- derivative at s = 0 -----------------------------------------------------


def _derivative_mseries(q: PadicLQuery, t: int) -> Fraction:
    """sum_{m>=1} ((-1)^m / m) (F/t)^m E_m^{(r)}: the s-coefficient block.

    Shared verbatim by both closed-form derivative routes.
    """
    cutoff = series_cutoff(q.p, q.work_prec)
    ratio = Fraction(q.F, t)
    acc = Fraction(0)
    power = Fraction(1)
    for m in range(1, cutoff + 1):
        power *= ratio
        acc += Fraction((-1) ** m, m) * power * euler_number_multi(m, q.r)
    return acc


def _derivative_closed_form(q: PadicLQuery, with_constant_one: bool) -> int:
    p, W, mod = q.p, q.work_prec, q.work_modulus
    counts = sum_multiplicities(q.F, q.r, base=1)
    total = 0
    for t, cnt in enumerate(counts):
        if not cnt or t % p == 0:
            continue
        c = q.char_residue(t)
        if c is None:
            continue
        log_t = _log_unit_residue(p, W, t % mod)
        block = (1 - log_t) if with_constant_one else -log_t
        block = (block + _frac_residue(_derivative_mseries(q, t), p, W)) % mod
        sign = -1 if t % 2 else 1
        total = (total + sign * cnt * c * block) % mod
    return total


def l_derivative_at_0(q: PadicLQuery, method: str = "direct", fd_k: int | None = None) -> PadicNum:
    """d/ds of the p-adic l-function at s = 0, by one of three routes.

    * "direct": termwise differentiation, -log<sum> plus the m-series block.
    * "corollary2": the printed closed form with (1 - log sum) in place of
      the log block; kept verbatim so the finite-difference oracle can
      adjudicate between the two.
    * "fd": (l(p^k) - l(0)) / p^k, first-order quotient with step p^fd_k.
    """
    p = q.p
    if method == "direct":
        res = _derivative_closed_form(q, with_constant_one=False)
        return PadicNum(p, 0, res, q.work_prec).cap(q.ctx.prec)
    if method == "corollary2":
        res = _derivative_closed_form(q, with_constant_one=True)
        return PadicNum(p, 0, res, q.work_prec).cap(q.ctx.prec)
    if method == "fd":
        if fd_k is None:
            raise DomainError("fd method requires fd_k")
        if not 2 <= fd_k <= q.ctx.prec - 4:
            raise DomainError(f"fd_k must lie in 2..{q.ctx.prec - 4}, got {fd_k}")
        h = p**fd_k
        diff = l_padic(h, q) - l_padic(0, q)
        return diff / h
    raise DomainError(f"unknown method {method!r}")


def derivative_report(q: PadicLQuery, fd_k: int) -> dict:
    """All three derivative routes side by side, plus their discrepancies."""
    direct = l_derivative_at_0(q, "direct")
    printed = l_derivative_at_0(q, "corollary2")
    fd = l_derivative_at_0(q, "fd", fd_k=fd_k)
    return {
        "direct": direct,
        "corollary2": printed,
        "fd": fd,
        "fd_k": fd_k,
        "direct_vs_fd_digits": direct.agree_digits(fd),
        "corollary2_minus_direct": printed - direct,
    }
