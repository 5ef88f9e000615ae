"""Precision-tracked p-adic arithmetic for an odd prime p.

A :class:`PadicNum` stores a value of Q_p as ``p^val * unit`` where the unit
residue is known modulo ``p^(prec - val)``; ``prec`` is the guaranteed
absolute precision (the value is known modulo ``p^prec``).  Zero-at-precision
is represented with infinite valuation.  All operations propagate precision
conservatively:

* addition / subtraction: min of the absolute precisions,
* multiplication: ``min(prec_a + val_b, prec_b + val_a)``,
* division by a unit: precision preserved; division by p^k costs k digits.

Exact integers and fractions mix in as scalars without precision loss
(beyond their own p-valuation shifting the result).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DomainError, PrecisionError
from .ntheory import factorize, is_prime, padic_valuation

INF = float("inf")


@dataclass(frozen=True)
class PadicContext:
    """Fixed-precision workspace: target precision plus guard digits.

    Internal series run at ``prec + guard`` digits; public results are capped
    back to ``prec``.  Results must be unchanged under ``guard -> guard + 10``.
    """

    p: int
    prec: int
    guard: int = 10

    def __post_init__(self):
        if self.p == 2 or not is_prime(self.p):
            raise DomainError(f"p must be an odd prime, got {self.p}")
        if self.prec < 1:
            raise DomainError(f"precision must be >= 1, got {self.prec}")
        if self.guard < 0:
            raise DomainError(f"guard must be >= 0, got {self.guard}")

    @property
    def work_prec(self) -> int:
        return self.prec + self.guard

    @property
    def work_modulus(self) -> int:
        return self.p**self.work_prec

    def with_guard(self, guard: int) -> "PadicContext":
        return PadicContext(self.p, self.prec, guard)

    def from_int(self, x: int) -> "PadicNum":
        return PadicNum.from_int(x, self.p, self.work_prec)

    def from_fraction(self, x: Fraction) -> "PadicNum":
        return PadicNum.from_fraction(x, self.p, self.work_prec)


class PadicNum:
    __slots__ = ("p", "val", "unit", "prec")

    def __init__(self, p: int, val, unit: int, prec: int):
        # Normalizing constructor; val may be an int or INF (zero at precision).
        if prec < 0:
            raise PrecisionError("no guaranteed digits left", digits_guaranteed=prec)
        if val is INF or val >= prec:
            val, unit = INF, 0
        else:
            rel = prec - val
            unit %= p**rel
            if unit == 0:
                val = INF
            elif unit % p == 0:
                shift = padic_valuation(unit, p)
                val += shift
                unit //= p**shift
                unit %= p ** (prec - val)
                if unit == 0:  # pragma: no cover - shift removed all digits
                    val = INF
        self.p = p
        self.val = val
        self.unit = unit
        self.prec = prec

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_int(cls, x: int, p: int, prec: int) -> "PadicNum":
        return cls(p, 0, x % p**prec, prec)

    @classmethod
    def from_fraction(cls, x: Fraction, p: int, prec: int) -> "PadicNum":
        num, den = x.numerator, x.denominator
        if num == 0:
            return cls.zero(p, prec)
        vd = padic_valuation(den, p)
        vn = padic_valuation(num, p)
        v = vn - vd
        rel = prec - v
        if rel <= 0:
            return cls.zero(p, prec)
        mod = p**rel
        u = (num // p**vn) * pow(den // p**vd, -1, mod) % mod
        return cls(p, v, u, prec)

    @classmethod
    def zero(cls, p: int, prec: int) -> "PadicNum":
        return cls(p, INF, 0, prec)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        """True when indistinguishable from 0 at this precision."""
        return self.val is INF

    @property
    def valuation(self):
        return self.val

    def residue(self, k: int | None = None) -> int:
        """The value modulo p^k (default: full precision); requires val >= 0."""
        if k is None:
            k = self.prec
        if k > self.prec:
            raise PrecisionError(
                f"only {self.prec} digits guaranteed, asked for {k}",
                digits_guaranteed=self.prec,
            )
        if self.is_zero:
            return 0
        if self.val < 0:
            raise DomainError("negative valuation: not a p-adic integer")
        return self.p**self.val * self.unit % self.p**k

    def cap(self, k: int) -> "PadicNum":
        """Reduce the guaranteed precision to k digits."""
        if k > self.prec:
            raise PrecisionError(
                f"cannot extend precision {self.prec} to {k}",
                digits_guaranteed=self.prec,
            )
        if self.is_zero:
            return PadicNum.zero(self.p, k)
        return PadicNum(self.p, self.val, self.unit, k)

    def _mantissa(self, base: int) -> int:
        # integer m with value = p^base * m (mod p^prec); requires base <= val
        if self.is_zero:
            return 0
        return self.p ** (self.val - base) * self.unit

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "PadicNum"):
        if self.p != other.p:
            raise ValueError(f"prime mismatch: {self.p} vs {other.p}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PadicNum.from_fraction(Fraction(other), self.p, self.prec)
        if not isinstance(other, PadicNum):
            return NotImplemented
        self._check(other)
        prec = min(self.prec, other.prec)
        base = min(self.val if not self.is_zero else prec,
                   other.val if not other.is_zero else prec, 0)
        m = self._mantissa(base) + other._mantissa(base)
        return PadicNum(self.p, base, m, prec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        return PadicNum(self.p, self.val, -self.unit, self.prec)

    def __sub__(self, other):
        return self + (-other if isinstance(other, PadicNum) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def _scalar_mul(self, c: Fraction) -> "PadicNum":
        if c == 0:
            return PadicNum.zero(self.p, self.prec)
        vn = padic_valuation(c.numerator, self.p)
        vd = padic_valuation(c.denominator, self.p)
        vc = vn - vd
        if self.is_zero:
            return PadicNum.zero(self.p, self.prec + vc)
        rel = self.prec - self.val
        mod = self.p**rel
        u = (c.numerator // self.p**vn) % mod
        u = u * pow((c.denominator // self.p**vd) % mod, -1, mod) % mod
        return PadicNum(self.p, self.val + vc, self.unit * u, self.prec + vc)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scalar_mul(Fraction(other))
        if not isinstance(other, PadicNum):
            return NotImplemented
        self._check(other)
        if self.is_zero or other.is_zero:
            va = self.val if not self.is_zero else self.prec
            vb = other.val if not other.is_zero else other.prec
            return PadicNum.zero(self.p, va + vb)
        rel = min(self.prec - self.val, other.prec - other.val)
        unit = self.unit * other.unit % self.p**rel
        return PadicNum(self.p, self.val + other.val, unit, self.val + other.val + rel)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNum":
        if self.is_zero:
            raise DomainError("cannot invert zero-at-precision")
        rel = self.prec - self.val
        unit = pow(self.unit, -1, self.p**rel)
        return PadicNum(self.p, -self.val, unit, -self.val + rel)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scalar_mul(1 / Fraction(other))
        if not isinstance(other, PadicNum):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_zero:
            if k == 0:
                raise DomainError("0^0 at precision is undefined")
            return PadicNum.zero(self.p, k * self.prec)
        if k == 0:
            return PadicNum(self.p, 0, 1, self.prec)
        rel = self.prec - self.val
        unit = pow(self.unit, k, self.p**rel)
        return PadicNum(self.p, k * self.val, unit, k * self.val + rel)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PadicNum):
            return NotImplemented
        return (self.p, self.val, self.unit, self.prec) == (
            other.p, other.val, other.unit, other.prec)

    def __hash__(self):
        return hash((self.p, self.val, self.unit, self.prec))

    def agree_digits(self, other: "PadicNum") -> int:
        """Number of guaranteed p-adic digits on which self and other agree."""
        d = self - other
        return d.prec if d.is_zero else min(d.val, d.prec)

    def digits(self) -> list[int]:
        """Base-p digits of the unit part, little-endian, length prec - val."""
        if self.is_zero:
            return []
        out, u = [], self.unit
        for _ in range(self.prec - self.val):
            u, r = divmod(u, self.p)
            out.append(r)
        return out

    def __repr__(self):
        return f"PadicNum({self})"

    def __str__(self):
        """Sum-of-powers form, least significant digit first: 1 + 4*5 + O(5^3)."""
        if self.is_zero:
            return f"O({self.p}^{self.prec})"
        terms = []
        for i, d in enumerate(self.digits()):
            if d == 0:
                continue
            e = self.val + i
            if e == 0:
                terms.append(f"{d}")
            elif e == 1:
                terms.append(f"{d}*{self.p}")
            else:
                terms.append(f"{d}*{self.p}^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O({self.p}^{self.prec})"


# -- Teichmueller lift, <a>, Iwasawa logarithm ------------------------------


@lru_cache(maxsize=None)
def _teichmuller_residue(p: int, prec: int, a: int) -> int:
    # Fixed point of x -> x^p in (Z/p^prec)* congruent to a mod p.
    mod = p**prec
    x = a % mod
    while True:
        y = pow(x, p, mod)
        if y == x:
            return x
        x = y


def teichmuller(a: int, ctx: PadicContext) -> PadicNum:
    """The unique (p-1)-st root of unity congruent to a modulo p."""
    if a % ctx.p == 0:
        raise DomainError(f"{a} is divisible by p={ctx.p}")
    u = _teichmuller_residue(ctx.p, ctx.work_prec, a % ctx.p)
    return PadicNum(ctx.p, 0, u, ctx.work_prec).cap(ctx.prec)


def _angle_residue(p: int, prec: int, a: int) -> int:
    mod = p**prec
    w = _teichmuller_residue(p, prec, a % p)
    u = a * pow(w, -1, mod) % mod
    assert u % p == 1
    return u


def angle(a: int, ctx: PadicContext) -> PadicNum:
    """The principal-unit part <a> = a / teichmuller(a), congruent to 1 mod p."""
    if a % ctx.p == 0:
        raise DomainError(f"{a} is divisible by p={ctx.p}")
    u = _angle_residue(ctx.p, ctx.work_prec, a)
    return PadicNum(ctx.p, 0, u, ctx.work_prec).cap(ctx.prec)


def series_cutoff(p: int, target: int) -> int:
    """Smallest k with k*(1 - 1/(p-1)) >= target.

    Series whose k-th term has valuation >= k - v_p(k!) may be truncated
    there: every dropped term vanishes modulo p^target.
    """
    return -((-target * (p - 1)) // (p - 2))


@lru_cache(maxsize=None)
def _log_unit_residue(p: int, prec: int, a_mod: int) -> int:
    # log(<a>) mod p^prec via the alternating series in z = <a> - 1.
    mod = p**prec
    z = (_angle_residue(p, prec, a_mod) - 1) % mod
    if z == 0:
        return 0
    w = padic_valuation(z, p)
    total = 0
    k = 1
    while k * w - (k - 1) // (p - 1) < prec + 1:
        # exact: z^k is divisible by p^(k*w) >= p^(v_p(k)+1)
        vk = padic_valuation(k, p)
        term = pow(z, k, p ** (prec + vk)) // p**vk
        term = term * pow(k // p**vk, -1, mod) % mod
        total = (total - term if k % 2 == 0 else total + term) % mod
        k += 1
    return total


def iwasawa_log(u: PadicNum, ctx: PadicContext) -> PadicNum:
    """The Iwasawa branch of log_p: roots of unity map to 0, so log(u) = log(<u>)."""
    if u.is_zero or u.val != 0:
        raise DomainError("iwasawa_log requires a unit")
    k = min(u.prec, ctx.work_prec)
    r = _log_unit_residue(ctx.p, k, u.residue(k))
    return PadicNum(ctx.p, 0, r, k).cap(min(ctx.prec, k))


def log_of_int(a: int, ctx: PadicContext) -> PadicNum:
    """Iwasawa logarithm of an integer prime to p, at working precision."""
    if a % ctx.p == 0:
        raise DomainError(f"{a} is divisible by p={ctx.p}")
    w = ctx.work_prec
    return PadicNum(ctx.p, 0, _log_unit_residue(ctx.p, w, a % ctx.p**w), w)


def binom_neg_s(s: PadicNum, m: int) -> PadicNum:
    """Binomial coefficient C(-s, m) with tracked precision.

    Division by m! costs v_p(m!) guaranteed digits; the caller's guard must
    absorb the loss or a PrecisionError is raised.
    """
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    acc = PadicNum.from_int(1, s.p, s.prec)
    for j in range(m):
        acc = acc * (-s - j)
    fact = 1
    for j in range(2, m + 1):
        fact *= j
    out = acc / fact
    if out.prec <= 0:
        raise PrecisionError(
            f"C(-s,{m}) lost all digits (v_p({m}!) too large)",
            digits_guaranteed=out.prec,
        )
    return out


def angle_pow_neg_s(a: int, s, ctx: PadicContext) -> PadicNum:
    """<a>^(-s) for s in the convergence disk (p-adic integers here).

    Integer s uses the exact power; otherwise the binomial series
    sum_k C(-s,k) (<a>-1)^k truncated once the term valuation bound
    k*(1 - 1/(p-1)) clears the working precision.
    """
    if a % ctx.p == 0:
        raise DomainError(f"{a} is divisible by p={ctx.p}")
    p, w = ctx.p, ctx.work_prec
    mod = p**w
    if isinstance(s, int):
        u = pow(_angle_residue(p, w, a), -s, mod)
        return PadicNum(p, 0, u, w).cap(ctx.prec)
    if isinstance(s, Fraction):
        s = PadicNum.from_fraction(s, p, w)
    if s.p != p:
        raise ValueError(f"prime mismatch: {s.p} vs {p}")
    if not s.is_zero and s.val < 0:
        raise DomainError("s lies outside the convergence disk (|s|_p > 1)")
    z = PadicNum(p, 0, _angle_residue(p, w, a), w) - 1
    acc = PadicNum.from_int(1, p, w)
    zk = PadicNum.from_int(1, p, w)
    for k in range(1, series_cutoff(p, w) + 1):
        zk = zk * z
        acc = acc + binom_neg_s(s, k) * zk
    if acc.prec < ctx.prec:
        raise PrecisionError(
            f"only {acc.prec} digits guaranteed, target {ctx.prec}",
            digits_guaranteed=acc.prec,
        )
    return acc.cap(ctx.prec)


def smallest_primitive_root(p: int) -> int:
    prime_divs = [q for q, _ in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in prime_divs):
            return g
    raise ValueError(f"no primitive root mod {p}")  # pragma: no cover


@lru_cache(maxsize=None)
def root_of_unity_residue(p: int, prec: int, m: int) -> int:
    """Canonical primitive m-th root of unity in Z_p, modulo p^prec.

    Fixed once per (p, m) as teichmuller(g)^((p-1)/m) for the smallest
    primitive root g mod p, so embedded outputs are reproducible.
    """
    if (p - 1) % m != 0:
        raise DomainError(f"{m} does not divide p-1 = {p - 1}")
    g = smallest_primitive_root(p)
    w = _teichmuller_residue(p, prec, g)
    return pow(w, (p - 1) // m, p**prec)


def root_of_unity(p: int, m: int, ctx: PadicContext) -> PadicNum:
    return PadicNum(p, 0, root_of_unity_residue(p, ctx.work_prec, m), ctx.work_prec)
