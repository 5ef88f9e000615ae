"""Exact arithmetic in cyclotomic fields Q(zeta_m).

A :class:`CycElem` is a rational-coefficient vector of length phi(m),
the unique reduced representative modulo the m-th cyclotomic polynomial,
so equality is coefficient-wise.  For m in {1, 2} the element degenerates
to a single rational (zeta_1 = 1, zeta_2 = -1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, UnsupportedEmbedding
from .ntheory import divisors, euler_phi
from .padic import PadicNum

# Polynomials are coefficient tuples, ascending powers.


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divmod_monic(num, den):
    """Exact division of integer polynomials; den must be monic."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, dj in enumerate(den):
            num[i - dd + j] -= c * dj
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m (ascending), degree phi(m).

    Computed by exact division of x^m - 1 by the Phi_d for proper
    divisors d of m.
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    num = [0] * (m + 1)
    num[0], num[m] = -1, 1
    den = [1]
    for d in divisors(m)[:-1]:
        den = _poly_mul(den, cyclotomic_polynomial(d))
    quot, rem = _poly_divmod_monic(num, den)
    assert not any(rem), f"x^{m}-1 not divisible by product of proper Phi_d"
    return tuple(quot)


def _reduce_mod_cyclotomic(coeffs: list[Fraction], m: int) -> tuple[Fraction, ...]:
    phi_m = cyclotomic_polynomial(m)
    deg = len(phi_m) - 1
    coeffs = list(coeffs)
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(deg + 1):
                coeffs[i - deg + j] -= c * phi_m[j]
    out = coeffs[:deg]
    out += [Fraction(0)] * (deg - len(out))
    return tuple(out)


class CycElem:
    """An element of Q(zeta_m), reduced modulo Phi_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        self.m = m
        self.coeffs = _reduce_mod_cyclotomic(coeffs, m)

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, m: int, value) -> "CycElem":
        return cls(m, [Fraction(value)])

    @classmethod
    def zero(cls, m: int) -> "CycElem":
        return cls.from_rational(m, 0)

    @classmethod
    def one(cls, m: int) -> "CycElem":
        return cls.from_rational(m, 1)

    @classmethod
    def root_power(cls, m: int, k: int) -> "CycElem":
        """zeta_m^k as a reduced element."""
        k %= m
        coeffs = [Fraction(0)] * (k + 1)
        coeffs[k] = Fraction(1)
        return cls(m, coeffs)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycElem):
            if other.m != self.m:
                raise ValueError(f"root order mismatch: {self.m} vs {other.m}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycElem.from_rational(self.m, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycElem(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycElem(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycElem(self.m, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycElem(self.m, [a * other for a in self.coeffs])
        if not isinstance(other, CycElem):
            return NotImplemented
        if other.m != self.m:
            raise ValueError(f"root order mismatch: {self.m} vs {other.m}")
        prod = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return CycElem(self.m, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycElem.one(self.m)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "CycElem":
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_m."""
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        if self.is_rational:
            return CycElem.from_rational(self.m, 1 / self.coeffs[0])
        phi_m = [Fraction(c) for c in cyclotomic_polynomial(self.m)]
        r0, r1 = phi_m, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant: Phi_m is irreducible over Q
        g = next(c for c in r0 if c)
        inv = [c / g for c in s0]
        return CycElem(self.m, inv)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, CycElem):
            return self * other.inverse()
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.m, self.coeffs))

    def __repr__(self):
        return f"CycElem(m={self.m}, {self})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*z{self.m}")
            else:
                terms.append(f"{c}*z{self.m}^{i}")
        return " + ".join(terms)


def _frac_poly_divmod(num, den):
    num = list(num)
    while num and not num[-1]:
        num.pop()
    den = list(den)
    while den and not den[-1]:
        den.pop()
    if len(num) < len(den):
        return [Fraction(0)], num
    dd = len(den) - 1
    lead = den[-1]
    quot = [Fraction(0)] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] / lead
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    rem = num[:dd]
    while rem and not rem[-1]:
        rem.pop()
    return quot, rem


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def cyc_embed_padic(a: CycElem, p: int, prec: int, root: PadicNum) -> PadicNum:
    """Image of a under the ring embedding zeta_m -> root into Z_p.

    root must be a primitive m-th root of unity in Z_p at precision >= prec,
    which exists exactly when m divides p - 1.
    """
    if (p - 1) % a.m != 0:
        raise UnsupportedEmbedding(
            f"order {a.m} does not divide p-1 = {p - 1}; values lie outside Q_p"
        )
    if root.prec < prec:
        raise DomainError(f"root known to {root.prec} digits, need {prec}")
    acc = PadicNum.zero(p, prec)
    for c in reversed(a.coeffs):
        acc = acc * root + c
    return acc.cap(min(acc.prec, prec))
