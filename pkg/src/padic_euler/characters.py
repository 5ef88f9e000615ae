"""Dirichlet characters of odd modulus.

Characters are stored by exponent vector against the canonical generators
of the unit group (primes ascending, smallest primitive root per odd prime
power, combined by CRT), which makes evaluation exact at any integer and
the index in the canonical enumeration reproducible.  Values are elements
of Q(zeta_m) where m is the character order.
"""

from __future__ import annotations

import itertools
from functools import lru_cache, reduce
from math import gcd, lcm

from .cyclotomic import CycElem
from .errors import DomainError
from .ntheory import divisors, euler_phi, factorize, primitive_root


class UnitGroupStructure:
    """Cyclic decomposition of (Z/f)^* for odd f, with a discrete-log table."""

    def __init__(self, modulus: int, generators: tuple[int, ...], orders: tuple[int, ...]):
        self.modulus = modulus
        self.generators = generators
        self.orders = orders
        self.dlog = self._build_dlog()

    def _build_dlog(self) -> dict[int, tuple[int, ...]]:
        f = self.modulus
        table = {}
        for exps in itertools.product(*[range(d) for d in self.orders]):
            a = 1 % f
            for g, e in zip(self.generators, exps):
                a = a * pow(g, e, f) % f
            table[a] = exps
        return table


@lru_cache(maxsize=None)
def unit_group_structure(f: int) -> UnitGroupStructure:
    """Canonical generators and orders of (Z/f)^*; f must be odd."""
    if f < 1:
        raise DomainError(f"modulus must be >= 1, got {f}")
    if f % 2 == 0:
        raise DomainError(f"modulus must be odd, got {f}")
    gens, orders = [], []
    for q, e in factorize(f):
        qe = q**e
        g = primitive_root(qe)
        rest = f // qe
        if rest > 1:
            # CRT lift: congruent to g mod q^e and to 1 mod the complement
            g = (g * rest * pow(rest, -1, qe) + qe * pow(qe, -1, rest)) % f
        gens.append(g)
        orders.append(euler_phi(qe))
    return UnitGroupStructure(f, tuple(gens), tuple(orders))


class DirichletCharacter:
    """A character mod f given by its exponent vector on the canonical generators."""

    __slots__ = ("modulus", "exponents", "order", "conductor")

    def __init__(self, modulus: int, exponents):
        structure = unit_group_structure(modulus)
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != len(structure.generators):
            raise DomainError(
                f"expected {len(structure.generators)} exponents, got {len(exponents)}"
            )
        for e, d in zip(exponents, structure.orders):
            if not 0 <= e < d:
                raise DomainError(f"exponent {e} out of range for order {d}")
        self.modulus = modulus
        self.exponents = exponents
        self.order = reduce(
            lcm, (d // gcd(e, d) for e, d in zip(exponents, structure.orders)), 1
        )
        self.conductor = self._conductor()

    @property
    def structure(self) -> UnitGroupStructure:
        return unit_group_structure(self.modulus)

    @property
    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @property
    def index(self) -> int:
        """Position in the canonical (lexicographic) enumeration mod f."""
        idx = 0
        for e, d in zip(self.exponents, self.structure.orders):
            idx = idx * d + e
        return idx

    def value_exponent(self, a: int) -> int | None:
        """k with chi(a) = zeta_order^k, or None when chi(a) = 0.

        Mod 1 every integer counts as a unit, so the trivial character
        mod 1 is 1 everywhere (including at 0).
        """
        f = self.modulus
        a %= f
        if f == 1:
            return 0
        if gcd(a, f) != 1:
            return None
        ks = self.structure.dlog[a]
        m = self.order
        acc = 0
        for e, k, d in zip(self.exponents, ks, self.structure.orders):
            acc += e * k * m // d
        return acc % m

    def __call__(self, a: int) -> CycElem:
        k = self.value_exponent(a)
        if k is None:
            return CycElem.zero(self.order)
        return CycElem.root_power(self.order, k)

    def _conductor(self) -> int:
        # smallest d | f with chi trivial on every unit a = 1 (mod d)
        f = self.modulus
        for d in divisors(f):
            if all(
                self.value_exponent(a) == 0
                for a in range(1, f + 1, d)
                if gcd(a, f) == 1
            ):
                return d
        return f  # pragma: no cover - d = f always passes

    def __eq__(self, other):
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return (self.modulus, self.exponents) == (other.modulus, other.exponents)

    def __hash__(self):
        return hash((self.modulus, self.exponents))

    def __repr__(self):
        return (
            f"DirichletCharacter(f={self.modulus}, exponents={self.exponents}, "
            f"order={self.order}, conductor={self.conductor})"
        )


def enumerate_characters(f: int, primitive_only: bool = False) -> list[DirichletCharacter]:
    """All phi(f) characters mod f in canonical order; index 0 is trivial."""
    structure = unit_group_structure(f)
    chars = []
    for exps in itertools.product(*[range(d) for d in structure.orders]):
        chi = DirichletCharacter(f, exps)
        if not primitive_only or chi.is_primitive:
            chars.append(chi)
    return chars


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def evaluate(chi: DirichletCharacter, a: int) -> CycElem:
    """chi(a) as an element of Q(zeta_order); zero off the units."""
    return chi(a)
