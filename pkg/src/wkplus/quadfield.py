"""Quadratic fields Q(sqrt d) and their ramification data."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from sympy import factorint, isprime

from .padic import legendre, prime_divisors


class RationalField:
    """The base field Q, as a token accepted wherever a field is expected."""

    real_place_count = 1
    d = 1

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def normalize_radicand(n: int) -> int:
    """Squarefree core of ``n`` keeping its sign, so Q(sqrt n) = Q(sqrt core).

    Raises ``ValueError`` for 0 and perfect squares, which do not define a
    quadratic field.
    """
    n = int(n)
    if n == 0:
        raise ValueError("radicand 0 does not define a field")
    if n > 0 and isqrt(n) ** 2 == n:
        raise ValueError(f"{n} is a perfect square")
    core = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            core *= p
    return core if n > 0 else -core


def is_squarefree(n: int) -> bool:
    return n != 0 and all(e == 1 for e in factorint(abs(n)).values())


class SplittingType(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"

    @property
    def ramification_index(self) -> int:
        return 2 if self is SplittingType.RAMIFIED else 1

    @property
    def residue_degree(self) -> int:
        return 2 if self is SplittingType.INERT else 1

    @property
    def prime_count(self) -> int:
        return 2 if self is SplittingType.SPLIT else 1


@dataclass(frozen=True)
class QuadraticField:
    """E = Q(sqrt d) for a squarefree integer d other than 0 and 1."""

    d: int

    def __post_init__(self):
        if self.d in (0, 1) or not is_squarefree(self.d):
            raise ValueError(f"radicand must be squarefree and != 0, 1; got {self.d}")

    @classmethod
    def from_radicand(cls, n: int) -> QuadraticField:
        return cls(normalize_radicand(n))

    @property
    def discriminant(self) -> int:
        return self.d if self.d % 4 == 1 else 4 * self.d

    @property
    def real_place_count(self) -> int:
        return 2 if self.d > 0 else 0

    @property
    def ramified_primes(self) -> list[int]:
        return list(prime_divisors(self.discriminant))

    @property
    def odd_ramified_primes(self) -> list[int]:
        return [p for p in self.ramified_primes if p != 2]

    def splitting_at(self, p: int) -> SplittingType:
        return splitting_at(self, p)


def discriminant(E: QuadraticField) -> int:
    return E.discriminant


def ramified_primes(E: QuadraticField) -> list[int]:
    return E.ramified_primes


def splitting_at(E: QuadraticField, p: int) -> SplittingType:
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    d = E.d
    if p == 2:
        if d % 8 == 1:
            return SplittingType.SPLIT
        if d % 8 == 5:
            return SplittingType.INERT
        return SplittingType.RAMIFIED
    if d % p == 0:
        return SplittingType.RAMIFIED
    return SplittingType.SPLIT if legendre(d, p) == 1 else SplittingType.INERT
