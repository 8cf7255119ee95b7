"""Exact local arithmetic over the completions of Q.

Places are either a prime number or the token :data:`INF` for the real
place.  Every routine works with exact integers and
:class:`fractions.Fraction`; nothing here touches floating point.

Hilbert symbol convention: ``hilbert(a, b, v) == +1`` iff
``z^2 = a x^2 + b y^2`` has a nontrivial solution over ``Q_v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

import numpy as np
from sympy import factorint, isprime

INF = "inf"
"""The real place of Q."""

Place = Union[int, str]

SQUARE_CLASS_REPS_2 = (1, -1, 2, -2, 5, -5, 10, -10)


def v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("v2(0) is infinite")
    return (n & -n).bit_length() - 1


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@lru_cache(maxsize=65536)
def prime_divisors(n: int) -> tuple[int, ...]:
    """Ascending primes dividing ``n`` (sign ignored)."""
    n = abs(n)
    if n <= 1:
        return ()
    return tuple(sorted(factorint(n)))


def as_fraction(q) -> Fraction:
    if isinstance(q, Fraction):
        f = q
    elif isinstance(q, (int, Rational, str)):
        f = Fraction(q)
    else:
        raise TypeError(f"expected a rational number, got {type(q).__name__}")
    if f == 0:
        raise ValueError("zero has no square class")
    return f


def _integral_rep(q) -> int:
    # n/m and n*m differ by the square m^2
    f = as_fraction(q)
    return f.numerator * f.denominator


def squarefree_part(q) -> int:
    """Signed squarefree integer in the same class of Q^x / (Q^x)^2 as ``q``."""
    n = _integral_rep(q)
    core = 1
    for p, e in factorint(abs(n)).items():
        if e % 2:
            core *= p
    return core if n > 0 else -core


def _check_place(v: Place) -> None:
    if v == INF:
        return
    if isinstance(v, bool) or not isinstance(v, int) or not isprime(v):
        raise ValueError(f"not a place of Q: {v!r}")


def _split(n: int, p: int) -> tuple[int, int]:
    """Return (valuation, unit part) of the integer ``n`` at ``p``."""
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k, n


def legendre(a: int, p: int) -> int:
    """Legendre symbol via Euler's criterion (``p`` odd prime, ``p`` not dividing ``a``)."""
    s = pow(a % p, (p - 1) // 2, p)
    if s == 0:
        raise ValueError(f"{p} divides {a}")
    return 1 if s == 1 else -1


def v2_pow_minus_one(ell: int, k: int) -> int:
    """v2(ell**k - 1) by lifting the exponent.

    >>> v2_pow_minus_one(7, 2)
    4
    """
    if ell < 3 or ell % 2 == 0:
        raise ValueError(f"ell must be an odd integer >= 3, got {ell}")
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    if k % 2:
        return v2(ell - 1)
    return v2(ell - 1) + v2(ell + 1) + v2(k) - 1


@dataclass(frozen=True)
class SquareClass2:
    """An element of Q_2^x / (Q_2^x)^2, stored by its canonical representative."""

    representative: int

    def __post_init__(self):
        if self.representative not in SQUARE_CLASS_REPS_2:
            raise ValueError(f"not a canonical 2-adic class: {self.representative}")

    def __mul__(self, other: SquareClass2) -> SquareClass2:
        return square_class_at_2(self.representative * other.representative)

    @property
    def valuation_parity(self) -> int:
        return v2(self.representative) & 1

    @property
    def unit_mod_8(self) -> int:
        return (self.representative >> self.valuation_parity) % 8


@dataclass(frozen=True)
class OddLocalClass:
    """An element of Q_l^x / (Q_l^x)^2 for an odd prime l."""

    prime: int
    valuation_parity: int
    unit_is_residue: int

    def __mul__(self, other: OddLocalClass) -> OddLocalClass:
        if other.prime != self.prime:
            raise ValueError("classes at different primes")
        return OddLocalClass(
            self.prime,
            self.valuation_parity ^ other.valuation_parity,
            1 - ((1 - self.unit_is_residue) ^ (1 - other.unit_is_residue)),
        )

    @property
    def is_square(self) -> bool:
        return self.valuation_parity == 0 and self.unit_is_residue == 1

    def bits(self) -> tuple[int, int]:
        """Coordinates in F_2^2: (valuation parity, unit is a non-residue)."""
        return self.valuation_parity, 1 - self.unit_is_residue


_UNIT_CLASS_2 = {1: 1, 3: -5, 5: 5, 7: -1}


def square_class_at_2(q) -> SquareClass2:
    n = _integral_rep(q)
    k, u = _split(n, 2)
    rep = _UNIT_CLASS_2[u % 8]
    return SquareClass2(2 * rep if k % 2 else rep)


def odd_local_class(q, p: int) -> OddLocalClass:
    if p == 2 or not isprime(p):
        raise ValueError(f"expected an odd prime, got {p}")
    k, u = _split(_integral_rep(q), p)
    return OddLocalClass(p, k & 1, int(legendre(u, p) == 1))


def is_square_local(q, v: Place) -> bool:
    """True iff ``q`` is a square in Q_v."""
    _check_place(v)
    n = _integral_rep(q)
    if v == INF:
        return n > 0
    k, u = _split(n, v)
    if k % 2:
        return False
    if v == 2:
        return u % 8 == 1
    return legendre(u, v) == 1


def hilbert(a, b, v: Place) -> int:
    """Quadratic Hilbert symbol (a, b)_v with values +1/-1."""
    _check_place(v)
    a, b = _integral_rep(a), _integral_rep(b)
    if v == INF:
        return -1 if a < 0 and b < 0 else 1
    alpha, u = _split(a, v)
    beta, w = _split(b, v)
    if v == 2:
        eps_u, eps_w = ((u - 1) // 2) & 1, ((w - 1) // 2) & 1
        om_u, om_w = ((u * u - 1) // 8) & 1, ((w * w - 1) // 8) & 1
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e & 1 else 1
    sign = -1 if (alpha * beta * ((v - 1) // 2)) & 1 else 1
    if beta & 1:
        sign *= legendre(u, v)
    if alpha & 1:
        sign *= legendre(w, v)
    return sign


def relevant_places(*qs) -> list[Place]:
    """INF, 2 and every odd prime dividing a numerator or denominator of ``qs``."""
    primes = {2}
    for q in qs:
        f = as_fraction(q)
        primes.update(prime_divisors(f.numerator))
        primes.update(prime_divisors(f.denominator))
    return [INF, *sorted(primes)]


def hilbert_product_check(a, b) -> bool:
    """Product formula self-test: the symbols over all places multiply to +1."""
    prod = 1
    for v in relevant_places(a, b):
        prod *= hilbert(a, b, v)
    return prod == 1


def is_local_norm(x, d: int, v: Place) -> bool:
    """True iff ``x`` is a norm from Q_v(sqrt d)."""
    if d == 1 or squarefree_part(d) != d:
        raise ValueError(f"d must be a squarefree integer != 1, got {d}")
    return hilbert(x, d, v) == 1


def bruteforce_modulus(p: int) -> int:
    return 2**8 if p == 2 else p**3


@lru_cache(maxsize=None)
def _square_table(modulus: int) -> np.ndarray:
    z = np.arange(modulus, dtype=np.int64)
    table = np.zeros(modulus, dtype=bool)
    table[(z * z) % modulus] = True
    return table


def hilbert_bruteforce(a, b, p: int, modulus: int | None = None) -> int:
    """Hilbert symbol at a finite prime by searching for primitive solutions.

    Both arguments are first replaced by their squarefree parts.  A
    primitive solution of ``z^2 = a x^2 + b y^2`` has ``x`` or ``y`` a unit
    (otherwise ``p`` divides ``z`` too), so after scaling it suffices to test
    whether ``a + b y^2`` or ``a x^2 + b`` is a square modulo ``modulus``.
    """
    _check_place(p)
    if p == INF:
        raise ValueError("brute force only covers finite places")
    a, b = squarefree_part(a), squarefree_part(b)
    n = modulus or bruteforce_modulus(p)
    squares = _square_table(n)
    t = np.arange(n, dtype=np.int64)
    tt = (t * t) % n
    if squares[(a + b * tt) % n].any() or squares[(a * tt + b) % n].any():
        return 1
    return -1
