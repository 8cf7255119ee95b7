"""Signature maps, positive Tate kernels and norm indices.

Elements of Q are rationals.  Elements of Q(sqrt d) are pairs ``(a, b)``
meaning ``a + b sqrt d``; a bare rational is accepted as ``(q, 0)``.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from sympy import primerange

from . import f2, padic
from .padic import as_fraction, prime_divisors
from .quadfield import QQ, QuadraticField, RationalField

DEFAULT_D_GENERATORS = (-1, 2)
"""Configured generators of D_Q^(i) modulo squares for odd i."""


class Provenance(enum.Enum):
    CONFIGURED = "configured"
    USER_SUPPLIED = "user-supplied"


class CertificationError(ValueError):
    """Square-class independence of generators could not be certified."""


def _as_quadratic(x) -> tuple[Fraction, Fraction]:
    if isinstance(x, tuple):
        a, b = x
        return Fraction(a), Fraction(b)
    return Fraction(x), Fraction(0)


def _sign(x: Fraction) -> int:
    return 0 if x > 0 else 1


def signature_vector(x, F=QQ) -> tuple[int, ...]:
    """Sign bits of ``x`` at the real embeddings of ``F`` (0 means positive).

    For real quadratic F the embeddings are ordered sqrt d -> +sqrt d, -sqrt d.
    """
    if isinstance(F, RationalField):
        return (_sign(as_fraction(x)),)
    a, b = _as_quadratic(x)
    if a == 0 and b == 0:
        raise ValueError("zero has no signature")
    if F.real_place_count == 0:
        return ()
    bits = []
    for s in (1, -1):
        if b == 0:
            bits.append(_sign(a))
        elif a == 0:
            bits.append(_sign(s * b))
        elif a * a > b * b * F.d:
            bits.append(_sign(a))
        else:
            bits.append(_sign(s * b))
    return tuple(bits)


def multiply(x, y, F=QQ):
    if isinstance(F, RationalField):
        return as_fraction(x) * as_fraction(y)
    a, b = _as_quadratic(x)
    c, e = _as_quadratic(y)
    return (a * c + b * e * F.d, a * e + b * c)


def _one(F):
    return Fraction(1) if isinstance(F, RationalField) else (Fraction(1), Fraction(0))


def _rational_class_vector(q, primes: list[int]) -> list[int]:
    n = padic.squarefree_part(q)
    return [int(n < 0)] + [int(n % p == 0) for p in primes]


def _quadratic_norm(x, d: int) -> Fraction:
    a, b = _as_quadratic(x)
    return a * a - b * b * d


def _quadratic_characters(gens, F: QuadraticField, bound: int):
    """Rows of local square-class characters at split primes up to ``bound``."""
    bad = set(prime_divisors(2 * F.d))
    for g in gens:
        for part in (*_as_quadratic(g), _quadratic_norm(g, F.d)):
            if part:
                bad.update(prime_divisors(part.numerator))
                bad.update(prime_divisors(part.denominator))
    rows = [list(signature_vector(g, F)) for g in gens]
    for p in primerange(3, bound + 1):
        if p in bad or padic.legendre(F.d, p) != 1:
            continue
        s = next(t for t in range(p) if (t * t - F.d) % p == 0)
        for root in (s, p - s):
            for row, g in zip(rows, gens):
                a, b = _as_quadratic(g)
                val = (a.numerator * pow(a.denominator, -1, p) + b.numerator * pow(b.denominator, -1, p) * root) % p
                row.append(int(padic.legendre(val, p) == -1))
        if f2.rank(rows) == len(gens):
            break
    return rows


def certify_independent(gens, F=QQ) -> None:
    """Raise unless ``gens`` are independent in F^x / (F^x)^2."""
    if not gens:
        return
    if isinstance(F, RationalField):
        primes = sorted({p for g in gens for p in prime_divisors(padic.squarefree_part(g))})
        rows = [_rational_class_vector(g, primes) for g in gens]
        if f2.rank(rows) < len(gens):
            raise CertificationError(f"generators {list(gens)} are dependent modulo squares")
        return
    involved = set(prime_divisors(F.d))
    for g in gens:
        for part in _as_quadratic(g):
            if part:
                involved.update(prime_divisors(part.numerator))
    bound = max(50, 3 * prod(involved))
    rows = _quadratic_characters(gens, F, bound)
    if f2.rank(rows) < len(gens):
        raise CertificationError(
            f"independence of {list(gens)} not certified at places up to {bound}"
        )


@dataclass(frozen=True)
class TateKernelPresentation:
    """Generators of D_F^(i) modulo squares."""

    base_field: object
    generators: tuple
    provenance: Provenance = Provenance.USER_SUPPLIED

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        certify_independent(gens, self.base_field)

    @property
    def real_place_count(self) -> int:
        return self.base_field.real_place_count

    def signature_matrix(self) -> list[list[int]]:
        return [list(signature_vector(g, self.base_field)) for g in self.generators]


def default_presentation() -> TateKernelPresentation:
    return TateKernelPresentation(QQ, DEFAULT_D_GENERATORS, Provenance.CONFIGURED)


def delta_i(P: TateKernelPresentation) -> int:
    """Corank of the signature map on D_F^(i) modulo squares."""
    r1 = P.real_place_count
    if r1 == 0:
        return 0
    return r1 - f2.rank(P.signature_matrix())


def d_plus_basis(P: TateKernelPresentation) -> list:
    """Basis of the totally positive part D_F^{+(i)} modulo squares."""
    gens, F = P.generators, P.base_field
    if P.real_place_count == 0:
        return list(gens)
    out = []
    for comb in f2.left_kernel(P.signature_matrix()):
        x = _one(F)
        for g, c in zip(gens, comb):
            if c:
                x = multiply(x, g, F)
        out.append(x)
    return out


def norm_places(dplus, E: QuadraticField) -> list:
    return padic.relevant_places(E.d, E.discriminant, *dplus)


def norm_index(dplus, E: QuadraticField) -> int:
    """[D+ : D+ cap N(E^x)] via local Hilbert symbols and Hasse's norm theorem."""
    if not dplus:
        return 1
    places = norm_places(dplus, E)
    rows = [[(1 - padic.hilbert(g, E.d, v)) // 2 for v in places] for g in dplus]
    return 2 ** f2.rank(rows)


def norm_index_log2(dplus, E: QuadraticField) -> int:
    return norm_index(dplus, E).bit_length() - 1


def parse_generators(text: str) -> list[Fraction]:
    """Parse ``"g1,g2"`` into nonzero rationals."""
    gens = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        g = Fraction(tok)
        if g == 0:
            raise ValueError("generators must be nonzero")
        gens.append(g)
    return gens


def warn_empty_dplus() -> None:
    warnings.warn("empty D+ presentation over Q; t_plus taken as 0", stacklevel=3)
