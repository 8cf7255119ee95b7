"""The cyclotomic Z_2-tower of Q, the set R(E/Q), and H^0 orders of Q_2/Z_2(m).

Over Q the tower's first layer is Q(sqrt 2); locally at 2 its first layer
is Q_2(sqrt 2).  The 2-adic cyclotomic character of G_E has image the full
unit group Z_2^x unless E meets Q(mu_8), i.e. unless d is -1, 2 or -2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .padic import square_class_at_2, v2, v2_pow_minus_one
from .quadfield import QQ, QuadraticField, RationalField


class TwoAdicLayerClass(enum.Enum):
    TRIVIAL_COMPLETION = "trivial"  # E_w = Q_2
    TOWER_LAYER = "tower"  # E_w = Q_2(sqrt 2)
    OUTSIDE_UNRAMIFIED = "outside-unramified"
    OUTSIDE_RAMIFIED = "outside-ramified"

    @property
    def outside_tower(self) -> bool:
        return self in (TwoAdicLayerClass.OUTSIDE_UNRAMIFIED, TwoAdicLayerClass.OUTSIDE_RAMIFIED)


@dataclass(frozen=True)
class TwistIndex:
    i: int

    def __post_init__(self):
        if isinstance(self.i, bool) or not isinstance(self.i, int) or self.i < 2:
            raise ValueError(f"twist index must be an integer >= 2, got {self.i!r}")

    @property
    def is_odd(self) -> bool:
        return self.i % 2 == 1

    @property
    def m(self) -> int:
        """The dual twist 1 - i."""
        return 1 - self.i

    def require_odd(self) -> TwistIndex:
        if not self.is_odd:
            raise ValueError(f"only odd twists are supported here, got i={self.i}")
        return self


def as_twist(i) -> TwistIndex:
    return i if isinstance(i, TwistIndex) else TwistIndex(i)


def is_in_cyclo_z2_global(E: QuadraticField) -> bool:
    return E.d == 2


def two_adic_layer_class(E: QuadraticField) -> TwoAdicLayerClass:
    rep = square_class_at_2(E.d).representative
    if rep == 1:
        return TwoAdicLayerClass.TRIVIAL_COMPLETION
    if rep == 2:
        return TwoAdicLayerClass.TOWER_LAYER
    if rep == 5:
        return TwoAdicLayerClass.OUTSIDE_UNRAMIFIED
    return TwoAdicLayerClass.OUTSIDE_RAMIFIED


def r_set(E: QuadraticField) -> list[int]:
    """Tamely ramified primes, plus 2 when E_w escapes the local Z_2-tower."""
    primes = list(E.odd_ramified_primes)
    if two_adic_layer_class(E).outside_tower:
        primes.insert(0, 2)
    return primes


def local_h0_order(ell: int, f: int, m: int) -> int:
    """|H^0(K, Q_2/Z_2(m))| for a local field K with residue field of size ell^f."""
    if f not in (1, 2):
        raise ValueError(f"residue degree must be 1 or 2, got {f}")
    if m == 0:
        raise ValueError("H^0(K, Q_2/Z_2) is infinite")
    return 2 ** v2_pow_minus_one(ell, f * abs(m))


def local_h0_order_enum(ell: int, f: int, m: int, k: int) -> int:
    """Count x in (1/2^k)Z/Z fixed by Frobenius acting through u -> u^m.

    The decomposition group's image is topologically generated by ell^f, so
    its fixed points are those of the generator.
    """
    mod = 2**k
    um = pow(pow(ell, f, mod), m, mod) if mod > 1 else 0
    xs = np.arange(mod, dtype=np.int64)
    return int(np.count_nonzero(((um - 1) * xs) % mod == 0))


def character_image_mod8(E) -> frozenset[int]:
    """Residues mod 8 of the 2-adic cyclotomic character's image on G_E."""
    d = 1 if isinstance(E, RationalField) else E.d
    if d == -1:
        return frozenset({1, 5})
    if d == 2:
        return frozenset({1, 7})
    if d == -2:
        return frozenset({1, 3})
    return frozenset({1, 3, 5, 7})


def _level_order(image8: frozenset[int], m: int, k: int) -> int:
    mod = 2**k
    c = k
    for u in range(1, mod, 2):
        if u % 8 not in image8:
            continue
        r = pow(u, m, mod) - 1
        c = min(c, v2(r) if r else k)
    return c


def global_h0_order(E=QQ, m: int = 1) -> int:
    """|H^0(E, Q_2/Z_2(m))|, by enumerating the character image modulo 2^k."""
    if m == 0:
        raise ValueError("H^0(E, Q_2/Z_2) is infinite")
    image8 = character_image_mod8(E)
    m = abs(m)
    kmax = v2(m) + 6
    levels = [_level_order(image8, m, k) for k in range(3, kmax + 1)]
    c = levels[-1]
    if levels[-2] != c or c >= kmax - 1:
        raise ArithmeticError(f"H^0 order did not stabilise by level 2^{kmax}")
    return 2**c
