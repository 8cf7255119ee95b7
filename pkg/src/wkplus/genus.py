"""2-ranks of positive étale wild kernels of quadratic fields and genus formulas.

For E = Q(sqrt d) not contained in the cyclotomic Z_2-extension of Q and odd
``i >= 3``::

    rk_2 WK+_{2i-2}(E) = r - 1 - t_plus

where ``r = |R(E/Q)|`` and ``t_plus`` is the F_2-dimension of the image of
D_Q^{+(i)} in the local square-class groups at the odd primes of R.  The
only quadratic field inside the tower is Q(sqrt 2), where codescent from
WK+(Q) = 0 gives rank 0.

All group orders are carried as base-2 logarithms.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import f2, padic
from .cyclo import as_twist, is_in_cyclo_z2_global, r_set
from .homology import global_h1_order, local_h1_order
from .kernels import d_plus_basis, default_presentation, delta_i, norm_index_log2, warn_empty_dplus
from .quadfield import QuadraticField


class InconsistentOrders(ValueError):
    """Supplied group orders cannot come from finite groups."""


def default_dplus() -> list[Fraction]:
    return d_plus_basis(default_presentation())


def _field(E) -> QuadraticField:
    return E if isinstance(E, QuadraticField) else QuadraticField.from_radicand(E)


def t_plus(E, i, dplus: Optional[Sequence] = None) -> int:
    """Rank of D+ -> sum over odd l in R of Q_l^x / (Q_l^x)^2."""
    as_twist(i).require_odd()
    E = _field(E)
    dplus = default_dplus() if dplus is None else list(dplus)
    if not dplus:
        warn_empty_dplus()
        return 0
    odd_r = [p for p in r_set(E) if p != 2]
    rows = []
    for g in dplus:
        row: list[int] = []
        for p in odd_r:
            row.extend(padic.odd_local_class(g, p).bits())
        rows.append(row)
    return f2.rank(rows)


def vanishing_criterion(E) -> Optional[bool]:
    """Whether E is unramified outside {2, inf, l} with l = +-3 mod 8.

    Returns ``None`` when E has no odd ramified prime, a case the criterion
    does not clearly cover.
    """
    odd = _field(E).odd_ramified_primes
    if not odd:
        return None
    return len(odd) == 1 and odd[0] % 8 in (3, 5)


@dataclass(frozen=True)
class GenusReport:
    d: int
    i: int
    discriminant: int
    ramified_primes: list
    R: list
    r: int
    t_plus: int
    norm_index_log2: int
    x_term_log2_min: int
    x_term_log2_max: int
    rank: int
    codescent: bool
    vanishing_criterion: bool
    discrepancy: bool

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> GenusReport:
        names = [f.name for f in fields(cls)]
        missing = set(names) - set(data)
        if missing:
            raise ValueError(f"missing report keys: {sorted(missing)}")
        return cls(**{k: data[k] for k in names})

    @classmethod
    def from_json(cls, text: str) -> GenusReport:
        return cls.from_dict(json.loads(text))

    @property
    def criterion_ambiguous(self) -> bool:
        return not [p for p in self.ramified_primes if p != 2]


def rank_quadratic(E, i, dplus: Optional[Sequence] = None) -> GenusReport:
    """Full 2-rank report for WK+_{2i-2} of a quadratic field."""
    twist = as_twist(i).require_odd()
    E = _field(E)
    dplus = default_dplus() if dplus is None else list(dplus)
    R = r_set(E)
    r = len(R)
    t = t_plus(E, twist, dplus)
    codescent = is_in_cyclo_z2_global(E)
    raw = 0 if codescent else r - 1 - t
    rank = max(raw, 0)
    criterion = vanishing_criterion(E)
    if criterion is None:
        criterion = rank == 0
    return GenusReport(
        d=E.d,
        i=twist.i,
        discriminant=E.discriminant,
        ramified_primes=E.ramified_primes,
        R=R,
        r=r,
        t_plus=t,
        norm_index_log2=norm_index_log2(dplus, E),
        x_term_log2_min=0,
        x_term_log2_max=0 if R else 1,
        rank=rank,
        codescent=codescent,
        vanishing_criterion=criterion,
        discrepancy=raw < 0 or ((rank == 0) != criterion),
    )


def genus_ratio_quadratic(E, i, dplus: Optional[Sequence] = None) -> int:
    """log2 of |(WK+ E)^G| / |WK+ Q| from the quadratic genus formula."""
    twist = as_twist(i).require_odd()
    E = _field(E)
    if is_in_cyclo_z2_global(E):
        raise ValueError("E lies in the cyclotomic Z_2-extension; use rank_quadratic")
    dplus = default_dplus() if dplus is None else list(dplus)
    R = r_set(E)
    if not R:
        raise ValueError("R(E/Q) is empty; the X-term is only bounded by 0..1")
    local = [local_h1_order(E, twist, p).bit_length() - 1 for p in R]
    glob = global_h1_order(E, twist).order.bit_length() - 1
    return genus_ratio_general(0, local, glob, norm_index_log2(dplus, E))


def genus_ratio_general(
    x_log2: int, local_h1_log2: Iterable[int], global_h1_log2: int, norm_index_log2: int
) -> int:
    """Order bookkeeping for the general genus formula; all inputs are log2 orders."""
    local = list(local_h1_log2)
    if min([x_log2, global_h1_log2, norm_index_log2, *local]) < 0:
        raise InconsistentOrders("log2 orders must be nonnegative")
    out = x_log2 + sum(local) - global_h1_log2 - norm_index_log2
    if out < 0:
        raise InconsistentOrders(f"genus ratio exponent {out} is negative")
    return out


def exact_sequence_order_check(orders: Sequence[int]) -> bool:
    """True iff the alternating product of the orders equals 1."""
    if any(int(q) != q or q <= 0 for q in orders):
        raise ValueError("orders must be positive integers")
    acc = Fraction(1)
    for k, q in enumerate(orders):
        acc = acc * q if k % 2 == 0 else acc / q
    return acc == 1


def wk_plus_sequence(delta: int, wk_order: int) -> list[int]:
    """Orders along 0 -> (Z/2)^delta -> WK+ -> WK -> 0."""
    return [1, 2**delta, 2**delta * wk_order, wk_order, 1]


def report_sequence(report: GenusReport) -> list[int]:
    """The base-field sequence behind a report: delta_i(Q) and WK+(Q) = 0."""
    return wk_plus_sequence(delta_i(default_presentation()), 1)


def narrow_2rank_oracle(E) -> int:
    """2-rank of the narrow class group of E by classical genus theory."""
    return len(_field(E).ramified_primes) - 1
