"""Linear algebra over the two-element field.

Rows are lists (or tuples) of 0/1 entries; internally each row is packed
into an int bitmask.
"""

from __future__ import annotations

from typing import Sequence


def _pack(row: Sequence[int]) -> int:
    mask = 0
    for j, bit in enumerate(row):
        if bit & 1:
            mask |= 1 << j
    return mask


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of a 0/1 matrix over GF(2)."""
    pivots: dict[int, int] = {}
    r = 0
    for row in rows:
        v = _pack(row)
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                r += 1
                break
            v ^= pivots[top]
    return r


def left_kernel(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of {c : sum_k c_k * rows[k] = 0} over GF(2).

    Each basis vector is returned as a 0/1 list of length ``len(rows)``.
    """
    n = len(rows)
    # (row mask, combination mask) pairs in echelon form
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for k, row in enumerate(rows):
        v, comb = _pack(row), 1 << k
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = (v, comb)
                break
            pv, pc = pivots[top]
            v ^= pv
            comb ^= pc
        if not v:
            kernel.append([(comb >> j) & 1 for j in range(n)])
    return kernel
