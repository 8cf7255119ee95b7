"""Oracle-versus-closed-form sweeps run by ``wkplus selfcheck``.

Each suite returns ``None`` on success or a string describing the first
counterexample.  Functions under test are looked up through their modules
at call time so that tests can inject faults.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Optional

import numpy as np
from sympy import primerange

from . import cyclo, homology, kernels, padic
from .quadfield import QuadraticField, is_squarefree


def product_formula(bound: int = 50) -> Optional[str]:
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a and b and not padic.hilbert_product_check(a, b):
                return f"product formula fails for (a, b) = ({a}, {b})"
    return None


def hilbert_bruteforce(bound: int = 20, max_p: int = 13) -> Optional[str]:
    for p in primerange(2, max_p + 1):
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if not (a and b):
                    continue
                closed = padic.hilbert(a, b, p)
                brute = padic.hilbert_bruteforce(a, b, p)
                if closed != brute:
                    return f"hilbert({a}, {b}, {p}) = {closed} but search gives {brute}"
    return None


def lte(max_ell: int = 50, max_k: int = 40) -> Optional[str]:
    for ell in range(3, max_ell + 1, 2):
        for k in range(1, max_k + 1):
            direct = padic.v2(ell**k - 1)
            got = padic.v2_pow_minus_one(ell, k)
            if got != direct:
                return f"v2({ell}^{k} - 1) = {direct} but LTE gives {got}"
    return None


def herbrand(samples: int = 500, seed: int = 0) -> Optional[str]:
    fixtures = [
        homology.trivial_module([2]),
        homology.Finite2Module.from_lists([4], [[-1]]),
        homology.induced_module([2]),
    ]
    rng = np.random.default_rng(seed)
    modules = fixtures + [homology.random_module(rng) for _ in range(samples)]
    for M in modules:
        h0, h1 = homology.tate_h0(M), homology.tate_h_minus1(M)
        if h0 != h1:
            return f"Herbrand quotient {h0}/{h1} != 1 for {M}"
    return None


def local_h0(max_ell: int = 50, max_m: int = 20, max_k: int = 12) -> Optional[str]:
    for ell in primerange(3, max_ell + 1):
        for f in (1, 2):
            for m in range(-max_m, max_m + 1):
                if m == 0:
                    continue
                c = cyclo.local_h0_order(ell, f, m).bit_length() - 1
                for k in range(1, max_k + 1):
                    count = cyclo.local_h0_order_enum(ell, f, m, k)
                    if count != 2 ** min(k, c):
                        return f"local H^0 for (ell, f, m, k) = ({ell}, {f}, {m}, {k}): enum {count}, closed 2^{c}"
    return None


def norm_index_squares(bound: int = 30) -> Optional[str]:
    for d in range(-bound, bound + 1):
        if d in (0, 1) or not is_squarefree(d):
            continue
        E = QuadraticField(d)
        for g in (2, -1, 3, Fraction(5, 3)):
            base = kernels.norm_index([g], E)
            for s in (4, 9, Fraction(1, 25), 49):
                if kernels.norm_index([g * s], E) != base:
                    return f"norm index of {g} vs {g * s} differs over Q(sqrt {d})"
    return None


SUITES: dict[str, Callable[[], Optional[str]]] = {
    "product": product_formula,
    "hilbert": hilbert_bruteforce,
    "lte": lte,
    "herbrand": herbrand,
    "local-h0": local_h0,
    "norm-index": norm_index_squares,
}
