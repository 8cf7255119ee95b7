"""Tate cohomology of finite abelian 2-groups under a group of order 2.

A :class:`Finite2Module` is ``Z/2^e1 + ... + Z/2^en`` with the generator
``sigma`` of G acting by an integer matrix; coordinate ``i`` of ``sigma x``
is reduced modulo the ``i``-th cyclic order.

Two independent routes compute the Tate groups: exhaustive enumeration of
kernels and images, and a Smith-normal-form count of kernel sizes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .cyclo import as_twist, is_in_cyclo_z2_global, r_set
from .quadfield import QuadraticField

ENUMERATION_LIMIT = 2**16


@dataclass(frozen=True)
class Finite2Module:
    cyclic_orders: tuple[int, ...]
    action: tuple[tuple[int, ...], ...]
    group_order: int = 2

    def __post_init__(self):
        orders = tuple(int(q) for q in self.cyclic_orders)
        action = tuple(tuple(int(a) for a in row) for row in self.action)
        object.__setattr__(self, "cyclic_orders", orders)
        object.__setattr__(self, "action", action)
        n = len(orders)
        if any(q < 1 or q & (q - 1) for q in orders):
            raise ValueError(f"cyclic orders must be powers of 2: {orders}")
        if len(action) != n or any(len(row) != n for row in action):
            raise ValueError("action must be a square matrix matching the orders")
        if self.group_order != 2:
            raise NotImplementedError("only cyclic groups of order 2 are supported")
        # column j is the image of a generator of order q_j
        for i, j in itertools.product(range(n), repeat=2):
            if (action[i][j] * orders[j]) % orders[i]:
                raise ValueError(f"action entry ({i},{j}) is not a homomorphism")
        sq = _matmul(action, action)
        for i, j in itertools.product(range(n), repeat=2):
            if (sq[i][j] - (i == j)) % orders[i]:
                raise ValueError("sigma^2 is not the identity")

    @classmethod
    def from_lists(cls, orders: Sequence[int], action: Sequence[Sequence[int]]) -> Finite2Module:
        return cls(tuple(orders), tuple(tuple(r) for r in action))

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        out = 1
        for q in self.cyclic_orders:
            out *= q
        return out

    def sigma_minus_one(self) -> tuple[tuple[int, ...], ...]:
        return _shift(self.action, -1)

    def norm_map(self) -> tuple[tuple[int, ...], ...]:
        return _shift(self.action, 1)

    def elements(self) -> np.ndarray:
        """All elements as rows of an (|M|, n) integer array."""
        grids = np.meshgrid(*[np.arange(q, dtype=np.int64) for q in self.cyclic_orders], indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1) if grids else np.zeros((1, 0), np.int64)

    def apply(self, matrix, x: np.ndarray) -> np.ndarray:
        A = np.array(matrix, dtype=np.int64).reshape(self.rank, self.rank)
        return (x @ A.T) % np.array(self.cyclic_orders, dtype=np.int64)


def _matmul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _shift(A, c: int):
    return tuple(tuple(a + c * (i == j) for j, a in enumerate(row)) for i, row in enumerate(A))


def trivial_module(orders: Sequence[int]) -> Finite2Module:
    n = len(orders)
    return Finite2Module.from_lists(orders, [[int(i == j) for j in range(n)] for i in range(n)])


def induced_module(orders: Sequence[int]) -> Finite2Module:
    """M + M with sigma swapping the two copies."""
    n = len(orders)
    action = [[0] * (2 * n) for _ in range(2 * n)]
    for k in range(n):
        action[k][n + k] = action[n + k][k] = 1
    return Finite2Module.from_lists(list(orders) * 2, action)


def _quotient_order_enum(M: Finite2Module, kernel_of, image_of) -> int:
    xs = M.elements()
    ker = {tuple(x) for x, y in zip(xs, M.apply(kernel_of, xs)) if not y.any()}
    img = {tuple(y) for y in M.apply(image_of, xs)}
    if not img <= ker:
        raise ArithmeticError("image not contained in kernel; action is not an involution")
    return len(ker) // len(img)


def _kernel_order_snf(M: Finite2Module, A) -> int:
    # |ker A| = [Z^n : A Z^n + D Z^n], the product of the invariant factors of [A | D]
    n = M.rank
    if n == 0:
        return 1
    D = [[M.cyclic_orders[i] * (i == j) for j in range(n)] for i in range(n)]
    block = Matrix([list(A[i]) + D[i] for i in range(n)])
    snf = smith_normal_form(block, domain=ZZ)
    out = 1
    for k in range(n):
        out *= abs(int(snf[k, k]))
    return out


def _quotient_order_snf(M: Finite2Module, kernel_of, image_of) -> int:
    image_size = M.order // _kernel_order_snf(M, image_of)
    return _kernel_order_snf(M, kernel_of) // image_size


def _dispatch(M: Finite2Module, kernel_of, image_of, method: str) -> int:
    if method == "auto":
        method = "enumerate" if M.order <= ENUMERATION_LIMIT else "snf"
    if method == "enumerate":
        return _quotient_order_enum(M, kernel_of, image_of)
    if method == "snf":
        return _quotient_order_snf(M, kernel_of, image_of)
    raise ValueError(f"unknown method {method!r}")


def tate_h0(M: Finite2Module, method: str = "auto") -> int:
    """|ker(sigma - 1) / im(1 + sigma)|."""
    return _dispatch(M, M.sigma_minus_one(), M.norm_map(), method)


def tate_h_minus1(M: Finite2Module, method: str = "auto") -> int:
    """|ker(1 + sigma) / im(sigma - 1)|."""
    return _dispatch(M, M.norm_map(), M.sigma_minus_one(), method)


class TateOrders(NamedTuple):
    h0_order: int
    h_minus1_order: int


def tate_orders(M: Finite2Module, method: str = "auto") -> TateOrders:
    return TateOrders(tate_h0(M, method), tate_h_minus1(M, method))


def herbrand_check(M: Finite2Module, method: str = "auto") -> bool:
    h0, h1 = tate_orders(M, method)
    return h0 == h1


def random_module(rng: np.random.Generator, max_order: int = 2**10) -> Finite2Module:
    """A random finite 2-module with an involution, of order at most ``max_order``.

    Built as a direct sum of blocks Z/2^e with sigma = +-1 and induced blocks,
    then conjugated by a random automorphism.
    """
    budget = int(np.log2(max_order))
    orders: list[int] = []
    blocks: list[tuple[str, int]] = []
    while budget > 0:
        e = int(rng.integers(1, min(budget, 4) + 1))
        kind = rng.choice(["plus", "minus", "induced"])
        if kind == "induced" and 2 * e > budget:
            kind = "minus"
        blocks.append((str(kind), e))
        budget -= 2 * e if kind == "induced" else e
        if rng.random() < 0.35:
            break
    n = sum(2 if k == "induced" else 1 for k, _ in blocks)
    action = [[0] * n for _ in range(n)]
    pos = 0
    for kind, e in blocks:
        if kind == "induced":
            orders += [2**e, 2**e]
            action[pos][pos + 1] = action[pos + 1][pos] = 1
            pos += 2
        else:
            orders.append(2**e)
            action[pos][pos] = 1 if kind == "plus" else -1
            pos += 1
    base = Finite2Module.from_lists(orders, action)
    return _conjugate_randomly(base, rng)


def _conjugate_randomly(M: Finite2Module, rng: np.random.Generator, tries: int = 20) -> Finite2Module:
    n, q = M.rank, M.cyclic_orders
    xs = M.elements()
    for _ in range(tries):
        P = [[0] * n for _ in range(n)]
        for i, j in itertools.product(range(n), repeat=2):
            step = max(1, q[i] // q[j])  # keeps P a homomorphism
            P[i][j] = (int(rng.integers(0, q[i])) * step) % q[i] if i != j else int(rng.integers(0, q[i])) | 1
        images = M.apply(P, xs)
        lookup = {tuple(y): tuple(x) for x, y in zip(xs, images)}
        if len(lookup) != len(xs):
            continue
        # columns of P sigma P^-1 are P sigma P^-1 e_j
        cols = []
        for j in range(n):
            e = tuple(int(i == j) % q[i] for i in range(n))
            pre = np.array([lookup[e]], dtype=np.int64)
            cols.append(M.apply(P, M.apply(M.action, pre))[0])
        conj = [[int(cols[j][i]) for j in range(n)] for i in range(n)]
        return Finite2Module.from_lists(q, conj)
    return M


def local_h1_order(E: QuadraticField, i, v: int) -> int:
    """|H_1(G_v, H^2(E_w, Z_2(i)))| for odd i: 2 on R(E/Q), 1 elsewhere."""
    as_twist(i).require_odd()
    return 2 if v in r_set(E) else 1


class GlobalH1(NamedTuple):
    order: int
    codescent: bool


def global_h1_order(E: QuadraticField, i) -> GlobalH1:
    """|H_1(G, H^0(E, Q_2/Z_2(1-i))^dual)| for odd i.

    When E lies in the cyclotomic Z_2-extension the quantity is not consumed;
    the result is then ``GlobalH1(1, codescent=True)``.
    """
    as_twist(i).require_odd()
    if is_in_cyclo_z2_global(E):
        return GlobalH1(1, True)
    return GlobalH1(2, False)
