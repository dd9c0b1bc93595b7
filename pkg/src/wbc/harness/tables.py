"""Multiplication tables for small finite matrix rings.

Elements of ``M_k`` over ``GF(p)`` or ``Z_n`` are numbered ``0 .. q^(k²)-1``
by reading their row-major entries as base-``q`` digits, so ``0`` is the zero
matrix.  All products and sums are precomputed once, which turns every
ideal, annihilator and membership question into numpy indexing.  Nothing
here solves a linear system: the tables are the brute-force oracle that the
linear-algebra routes are checked against.
"""
from __future__ import annotations

import os
from functools import cached_property, lru_cache

import numpy as np

from ..errors import BudgetExceededError
from ..ring import Matrix, RingSpec

DEFAULT_BUDGET = 2 ** 24
TABLE_LIMIT = 2 ** 23  # cap on N² entries per table


def budget() -> int:
    """Candidate budget, overridable through ``WBC_BUDGET``."""
    raw = os.environ.get("WBC_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def ring_order(ring: RingSpec, k: int) -> int | None:
    return None if not ring.is_finite else ring.modulus ** (k * k)


def check_budget(ring: RingSpec, k: int) -> int:
    """Number of elements of ``M_k(ring)``; raises when enumeration is not allowed."""
    n_el = ring_order(ring, k)
    if n_el is None:
        raise BudgetExceededError(f"M_{k}({ring}) is infinite")
    if n_el > budget() or n_el * n_el > TABLE_LIMIT:
        raise BudgetExceededError(f"M_{k}({ring}) has {n_el} elements, over budget")
    return n_el


class FiniteMatrixRing:
    def __init__(self, ring: RingSpec, k: int):
        n_el = check_budget(ring, k)
        self.ring, self.k, self.N = ring, k, n_el
        q, kk = ring.modulus, k * k
        self.q = q
        self._weights = q ** np.arange(kk - 1, -1, -1, dtype=np.int64)
        idx = np.arange(n_el, dtype=np.int64)
        self.elems = (idx[:, None] // self._weights[None, :]) % q  # (N, kk)
        sq = self.elems.reshape(n_el, k, k)
        mul = np.empty((n_el, n_el), dtype=np.int32)
        add = np.empty((n_el, n_el), dtype=np.int32)
        step = max(1, 2 ** 18 // n_el)
        for lo in range(0, n_el, step):
            hi = min(n_el, lo + step)
            prod = np.einsum("aij,bjl->abil", sq[lo:hi], sq) % q
            mul[lo:hi] = prod.reshape(hi - lo, n_el, kk) @ self._weights
            s = (self.elems[lo:hi, None, :] + self.elems[None, :, :]) % q
            add[lo:hi] = s @ self._weights
        self.mul = mul
        self.add = add
        self.neg = ((q - self.elems) % q) @ self._weights
        self.zero = 0
        self.one = self.index(Matrix.identity(ring, k))
        self.all = idx

    # conversion -------------------------------------------------------------

    def index(self, m: Matrix) -> int:
        return int(np.dot(np.asarray(m.data, dtype=np.int64), self._weights))

    def matrix(self, i: int) -> Matrix:
        return Matrix._raw(self.ring, self.k, [int(v) for v in self.elems[int(i)]])

    # arithmetic on indices ------------------------------------------------------

    def prod(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.mul[out, x]
        return out

    def sub(self, x, y):
        return self.add[x, self.neg[y]]

    # ideals and annihilators as boolean rows ---------------------------------------

    @cached_property
    def right_ideals(self) -> np.ndarray:
        """``right_ideals[x, r]`` is true iff ``r ∈ xR``."""
        m = np.zeros((self.N, self.N), dtype=bool)
        m[self.all[:, None], self.mul] = True
        return m

    @cached_property
    def left_ideals(self) -> np.ndarray:
        """``left_ideals[x, r]`` is true iff ``r ∈ Rx``."""
        m = np.zeros((self.N, self.N), dtype=bool)
        m[self.all[:, None], self.mul.T] = True
        return m

    def rann(self, x) -> np.ndarray:
        """Boolean membership rows of ``rann(x)`` (one row per entry of ``x``)."""
        return self.mul[x] == 0

    def lann(self, x) -> np.ndarray:
        return (self.mul[:, x] == 0).T

    def members(self, row: np.ndarray) -> np.ndarray:
        return np.flatnonzero(row)

    @cached_property
    def inverses(self) -> np.ndarray:
        """Two-sided inverse of each element, ``-1`` for non-units."""
        inv = np.full(self.N, -1, dtype=np.int64)
        xs, ys = np.nonzero(self.mul == self.one)
        ok = self.mul[ys, xs] == self.one
        inv[xs[ok]] = ys[ok]
        return inv

    @cached_property
    def regular(self) -> np.ndarray:
        x = self.all[:, None]
        return np.any(self.mul[self.mul[x, self.all[None, :]], x] == x, axis=1)

    def inner_inverses(self, x: int) -> np.ndarray:
        return np.flatnonzero(self.mul[self.mul[x], x] == x)

    @cached_property
    def idempotents(self) -> np.ndarray:
        return np.flatnonzero(self.mul[self.all, self.all] == self.all)

    def group_inverses(self, x: int) -> np.ndarray:
        g = self.all
        xg = self.mul[x, g]
        gx = self.mul[g, x]
        ok = (self.mul[xg, x] == x) & (self.mul[gx, g] == g) & (xg == gx)
        return np.flatnonzero(ok)

    def transpose(self, x: int) -> int:
        k = self.k
        e = self.elems[int(x)].reshape(k, k).T.reshape(-1)
        return int(e @ self._weights)

    # direct sums of finite submodules --------------------------------------------

    def is_direct_sum(self, U: np.ndarray, V: np.ndarray) -> bool:
        """``M_k = U (+) V`` for boolean membership rows ``U`` and ``V``."""
        if np.count_nonzero(U & V) != 1:
            return False
        sums = self.add[np.ix_(np.flatnonzero(U), np.flatnonzero(V))]
        return np.unique(sums).size == self.N

    def meet_is_zero(self, U: np.ndarray, V: np.ndarray) -> bool:
        return np.count_nonzero(U & V) == 1


def tables(ring: RingSpec, k: int) -> FiniteMatrixRing:
    """Cached tables for ``M_k(ring)``; the budget is re-checked on every call."""
    check_budget(ring, k)
    return _tables(ring, k)


@lru_cache(maxsize=8)
def _tables(ring: RingSpec, k: int) -> FiniteMatrixRing:
    return FiniteMatrixRing(ring, k)
