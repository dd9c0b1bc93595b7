"""Brute-force definitional oracle.

Each ``*_mask`` function evaluates the raw definition of one inverse on
*every* element of a finite matrix ring at once and returns a boolean
array indexed by element number.  Ideal memberships such as ``y ∈ bRwy``
are decided by enumerating ``bR`` from the multiplication table, never by
solving equations.
"""
from __future__ import annotations

import numpy as np

from ..ring import Matrix
from .tables import FiniteMatrixRing, tables


def bc_mask(T: FiniteMatrixRing, a, b, c, v, w) -> np.ndarray:
    """``y ∈ bRwy ∩ yvRc``, ``yvawb = b``, ``cvawy = c``."""
    Y = T.all
    vaw = T.prod(v, a, w)
    mask = (T.mul[T.mul[Y, vaw], b] == b) & (T.mul[T.mul[c, vaw], Y] == c)
    if not mask.any():
        return mask
    bR = T.members(T.right_ideals[b])
    Rc = T.members(T.left_ideals[c])
    for y in np.flatnonzero(mask):
        wy = T.mul[w, y]
        yv = T.mul[y, v]
        mask[y] = bool(np.any(T.mul[bR, wy] == y)) and bool(np.any(T.mul[yv, Rc] == y))
    return mask


def hybrid_mask(T: FiniteMatrixRing, a, b, c, v, w) -> np.ndarray:
    """``yvawy = y``, ``yvR = bR``, ``rann(wy) = rann(c)``."""
    Y = T.all
    vaw = T.prod(v, a, w)
    fix = T.mul[T.mul[Y, vaw], Y] == Y
    same_ideal = (T.right_ideals[T.mul[Y, v]] == T.right_ideals[b]).all(axis=1)
    same_rann = (T.rann(T.mul[w, Y]) == T.rann(c)).all(axis=1)
    return fix & same_ideal & same_rann


def annihilator_mask(T: FiniteMatrixRing, a, b, c, v, w) -> np.ndarray:
    """``yvawy = y``, ``lann(yv) = lann(b)``, ``rann(wy) = rann(c)``."""
    Y = T.all
    vaw = T.prod(v, a, w)
    fix = T.mul[T.mul[Y, vaw], Y] == Y
    same_lann = (T.lann(T.mul[Y, v]) == T.lann(b)).all(axis=1)
    same_rann = (T.rann(T.mul[w, Y]) == T.rann(c)).all(axis=1)
    return fix & same_lann & same_rann


def bott_duffin_mask(T: FiniteMatrixRing, a, v, w, e, f) -> np.ndarray:
    """``z = ewz = zvf``, ``zvawe = e``, ``fvawz = f``."""
    Z = T.all
    vaw = T.prod(v, a, w)
    return ((T.mul[T.mul[e, w], Z] == Z) & (T.mul[Z, T.mul[v, f]] == Z)
            & (T.mul[Z, T.mul[vaw, e]] == e) & (T.mul[T.mul[f, vaw], Z] == f))


def along_d_mask(T: FiniteMatrixRing, a, d, v, w) -> np.ndarray:
    """``yvawd = d = dvawy``, ``Rwy ⊆ Rd``, ``yvR ⊆ dR``."""
    Y = T.all
    vaw = T.prod(v, a, w)
    return ((T.mul[Y, T.mul[vaw, d]] == d) & (T.mul[T.mul[d, vaw], Y] == d)
            & T.left_ideals[d, T.mul[w, Y]] & T.right_ideals[d, T.mul[Y, v]])


def _indices(T, *ms: Matrix):
    return [T.index(m) for m in ms]


def oracle_mask(kind: str, ctx) -> tuple[FiniteMatrixRing, np.ndarray]:
    T = tables(ctx.ring, ctx.k)
    if kind == "bott-duffin":
        return T, bott_duffin_mask(T, *_indices(T, ctx.a, ctx.v, ctx.w, ctx.e, ctx.f))
    a, b, c, v, w = _indices(T, ctx.a, ctx.b, ctx.c, ctx.v, ctx.w)
    if kind == "bc":
        return T, bc_mask(T, a, b, c, v, w)
    if kind == "hybrid":
        return T, hybrid_mask(T, a, b, c, v, w)
    if kind == "annihilator":
        return T, annihilator_mask(T, a, b, c, v, w)
    if kind == "along-d":
        if b != c:
            raise ValueError("along-d contexts need b = c = d")
        return T, along_d_mask(T, a, b, v, w)
    raise ValueError(f"unknown inverse kind {kind!r}")


def oracle_search(kind: str, ctx) -> set[Matrix]:
    """Every ``y`` in the finite ring ``M_k`` that satisfies the raw definition of ``kind``.

    ``ctx`` is a :class:`~wbc.weighted.WeightedContext` (for ``along-d`` its
    ``b`` and ``c`` both hold ``d``) or a
    :class:`~wbc.weighted.BottDuffinContext`.  Raises
    :class:`~wbc.errors.BudgetExceededError` for infinite or oversized rings.
    """
    T, mask = oracle_mask(kind, ctx)
    return {T.matrix(i) for i in np.flatnonzero(mask)}
