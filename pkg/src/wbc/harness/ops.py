"""Two interchangeable implementations of the ring predicates theorems talk about.

:class:`TableOps` works on element indices of a :class:`FiniteMatrixRing`
and is vectorised: any argument may be a numpy array of indices (typically
*every* element as the candidate ``y``), and predicates then return boolean
arrays.  It decides memberships by enumeration.

:class:`LibOps` works on :class:`~wbc.ring.Matrix` values and decides the
same predicates through the linear-algebra layer, so it also runs over Q.

Suite conditions are written once against this interface and evaluated by
both; on finite rings the two answers are compared.
"""
from __future__ import annotations

import numpy as np

from .. import linalg as la
from ..group import is_group_invertible
from ..ring import Matrix, inverse, is_invertible
from .tables import FiniteMatrixRing


class TableOps:
    vectorised = True

    def __init__(self, T: FiniteMatrixRing):
        self.T = T
        self.one, self.zero = T.one, T.zero
        self._mulT = np.ascontiguousarray(T.mul.T)
        sq = T.mul[T.all, T.all]
        self._group = T.right_ideals[sq, T.all] & T.left_ideals[sq, T.all]
        self._rann = T.mul == 0
        self._lann = self._mulT == 0

    def lift(self, m: Matrix) -> int:
        return self.T.index(m)

    def lower(self, x) -> Matrix:
        return self.T.matrix(int(x))

    # arithmetic -------------------------------------------------------------
    def mul(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = self.T.mul[out, x]
        return out

    def add(self, x, y):
        return self.T.add[x, y]

    def sub(self, x, y):
        return self.T.add[x, self.T.neg[y]]

    def eq(self, x, y):
        return np.asarray(x) == np.asarray(y)

    # ideals and annihilators -------------------------------------------------
    def right_in(self, x, t):
        """``t ∈ xR``."""
        return self.T.right_ideals[x, t]

    def left_in(self, x, t):
        """``t ∈ Rx``."""
        return self.T.left_ideals[x, t]

    def two_sided_in(self, l, t, r):
        """``t ∈ lRr``."""
        lz = self.T.mul[np.asarray(l)]
        return np.any(self.T.mul[lz, np.asarray(r)[..., None]] == np.asarray(t)[..., None], axis=-1)

    def same_right(self, x, y):
        return np.all(self.T.right_ideals[x] == self.T.right_ideals[y], axis=-1)

    def same_left(self, x, y):
        return np.all(self.T.left_ideals[x] == self.T.left_ideals[y], axis=-1)

    def rann_sub(self, x, y):
        return np.all(~self._rann[x] | self._rann[y], axis=-1)

    def lann_sub(self, x, y):
        return np.all(~self._lann[x] | self._lann[y], axis=-1)

    def rann_eq(self, x, y):
        return np.all(self._rann[x] == self._rann[y], axis=-1)

    def lann_eq(self, x, y):
        return np.all(self._lann[x] == self._lann[y], axis=-1)

    # element properties -------------------------------------------------------
    def regular(self, x):
        return self.T.regular[x]

    def group_invertible(self, x):
        return self._group[x]

    def invertible(self, x):
        return self.T.inverses[x] >= 0

    def inverse(self, x):
        return self.T.inverses[x]

    def transpose(self, x):
        return self.T.transpose(x)

    # decompositions (scalar arguments) --------------------------------------------
    def rann_direct(self, x, c) -> bool:
        """``R = xR ⊕ rann(c)``."""
        return self.T.is_direct_sum(self.T.right_ideals[x], self._rann[c])

    def lann_direct(self, x, b) -> bool:
        """``R = Rx ⊕ lann(b)``."""
        return self.T.is_direct_sum(self.T.left_ideals[x], self._lann[b])

    def rann_meets_right(self, x, b) -> bool:
        """``rann(x) ∩ bR = 0``."""
        return self.T.meet_is_zero(self._rann[x], self.T.right_ideals[b])

    def lann_meets_left(self, x, c) -> bool:
        """``lann(x) ∩ Rc = 0``."""
        return self.T.meet_is_zero(self._lann[x], self.T.left_ideals[c])

    def all(self, x) -> bool:
        return bool(np.all(x))

    def any(self, x) -> bool:
        return bool(np.any(x))


class LibOps:
    vectorised = False

    def __init__(self, ring, k: int):
        self.ring, self.k = ring, k
        self.one = Matrix.identity(ring, k)
        self.zero = Matrix.zero(ring, k)

    def lift(self, m: Matrix) -> Matrix:
        return m

    def lower(self, x: Matrix) -> Matrix:
        return x

    def mul(self, *xs):
        out = xs[0]
        for x in xs[1:]:
            out = out @ x
        return out

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def eq(self, x, y):
        return x == y

    def right_in(self, x, t):
        return la.solve_right(x, t) is not None

    def left_in(self, x, t):
        return la.solve_left(x, t) is not None

    def two_sided_in(self, l, t, r):
        return la.in_two_sided(l, t, r) is not None

    def same_right(self, x, y):
        return self.right_in(x, y) and self.right_in(y, x)

    def same_left(self, x, y):
        return self.left_in(x, y) and self.left_in(y, x)

    def rann_sub(self, x, y):
        return la.ann_contained(x, y, "right")

    def lann_sub(self, x, y):
        return la.ann_contained(x, y, "left")

    def rann_eq(self, x, y):
        return la.ann_equal(x, y, "right")

    def lann_eq(self, x, y):
        return la.ann_equal(x, y, "left")

    def regular(self, x):
        return la.is_regular(x)

    def group_invertible(self, x):
        return is_group_invertible(x)

    def invertible(self, x):
        return is_invertible(x)

    def inverse(self, x):
        return inverse(x)

    def transpose(self, x):
        return x.T

    def _direct(self, U, V) -> bool:
        if self.ring.is_field:
            return la.direct_sum_check(U, V)
        return la.intersection_is_zero(U, V) and la.sum_is_everything(U, V)

    def rann_direct(self, x, c) -> bool:
        return self._direct(la.right_ideal(x), la.rann(c))

    def lann_direct(self, x, b) -> bool:
        return self._direct(la.left_ideal(x), la.lann(b))

    def rann_meets_right(self, x, b) -> bool:
        return la.intersection_is_zero(la.rann(x), la.right_ideal(b))

    def lann_meets_left(self, x, c) -> bool:
        return la.intersection_is_zero(la.lann(x), la.left_ideal(c))

    def all(self, x) -> bool:
        return bool(x)

    def any(self, x) -> bool:
        return bool(x)
