"""Group inverses and idempotent predicates.

``a`` is group invertible iff ``a ∈ a²R ∩ Ra²``.  Given witnesses
``a = a² x = y a²`` the group inverse is ``y a x``; it is always checked
against ``a g a = a``, ``g a g = g`` and ``a g = g a`` before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInconsistencyError, NonFieldError
from .linalg import Certificate, rank, rref, solve_left, solve_right
from .ring import Matrix, inverse, is_invertible


@dataclass(frozen=True)
class GroupInverseResult:
    value: Matrix
    witnesses: Certificate


def _witnesses(a: Matrix):
    a2 = a @ a
    right = solve_right(a2, a)
    if right is None:
        return None
    left = solve_left(a2, a)
    if left is None:
        return None
    return right["x"], left["x"]


def is_group_invertible(a: Matrix) -> bool:
    ok = _witnesses(a) is not None
    if a.ring.is_field and ok != (rank(a) == rank(a @ a)):
        raise InternalInconsistencyError(
            f"membership test and rank criterion disagree on {a!r}")
    return ok


def group_equations_hold(a: Matrix, g: Matrix) -> bool:
    ag = a @ g
    return ag @ a == a and g @ a @ g == g and ag == g @ a


def group_inverse(a: Matrix) -> GroupInverseResult | None:
    w = _witnesses(a)
    if w is None:
        return None
    x, y = w
    g = y @ a @ x
    if not group_equations_hold(a, g):
        raise InternalInconsistencyError(f"y a x is not a group inverse of {a!r}")
    cert = Certificate("group-inverse", {"a": a, "x": x, "y": y, "g": g},
                       ((("a",), ("a", "a", "x")), (("a",), ("y", "a", "a")),
                        (("a", "g", "a"), ("a",)), (("g", "a", "g"), ("g",)),
                        (("a", "g"), ("g", "a"))))
    return GroupInverseResult(g, cert)


def group_inverse_rank_factorization(a: Matrix) -> Matrix | None:
    """Field-only route ``a = F G``, ``a# = F (G F)^{-2} G``.

    Returns ``None`` when ``G F`` is singular, which happens exactly when
    ``a`` has no group inverse.
    """
    ring, k = a.ring, a.k
    if not ring.is_field:
        raise NonFieldError("rank factorisation needs a field")
    R, piv = rref(ring, a.rows)
    r = len(piv)
    if r == 0:
        return Matrix.zero(ring, k)
    # F: pivot columns of a (k x r), G: nonzero rows of rref (r x k)
    F = [[a[i, p] for p in piv] for i in range(k)]
    G = R[:r]
    GF = [[sum(G[i][t] * F[t][j] for t in range(k)) for j in range(r)] for i in range(r)]
    GFm = Matrix(ring, GF)
    if not is_invertible(GFm):
        return None
    inv2 = (inverse(GFm) @ inverse(GFm)).rows
    left = [[sum(F[i][t] * inv2[t][j] for t in range(r)) for j in range(r)] for i in range(k)]
    out = [[sum(left[i][t] * G[t][j] for t in range(r)) for j in range(k)] for i in range(k)]
    return Matrix(ring, out)


def is_idempotent(a: Matrix) -> bool:
    return a @ a == a


def is_symmetric_idempotent(a: Matrix) -> bool:
    return is_idempotent(a) and a.T == a
