"""Linear algebra behind every existence test.

Every question the package asks (is ``c`` in ``aR``?  what is ``rann(a)``?
is ``a`` regular?) is a linear system in one or more unknown ``k x k``
matrices.  Unknowns are vectorised row-major, so the map ``X -> L X R``
has coefficient ``L[i,s] * R[t,j]`` in row ``(i,j)`` and column ``(s,t)``.

Over a field the systems are solved by Gauss-Jordan elimination (first
nonzero pivot in column order).  Over ``Z_n`` they are diagonalised by
unimodular row and column operations on the integer lift, reduced mod ``n``
after every step, and read off one diagonal congruence at a time.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import NonFieldError, RingMismatchError
from .ring import Matrix, RingSpec

# --------------------------------------------------------------------------
# scalar kernels


def _reducer(ring: RingSpec):
    if ring.kind == "q":
        return lambda v: v
    n = ring.modulus
    return lambda v: v % n


def rref(ring: RingSpec, rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over a field, and the pivot columns."""
    if not ring.is_field:
        raise NonFieldError(f"row reduction needs a field, got {ring}")
    red = _reducer(ring)
    conv = Fraction if ring.kind == "q" else red
    m = [[conv(v) for v in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        s = ring.inv(m[r][col])
        m[r] = [red(v * s) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [red(v - f * w) for v, w in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def diagonalize_mod(rows: Sequence[Sequence[int]], n: int):
    """Return ``(U, D, V)`` with ``U A V = D`` (mod n), ``U, V`` invertible mod n.

    ``D`` is diagonal.  ``A`` is ``m x c`` given as a list of rows.
    """
    m = len(rows)
    c = len(rows[0]) if m else 0
    D = [[v % n for v in r] for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_combo(M, i, j, s, t, u, v):
        # (row_i, row_j) <- (s row_i + t row_j, u row_i + v row_j)
        ri, rj = M[i], M[j]
        M[i] = [(s * x + t * y) % n for x, y in zip(ri, rj)]
        M[j] = [(u * x + v * y) % n for x, y in zip(ri, rj)]

    def col_combo(M, i, j, s, t, u, v):
        # (col_i, col_j) <- (s col_i + t col_j, u col_i + v col_j)
        for r in M:
            x, y = r[i], r[j]
            r[i] = (s * x + t * y) % n
            r[j] = (u * x + v * y) % n

    for t in range(min(m, c)):
        piv = None
        best = n
        for i in range(t, m):
            for j in range(t, c):
                if D[i][j] and D[i][j] < best:
                    best, piv = D[i][j], (i, j)
        if piv is None:
            break
        i, j = piv
        D[t], D[i] = D[i], D[t]
        U[t], U[i] = U[i], U[t]
        for M in (D, V):
            for r in M:
                r[t], r[j] = r[j], r[t]
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                b = D[i][t]
                if not b:
                    continue
                a = D[t][t]
                if b % a == 0:
                    q = b // a
                    for M in (D, U):
                        M[i] = [(y - q * x) % n for x, y in zip(M[t], M[i])]
                else:
                    g, s, u = _xgcd(a, b)
                    for M in (D, U):
                        row_combo(M, t, i, s, u, -b // g, a // g)
                    dirty = True
            for j in range(t + 1, c):
                b = D[t][j]
                if not b:
                    continue
                a = D[t][t]
                if b % a == 0:
                    q = b // a
                    for M in (D, V):
                        for r in M:
                            r[j] = (r[j] - q * r[t]) % n
                else:
                    g, s, u = _xgcd(a, b)
                    for M in (D, V):
                        col_combo(M, t, j, s, u, -b // g, a // g)
                    dirty = True
    return U, D, V


def _matvec(M, x, red):
    return [red(sum(a * b for a, b in zip(r, x))) for r in M]


def solve_vector(ring: RingSpec, A: Sequence[Sequence], b: Sequence) -> list | None:
    """One solution ``x`` of ``A x = b`` or ``None``."""
    ncols = len(A[0]) if A else 0
    if ring.is_field:
        aug = [list(r) + [v] for r, v in zip(A, b)]
        R, piv = rref(ring, aug)
        if ncols in piv:
            return None
        x = [ring.canon(0)] * ncols
        for r, p in zip(R, piv):
            x[p] = r[-1]
        return x
    n = ring.modulus
    U, D, V = diagonalize_mod(A, n)
    red = _reducer(ring)
    cvec = _matvec(U, b, red)
    y = [0] * ncols
    for i, ci in enumerate(cvec):
        di = D[i][i] if i < ncols else 0
        g = gcd(di, n)
        if ci % g:
            return None
        if di:
            ng = n // g
            y[i] = (ci // g) * pow(di // g, -1, ng) % ng if ng > 1 else 0
    return _matvec(V, y, red)


def kernel_vectors(ring: RingSpec, A: Sequence[Sequence], ncols: int | None = None
                   ) -> tuple[list[list], tuple[int, ...]]:
    """Generators of ``{x : A x = 0}`` and, over ``Z_n``, their invariant factors.

    Over a field the generators form the standard basis read off the RREF and
    the invariant-factor tuple is empty.
    """
    if ncols is None:
        ncols = len(A[0])
    zero = ring.canon(0)
    if not A:
        return [[ring.canon(int(i == j)) for j in range(ncols)] for i in range(ncols)], ()
    if ring.is_field:
        R, piv = rref(ring, A)
        basis = []
        for f in (j for j in range(ncols) if j not in piv):
            v = [zero] * ncols
            v[f] = ring.canon(1)
            for r, p in zip(R, piv):
                v[p] = _reducer(ring)(-r[f])
            basis.append(v)
        return basis, ()
    n = ring.modulus
    U, D, V = diagonalize_mod(A, n)
    gens, factors = [], []
    for j in range(ncols):
        dj = D[j][j] if j < len(D) else 0
        g = gcd(dj, n)
        step = n // g
        if step == n:
            continue
        v = [V[i][j] * step % n for i in range(ncols)]
        if any(v):
            gens.append(v)
            factors.append(n // step)
    return gens, tuple(factors)


# --------------------------------------------------------------------------
# matrix equations


def _coeff_block(L: Matrix | None, R: Matrix | None, k: int, ring: RingSpec):
    """Coefficient matrix of ``X -> L X R`` (``None`` means the identity)."""
    one, zero = ring.canon(1), ring.canon(0)
    Ld = L.data if L is not None else [one if i % (k + 1) == 0 else zero for i in range(k * k)]
    Rd = R.data if R is not None else [one if i % (k + 1) == 0 else zero for i in range(k * k)]
    return [[Ld[i * k + s] * Rd[t * k + j] for s in range(k) for t in range(k)]
            for i in range(k) for j in range(k)]


Term = tuple  # (unknown index, left factor or None, right factor or None[, scalar])


def _assemble(ring: RingSpec, k: int, nunk: int, equations):
    red = _reducer(ring)
    kk = k * k
    A, b = [], []
    for terms, rhs in equations:
        block = [[ring.canon(0)] * (nunk * kk) for _ in range(kk)]
        for term in terms:
            j, L, R = term[:3]
            sgn = term[3] if len(term) > 3 else 1
            C = _coeff_block(L, R, k, ring)
            for r in range(kk):
                row = block[r]
                for s in range(kk):
                    if C[r][s]:
                        row[j * kk + s] = red(row[j * kk + s] + sgn * C[r][s])
        A.extend(block)
        b.extend(rhs.data if rhs is not None else [ring.canon(0)] * kk)
    return A, b


def _split(ring: RingSpec, k: int, nunk: int, vec) -> tuple[Matrix, ...]:
    kk = k * k
    return tuple(Matrix._raw(ring, k, [ring.canon(v) for v in vec[j * kk:(j + 1) * kk]])
                 for j in range(nunk))


def solve_equations(ring: RingSpec, k: int, nunk: int, equations) -> tuple[Matrix, ...] | None:
    """Solve a system of matrix equations linear in ``nunk`` unknowns.

    ``equations`` is a list of ``(terms, rhs)``; each term is
    ``(j, L, R)`` or ``(j, L, R, sign)`` standing for ``sign * L X_j R``, and
    ``rhs`` is a :class:`Matrix` or ``None`` for zero.
    """
    A, b = _assemble(ring, k, nunk, equations)
    x = solve_vector(ring, A, b)
    return None if x is None else _split(ring, k, nunk, x)


def equations_kernel(ring: RingSpec, k: int, nunk: int, equations
                     ) -> tuple[list[tuple[Matrix, ...]], tuple[int, ...]]:
    """Generators of the homogeneous solution space of a matrix system."""
    A, _ = _assemble(ring, k, nunk, equations)
    gens, factors = kernel_vectors(ring, A, nunk * k * k)
    return [_split(ring, k, nunk, g) for g in gens], factors


def rank(a: Matrix) -> int:
    if not a.ring.is_field:
        raise NonFieldError("rank is only defined here over fields")
    return len(rref(a.ring, a.rows)[1])


# --------------------------------------------------------------------------
# subspaces / submodules of M_k


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace (over ``Z_n``: a submodule) of ``M_k`` seen as ``k^2``-vectors.

    Over a field ``vectors`` is the canonical row-reduced basis, so two
    subspaces are equal iff their bases are equal.  Over ``Z_n`` it is a
    generating set and ``invariant_factors`` records the cyclic orders
    ``n / gcd(d_i, n)`` of the diagonalised generators.
    """

    ring: RingSpec
    k: int
    side: str
    vectors: tuple[Matrix, ...]
    invariant_factors: tuple[int, ...] = field(default=())

    @property
    def dim(self) -> int:
        if not self.ring.is_field:
            raise NonFieldError("dimension needs field coefficients")
        return len(self.vectors)

    def _matrix(self):
        # columns are the generators
        return [[g.data[i] for g in self.vectors] for i in range(self.k * self.k)]

    def contains(self, x: Matrix) -> bool:
        if x.is_zero():
            return True
        if not self.vectors:
            return False
        return solve_vector(self.ring, self._matrix(), list(x.data)) is not None

    def issubset(self, other: "SubspaceBasis") -> bool:
        return all(other.contains(v) for v in self.vectors)

    def same_span(self, other: "SubspaceBasis") -> bool:
        if self.ring.is_field:
            return self.vectors == other.vectors
        return self.issubset(other) and other.issubset(self)

    def elements(self) -> set[Matrix]:
        """All elements of the span (finite rings only)."""
        out = {Matrix.zero(self.ring, self.k)}
        for g in self.vectors:
            multiples = [g.scale(s) for s in self.ring.elements()]
            out = {x + m for x in out for m in multiples}
        return out

    def to_json(self) -> dict:
        obj = {"ring": self.ring.to_json(), "k": self.k, "side": self.side,
               "vectors": [v.entries_json() for v in self.vectors]}
        if self.invariant_factors:
            obj["invariant_factors"] = list(self.invariant_factors)
        return obj


def span(ring: RingSpec, k: int, generators: Iterable[Matrix], side: str = "span") -> SubspaceBasis:
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return SubspaceBasis(ring, k, side, ())
    if ring.is_field:
        R, piv = rref(ring, [list(g.data) for g in gens])
        vecs = tuple(Matrix._raw(ring, k, r) for r in R[:len(piv)])
        return SubspaceBasis(ring, k, side, vecs)
    n = ring.modulus
    cols = [[g.data[i] for g in gens] for i in range(k * k)]
    U, D, V = diagonalize_mod(cols, n)
    # image of A is generated by the columns d_j * U^{-1} e_j
    Uinv = [list(r) for r in _zn_inverse(U, n)]
    vecs, factors = [], []
    for j in range(min(len(D), len(gens))):
        dj = D[j][j]
        if dj % n == 0:
            continue
        vecs.append(Matrix._raw(ring, k, [Uinv[i][j] * dj % n for i in range(k * k)]))
        factors.append(n // gcd(dj, n))
    return SubspaceBasis(ring, k, side, tuple(vecs), tuple(factors))


def _zn_inverse(M, n):
    ring = RingSpec.modular(n)
    size = len(M)
    cols = []
    for j in range(size):
        e = [int(i == j) for i in range(size)]
        cols.append(solve_vector(ring, M, e))
    return [[cols[j][i] for j in range(size)] for i in range(size)]


def full_space(ring: RingSpec, k: int) -> SubspaceBasis:
    return span(ring, k, [Matrix.unit(ring, k, i, j) for i in range(k) for j in range(k)], "all")


def _kernel_space(ring, k, equations, side):
    gens, factors = equations_kernel(ring, k, 1, equations)
    vecs = [g[0] for g in gens]
    if ring.is_field:
        return span(ring, k, vecs, side)
    return SubspaceBasis(ring, k, side, tuple(vecs), factors)


def rann(a: Matrix) -> SubspaceBasis:
    """Right annihilator ``{z : a z = 0}``."""
    return _kernel_space(a.ring, a.k, [([(0, a, None)], None)], "right")


def lann(a: Matrix) -> SubspaceBasis:
    """Left annihilator ``{x : x a = 0}``."""
    return _kernel_space(a.ring, a.k, [([(0, None, a)], None)], "left")


def right_ideal(a: Matrix) -> SubspaceBasis:
    """``aR`` as a subspace of ``M_k``."""
    ring, k = a.ring, a.k
    return span(ring, k, [a @ Matrix.unit(ring, k, i, j) for i in range(k) for j in range(k)], "right")


def left_ideal(a: Matrix) -> SubspaceBasis:
    """``Ra`` as a subspace of ``M_k``."""
    ring, k = a.ring, a.k
    return span(ring, k, [Matrix.unit(ring, k, i, j) @ a for i in range(k) for j in range(k)], "left")


def direct_sum_check(U: SubspaceBasis, V: SubspaceBasis) -> bool:
    """``M_k = U (+) V``: dimensions add up to ``k^2`` and ``U + V`` is everything."""
    if U.ring != V.ring or U.k != V.k:
        raise RingMismatchError("subspaces from different rings")
    if not U.ring.is_field:
        raise NonFieldError("direct-sum checks are restricted to field coefficients")
    kk = U.k * U.k
    if U.dim + V.dim != kk:
        return False
    both = [list(v.data) for v in U.vectors + V.vectors]
    return bool(both) and len(rref(U.ring, both)[1]) == kk


def intersection_is_zero(U: SubspaceBasis, V: SubspaceBasis) -> bool:
    """``U ∩ V = {0}``, decided linearly over any supported ring."""
    if not U.vectors or not V.vectors:
        return True
    ring, k = U.ring, U.k
    nu, nv = len(U.vectors), len(V.vectors)
    red = _reducer(ring)
    A = [[g.data[i] for g in U.vectors] + [red(-g.data[i]) for g in V.vectors]
         for i in range(k * k)]
    gens, _ = kernel_vectors(ring, A, nu + nv)
    for coeffs in gens:
        total = [red(sum(c * g.data[i] for c, g in zip(coeffs[:nu], U.vectors)))
                 for i in range(k * k)]
        if any(total):
            return False
    return True


def sum_is_everything(U: SubspaceBasis, V: SubspaceBasis) -> bool:
    """``U + V = M_k``, decided linearly over any supported ring."""
    both = span(U.ring, U.k, U.vectors + V.vectors)
    return full_space(U.ring, U.k).issubset(both)


# --------------------------------------------------------------------------
# certificates and the membership / annihilator operations


@dataclass(frozen=True)
class Certificate:
    """Named witnesses and the product equations they satisfy.

    Each equation is ``(lhs, rhs)`` with both sides tuples of witness names
    multiplied left to right; ``"1"`` names the identity.
    """

    role: str
    witnesses: dict
    equations: tuple = ()

    def _eval(self, names) -> Matrix:
        any_m = next(iter(self.witnesses.values()))
        out = Matrix.identity(any_m.ring, any_m.k)
        for nm in names:
            if nm != "1":
                out = out @ self.witnesses[nm]
        return out

    def replay(self) -> bool:
        return all(self._eval(l) == self._eval(r) for l, r in self.equations)

    def __getitem__(self, name) -> Matrix:
        return self.witnesses[name]

    def to_json(self) -> dict:
        return {"role": self.role,
                "witnesses": {k: v.entries_json() for k, v in self.witnesses.items()},
                "equations": ["*".join(l) + "=" + "*".join(r) for l, r in self.equations]}


def _same(*xs: Matrix):
    r, k = xs[0].ring, xs[0].k
    for x in xs[1:]:
        if x.ring != r or x.k != k:
            raise RingMismatchError(f"operands over {r} (k={k}) and {x.ring} (k={x.k})")


def solve_right(a: Matrix, c: Matrix) -> Certificate | None:
    """Witness ``x`` of ``c ∈ aR`` (``a x = c``) or ``None``."""
    _same(a, c)
    sol = solve_equations(a.ring, a.k, 1, [([(0, a, None)], c)])
    if sol is None:
        return None
    return Certificate("membership-right", {"a": a, "c": c, "x": sol[0]},
                       ((("a", "x"), ("c",)),))


def solve_left(a: Matrix, b: Matrix) -> Certificate | None:
    """Witness ``x`` of ``b ∈ Ra`` (``x a = b``), via the transposed system."""
    _same(a, b)
    cert = solve_right(a.T, b.T)
    if cert is None:
        return None
    return Certificate("membership-left", {"a": a, "b": b, "x": cert["x"].T},
                       ((("x", "a"), ("b",)),))


def in_two_sided(left: Matrix, target: Matrix, right: Matrix) -> Matrix | None:
    """Some ``x`` with ``left x right = target``, i.e. ``target ∈ left R right``."""
    _same(left, target, right)
    sol = solve_equations(left.ring, left.k, 1, [([(0, left, right)], target)])
    return None if sol is None else sol[0]


def ann_contained(x: Matrix, y: Matrix, side: str = "right") -> bool:
    """``rann(x) ⊆ rann(y)`` (side ``right``) or ``lann(x) ⊆ lann(y)`` (side ``left``)."""
    _same(x, y)
    if side == "right":
        return all((y @ z).is_zero() for z in rann(x).vectors)
    if side == "left":
        return all((z @ y).is_zero() for z in lann(x).vectors)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def ann_equal(x: Matrix, y: Matrix, side: str = "right") -> bool:
    return ann_contained(x, y, side) and ann_contained(y, x, side)


def inner_inverse(a: Matrix) -> Certificate | None:
    """Some ``g`` with ``a g a = a``; ``None`` when ``a`` is not regular."""
    sol = solve_equations(a.ring, a.k, 1, [([(0, a, a)], a)])
    if sol is None:
        return None
    return Certificate("inner-inverse", {"a": a, "g": sol[0]}, ((("a", "g", "a"), ("a",)),))


def is_regular(a: Matrix) -> bool:
    return inner_inverse(a) is not None

