"""Exact coefficient rings and square matrices over them.

Three coefficient rings are supported: the rationals ``Q`` (scalars are
:class:`fractions.Fraction`), prime fields ``GF(p)`` and residue rings
``Z_n`` (scalars are ``int`` residues in ``[0, n)``).  :class:`Matrix` is the
element type of the matrix ring ``M_k`` over one of them; it is immutable and
hashable, and the involution is transposition.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import NotInvertibleError, RingMismatchError

MAX_K = 8


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """A coefficient ring: ``kind`` is ``"q"``, ``"gfp"`` or ``"zn"``."""

    kind: str
    modulus: int = 0

    def __post_init__(self):
        if self.kind == "q":
            if self.modulus != 0:
                raise ValueError("the rationals carry no modulus")
        elif self.kind == "gfp":
            if not _is_prime(self.modulus):
                raise ValueError(f"GF(p) needs a prime p, got {self.modulus}")
        elif self.kind == "zn":
            if self.modulus < 2:
                raise ValueError(f"Z_n needs n >= 2, got {self.modulus}")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> "RingSpec":
        return cls("q")

    @classmethod
    def prime_field(cls, p: int) -> "RingSpec":
        return cls("gfp", p)

    @classmethod
    def modular(cls, n: int) -> "RingSpec":
        return cls("zn", n)

    @classmethod
    def parse(cls, label: str) -> "RingSpec":
        """Parse the short labels ``q``, ``gfp:3``, ``zn:4`` used on the command line."""
        label = label.strip().lower()
        if label in ("q", "qq", "rationals"):
            return cls.rationals()
        kind, sep, mod = label.partition(":")
        if not sep:
            raise ValueError(f"bad ring label {label!r}")
        return cls(kind, int(mod))

    @property
    def label(self) -> str:
        return "q" if self.kind == "q" else f"{self.kind}:{self.modulus}"

    @property
    def is_field(self) -> bool:
        return self.kind != "zn"

    @property
    def is_finite(self) -> bool:
        return self.kind != "q"

    @property
    def size(self) -> int | None:
        """Number of scalars, or ``None`` for the rationals."""
        return self.modulus if self.is_finite else None

    def __str__(self):
        if self.kind == "q":
            return "Q"
        return f"GF({self.modulus})" if self.kind == "gfp" else f"Z_{self.modulus}"

    # scalar arithmetic -------------------------------------------------

    def canon(self, x) -> int | Fraction:
        """Canonical representative of ``x`` (int, Fraction or decimal string)."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == "q":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                den = x.denominator % self.modulus
                if gcd(den, self.modulus) != 1:
                    raise NotInvertibleError(f"{x} has no image in {self}")
                return x.numerator * pow(den, -1, self.modulus) % self.modulus
            x = x.numerator
        return int(x) % self.modulus

    def format(self, x) -> str:
        return str(x)

    def is_unit(self, x) -> bool:
        if self.kind == "q":
            return x != 0
        if self.kind == "gfp":
            return x % self.modulus != 0
        return gcd(x, self.modulus) == 1

    def inv(self, x):
        if not self.is_unit(x):
            raise NotInvertibleError(f"{x} is not a unit of {self}")
        if self.kind == "q":
            return 1 / Fraction(x)
        return pow(x, -1, self.modulus)

    def elements(self) -> list[int]:
        if not self.is_finite:
            raise ValueError("the rationals are infinite")
        return list(range(self.modulus))

    def to_json(self) -> dict:
        if self.kind == "q":
            return {"kind": "q"}
        key = "p" if self.kind == "gfp" else "n"
        return {"kind": self.kind, key: self.modulus}

    @classmethod
    def from_json(cls, obj: dict) -> "RingSpec":
        kind = obj["kind"]
        if kind == "q":
            return cls.rationals()
        if kind == "gfp":
            return cls.prime_field(int(obj["p"]))
        if kind == "zn":
            return cls.modular(int(obj["n"]))
        raise ValueError(f"unknown ring kind {kind!r}")


Q = RingSpec.rationals()


class Matrix:
    """An immutable ``k x k`` matrix with canonical exact entries.

    Entries are kept in a flat row-major tuple ``data``.  Products use ``@``;
    ``+``, ``-`` and unary minus are entrywise.
    """

    __slots__ = ("ring", "k", "data", "_hash")

    def __init__(self, ring: RingSpec, rows: Sequence[Sequence]):
        k = len(rows)
        if not 1 <= k <= MAX_K:
            raise ValueError(f"matrix size must be in 1..{MAX_K}, got {k}")
        if any(len(r) != k for r in rows):
            raise ValueError("matrix must be square")
        self.ring = ring
        self.k = k
        self.data = tuple(ring.canon(x) for r in rows for x in r)
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingSpec, k: int, data: Iterable) -> "Matrix":
        # data must already be canonical
        if not 1 <= k <= MAX_K:
            raise ValueError(f"matrix size must be in 1..{MAX_K}, got {k}")
        m = object.__new__(cls)
        m.ring = ring
        m.k = k
        m.data = tuple(data)
        m._hash = None
        return m

    @classmethod
    def from_flat(cls, ring: RingSpec, k: int, values: Iterable) -> "Matrix":
        values = [ring.canon(x) for x in values]
        if len(values) != k * k:
            raise ValueError(f"expected {k * k} entries, got {len(values)}")
        return cls._raw(ring, k, values)

    @classmethod
    def identity(cls, ring: RingSpec, k: int) -> "Matrix":
        return cls.scalar(ring, k, 1)

    @classmethod
    def zero(cls, ring: RingSpec, k: int) -> "Matrix":
        return cls._raw(ring, k, [ring.canon(0)] * (k * k))

    @classmethod
    def scalar(cls, ring: RingSpec, k: int, value) -> "Matrix":
        z, s = ring.canon(0), ring.canon(value)
        return cls._raw(ring, k, [s if i % (k + 1) == 0 else z for i in range(k * k)])

    @classmethod
    def unit(cls, ring: RingSpec, k: int, i: int, j: int) -> "Matrix":
        """The matrix unit with a single 1 in position ``(i, j)``."""
        data = [ring.canon(0)] * (k * k)
        data[i * k + j] = ring.canon(1)
        return cls._raw(ring, k, data)

    @classmethod
    def diag(cls, ring: RingSpec, values: Sequence) -> "Matrix":
        k = len(values)
        return cls(ring, [[values[i] if i == j else 0 for j in range(k)] for i in range(k)])

    # inspection ----------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.k + j]

    @property
    def rows(self) -> list[list]:
        k = self.k
        return [list(self.data[i * k:(i + 1) * k]) for i in range(k)]

    def is_zero(self) -> bool:
        return not any(self.data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.k == other.k and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.k, self.data))
        return self._hash

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"Matrix({self.ring}, [{body}])"

    # arithmetic ------------------------------------------------------------

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.ring != self.ring or other.k != self.k:
            raise RingMismatchError(
                f"cannot combine {self.k}x{self.k} over {self.ring} "
                f"with {other.k}x{other.k} over {other.ring}")

    def _reduce(self, values) -> "Matrix":
        if self.ring.kind == "q":
            return Matrix._raw(self.ring, self.k, values)
        n = self.ring.modulus
        return Matrix._raw(self.ring, self.k, [x % n for x in values])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return self._reduce([x + y for x, y in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return self._reduce([x - y for x, y in zip(self.data, other.data)])

    def __neg__(self) -> "Matrix":
        return self._reduce([-x for x in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        k = self.k
        a, b = self.data, other.data
        if k == 2:
            a0, a1, a2, a3 = a
            b0, b1, b2, b3 = b
            out = (a0 * b0 + a1 * b2, a0 * b1 + a1 * b3,
                   a2 * b0 + a3 * b2, a2 * b1 + a3 * b3)
        else:
            cols = [b[j::k] for j in range(k)]
            out = [sum(x * y for x, y in zip(a[i * k:(i + 1) * k], col))
                   for i in range(k) for col in cols]
        return self._reduce(out)

    def scale(self, s) -> "Matrix":
        s = self.ring.canon(s)
        return self._reduce([s * x for x in self.data])

    def __pow__(self, e: int) -> "Matrix":
        if e < 0:
            return inverse(self) ** (-e)
        out = Matrix.identity(self.ring, self.k)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    @property
    def T(self) -> "Matrix":
        k = self.k
        return Matrix._raw(self.ring, k, [self.data[j * k + i] for i in range(k) for j in range(k)])

    # serialization ---------------------------------------------------------

    def entries_json(self) -> list[list[str]]:
        return [[self.ring.format(x) for x in r] for r in self.rows]

    def to_json(self) -> dict:
        return {"ring": self.ring.to_json(), "k": self.k, "entries": self.entries_json()}

    @classmethod
    def from_json(cls, obj: dict, ring: RingSpec | None = None) -> "Matrix":
        if ring is None:
            ring = RingSpec.from_json(obj["ring"])
        m = cls(ring, obj["entries"])
        if "k" in obj and int(obj["k"]) != m.k:
            raise ValueError(f"declared k={obj['k']} but entries are {m.k}x{m.k}")
        return m


# functional spellings of the ring operations ---------------------------------

def add(x: Matrix, y: Matrix) -> Matrix:
    return x + y


def mul(x: Matrix, y: Matrix) -> Matrix:
    return x @ y


def neg(x: Matrix) -> Matrix:
    return -x


def one(ring: RingSpec, k: int) -> Matrix:
    return Matrix.identity(ring, k)


def zero(ring: RingSpec, k: int) -> Matrix:
    return Matrix.zero(ring, k)


def involution(x: Matrix) -> Matrix:
    """The ring involution ``x -> x*``; for matrices this is the transpose."""
    return x.T


def product(*xs: Matrix) -> Matrix:
    out = xs[0]
    for x in xs[1:]:
        out = out @ x
    return out


def all_matrices(ring: RingSpec, k: int) -> Iterator[Matrix]:
    """Every element of ``M_k`` over a finite ring, in lexicographic order."""
    import itertools

    for vals in itertools.product(ring.elements(), repeat=k * k):
        yield Matrix._raw(ring, k, vals)


# determinants and inverses ---------------------------------------------------

def _bareiss_det(rows: list[list[int]]) -> int:
    m = [r[:] for r in rows]
    k = len(m)
    sign, prev = 1, 1
    for i in range(k - 1):
        if m[i][i] == 0:
            for r in range(i + 1, k):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
        prev = m[i][i]
    return sign * m[k - 1][k - 1]


def _field_inverse(x: Matrix) -> Matrix | None:
    ring, k = x.ring, x.k
    aug = [r + [1 if i == j else 0 for j in range(k)] for i, r in enumerate(x.rows)]
    if ring.kind == "gfp":
        p = ring.modulus
        aug = [[ring.canon(v) for v in r] for r in aug]

        def red(v):
            return v % p
    else:
        aug = [[Fraction(v) for v in r] for r in aug]

        def red(v):
            return v
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        s = ring.inv(aug[col][col])
        aug[col] = [red(v * s) for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [red(v - f * w) for v, w in zip(aug[r], aug[col])]
    return Matrix._raw(ring, k, [v for r in aug for v in r[k:]])


def det(x: Matrix):
    """Determinant, computed exactly in the coefficient ring."""
    if x.ring.kind == "q":
        rows = [[Fraction(v) for v in r] for r in x.rows]
        den = 1
        for r in rows:
            for v in r:
                den = den * v.denominator // gcd(den, v.denominator)
        ints = [[int(v * den) for v in r] for r in rows]
        return Fraction(_bareiss_det(ints), den ** x.k)
    return _bareiss_det(x.rows) % x.ring.modulus


def is_invertible(x: Matrix) -> bool:
    """Over a field ``det != 0``; over ``Z_n`` the determinant must be a unit."""
    return x.ring.is_unit(det(x))


def inverse(x: Matrix) -> Matrix:
    ring = x.ring
    if ring.is_field:
        out = _field_inverse(x)
        if out is None:
            raise NotInvertibleError("matrix is singular")
        return out
    d = det(x)
    if not ring.is_unit(d):
        raise NotInvertibleError(f"determinant {d} is not a unit mod {ring.modulus}")
    # adj(x) = det(x) * x^{-1} over Q is an integer matrix
    qinv = _field_inverse(Matrix(Q, x.rows))
    dz = _bareiss_det(x.rows)
    adj = [int(v * dz) for v in qinv.data]
    s = ring.inv(d)
    return Matrix._raw(ring, x.k, [v * s % ring.modulus for v in adj])
