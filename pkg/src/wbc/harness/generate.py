"""Instance spaces and constrained instance streams.

Random stream order: one ``numpy.random.Generator`` (PCG64) seeded with the
space's seed.  For each instance the slots are drawn in the order given,
each as ``k*k`` row-major entries; constraints are then applied in the
order listed.  A constraint either overwrites the slots it governs with
fresh draws from the same generator (rejection sampling where needed) or
rejects the instance, in which case the whole instance is redrawn.  The
``i``-th emitted instance therefore depends only on the seed and the
space.

Exhaustive streams enumerate every tuple of the varying slots in
lexicographic order of element number; constraints act as filters there.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

import numpy as np

from ..errors import BudgetExceededError
from ..group import is_group_invertible
from ..ring import Matrix, RingSpec, inverse, is_invertible
from .tables import budget

CONSTRAINTS = ("v-invertible", "w-invertible", "idempotent-pair", "symmetric-idempotent-pair",
               "central-bc", "rann-equal(b,c)", "group-invertible-vawb",
               # extensions used by individual suites
               "idempotent", "intertwined")

Instance = dict  # slot name -> Matrix


@dataclass(frozen=True)
class InstanceSpace:
    ring: RingSpec
    k: int = 2
    mode: str = "exhaustive"
    seed: int = 0
    count: int = 500
    constraints: tuple = field(default=())

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be exhaustive or random, got {self.mode!r}")
        for c in self.constraints:
            if c not in CONSTRAINTS:
                raise ValueError(f"unknown constraint {c!r}")

    def to_json(self) -> dict:
        obj = {"ring": self.ring.to_json(), "k": self.k, "mode": self.mode}
        if self.mode == "random":
            obj.update(seed=self.seed, count=self.count)
        if self.constraints:
            obj["constraints"] = list(self.constraints)
        return obj


# ----------------------------------------------------------------------------
# element pools


def all_elements(ring: RingSpec, k: int) -> tuple[Matrix, ...]:
    if not ring.is_finite:
        raise BudgetExceededError(f"M_{k}({ring}) is infinite")
    if ring.modulus ** (k * k) > budget():
        raise BudgetExceededError(f"M_{k}({ring}) exceeds the candidate budget")
    return _all_elements(ring, k)


@lru_cache(maxsize=16)
def _all_elements(ring: RingSpec, k: int) -> tuple[Matrix, ...]:
    q = ring.modulus
    return tuple(Matrix._raw(ring, k, digits)
                 for digits in itertools.product(range(q), repeat=k * k))


@lru_cache(maxsize=16)
def _idempotents(ring: RingSpec, k: int, symmetric: bool) -> tuple[Matrix, ...]:
    return tuple(m for m in all_elements(ring, k)
                 if m @ m == m and (not symmetric or m.T == m))


def _q_scalar(rng) -> Fraction:
    return Fraction(int(rng.integers(-3, 4)), int(rng.integers(1, 4)))


def draw_scalar(rng, ring: RingSpec):
    if ring.is_finite:
        return int(rng.integers(0, ring.modulus))
    return _q_scalar(rng)


def draw_matrix(rng, ring: RingSpec, k: int) -> Matrix:
    return Matrix.from_flat(ring, k, [draw_scalar(rng, ring) for _ in range(k * k)])


def draw_invertible(rng, ring: RingSpec, k: int) -> Matrix:
    while True:
        m = draw_matrix(rng, ring, k)
        if is_invertible(m):
            return m


def draw_idempotent(rng, ring: RingSpec, k: int, symmetric: bool = False) -> Matrix:
    if ring.is_finite and ring.modulus ** (k * k) <= budget():
        pool = _idempotents(ring, k, symmetric)
        return pool[int(rng.integers(0, len(pool)))]
    # over Q: conjugate a 0/1 diagonal, or project orthogonally when symmetric
    r = int(rng.integers(0, k + 1))
    if symmetric:
        if r == 0:
            return Matrix.zero(ring, k)
        u = draw_invertible(rng, ring, k)
        # B (B^T B)^{-1} B^T for B the first r columns of u
        B = [[u[i, j] for j in range(r)] for i in range(k)]
        G = Matrix(ring, [[sum(B[t][i] * B[t][j] for t in range(k)) for j in range(r)]
                          for i in range(r)])
        Gi = inverse(G).rows
        P = [[sum(B[i][s] * Gi[s][t] * B[j][t] for s in range(r) for t in range(r))
              for j in range(k)] for i in range(k)]
        return Matrix(ring, P)
    p = draw_invertible(rng, ring, k)
    return p @ Matrix.diag(ring, [1] * r + [0] * (k - r)) @ inverse(p)


# ----------------------------------------------------------------------------
# constraints


class _Reject(Exception):
    pass


def _apply(name: str, inst: Instance, rng, ring: RingSpec, k: int) -> None:
    if name == "v-invertible":
        inst["v"] = draw_invertible(rng, ring, k)
    elif name == "w-invertible":
        inst["w"] = draw_invertible(rng, ring, k)
    elif name == "idempotent":
        inst["e"] = draw_idempotent(rng, ring, k)
    elif name in ("idempotent-pair", "symmetric-idempotent-pair"):
        sym = name.startswith("symmetric")
        inst["e"] = draw_idempotent(rng, ring, k, sym)
        inst["f"] = draw_idempotent(rng, ring, k, sym)
    elif name == "central-bc":
        inst["b"] = Matrix.scalar(ring, k, draw_scalar(rng, ring))
        inst["c"] = Matrix.scalar(ring, k, draw_scalar(rng, ring))
    elif name == "rann-equal(b,c)":
        inst["c"] = draw_invertible(rng, ring, k) @ inst["b"]
    elif name == "group-invertible-vawb":
        if not is_group_invertible(inst["v"] @ inst["a"] @ inst["w"] @ inst["b"]):
            raise _Reject
    elif name == "intertwined":
        # second context conjugated from the first by an invertible r
        r, v, w = inst["r"], inst["v"], inst["w"]
        if not (is_invertible(r) and is_invertible(v) and is_invertible(w)):
            raise _Reject
        ri = inverse(r)
        inst["b2"] = r @ inst["b1"] @ ri
        inst["c2"] = r @ inst["c1"] @ ri
        inst["a2"] = inverse(v) @ r @ v @ inst["a1"] @ w @ ri @ inverse(w)
    else:
        raise ValueError(f"unknown constraint {name!r}")


def satisfies(name: str, inst: Instance) -> bool:
    """Filter form of a constraint, used in exhaustive mode."""
    if name == "v-invertible":
        return is_invertible(inst["v"])
    if name == "w-invertible":
        return is_invertible(inst["w"])
    if name == "idempotent":
        return inst["e"] @ inst["e"] == inst["e"]
    if name in ("idempotent-pair", "symmetric-idempotent-pair"):
        ok = all(inst[s] @ inst[s] == inst[s] for s in ("e", "f"))
        return ok and (name == "idempotent-pair" or all(inst[s].T == inst[s] for s in ("e", "f")))
    if name == "central-bc":
        return all(x == Matrix.scalar(x.ring, x.k, x[0, 0]) for x in (inst["b"], inst["c"]))
    if name == "rann-equal(b,c)":
        from ..linalg import ann_equal
        return ann_equal(inst["b"], inst["c"], "right")
    if name == "group-invertible-vawb":
        return is_group_invertible(inst["v"] @ inst["a"] @ inst["w"] @ inst["b"])
    if name == "intertwined":
        r, v, w = inst["r"], inst["v"], inst["w"]
        return (r @ inst["c1"] == inst["c2"] @ r and r @ inst["b1"] == inst["b2"] @ r
                and r @ v @ inst["a1"] @ w == v @ inst["a2"] @ w @ r)
    raise ValueError(f"unknown constraint {name!r}")


def _fixed_value(rule, inst: Instance, ring: RingSpec, k: int) -> Matrix:
    if rule == "1":
        return Matrix.identity(ring, k)
    if rule == "0":
        return Matrix.zero(ring, k)
    return inst[rule]


def exhaustive_instances(space: InstanceSpace, vary: tuple, fixed: dict,
                         constraints: tuple = ()) -> Iterator[Instance]:
    """Every assignment of the ``vary`` slots; ``fixed`` maps the other slots to
    ``"1"``, ``"0"`` or the name of a varying slot to copy."""
    ring, k = space.ring, space.k
    pool = all_elements(ring, k)
    total = len(pool) ** len(vary)
    if total > budget():
        raise BudgetExceededError(f"{total} tuples exceed the budget of {budget()}")
    for combo in itertools.product(pool, repeat=len(vary)):
        inst = dict(zip(vary, combo))
        for slot, rule in fixed.items():
            inst[slot] = _fixed_value(rule, inst, ring, k)
        if all(satisfies(c, inst) for c in constraints):
            yield inst


def random_instances(space: InstanceSpace, slots: tuple, constraints: tuple = ()
                     ) -> Iterator[Instance]:
    ring, k = space.ring, space.k
    rng = np.random.default_rng(space.seed)
    emitted = 0
    while emitted < space.count:
        inst = {s: draw_matrix(rng, ring, k) for s in slots}
        try:
            for c in constraints:
                _apply(c, inst, rng, ring, k)
        except _Reject:
            continue
        emitted += 1
        yield inst


def generate_constrained(space: InstanceSpace, constraint=None,
                         slots: tuple = ("a", "b", "c", "v", "w")) -> Iterator[Instance]:
    """Instances of ``space`` satisfying ``constraint`` (a name or a tuple of names).

    Random spaces satisfy the constraint by construction; exhaustive spaces
    enumerate all ``slots`` and filter.
    """
    cons = space.constraints + ((constraint,) if isinstance(constraint, str)
                                else tuple(constraint or ()))
    if space.mode == "random":
        return random_instances(space, slots, cons)
    return exhaustive_instances(space, slots, {}, cons)


def instance_to_json(ring: RingSpec, k: int, inst: Instance) -> dict:
    return {"ring": ring.to_json(), "k": k,
            "slots": {name: m.entries_json() for name, m in inst.items()}}


def instance_from_json(obj: dict) -> tuple[RingSpec, int, Instance]:
    ring = RingSpec.from_json(obj["ring"])
    k = int(obj["k"])
    inst = {name: Matrix(ring, rows) for name, rows in obj["slots"].items()}
    for name, m in inst.items():
        if m.k != k:
            raise ValueError(f"slot {name} is {m.k}x{m.k}, expected k={k}")
    return ring, k, inst
