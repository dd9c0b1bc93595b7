import itertools

import pytest

from wbc.group import is_group_invertible, is_idempotent, is_symmetric_idempotent
from wbc.harness.generate import (InstanceSpace, exhaustive_instances, generate_constrained,
                                  instance_from_json, instance_to_json, satisfies)
from wbc.linalg import ann_equal
from wbc.ring import Matrix, det, is_invertible

from conftest import GF2, GF3, Q, Z4


def take(it, n):
    return list(itertools.islice(it, n))


def test_idempotent_pair_gf2_uses_only_the_8_idempotents():
    space = InstanceSpace(GF2, 2, "random", seed=0, count=400)
    seen = set()
    for inst in generate_constrained(space, "idempotent-pair", ("a", "e", "f")):
        assert is_idempotent(inst["e"]) and is_idempotent(inst["f"])
        seen |= {inst["e"], inst["f"]}
    assert len(seen) == 8


def test_exhaustive_idempotent_filter_gf2():
    space = InstanceSpace(GF2, 2)
    pairs = list(generate_constrained(space, "idempotent-pair", ("e", "f")))
    assert len(pairs) == 64


def test_v_invertible_gf3():
    space = InstanceSpace(GF3, 2, "random", seed=1, count=200)
    assert all(det(i["v"]) != 0 for i in generate_constrained(space, "v-invertible"))


def test_central_bc():
    space = InstanceSpace(GF3, 2, "random", seed=2, count=100)
    for inst in generate_constrained(space, "central-bc", ("a", "b", "c", "v", "w", "t")):
        b, c, t, v, w = (inst[s] for s in "bctvw")
        assert b @ v @ t @ w == v @ t @ w @ b and c @ v @ t @ w == v @ t @ w @ c


@pytest.mark.parametrize("ring", [GF3, Z4, Q], ids=lambda r: r.label)
def test_constructed_constraints_hold(ring):
    space = InstanceSpace(ring, 2, "random", seed=3, count=40)
    for cons in ("rann-equal(b,c)", "group-invertible-vawb", "w-invertible"):
        for inst in generate_constrained(space, cons):
            assert satisfies(cons, inst)
    for inst in generate_constrained(space, "symmetric-idempotent-pair", ("a", "e", "f")):
        assert is_symmetric_idempotent(inst["e"]) and is_symmetric_idempotent(inst["f"])


def test_intertwined():
    space = InstanceSpace(GF3, 2, "random", seed=4, count=30)
    slots = ("r", "a1", "a2", "b1", "b2", "c1", "c2", "v", "w")
    for inst in generate_constrained(space, "intertwined", slots):
        assert satisfies("intertwined", inst)


def test_rann_equal_over_q():
    space = InstanceSpace(Q, 2, "random", seed=5, count=30)
    for inst in generate_constrained(space, "rann-equal(b,c)"):
        assert ann_equal(inst["b"], inst["c"])


def test_determinism():
    space = InstanceSpace(GF3, 2, "random", seed=7, count=50)
    assert list(generate_constrained(space)) == list(generate_constrained(space))
    other = InstanceSpace(GF3, 2, "random", seed=8, count=50)
    assert list(generate_constrained(space)) != list(generate_constrained(other))


def test_exhaustive_fixed_rules():
    space = InstanceSpace(GF2, 2)
    insts = list(exhaustive_instances(space, ("a", "b"), {"c": "b", "v": "1", "w": "0"}))
    assert len(insts) == 256
    one = Matrix.identity(GF2, 2)
    assert all(i["c"] == i["b"] and i["v"] == one and i["w"].is_zero() for i in insts)


def test_instance_json_roundtrip():
    space = InstanceSpace(Q, 2, "random", seed=9, count=5)
    for inst in generate_constrained(space):
        ring, k, back = instance_from_json(instance_to_json(Q, 2, inst))
        assert back == inst and ring == Q and k == 2


def test_space_validation():
    with pytest.raises(ValueError):
        InstanceSpace(GF2, 2, "sideways")
    with pytest.raises(ValueError):
        InstanceSpace(GF2, 2, constraints=("nonsense",))
    assert InstanceSpace(GF2, 2, "random", 3, 10).to_json()["seed"] == 3
