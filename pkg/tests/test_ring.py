from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbc.errors import NotInvertibleError, RingMismatchError
from wbc.ring import (Matrix, RingSpec, add, det, inverse, involution, is_invertible, mul, neg,
                      one, zero)

from conftest import GF2, GF3, Q, RINGS, Z4, Z6, M, matrices


def test_ringspec_validation():
    with pytest.raises(ValueError):
        RingSpec.prime_field(4)
    with pytest.raises(ValueError):
        RingSpec.modular(1)
    with pytest.raises(ValueError):
        RingSpec("q", 3)
    assert RingSpec.parse("gfp:3") == GF3
    assert RingSpec.parse("zn:4") == Z4
    assert RingSpec.parse("q") == Q


@pytest.mark.parametrize("r", RINGS, ids=lambda r: r.label)
def test_ring_json_roundtrip(r):
    assert RingSpec.from_json(r.to_json()) == r


def test_canonical_forms():
    assert M(Q, [["2/4"]]).data == (Fraction(1, 2),)
    assert M(Q, [["-6/4"]])[0, 0] == Fraction(-3, 2)
    assert M(Z6, [[-1, 7]] * 2).rows[0] == [5, 1]
    assert M(GF3, [["1/2"]])[0, 0] == 2
    with pytest.raises(NotInvertibleError):
        M(Z6, [["1/2"]])


def test_identity_and_zero_divisors():
    m = M(Q, [[1, 2], [3, 4]])
    assert one(Q, 2) @ m == m == m @ one(Q, 2)
    assert mul(M(Z6, [[3]]), M(Z6, [[2]])) == zero(Z6, 1)


def test_hand_product():
    assert M(Q, [[1, 1], [0, 0]]) @ M(Q, [[0, 1], [1, 0]]) == M(Q, [[1, 1], [0, 0]])


def test_mismatch_rejected():
    with pytest.raises(RingMismatchError):
        add(one(Q, 2), one(GF3, 2))
    with pytest.raises(RingMismatchError):
        mul(one(Q, 2), one(Q, 3))


def test_involution_examples():
    e = M(Q, [[1, 0], [0, 0]])
    assert involution(e) == e
    assert involution(M(Q, [[0, 1], [0, 0]])) == M(Q, [[0, 0], [1, 0]])


def test_invertibility_examples():
    assert is_invertible(one(Q, 2)) and inverse(one(Q, 2)) == one(Q, 2)
    assert not is_invertible(M(Q, [[1, 2], [0, 0]]))
    x = M(Z6, [[1, 1], [0, 1]])
    assert is_invertible(x)
    assert inverse(x) == M(Z6, [[1, 5], [0, 1]])
    assert not is_invertible(M(Z6, [[2, 0], [0, 1]]))  # det 2 is not a unit mod 6
    with pytest.raises(NotInvertibleError):
        inverse(M(Z4, [[2, 0], [0, 1]]))


def test_det_over_zn():
    assert det(M(Z6, [[2, 1], [1, 2]])) == 3
    assert det(M(Q, [["1/2", 1], [1, 2]])) == 0


@pytest.mark.parametrize("r", RINGS, ids=lambda r: r.label)
def test_ring_axioms(r):
    @settings(max_examples=40, deadline=None)
    @given(matrices(r), matrices(r), matrices(r))
    def check(x, y, z):
        assert (x @ y) @ z == x @ (y @ z)
        assert x @ (y + z) == x @ y + x @ z
        assert (x + y) @ z == x @ z + y @ z
        assert x + neg(x) == zero(r, 2)
        assert involution(involution(x)) == x
        assert involution(x @ y) == involution(y) @ involution(x)
        if is_invertible(x):
            xi = inverse(x)
            assert xi @ x == one(r, 2) == x @ xi

    check()


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(lambda k: matrices(GF3, k)))
def test_inverse_any_size_gf3(x):
    assert is_invertible(x) == (det(x) != 0)
    if is_invertible(x):
        assert inverse(x) @ x == one(GF3, x.k)


def test_json_roundtrip():
    m = M(Q, [["1/2", "-3"], [0, 1]])
    assert Matrix.from_json(m.to_json()) == m
    assert m.entries_json() == [["1/2", "-3"], ["0", "1"]]


def test_k_limit():
    with pytest.raises(ValueError):
        Matrix.identity(Q, 9)


def test_all_gf2_elements():
    from wbc.ring import all_matrices
    assert len(set(all_matrices(GF2, 2))) == 16
