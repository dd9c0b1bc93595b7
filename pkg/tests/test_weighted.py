import itertools

import pytest

from wbc import weighted as W
from wbc.errors import PreconditionError, RingMismatchError
from wbc.group import group_inverse, is_group_invertible
from wbc.harness.oracle import oracle_search
from wbc.linalg import ann_equal, inner_inverse
from wbc.ring import Matrix, all_matrices, one, zero

from conftest import GF2, GF3, GF5, Q, Z4, M

I2 = one(Q, 2)
BOTH_GF2 = 880  # GF(2) (a,b,c) contexts, v=w=1, with an inverse (brute-force count)

# along-d example data over Q
A = M(Q, [[1, 1], [0, 0]])
V = M(Q, [[1, 1], [0, -1]])
WW = M(Q, [[0, 1], [1, 0]])
D = M(Q, [[1, 2], [0, 0]])
ALONG = W.WeightedContext(A, D, D, V, WW)

# Bott-Duffin example data over Q
BD = W.BottDuffinContext(M(Q, [[0, 0], [0, 1]]), M(Q, [[0, -1], [1, 0]]), I2,
                         M(Q, [[0, 0], [1, 1]]), M(Q, [[1, 1], [0, 0]]))


def scalar_ctx(a=1, b=1, c=1, v=1, w=1):
    return W.WeightedContext(*(M(Q, [[x]]) for x in (a, b, c, v, w)))


def identity_ctx(ring=Q, k=2):
    e = one(ring, k)
    return W.WeightedContext(e, e, e, e, e)


# --- (b,c)-inverse -----------------------------------------------------------

def test_bc_scalar_and_identity():
    ok, cert = W.bc_exists(scalar_ctx())
    assert ok and cert.replay()
    assert W.bc_inverse(scalar_ctx()).value == M(Q, [[1]])
    assert W.bc_inverse(identity_ctx()).value == I2


def test_bc_zero_cases():
    z = zero(Q, 2)
    rep = W.bc_inverse(W.WeightedContext(I2, z, z, I2, I2))
    assert rep.exists and rep.value == z
    # b = 0, c = 1: cvawb = 0 and c is not in 0R
    assert not W.bc_inverse(W.WeightedContext(I2, z, I2, I2, I2)).exists


def test_bc_along_d_example():
    ok, _ = W.bc_exists(ALONG)
    rep = W.bc_inverse(ALONG)
    assert ok and rep.value == D and rep.verified


def test_bc_scalar_values():
    rep = W.bc_inverse(scalar_ctx(a=4, v=2, w="1/3"))
    assert rep.value == M(Q, [["3/8"]])
    assert not W.bc_inverse(scalar_ctx(a=0)).exists


def test_bc_via_group():
    assert W.bc_inverse_via_group(ALONG, D).value == D
    assert W.bc_inverse_via_group(identity_ctx(), I2).value == I2
    with pytest.raises(PreconditionError):
        W.bc_inverse_via_group(ALONG, I2)  # I·R != dR


def test_bc_via_group_with_s_equal_b_gf3():
    import random
    rnd = random.Random(3)
    pool = list(all_matrices(GF3, 2))
    hits = 0
    while hits < 25:
        a, b, u = rnd.choice(pool), rnd.choice(pool), rnd.choice(pool)
        c = u @ b if rnd.random() < .5 else b
        ctx = W.WeightedContext(a, b, c, one(GF3, 2), one(GF3, 2))
        if not ann_equal(b, c) or not W.bc_exists(ctx)[0]:
            continue
        hits += 1
        assert W.bc_inverse_via_group(ctx, b).value == W.bc_inverse(ctx).value


def test_bc_exhaustive_gf2_unique():
    e = one(GF2, 2)
    pool = list(all_matrices(GF2, 2))
    for a, b, c in itertools.product(pool, repeat=3):
        ctx = W.WeightedContext(a, b, c, e, e)
        rep = W.bc_inverse(ctx, scan=False)
        assert oracle_search("bc", ctx) == ({rep.value} if rep.exists else set())


def test_context_homogeneity():
    with pytest.raises(RingMismatchError):
        W.WeightedContext(I2, I2, I2, I2, one(GF3, 2))


# --- hybrid ------------------------------------------------------------------

def test_hybrid_examples():
    ok, cert = W.hybrid_exists(identity_ctx())
    assert ok and cert.replay()
    assert W.hybrid_inverse(identity_ctx()).value == I2
    z = zero(Q, 2)
    assert W.hybrid_inverse(W.WeightedContext(I2, z, z, I2, I2)).value == z
    assert W.hybrid_inverse(ALONG).value == D


def test_hybrid_needs_a_unit_weight():
    z = zero(Q, 2)
    with pytest.raises(PreconditionError):
        W.hybrid_inverse(W.WeightedContext(I2, I2, I2, z, z))


def test_hybrid_verdicts_gf2():
    # over a field b and c are regular, so the two existence tests coincide
    e = one(GF2, 2)
    pool = list(all_matrices(GF2, 2))
    table = {}
    for a, b, c in itertools.product(pool, repeat=3):
        ctx = W.WeightedContext(a, b, c, e, e)
        key = (W.bc_exists(ctx)[0], W.hybrid_exists(ctx)[0])
        table[key] = table.get(key, 0) + 1
    assert (True, False) not in table and (False, True) not in table
    assert table[(True, True)] == BOTH_GF2


def test_hybrid_via_group_examples():
    assert W.hybrid_via_group(identity_ctx()).value == I2
    assert W.hybrid_via_group(ALONG).value == D
    n = M(GF2, [[0, 1], [0, 0]])
    e = one(GF2, 2)
    ctx = W.WeightedContext(e, n, n, e, e)  # vawb = n nilpotent, rann equalities trivial
    assert not is_group_invertible(n)
    assert not W.hybrid_via_group(ctx).exists
    assert oracle_search("hybrid", ctx) == set()
    with pytest.raises(PreconditionError):
        W.hybrid_via_group(W.WeightedContext(e, M(GF2, [[1, 0], [0, 0]]), e, e, e))


def test_hybrid_via_group_gf3_invertible_vawb():
    import random
    rnd = random.Random(4)
    pool = list(all_matrices(GF3, 2))
    e = one(GF3, 2)
    seen = 0
    while seen < 25:
        a, b, u, v = (rnd.choice(pool) for _ in range(4))
        c = u @ b
        ctx = W.WeightedContext(a, b, c, v, e)
        vawb = v @ a @ b
        if not (ann_equal(vawb, b) and ann_equal(b, c)) or not is_group_invertible(vawb):
            continue
        seen += 1
        via, ref = W.hybrid_via_group(ctx), W.hybrid_inverse(ctx)
        assert via.exists and ref.exists and via.value == ref.value
        assert via.value == b @ group_inverse(vawb).value


def test_unconditional_remark_counterexample():
    # vawb group invertible but rann(b) != rann(c): b(vawb)# is not the hybrid
    e = one(GF2, 2)
    b, c = M(GF2, [[1, 0], [0, 0]]), M(GF2, [[1, 1], [0, 0]])
    ctx = W.WeightedContext(e, b, c, e, e)
    assert is_group_invertible(b)
    hyb = W.hybrid_inverse(ctx)
    assert hyb.exists and hyb.value == c
    assert b @ group_inverse(b).value != c
    assert not ann_equal(b, c)


# --- annihilator -------------------------------------------------------------

def test_annihilator_examples():
    assert W.annihilator_inverse(identity_ctx()).value == I2
    assert W.annihilator_inverse(ALONG).value == D


def test_annihilator_contains_bc_gf2():
    e = one(GF2, 2)
    pool = list(all_matrices(GF2, 2))
    for a, b, c in itertools.product(pool, repeat=3):
        ctx = W.WeightedContext(a, b, c, e, e)
        bc = W.bc_inverse(ctx, scan=False)
        if bc.exists:
            ann = W.annihilator_inverse(ctx, scan=False)
            assert ann.exists and ann.value == bc.value


def test_annihilator_over_z4_scan():
    e = one(Z4, 2)
    ctx = W.WeightedContext(M(Z4, [[1, 2], [0, 3]]), e, e, e, e)
    rep = W.annihilator_inverse(ctx, scan=True)
    assert rep.unique and rep.value @ M(Z4, [[1, 2], [0, 3]]) == e


# --- Bott-Duffin -------------------------------------------------------------

def test_bott_duffin_example():
    rep = W.bott_duffin(BD)
    assert rep.value == M(Q, [[0, 0], [-1, -1]]) and rep.unique is True


def test_bott_duffin_invertible_case():
    a = M(Q, [[2, 1], [1, 1]])
    rep = W.bott_duffin(W.BottDuffinContext(a, I2, I2, I2, I2))
    assert rep.value @ a == I2


def test_bott_duffin_rejects_non_idempotent():
    with pytest.raises(PreconditionError):
        W.BottDuffinContext(I2, I2, I2, M(Q, [[1, 1], [1, 1]]), I2)


def test_bott_duffin_gf5_matches_oracle():
    bd5 = W.BottDuffinContext(*(Matrix(GF5, m.rows) for m in (BD.a, BD.v, BD.w, BD.e, BD.f)))
    assert oracle_search("bott-duffin", bd5) == {M(GF5, [[0, 0], [4, 4]])}
    assert W.bott_duffin(bd5).value == M(GF5, [[0, 0], [4, 4]])


def test_bott_duffin_necessary():
    ok, cert = W.bott_duffin_necessary(W.BottDuffinContext(I2, I2, I2, I2, I2))
    assert ok and cert["p"] == I2 and cert["q"] == I2
    ok, cert = W.bott_duffin_necessary(BD)
    assert ok and cert.replay()
    e = M(Q, [[1, 0], [0, 0]])
    z = zero(Q, 2)
    assert W.bott_duffin_necessary(W.BottDuffinContext(z, I2, I2, e, e)) == (False, None)


def test_bott_duffin_star():
    e = M(Q, [[1, 0], [0, 0]])
    rep = W.bott_duffin_star(W.BottDuffinContext(I2, I2, I2, e, e))
    assert rep.holds and rep.values["p"] == I2
    rot = M(Q, [[0, -1], [1, 0]])  # orthogonal
    assert W.bott_duffin_star(W.BottDuffinContext(rot, I2, I2, I2, I2)).holds
    with pytest.raises(PreconditionError):
        W.bott_duffin_star(BD)  # e, f not symmetric


# --- along d -----------------------------------------------------------------

def test_along_d_examples():
    rep = W.along_d(A, D, V, WW)
    assert rep.value == D and all(ok for _, ok in rep.checks)
    a = M(Q, [[1, 2], [3, 4]])
    assert W.along_d(a, I2, I2, I2).value @ a == I2


def test_along_d_gf7_image():
    from wbc.ring import RingSpec
    F = RingSpec.prime_field(7)
    rep = W.along_d(*(Matrix(F, m.rows) for m in (A, D, V, WW)))
    assert rep.value == M(F, [[1, 2], [0, 0]])


def test_along_d_precondition():
    z = zero(Q, 2)
    with pytest.raises(PreconditionError):
        W.along_d(A, D, z, z)


def test_along_d_corollary_gf2():
    e = one(GF2, 2)
    pool = list(all_matrices(GF2, 2))
    for a, d, v in itertools.product(pool, repeat=3):
        x = v @ a @ d
        exists = W.along_d(a, d, v, e, scan=False).exists
        assert exists == (is_group_invertible(x) and ann_equal(x, d))


# --- theorem instances -------------------------------------------------------

def test_reverse_order_examples():
    e = M(Q, [[1]])
    assert W.reverse_order(e, e, e, e, e, e).value == e
    rep = W.reverse_order(M(Q, [[2]]), M(Q, [[3]]), e, e, e, e)
    assert rep.exists and rep.value == M(Q, [["1/6"]])


def test_reverse_order_rejects_non_commuting():
    e = one(Q, 2)
    b = M(Q, [[1, 0], [0, 0]])
    t = M(Q, [[0, 1], [1, 0]])
    with pytest.raises(PreconditionError):
        W.reverse_order(e, t, b, e, e, e)


def test_sum_formula_examples():
    e = M(Q, [[1]])
    assert W.sum_formula(e, e, e, e, e, e).holds
    rep = W.sum_formula(M(Q, [[2]]), M(Q, [[3]]), e, e, e, e)
    assert rep.holds
    y1, y2 = rep.values["y1"], rep.values["y2"]
    assert y1 + y2 == M(Q, [["5/6"]])


def test_commuting_transport_examples():
    a = M(Q, [[1, 2], [3, 4]])
    rep = W.commuting_transport(a, a, I2, I2, I2, I2, I2, I2, I2)
    assert rep.holds and rep.values["bc_y1"] == rep.values["bc_y2"]
    z = zero(Q, 2)
    assert W.commuting_transport(a, a, I2, I2, I2, I2, I2, I2, z).holds
    two = Matrix.scalar(GF3, 2, 2)
    b = M(GF3, [[1, 1], [0, 0]])
    a3 = M(GF3, [[1, 0], [1, 1]])
    e3 = one(GF3, 2)
    assert W.commuting_transport(a3, a3, b, b, b, b, e3, e3, two).holds


def test_report_json():
    obj = W.bc_inverse(ALONG).to_json()
    assert obj["kind"] == "bc" and obj["exists"] is True
    assert obj["value"]["entries"] == [["1", "2"], ["0", "0"]]
    assert all(ok for _, ok in obj["checks"])
