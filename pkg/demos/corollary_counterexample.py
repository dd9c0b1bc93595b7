"""A group invertible vawb does not force rann(b) = rann(c).

The hybrid inverse of a = 1 with b = diag(1,0), c = [[1,1],[0,0]] over GF(2)
exists (it is c), vawb = b is idempotent and so group invertible, yet
z = [[0,0],[1,0]] kills b but not c.  b(vawb)# = b is not the hybrid inverse.

Run:  python demos/corollary_counterexample.py
"""
from wbc import Matrix, RingSpec, group_inverse, is_group_invertible
from wbc.harness.oracle import oracle_search
from wbc.harness.generate import InstanceSpace
from wbc.harness.suites import run_suite
from wbc.linalg import ann_equal
from wbc.weighted import WeightedContext, hybrid_inverse

F = RingSpec.prime_field(2)
one = Matrix.identity(F, 2)
b = Matrix(F, [[1, 0], [0, 0]])
c = Matrix(F, [[1, 1], [0, 0]])
ctx = WeightedContext(one, b, c, one, one)

print("hybrid inverse:", hybrid_inverse(ctx).value.rows)
print("all hybrid solutions:", [m.rows for m in oracle_search("hybrid", ctx)])
print("vawb group invertible:", is_group_invertible(b), " b(vawb)# =", (b @ group_inverse(b).value).rows)
print("rann(b) = rann(c):", ann_equal(b, c))

res = run_suite("group-iff", InstanceSpace(F, 2))
by_prop = {}
for f in res.failures:
    by_prop[f["property"]] = by_prop.get(f["property"], 0) + 1
print(f"\ngroup-iff over all of M_2(GF(2)): tested {res.tested}, failures by property {by_prop}")
