"""Two worked examples over Q, computed through every applicable route.

Run:  python demos/weighted_examples.py
"""
from wbc import Matrix, Q
from wbc.weighted import (BottDuffinContext, WeightedContext, along_d, annihilator_inverse,
                          bc_inverse, bc_inverse_via_group, bott_duffin, bott_duffin_necessary,
                          hybrid_inverse, hybrid_via_group)


def show(label, m):
    print(f"  {label:<28} {m.entries_json() if m is not None else None}")


a = Matrix(Q, [[1, 1], [0, 0]])
v = Matrix(Q, [[1, 1], [0, -1]])
w = Matrix(Q, [[0, 1], [1, 0]])
d = Matrix(Q, [[1, 2], [0, 0]])
ctx = WeightedContext(a, d, d, v, w)

print("inverse of a along d, with weights v, w")
show("along_d", along_d(a, d, v, w).value)
show("(d,d)-inverse b(cvawb)^-c", bc_inverse(ctx).value)
show("d(vawd)#", bc_inverse_via_group(ctx, d).value)
show("hybrid", hybrid_inverse(ctx).value)
show("hybrid via group inverse", hybrid_via_group(ctx).value)
show("annihilator", annihilator_inverse(ctx).value)

one = Matrix.identity(Q, 2)
bd = BottDuffinContext(Matrix(Q, [[0, 0], [0, 1]]), Matrix(Q, [[0, -1], [1, 0]]), one,
                       Matrix(Q, [[0, 0], [1, 1]]), Matrix(Q, [[1, 1], [0, 0]]))
rep = bott_duffin(bd)
print("\nweighted Bott-Duffin (e,f)-inverse")
show("z", rep.value)
print(f"  unique: {rep.unique}")
ok, cert = bott_duffin_necessary(bd)
show("p = m fvawe + 1 - e", cert["p"])
show("q = fvawe n + 1 - f", cert["q"])
