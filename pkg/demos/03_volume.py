"""
Volume of a one-dimensional set
===============================

V(A) is the fewest lattice points in the convex hull of any isomorphic
copy.  For d = 1 this is the shortest interval containing a copy.
"""
# %%
from freiman import IntSet, hull_point_count, volume_exact_1d, volume_oracle
from freiman.sets import LatticeSet

print(hull_point_count(LatticeSet(2, ((0, 0), (3, 0), (0, 3)))))

# %%
a = IntSet((0, 1, 2, 4))
print("V", a, "=", volume_exact_1d(a, 12).value, "oracle:", volume_oracle(a, 12).value)

# %%
res = volume_exact_1d(IntSet((0, 1, 2, 3, 4, 7, 14, 28)), 40)
print("V =", res.value, "witness", [p[0] for p in res.witness.points], "no copy of diameter <=", res.exhausted_bound)

# %%
# A bound that is too small is a result, not an error.
print(volume_exact_1d(IntSet((0, 1, 2, 4, 8)), 5))
