"""
Freiman isomorphism and dimension
=================================

Two sets are isomorphic when they share the same coincidences a_i + a_j =
a_p + a_q.  The dimension is the largest affine dimension such a copy can
have, and the universal model realizes it.
"""
# %%
from freiman import (
    IntSet,
    find_isomorphism,
    freiman_dimension,
    oracle_dimension,
    quadruple_pattern,
    universal_model,
)

for a, b in [((0, 1, 2), (10, 13, 16)), ((0, 1, 2), (0, 1, 3)), ((0, 1, 3), (0, 1, 5))]:
    print(a, b, "->", find_isomorphism(IntSet(a), IntSet(b)))

# %%
for s in [(0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 2, 5), (0, 1, 3, 7, 15)]:
    a = IntSet(s)
    print(a, "pattern", quadruple_pattern(a), "d =", freiman_dimension(a))

# %%
# The universal model lives in Z^d; the box-search oracle agrees.
a = IntSet((0, 1, 2, 5))
print("model of", a, "=", universal_model(a))
print("oracle dimension:", oracle_dimension(a))
