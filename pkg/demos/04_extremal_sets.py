"""
Extremal sets
=============

For each (k, c, b) there is an explicit set whose doubling and length are
given by closed formulas.
"""
# %%
from freiman import (
    ExtremalParams,
    construct_base,
    construct_multi,
    decompose_T,
    doubling_size,
    hypothesis_bound,
    predicted_T,
    predicted_V,
    t_range,
)

p = ExtremalParams(8, 4, 2)
s = construct_base(p)
print(s, "T =", predicted_T(p), "(brute", doubling_size(s), ") V =", predicted_V(p))

# %%
k = 8
lo, hi = t_range(k)
for t in range(lo, hi + 1, 4):
    q = decompose_T(k, t)
    print(f"T={t:2d} c={q.c} b={q.b} bound={hypothesis_bound(k, t)}")

# %%
m = construct_multi(6, 18, 2)
print(m, "T =", doubling_size(m))
