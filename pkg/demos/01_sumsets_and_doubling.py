"""
Sumsets and doubling
====================

The basic objects: finite integer sets, their sumsets and the doubling
size T = |2A|.
"""
# %%
from freiman import IntSet, doubling_stats, normalize, sumset, sym

a = IntSet((0, 1, 3))
print("A     =", a)
print("A + A =", sumset(a, a))

# %%
# An arithmetic progression has the smallest possible doubling, 2k - 1;
# a Sidon set the largest, k(k+1)/2.
for s in [IntSet(tuple(range(6))), IntSet((0, 1, 3, 7, 12, 20))]:
    st = doubling_stats(s)
    print(s, "k =", st.k, "T =", st.t, "T/k =", st.coefficient)

# %%
# Normalization picks one representative per affine class, and sym reflects.
print(normalize(IntSet((10, 13, 16))))
b = IntSet((0, 1, 2, 3, 4, 7, 14))
print("sym", b, "=", sym(b))
print("T of the 8-element family member:", doubling_stats(IntSet((0, 1, 2, 3, 4, 7, 14, 28))).t)
