"""
The extremal family
===================

Base sets of size m grow into a binary tree: a prime child adjoins a
doubled maximum, a sym child reflects the prime child.
"""
# %%
from freiman import ExtremalParams, enumerate_base_sets, enumerate_family, family_stats

for b in enumerate_base_sets(6, 2):
    print(b)

# %%
p = ExtremalParams.from_m(8, 6, 2)
nodes = enumerate_family(p)
stats = family_stats(nodes, p)
print(len(nodes), "sets")
for n, st in zip(nodes, stats):
    print("/".join(n.path) or "base", n.set, "T =", st.t, "max =", st.max)
