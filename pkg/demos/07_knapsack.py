"""
0-1 equations
=============

Does some subset of distinct positive summands hit the target exactly?
"""
# %%
import random

from freiman import Instance, density_profile, solve

print(solve(Instance((3, 5, 7), 12)))
print(solve(Instance((2, 4, 6), 7)))

# %%
rng = random.Random(0)
vals = rng.sample(range(1, 200_001), 100_000)
inst = Instance.from_values(vals, sum(vals) // 3)
print(density_profile(inst).dense, len(solve(inst).selection))
