"""Exact feasibility of a_1 x_1 + ... + a_m x_m = b with x_i in {0, 1}.

The reachable-sum table is a Python int used as a packed bit array: bit s
is set when some subset of the summands processed so far sums to s.  Adding
a summand is one shift-or.

Large dense instances are first reduced: the biggest summands are taken
greedily until the remaining target sits in the middle of the sum range of
a small pool of the smallest summands, and only the pool goes through the
bit table.  A feasible answer always carries a verified witness; if the
reduction misses, the pool is enlarged, ending with the plain table over
all summands, so "infeasible" is only ever reported by an exhaustive table
(or by the trivial total / gcd tests).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Optional, Sequence

MAX_TOTAL = 2**40
_DIRECT_LIMIT = 1 << 22  # table bits below which no reduction is attempted
_MIN_POOL = 64


class CapacityError(ValueError):
    """The instance is too large for the bit table."""


@dataclass(frozen=True)
class Instance:
    summands: tuple[int, ...]
    target: int

    def __post_init__(self):
        a = tuple(int(x) for x in self.summands)
        if not a:
            raise ValueError("at least one summand is required")
        if a[0] <= 0:
            raise ValueError("summands must be positive")
        if any(y <= x for x, y in zip(a, a[1:])):
            raise ValueError("summands must be distinct and strictly increasing")
        if self.target < 0:
            raise ValueError("target must be non-negative")
        object.__setattr__(self, "summands", a)

    @classmethod
    def from_values(cls, values: Sequence[int], target: int) -> Instance:
        """Sort the values; duplicates are rejected."""
        vals = sorted(values)
        if len(set(vals)) != len(vals):
            raise ValueError("summands must be distinct")
        return cls(tuple(vals), target)

    @property
    def total(self) -> int:
        return sum(self.summands)


@dataclass(frozen=True)
class Solution:
    selection: tuple[int, ...]

    def values(self, inst: Instance) -> list[int]:
        return [inst.summands[i] for i in self.selection]


def _reach_table(values: Sequence[int], limit: int) -> int:
    mask = (1 << (limit + 1)) - 1
    reach = 1
    for a in values:
        reach |= (reach << a) & mask
    return reach


def _dp_witness(values: Sequence[int], target: int) -> Optional[list[int]]:
    """Indices into ``values`` summing to ``target``, or None.

    Tables after every block of ~sqrt(m) items are kept; during the backward
    scan each block's per-item tables are rebuilt from its checkpoint.
    """
    m = len(values)
    mask = (1 << (target + 1)) - 1
    step = max(1, isqrt(m))
    checkpoints = [1]
    reach = 1
    for i, a in enumerate(values):
        reach |= (reach << a) & mask
        if (i + 1) % step == 0:
            checkpoints.append(reach)
    if not (reach >> target) & 1:
        return None
    chosen = []
    r = target
    for blk in range((m - 1) // step, -1, -1):
        lo, hi = blk * step, min(m, (blk + 1) * step)
        layers = [checkpoints[blk]]
        for a in values[lo:hi - 1]:
            layers.append(layers[-1] | ((layers[-1] << a) & mask))
        for i in range(hi - 1, lo - 1, -1):
            before = layers[i - lo]
            if (before >> r) & 1:
                continue  # reachable without item i
            chosen.append(i)
            r -= values[i]
        if r == 0:
            break
    assert r == 0
    return sorted(chosen)


def _pool_size(values: Sequence[int]) -> int:
    """Smallest prefix whose sum comfortably exceeds twice its next item."""
    s = 0
    for i, a in enumerate(values):
        if i >= _MIN_POOL and s >= 4 * a:
            return i
        s += a
    return len(values)


def _reduce_and_solve(values: Sequence[int], target: int, pool: int) -> Optional[list[int]]:
    pool_vals = values[:pool]
    pool_sum = sum(pool_vals)
    half = pool_sum // 2
    r = target
    taken = []
    for i in range(len(values) - 1, pool - 1, -1):
        if r - values[i] >= half:
            r -= values[i]
            taken.append(i)
    if r > pool_sum:
        return None
    sub = _dp_witness(pool_vals, r)
    if sub is None:
        return None
    return sorted(sub + taken)


def solve(inst: Instance) -> Optional[Solution]:
    """A subset of summand indices summing to the target, or None if none exists."""
    a = inst.summands
    total = inst.total
    b = inst.target
    if total > MAX_TOTAL:
        raise CapacityError(
            f"sum of summands {total} exceeds 2**40; split the instance into smaller ones"
        )
    if b > total:
        return None
    if b == 0:
        return Solution(())
    if b % reduce(gcd, a):
        return None
    # a subset hits b iff its complement hits total - b; work with the smaller
    flip = total - b < b
    goal = total - b if flip else b
    sel = None
    if goal >= _DIRECT_LIMIT:
        pool = _pool_size(a)
        while pool < len(a) and sel is None:
            sel = _reduce_and_solve(a, goal, pool)
            pool *= 4
    if sel is None:
        sel = _dp_witness(a, goal)
        if sel is None:
            return None
    if flip:
        chosen = set(sel)
        sel = [i for i in range(len(a)) if i not in chosen]
    assert sum(a[i] for i in sel) == b
    return Solution(tuple(sel))


@dataclass(frozen=True)
class DensityProfile:
    m: int
    max_a: int
    density: Fraction
    dense: bool


def density_profile(inst: Instance) -> DensityProfile:
    """m / max(a); ``dense`` uses the rule of thumb m^2 >= max(a)."""
    m = len(inst.summands)
    mx = inst.summands[-1]
    return DensityProfile(m, mx, Fraction(m, mx), m * m >= mx)


def parse_instance(text: str) -> Instance:
    """JSON ``{"a": [...], "b": N}`` or whitespace-separated integers with the
    target last.  Summands may come in any order."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
            values, target = obj["a"], obj["b"]
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ValueError(f"malformed instance JSON: {e}") from None
    else:
        try:
            nums = [int(t) for t in text.split()]
        except ValueError as e:
            raise ValueError(f"malformed instance text: {e}") from None
        if len(nums) < 2:
            raise ValueError("need at least one summand and a target")
        values, target = nums[:-1], nums[-1]
    if not all(isinstance(v, int) for v in values) or not isinstance(target, int):
        raise ValueError("summands and target must be integers")
    return Instance.from_values(values, target)
