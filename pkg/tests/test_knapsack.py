import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from freiman.knapsack import (
    CapacityError,
    Instance,
    Solution,
    density_profile,
    parse_instance,
    solve,
)
from oracles import brute_subset_sums, primes


@pytest.mark.parametrize(
    "a, b, expected",
    [((3, 5, 7), 12, (1, 2)), ((3, 5, 7), 1, None), ((2, 4, 6), 7, None), ((3, 5, 7), 0, ())],
)
def test_examples(a, b, expected):
    sol = solve(Instance(a, b))
    assert (sol.selection if sol else None) == expected


def test_instance_validation():
    with pytest.raises(ValueError):
        Instance((3, 3), 1)
    with pytest.raises(ValueError):
        Instance((0, 3), 1)
    with pytest.raises(ValueError):
        Instance((5, 3), 1)
    with pytest.raises(ValueError):
        Instance.from_values([4, 2, 4], 1)
    assert Instance.from_values([7, 3, 5], 8).summands == (3, 5, 7)


def test_capacity_guard():
    with pytest.raises(CapacityError):
        solve(Instance((2**39, 2**39 + 1, 2**39 + 2), 5))


@settings(max_examples=300)
@given(st.lists(st.integers(1, 200), min_size=1, max_size=12, unique=True), st.integers(0, 1500))
def test_agrees_with_enumeration(values, b):
    inst = Instance.from_values(values, b)
    sol = solve(inst)
    assert (sol is not None) == (b in brute_subset_sums(inst.summands))
    if sol is not None:
        assert sum(sol.values(inst)) == b
        assert len(set(sol.selection)) == len(sol.selection)


@given(st.lists(st.integers(1, 100), min_size=1, max_size=10, unique=True), st.integers(0, 600), st.randoms())
def test_permutation_invariance(values, b, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert (solve(Instance.from_values(values, b)) is None) == (
        solve(Instance.from_values(shuffled, b)) is None
    )


def test_large_reduction_path_witness():
    rng = random.Random(5)
    vals = rng.sample(range(1, 60001), 20000)
    for frac in (0.1, 0.5, 0.93):
        inst = Instance.from_values(vals, int(sum(vals) * frac) + 1)
        sol = solve(inst)
        assert sol is not None and sum(sol.values(inst)) == inst.target


def test_large_infeasible_by_gcd():
    vals = [2 * x for x in range(1, 30001)]
    assert solve(Instance.from_values(vals, 10**8 + 1)) is None


def test_density_profile():
    p = density_profile(Instance((3, 5, 7), 0))
    assert (p.m, p.max_a, p.density, p.dense) == (3, 7, Fraction(3, 7), True)
    pr = density_profile(Instance(tuple(primes(100)), 0))
    assert pr.max_a == 541 and pr.dense
    assert not density_profile(Instance((10**9, 2 * 10**9), 0)).dense


def test_parse_formats():
    a = parse_instance('{"a": [7, 3, 5], "b": 12}')
    b = parse_instance("3 5 7\n12")
    assert a == b == Instance((3, 5, 7), 12)
    for bad in ('{"a": [1, 1], "b": 2}', '{"b": 2}', "x y", "5"):
        with pytest.raises(ValueError):
            parse_instance(bad)
