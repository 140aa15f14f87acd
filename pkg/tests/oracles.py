"""Brute-force reference computations, deliberately naive and independent of
the library code paths they check."""
from itertools import combinations, combinations_with_replacement


def brute_sumset(xs, ys):
    if xs and isinstance(next(iter(xs)), tuple):
        return {tuple(u + v for u, v in zip(x, y)) for x in xs for y in ys}
    return {x + y for x in xs for y in ys}


def brute_T(xs):
    return len(brute_sumset(xs, xs))


def brute_identities(xs):
    """Set of frozensets {pair, pair} of index pairs with equal sums."""
    xs = list(xs)
    pairs = list(combinations_with_replacement(range(len(xs)), 2))

    def s(p):
        a, b = xs[p[0]], xs[p[1]]
        return tuple(u + v for u, v in zip(a, b)) if isinstance(a, tuple) else a + b

    return {frozenset((p, q)) for p, q in combinations(pairs, 2) if s(p) == s(q)}


def brute_subset_sums(values):
    sums = [0]
    for a in values:
        sums = sums + [s + a for s in sums]
    return sums


def primes(n):
    out, x = [], 2
    while len(out) < n:
        if all(x % p for p in out if p * p <= x):
            out.append(x)
        x += 1
    return out
