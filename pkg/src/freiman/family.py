"""The binary family of extremal sets grown from the base sets B(m).

A base set B(m) has min 0, max a = m-1+b and |2B(m)| = 2m-1+b.  From a set
B(s) of size s two sets of size s+1 are grown:

    prime:  B(s) + {2^(s-m+1) a}
    sym:    the reflection of the prime child.

Growing every base set to size k gives 2^(k-m) * p_m leaves.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .extremal import ExtremalParams, predicted_T, predicted_V
from .sets import IntSet, check_magnitude, doubling_size, sym

PRIME, SYM = "prime", "sym"


@dataclass(frozen=True)
class FamilyNode:
    set: IntSet
    path: tuple[str, ...]
    base_index: int

    @property
    def s(self) -> int:
        return len(self.set)


def enumerate_base_sets(m: int, b: int) -> list[IntSet]:
    """All B with |B| = m, min 0, max m-1+b and |2B| = 2m-1+b, sorted."""
    if m < 3 or not 0 <= b <= m - 3:
        raise ValueError(f"requires m >= 3 and 0 <= b <= m-3, got m={m}, b={b}")
    top = m - 1 + b
    out = []
    for mid in combinations(range(1, top), m - 2):
        cand = IntSet((0,) + mid + (top,))
        if doubling_size(cand) == 2 * m - 1 + b:
            out.append(cand)
    return out


def children(node: FamilyNode, params: ExtremalParams) -> tuple[FamilyNode, FamilyNode]:
    if node.s >= params.k:
        raise ValueError(f"node already has size {node.s} >= k={params.k}")
    new = check_magnitude(2 ** (node.s - params.m + 1) * params.a)
    prime = IntSet.of(node.set.elements + (new,))
    return (
        FamilyNode(prime, node.path + (PRIME,), node.base_index),
        FamilyNode(sym(prime), node.path + (SYM,), node.base_index),
    )


def enumerate_family(params: ExtremalParams) -> list[FamilyNode]:
    """All 2^(c-2) * p_m leaves, ordered by base index then path (prime < sym).

    Leaves equal as sets are kept; see ``duplicate_sets``.
    """
    bases = enumerate_base_sets(params.m, params.b)
    leaves: list[FamilyNode] = []

    def grow(node: FamilyNode) -> None:
        if node.s == params.k:
            leaves.append(node)
            return
        for child in children(node, params):
            grow(child)

    for i, base in enumerate(bases):
        grow(FamilyNode(base, (), i))
    return leaves


def duplicate_sets(nodes: list[FamilyNode]) -> list[IntSet]:
    counts = Counter(n.set for n in nodes)
    return sorted((s for s, c in counts.items() if c > 1), key=lambda s: s.elements)


@dataclass(frozen=True)
class NodeStats:
    node: FamilyNode
    t: int
    max: int
    t_matches: bool
    max_matches: bool


def family_stats(nodes: list[FamilyNode], params: ExtremalParams) -> list[NodeStats]:
    want_t = predicted_T(params)
    want_max = predicted_V(params) - 1
    out = []
    for n in nodes:
        t = doubling_size(n.set)
        out.append(NodeStats(n, t, n.set.max, t == want_t, n.set.max == want_max))
    return out
