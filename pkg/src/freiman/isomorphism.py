"""Freiman isomorphisms of order 2, Freiman dimension and universal models.

Two sets are (additively) isomorphic when some bijection between them
preserves every coincidence ``a_i + a_j = a_p + a_q`` in both directions.
The complete invariant is therefore the *quadruple pattern*: which
unordered index pairs share a pairwise sum.

The dimension is computed from the relation lattice R spanned by the
vectors ``e_i + e_j - e_p - e_q`` of all coincidences: an image of maximal
affine dimension is the projection of the standard basis onto Z^k / R_sat,
so ``d(A) = k - 1 - rank(R)``.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import intlinalg
from .sets import IntSet, LatticeSet

Pair = tuple[int, int]


def _elements(a) -> tuple:
    return a.points if isinstance(a, LatticeSet) else a.elements


def _add(x, y):
    if isinstance(x, tuple):
        return tuple(u + v for u, v in zip(x, y))
    return x + y


def sum_classes(els: Sequence) -> dict:
    """Map each pairwise sum value to the sorted list of index pairs (i <= j) producing it."""
    classes = defaultdict(list)
    n = len(els)
    for i in range(n):
        for j in range(i, n):
            classes[_add(els[i], els[j])].append((i, j))
    return classes


@dataclass(frozen=True)
class QuadruplePattern:
    """All non-trivial identities ``{i,j} ~ {p,q}`` with ``(i,j) < (p,q)``."""

    k: int
    equalities: tuple[tuple[Pair, Pair], ...]

    def __len__(self) -> int:
        return len(self.equalities)

    def __str__(self) -> str:
        if not self.equalities:
            return "(no identities)"
        return "; ".join(f"{{{i},{j}}}~{{{p},{q}}}" for (i, j), (p, q) in self.equalities)


def quadruple_pattern(a) -> QuadruplePattern:
    els = _elements(a)
    eqs = []
    for pairs in sum_classes(els).values():
        for x in range(len(pairs)):
            for y in range(x + 1, len(pairs)):
                eqs.append((pairs[x], pairs[y]))
    return QuadruplePattern(len(els), tuple(sorted(eqs)))


@dataclass(frozen=True)
class RelationLattice:
    k: int
    basis: tuple[tuple[int, ...], ...]
    rank: int


def relation_vector(k: int, eq: tuple[Pair, Pair]) -> tuple[int, ...]:
    (i, j), (p, q) = eq
    v = [0] * k
    v[i] += 1
    v[j] += 1
    v[p] -= 1
    v[q] -= 1
    return tuple(v)


def relation_lattice(a) -> RelationLattice:
    pat = quadruple_pattern(a)
    rows = tuple(relation_vector(pat.k, eq) for eq in pat.equalities)
    return RelationLattice(pat.k, rows, intlinalg.rank(rows))


def freiman_dimension(a) -> int:
    """Maximal affine dimension of an additively isomorphic image of ``a``."""
    lat = relation_lattice(a)
    if lat.k == 1:
        return 0
    return lat.k - 1 - lat.rank


def universal_model(a) -> LatticeSet:
    """An image of ``a`` in Z^d(a) with exactly the same quadruple pattern.

    The first element maps to the origin.
    """
    els = _elements(a)
    k = len(els)
    if k < 2:
        raise ValueError("universal_model needs at least 2 elements")
    pat = quadruple_pattern(a)
    # coordinates w.r.t. f_i = e_i - e_0 (i >= 1), a basis of the sum-zero lattice
    rows = [relation_vector(k, eq)[1:] for eq in pat.equalities]
    kernel = intlinalg.integer_kernel(rows, k - 1)
    kernel = intlinalg.size_reduce(kernel)
    d = len(kernel)
    points = [(0,) * d]
    for i in range(k - 1):
        points.append(tuple(row[i] for row in kernel))
    return LatticeSet(d, tuple(points))


def affine_dimension(points: Sequence[Sequence[int]]) -> int:
    base = points[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in points[1:]]
    return intlinalg.rank(diffs) if diffs else 0


# --- isomorphism search ----------------------------------------------------


class SumClassMatcher:
    """Incrementally maintained bijection between sum classes of two sets.

    ``push(i_vals, j_vals)`` registers the pair sums of a newly assigned element
    against all previously assigned ones; it returns False (and leaves no trace)
    when some coincidence holds on one side but not on the other.
    """

    def __init__(self):
        self.fwd: dict = {}
        self.bwd: dict = {}
        self.src: list = []
        self.dst: list = []
        self._added: list[list] = []

    def push(self, x, y) -> bool:
        added = []
        fwd, bwd = self.fwd, self.bwd
        for u, v in zip(self.src + [x], self.dst + [y]):
            s = _add(x, u)
            t = _add(y, v)
            ft = fwd.get(s)
            bs = bwd.get(t)
            if ft is None and bs is None:
                fwd[s] = t
                bwd[t] = s
                added.append((s, t))
            elif ft != t or bs != s:
                for s2, t2 in added:
                    del fwd[s2]
                    del bwd[t2]
                return False
        self.src.append(x)
        self.dst.append(y)
        self._added.append(added)
        return True

    def pop(self) -> None:
        for s, t in self._added.pop():
            del self.fwd[s]
            del self.bwd[t]
        self.src.pop()
        self.dst.pop()


def fingerprints(els: Sequence) -> list[tuple[int, ...]]:
    """Per element: sorted multiplicities of the sums it takes part in."""
    classes = sum_classes(els)
    mult = {s: len(p) for s, p in classes.items()}
    return [tuple(sorted(mult[_add(x, y)] for y in els)) for x in els]


def find_isomorphism(a, b) -> Optional[tuple[int, ...]]:
    """Lexicographically first index permutation ``pi`` such that
    ``a[i] -> b[pi[i]]`` is an additive isomorphism, or None."""
    xs, ys = _elements(a), _elements(b)
    k = len(xs)
    if k != len(ys):
        return None
    ca, cb = sum_classes(xs), sum_classes(ys)
    if len(ca) != len(cb) or sorted(map(len, ca.values())) != sorted(map(len, cb.values())):
        return None
    fa, fb = fingerprints(xs), fingerprints(ys)
    if sorted(fa) != sorted(fb):
        return None
    candidates = [[j for j in range(k) if fb[j] == fa[i]] for i in range(k)]
    matcher = SumClassMatcher()
    used = [False] * k
    perm: list[int] = []

    def extend(i: int) -> bool:
        if i == k:
            return True
        for j in candidates[i]:
            if used[j] or not matcher.push(xs[i], ys[j]):
                continue
            used[j] = True
            perm.append(j)
            if extend(i + 1):
                return True
            perm.pop()
            used[j] = False
            matcher.pop()
        return False

    return tuple(perm) if extend(0) else None


def is_isomorphic(a, b) -> bool:
    return find_isomorphism(a, b) is not None


def same_pattern(xs: Sequence, ys: Sequence) -> bool:
    """True when the index-aligned sequences have identical quadruple patterns."""
    if len(xs) != len(ys):
        return False
    m = SumClassMatcher()
    return all(m.push(x, y) for x, y in zip(xs, ys))


# --- brute-force dimension oracle -----------------------------------------


def _box(d: int, radius: int) -> list[tuple[int, ...]]:
    pts = [()]
    for _ in range(d):
        pts = [p + (c,) for p in pts for c in range(-radius, radius + 1)]
    return pts


def _deduction_order(a: IntSet) -> list[tuple[int, Optional[tuple]]]:
    """Static assignment order for the box search.

    Each entry is ``(index, rule)``; ``rule`` is None for a free element or a
    relation ``{index: coef, other: coef, ...}`` whose other members come
    earlier, so the image of ``index`` is forced by a single identity.
    """
    k = len(a)
    rels = []
    for eq in quadruple_pattern(a).equalities:
        v = relation_vector(k, eq)
        rels.append({i: c for i, c in enumerate(v) if c})
    placed = {0}
    order: list[tuple[int, Optional[tuple]]] = [(0, None)]
    while len(order) < k:
        hit = None
        for rel in rels:
            missing = [i for i in rel if i not in placed]
            if len(missing) == 1:
                hit = (missing[0], tuple(sorted(rel.items())))
                break
        if hit is None:
            hit = (min(i for i in range(k) if i not in placed), None)
        placed.add(hit[0])
        order.append(hit)
    return order


def _canonical_first(p: tuple[int, ...]) -> bool:
    return all(x >= 0 for x in p) and all(x >= y for x, y in zip(p, p[1:]))


def embeddings(a: IntSet, d: int, radius: int) -> Iterator[dict[int, tuple]]:
    """Pattern-identical images of ``a`` in [-radius, radius]^d of affine
    dimension exactly ``d``, with a[0] mapped to the origin.

    Exhaustive up to the coordinate permutations and sign changes of the box
    (the first free point is taken with non-negative, non-increasing
    coordinates).  Yields dicts index -> point.
    """
    els = a.elements
    k = len(els)
    order = _deduction_order(a)
    free_after = [0] * (k + 1)
    for pos in range(k - 1, -1, -1):
        free_after[pos] = free_after[pos + 1] + (order[pos][1] is None and pos > 0)
    box = _box(d, radius)
    first_box = [p for p in box if _canonical_first(p)]
    matcher = SumClassMatcher()
    origin = (0,) * d
    matcher.push(els[0], origin)
    image = {0: origin}
    points = [origin]

    def forced(idx: int, rule: tuple) -> list[tuple]:
        coef = dict(rule)
        c = coef.pop(idx)
        acc = [0] * d
        for j, cj in coef.items():
            for t in range(d):
                acc[t] -= cj * image[j][t]
        if any(x % c for x in acc):
            return []
        p = tuple(x // c for x in acc)
        return [p] if all(-radius <= x <= radius for x in p) else []

    def extend(pos: int, cur_rank: int, first_free: bool):
        if pos == k:
            if cur_rank == d:
                yield dict(image)
            return
        if cur_rank + free_after[pos] < d:
            return
        idx, rule = order[pos]
        if rule is not None:
            cands = forced(idx, rule)
        else:
            cands = first_box if first_free else box
        for p in cands:
            if not matcher.push(els[idx], p):
                continue
            image[idx] = p
            points.append(p)
            r = affine_dimension(points)
            yield from extend(pos + 1, r, first_free and rule is not None)
            points.pop()
            del image[idx]
            matcher.pop()

    # the matcher sees elements in search order; sums are order-independent
    yield from extend(1, 0, True)


def oracle_dimension(a: IntSet, radius: int = 4) -> int:
    """Largest d for which a box search finds a pattern-identical image of
    affine dimension d.  Independent of the relation-lattice computation."""
    k = len(a)
    if k == 1:
        return 0
    for d in range(k - 1, 1, -1):
        if next(embeddings(a, d, radius), None) is not None:
            return d
    return 1
