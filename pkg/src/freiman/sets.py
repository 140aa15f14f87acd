"""Finite integer sets, lattice sets and sumset arithmetic.

All values are immutable.  Integer magnitudes are capped at 2**62; any
operation that would produce a larger coordinate raises ``MagnitudeError``
instead of silently growing (the exponential family constructions hit the
cap quickly and should fail loudly).
"""
from __future__ import annotations

import heapq
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Iterator, Sequence

MAX_MAGNITUDE = 2**62


class MagnitudeError(OverflowError):
    """A value exceeded the +-2**62 magnitude bound."""


def check_magnitude(x: int) -> int:
    if x > MAX_MAGNITUDE or x < -MAX_MAGNITUDE:
        raise MagnitudeError(f"|{x}| exceeds the magnitude bound 2**62")
    return x


@dataclass(frozen=True)
class IntSet:
    """A non-empty finite set of integers stored in strictly increasing order."""

    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(int(x) for x in self.elements)
        if not els:
            raise ValueError("IntSet must be non-empty")
        for x, y in zip(els, els[1:]):
            if y <= x:
                raise ValueError(f"elements must be strictly increasing, got {x} then {y}")
        for x in els:
            check_magnitude(x)
        object.__setattr__(self, "elements", els)

    @classmethod
    def of(cls, values: Iterable[int]) -> IntSet:
        """Build from any iterable, sorting and removing duplicates."""
        return cls(tuple(sorted(set(values))))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.elements

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    @property
    def diameter(self) -> int:
        return self.elements[-1] - self.elements[0]

    def __str__(self) -> str:
        return "{" + format_set(self) + "}"

    def __repr__(self) -> str:
        return f"IntSet({str(self)})"

    def to_json(self) -> str:
        return json.dumps(list(self.elements))


@dataclass(frozen=True)
class LatticeSet:
    """A non-empty finite set of distinct points of Z^dim, kept sorted."""

    dim: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        pts = set()
        for p in self.points:
            p = tuple(int(x) for x in p)
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have {self.dim} coordinates")
            for x in p:
                check_magnitude(x)
            if p in pts:
                raise ValueError(f"duplicate point {p}")
            pts.add(p)
        if not pts:
            raise ValueError("LatticeSet must be non-empty")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    @classmethod
    def from_intset(cls, a: IntSet) -> LatticeSet:
        return cls(1, tuple((x,) for x in a))

    def to_intset(self) -> IntSet:
        if self.dim != 1:
            raise ValueError("only 1-dimensional lattice sets convert to IntSet")
        return IntSet(tuple(p[0] for p in self.points))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.points)

    def __str__(self) -> str:
        return "{" + ",".join("(" + ",".join(map(str, p)) + ")" for p in self.points) + "}"


@dataclass(frozen=True)
class DoublingStats:
    k: int
    t: int
    coefficient: Fraction


def _add(x, y):
    if isinstance(x, tuple):
        return tuple(check_magnitude(u + v) for u, v in zip(x, y))
    return check_magnitude(x + y)


def _merged_sums(xs: Sequence, ys: Sequence) -> list:
    # k translated copies of the sorted ys, merged; translation keeps each row sorted
    rows = [[_add(x, y) for y in ys] for x in xs]
    out = []
    for s in heapq.merge(*rows):
        if not out or out[-1] != s:
            out.append(s)
    return out


def sumset(a, b):
    """Return {x + y : x in a, y in b} for two IntSets or two LatticeSets."""
    if isinstance(a, LatticeSet) or isinstance(b, LatticeSet):
        if not (isinstance(a, LatticeSet) and isinstance(b, LatticeSet)) or a.dim != b.dim:
            raise ValueError("sumset operands must live in the same lattice")
        return LatticeSet(a.dim, tuple(_merged_sums(a.points, b.points)))
    return IntSet(tuple(_merged_sums(a.elements, b.elements)))


def doubling_size(a) -> int:
    """|2A| for an IntSet or LatticeSet."""
    els = a.points if isinstance(a, LatticeSet) else a.elements
    return len(_merged_sums(els, els))


def doubling_stats(a: IntSet) -> DoublingStats:
    t = doubling_size(a)
    return DoublingStats(len(a), t, Fraction(t, len(a)))


def sym(b: IntSet) -> IntSet:
    """Reflection x -> max(b) - x."""
    m = b.max
    return IntSet(tuple(m - x for x in reversed(b.elements)))


def normalize(a: IntSet) -> IntSet:
    """Canonical affine representative: min 0, gcd of differences 1, and the
    lexicographically smaller of the set and its reflection."""
    if len(a) == 1:
        return IntSet((0,))
    lo = a.min
    g = reduce(gcd, (x - lo for x in a.elements))
    shifted = IntSet(tuple((x - lo) // g for x in a.elements))
    reflected = sym(shifted)
    return reflected if reflected.elements < shifted.elements else shifted


def is_arithmetic_progression(a: IntSet) -> bool:
    els = a.elements
    if len(els) <= 2:
        return True
    step = els[1] - els[0]
    return all(y - x == step for x, y in zip(els, els[1:]))


def affine_image(a: IntSet, p: int, q: int) -> IntSet:
    """The set {p*x + q}; p must be non-zero."""
    if p == 0:
        raise ValueError("p must be non-zero")
    return IntSet.of(check_magnitude(p * x + q) for x in a)


def is_normalized(els: Sequence[int]) -> bool:
    if els[0] != 0:
        return False
    if len(els) == 1:
        return True
    if reduce(gcd, els) != 1:
        return False
    m = els[-1]
    return tuple(els) <= tuple(m - x for x in reversed(els))


def normalized_sets(k: int, diameter_bound: int, min_diameter: int = 0) -> Iterator[IntSet]:
    """All normalized IntSets of size k with diameter in [min_diameter, diameter_bound].

    Ordered by diameter, then lexicographically.  Each affine class with a
    representative of diameter <= diameter_bound is visited exactly once.
    """
    if k == 1:
        if min_diameter <= 0:
            yield IntSet((0,))
        return
    for d in range(max(k - 1, min_diameter, 1), diameter_bound + 1):
        yield from normalized_sets_with_diameter(k, d)


def normalized_sets_with_diameter(k: int, d: int, prefix: tuple[int, ...] = ()) -> Iterator[IntSet]:
    """Normalized sets {0, ..., d} of size k; ``prefix`` fixes leading interior elements."""
    lo = prefix[-1] + 1 if prefix else 1
    need = k - 2 - len(prefix)
    for rest in combinations(range(lo, d), need):
        els = (0,) + prefix + rest + (d,)
        if is_normalized(els):
            yield IntSet(els)


# --- text / JSON formats ---------------------------------------------------

_SET_RE = re.compile(r"^\s*\{?\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\}?\s*$")


def format_set(a: IntSet) -> str:
    return ",".join(str(x) for x in a.elements)


def parse_set(text: str) -> IntSet:
    """Parse ``{a,b,c}``, ``a,b,c`` or a JSON array; elements must be increasing."""
    text = text.strip()
    if text.startswith("["):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"malformed JSON set: {e}") from None
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise ValueError("JSON set must be an array of integers")
    else:
        if not _SET_RE.match(text):
            raise ValueError(f"malformed set literal {text!r}")
        body = text.strip("{} \t")
        values = [int(v) for v in body.split(",")] if body else []
    if not values:
        raise ValueError("set literal is empty")
    return IntSet(tuple(values))
