"""Lattice-point counting in convex hulls and the volume V(A) of 1-dimensional sets."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, prod
from typing import Optional, Union

from .isomorphism import SumClassMatcher, find_isomorphism, freiman_dimension
from .sets import IntSet, LatticeSet


@dataclass(frozen=True)
class VolumeResult:
    """``value`` lattice points in the hull of ``witness``; no image fits in
    fewer, every diameter up to ``exhausted_bound`` having been searched."""

    value: int
    witness: LatticeSet
    exhausted_bound: int


@dataclass(frozen=True)
class BoundExceeded:
    bound: int


@dataclass(frozen=True)
class Parallelepiped:
    edges: tuple[int, ...]

    def __post_init__(self):
        if not self.edges:
            raise ValueError("a parallelepiped needs at least one edge")

    @property
    def dim(self) -> int:
        return len(self.edges)

    @property
    def volume(self) -> int:
        return prod(self.edges)


# --- hull point counts -----------------------------------------------------


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_2d(points) -> list[tuple[int, int]]:
    """Monotone chain; returns hull vertices counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _segment_count(p, q) -> int:
    return gcd(*(abs(x - y) for x, y in zip(p, q))) + 1


def _count_2d(points) -> int:
    hull = convex_hull_2d(points)
    if len(hull) == 1:
        return 1
    if len(hull) == 2:
        return _segment_count(*hull)
    twice_area = 0
    boundary = 0
    for i, p in enumerate(hull):
        q = hull[(i + 1) % len(hull)]
        twice_area += p[0] * q[1] - q[0] * p[1]
        boundary += gcd(q[0] - p[0], q[1] - p[1])
    # Pick: points = area + boundary/2 + 1
    return (twice_area + boundary) // 2 + 1


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


def _count_3d(points) -> int:
    pts = sorted(set(points))
    if len(pts) == 1:
        return 1
    # collinear?
    base = pts[0]
    far = max(pts, key=lambda p: _dot(_sub(p, base), _sub(p, base)))
    direction = _sub(far, base)
    normal = None
    for p in pts:
        c = _cross3(direction, _sub(p, base))
        if any(c):
            normal = c
            break
    if normal is None:
        ends = sorted(pts, key=lambda p: _dot(_sub(p, base), direction))
        return _segment_count(ends[0], ends[-1])
    if all(_dot(normal, _sub(p, base)) == 0 for p in pts):
        # coplanar: drop the coordinate where the normal is non-zero (injective on the plane)
        drop = next(i for i in range(3) if normal[i] != 0)
        keep = [i for i in range(3) if i != drop]
        hull2 = convex_hull_2d([(p[keep[0]], p[keep[1]]) for p in pts])
        plane_rhs = _dot(normal, base)

        def member(x):
            if _dot(normal, x) != plane_rhs:
                return False
            q = (x[keep[0]], x[keep[1]])
            return _in_polygon(hull2, q)

        return _box_count(pts, member)
    # full-dimensional: supporting planes from all triples
    faces = set()
    for p, q, r in combinations(pts, 3):
        n = _cross3(_sub(q, p), _sub(r, p))
        if not any(n):
            continue
        h = _dot(n, p)
        side = {(_dot(n, x) > h) - (_dot(n, x) < h) for x in pts}
        if side <= {0, -1}:
            faces.add((n, h))
        elif side <= {0, 1}:
            faces.add((tuple(-c for c in n), -h))
    return _box_count(pts, lambda x: all(_dot(n, x) <= h for n, h in faces))


def _in_polygon(hull, q) -> bool:
    if len(hull) == 1:
        return q == hull[0]
    if len(hull) == 2:
        a, b = hull
        return _cross(a, b, q) == 0 and min(a, b) <= q <= max(a, b)
    return all(_cross(hull[i], hull[(i + 1) % len(hull)], q) >= 0 for i in range(len(hull)))


def _box_count(pts, member) -> int:
    lo = [min(p[i] for p in pts) for i in range(3)]
    hi = [max(p[i] for p in pts) for i in range(3)]
    n = 0
    for x in range(lo[0], hi[0] + 1):
        for y in range(lo[1], hi[1] + 1):
            for z in range(lo[2], hi[2] + 1):
                if member((x, y, z)):
                    n += 1
    return n


def hull_point_count(s: Union[LatticeSet, IntSet]) -> int:
    """Number of integer points in the convex hull of a set in Z^1, Z^2 or Z^3."""
    if isinstance(s, IntSet):
        return s.diameter + 1
    if s.dim == 1:
        return s.points[-1][0] - s.points[0][0] + 1
    if s.dim == 2:
        return _count_2d(s.points)
    if s.dim == 3:
        return _count_3d(s.points)
    raise ValueError(f"hull point counting in dimension {s.dim} > 3 is not supported")


def parallelepiped_upper(a_prime_volume: int, d: int) -> Parallelepiped:
    """Box with edges (V(A'), 2, ..., 2) holding A' e_1 together with e_2, ..., e_d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if d >= 2 and a_prime_volume < 2:
        raise ValueError("V(A') must be >= 2 when d >= 2")
    return Parallelepiped((a_prime_volume,) + (2,) * (d - 1))


# --- exact volume of 1-dimensional sets ---------------------------------------


def _search_diameter(els: tuple[int, ...], d: int) -> Optional[tuple[int, ...]]:
    """An image of ``els`` inside [0, d] using both 0 and d with the same
    quadruple pattern, or None.  Values are assigned in input order."""
    k = len(els)
    matcher = SumClassMatcher()
    image: list[int] = []
    uses_lo = uses_hi = 0

    def extend(i: int) -> bool:
        nonlocal uses_lo, uses_hi
        if i == k:
            return uses_lo > 0 and uses_hi > 0
        missing = (uses_lo == 0) + (uses_hi == 0)
        if missing > k - i:
            return False
        # reflection x -> d - x is an isomorphism onto [0, d]: keep image[0] <= d/2
        top = d // 2 if i == 0 else d
        for v in range(top + 1):
            if not matcher.push(els[i], v):
                continue
            image.append(v)
            uses_lo += v == 0
            uses_hi += v == d
            if extend(i + 1):
                return True
            uses_lo -= v == 0
            uses_hi -= v == d
            image.pop()
            matcher.pop()
        return False

    return tuple(image) if extend(0) else None


def _require_dim1(a: IntSet) -> None:
    if len(a) >= 2 and freiman_dimension(a) != 1:
        raise ValueError("exact volume is only computed for sets of Freiman dimension 1")


def volume_exact_1d(a: IntSet, bound: int) -> Union[VolumeResult, BoundExceeded]:
    """V(A) for a set of Freiman dimension 1 by iterative deepening on the
    image diameter D = k-1, k, ..., bound."""
    _require_dim1(a)
    k = len(a)
    if k == 1:
        return VolumeResult(1, LatticeSet(1, ((0,),)), 0)
    for d in range(k - 1, bound + 1):
        img = _search_diameter(a.elements, d)
        if img is not None:
            return VolumeResult(d + 1, LatticeSet(1, tuple((v,) for v in img)), d - 1)
    return BoundExceeded(bound)


def volume_oracle(a: IntSet, bound: int) -> Union[VolumeResult, BoundExceeded]:
    """Independent check of ``volume_exact_1d``: scan the subsets of [0, bound]
    containing 0 by increasing maximum and test each for isomorphism."""
    _require_dim1(a)
    k = len(a)
    if k == 1:
        return VolumeResult(1, LatticeSet(1, ((0,),)), 0)
    for d in range(k - 1, bound + 1):
        for cand in _subsets_with_max(k, d):
            if find_isomorphism(a, cand) is not None:
                return VolumeResult(d + 1, LatticeSet.from_intset(cand), d - 1)
    return BoundExceeded(bound)


def _subsets_with_max(k: int, d: int):
    for mid in combinations(range(1, d), k - 2):
        yield IntSet((0,) + mid + (d,))
