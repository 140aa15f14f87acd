"""Parameterized extremal sets and their exact |2A| and volume formulas.

The base construction is

    A = {0, 1, ..., m-2, a, 2a, 4a, ..., 2^(c-2) a},   a = m - 1 + b,

with 3 <= m <= k, c = k + 2 - m and 0 <= b <= m - 3.  For it

    |2A| = (k-1) + (k-2) + ... + m + 2m - 1 + b = c k - (c^2 + c - 4)/2 + b
    V(A) = 2^(c-2) a + 1.
"""
from __future__ import annotations

from dataclasses import dataclass

from .sets import IntSet, LatticeSet, check_magnitude


@dataclass(frozen=True)
class ExtremalParams:
    k: int
    c: int
    b: int = 0

    def __post_init__(self):
        k, c, b = self.k, self.c, self.b
        if k < 3:
            raise ValueError(f"requires k >= 3 (so that 3 <= m <= k), got k={k}")
        if not 2 <= c <= k - 1:
            raise ValueError(f"requires 2 <= c <= k-1, got c={c}, k={k}")
        if not 0 <= b <= k - c - 1:
            raise ValueError(f"requires 0 <= b <= k-c-1 = {k - c - 1}, got b={b}")

    @classmethod
    def from_m(cls, k: int, m: int, b: int = 0) -> ExtremalParams:
        if not 3 <= m <= k:
            raise ValueError(f"requires 3 <= m <= k, got m={m}, k={k}")
        return cls(k, k + 2 - m, b)

    @property
    def m(self) -> int:
        return self.k + 2 - self.c

    @property
    def a(self) -> int:
        """The element a_{m-1} = m - 1 + b."""
        return self.m - 1 + self.b


def predicted_T(p: ExtremalParams) -> int:
    twice = 2 * p.c * p.k - (p.c * p.c + p.c - 4)
    return twice // 2 + p.b


def predicted_V(p: ExtremalParams) -> int:
    return check_magnitude(2 ** (p.c - 2) * p.a + 1)


def construct_base(p: ExtremalParams) -> IntSet:
    head = tuple(range(p.m - 1))
    tail = tuple(check_magnitude(2**j * p.a) for j in range(p.c - 1))
    return IntSet(head + tail)


def t_range(k: int) -> tuple[int, int]:
    """Smallest and largest |2A| reachable by the parameterization for size k."""
    return 2 * k - 1, (k * k - k + 4) // 2


def decompose_T(k: int, T: int) -> ExtremalParams:
    """The canonical (c, b) with predicted_T == T.

    Where b = k-c-1 and (c+1, 0) give the same T, the larger c wins.
    """
    lo, hi = t_range(k) if k >= 3 else (None, None)
    if k < 3 or not lo <= T <= hi:
        raise ValueError(f"T={T} outside the representable range [{lo}, {hi}] for k={k}")
    for c in range(2, k):
        b = T - predicted_T(ExtremalParams(k, c, 0))
        if 0 <= b < k - c - 1 or (c == k - 1 and b == 0):
            return ExtremalParams(k, c, b)
    raise AssertionError("unreachable: the c-ranges tile [2k-1, (k^2-k+4)/2]")


def hypothesis_bound(k: int, T: int) -> int:
    """Conjectured maximum of V(A) over 1-dimensional sets with |A| = k, |2A| = T."""
    return predicted_V(decompose_T(k, T))


def multi_offset(k: int, d: int) -> int:
    """k + (k-1) + ... + (k-d+2): what the unit vectors add to |2A|."""
    return sum(k - j for j in range(d - 1))


def construct_multi(k: int, T: int, d: int) -> LatticeSet:
    """A' e_1 together with e_2, ..., e_d, where |A'| = k-d+1 and A' is the
    base construction with |2A'| = T - multi_offset(k, d)."""
    if d < 2:
        raise ValueError("construct_multi needs d >= 2")
    k1 = k - d + 1
    t1 = T - multi_offset(k, d)
    try:
        inner = construct_base(decompose_T(k1, t1))
    except ValueError as e:
        raise ValueError(f"no {d}-dimensional construction for k={k}, T={T}: {e}") from None
    pts = [(x,) + (0,) * (d - 1) for x in inner]
    for i in range(1, d):
        pts.append(tuple(int(j == i) for j in range(d)))
    return LatticeSet(d, tuple(pts))
