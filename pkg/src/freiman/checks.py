"""Exhaustive small-scale checks: the dimension lemma, the T <= 3k-4
threshold, the c = 3 partial case and the volume Hypothesis.

Scans walk normalized representatives (min 0, gcd 1, reflection-canonical)
ordered by diameter, so each affine class whose smallest representative has
diameter <= bound is visited exactly once.  Work is cut into partitions by
(diameter, second element); results are concatenated in partition order, so
reports do not depend on the number of worker processes.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Union

from .extremal import decompose_T, predicted_V, t_range
from .isomorphism import freiman_dimension
from .sets import IntSet, LatticeSet, doubling_size, format_set, normalized_sets_with_diameter
from .volume import VolumeResult, volume_exact_1d


def lemma_bound(k: int, n: int) -> int:
    """Lower bound (n+1)k - n(n+1)/2 on |2A| for a set of dimension n."""
    if n < 1 or k < n + 1:
        raise ValueError(f"requires n >= 1 and k >= n+1, got k={k}, n={n}")
    return (n + 1) * k - n * (n + 1) // 2


def check_lemma(a: Union[IntSet, LatticeSet]) -> bool:
    k = len(a)
    if k == 1:
        return doubling_size(a) == 1
    d = freiman_dimension(a)
    return doubling_size(a) >= lemma_bound(k, d)


def partial_case_form(k: int, b: int) -> tuple[IntSet, int]:
    """The c = 3 extremal set {0, ..., k-3, k-2+b, 2(k-2+b)} and its |2A| = 3k-4+b."""
    if k < 3 or not 0 <= b <= k - 3:
        raise ValueError(f"requires 0 <= b <= k-3, got k={k}, b={b}")
    a = k - 2 + b
    s = IntSet(tuple(range(k - 2)) + (a, 2 * a))
    t = doubling_size(s)
    if t != 3 * k - 4 + b:
        raise AssertionError(f"|2A| = {t} for {s}, expected {3 * k - 4 + b}")
    return s, t


# --- partitioned enumeration -------------------------------------------------


def _partitions(k: int, bound: int) -> list[tuple[int, tuple[int, ...]]]:
    parts = []
    for d in range(max(k - 1, 1), bound + 1):
        if k <= 2:
            parts.append((d, ()))
        else:
            parts.extend((d, (x,)) for x in range(1, d - k + 3))
    return parts


def _run(fn, k: int, bound: int, threads: int) -> list:
    parts = _partitions(k, bound)
    args = [(k, d, prefix) for d, prefix in parts]
    if threads <= 1 or len(args) < 2:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, *zip(*args), chunksize=4))


# --- threshold scan ------------------------------------------------------------


@dataclass
class ThresholdReport:
    k: int
    diameter_bound: int
    sets_scanned: int = 0
    eligible: int = 0
    violations: list[IntSet] = field(default_factory=list)
    lemma_failures: list[IntSet] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "bound": self.diameter_bound,
            "scanned": self.sets_scanned,
            "eligible": self.eligible,
            "threshold": 3 * self.k - 4,
            "violations": [format_set(s) for s in self.violations],
            "lemma_failures": [format_set(s) for s in self.lemma_failures],
        }


def _threshold_part(k: int, d: int, prefix: tuple[int, ...]) -> tuple:
    scanned = eligible = 0
    bad, lemma_bad = [], []
    for a in normalized_sets_with_diameter(k, d, prefix):
        scanned += 1
        if not check_lemma(a):
            lemma_bad.append(a)
        if doubling_size(a) <= 3 * k - 4:
            eligible += 1
            if freiman_dimension(a) != 1:
                bad.append(a)
    return scanned, eligible, bad, lemma_bad


def dim1_threshold_scan(k: int, diameter_bound: int, threads: int = 1) -> ThresholdReport:
    """Every normalized set with |2A| <= 3k-4 should have Freiman dimension 1."""
    if k < 2:
        raise ValueError("threshold scan needs k >= 2")
    rep = ThresholdReport(k, diameter_bound)
    for scanned, eligible, bad, lemma_bad in _run(_threshold_part, k, diameter_bound, threads):
        rep.sets_scanned += scanned
        rep.eligible += eligible
        rep.violations.extend(bad)
        rep.lemma_failures.extend(lemma_bad)
    return rep


# --- hypothesis scan -------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    set: IntSet
    t: int
    v: int
    bound: int

    def to_dict(self) -> dict:
        return {"set": format_set(self.set), "T": self.t, "V": self.v, "bound": self.bound}


@dataclass
class ScanReport:
    k: int
    diameter_bound: int
    sets_scanned: int = 0
    dim1: int = 0
    higher_dim: int = 0
    immediate_pass: int = 0
    searched: int = 0
    violations: list[Violation] = field(default_factory=list)
    skipped_T: list[tuple[IntSet, int]] = field(default_factory=list)
    lemma_failures: list[IntSet] = field(default_factory=list)
    partial_checked: int = 0
    partial_over_points: list[Violation] = field(default_factory=list)
    partial_over_length: list[Violation] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def coverage_note(self) -> str:
        lo, hi = t_range(self.k) if self.k >= 3 else (0, 0)
        return (
            f"all {self.sets_scanned} affine classes of {self.k}-element sets whose normalized "
            f"representative has diameter <= {self.diameter_bound} were visited; "
            f"{self.dim1} have Freiman dimension 1 and of those {len(self.skipped_T)} have "
            f"|2A| outside [{lo}, {hi}] and were not checked against the bound; "
            f"classes needing a larger diameter were not examined"
        )

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "k": self.k,
            "bound": self.diameter_bound,
            "scanned": self.sets_scanned,
            "dim1": self.dim1,
            "higher_dim": self.higher_dim,
            "immediate_pass": self.immediate_pass,
            "searched": self.searched,
            "violations": [v.to_dict() for v in self.violations],
            "skipped_T": [{"set": format_set(s), "T": t} for s, t in self.skipped_T],
            "lemma_failures": [format_set(s) for s in self.lemma_failures],
            "partial_case": {
                "checked": self.partial_checked,
                "over_points_reading": [v.to_dict() for v in self.partial_over_points],
                "over_length_reading": [v.to_dict() for v in self.partial_over_length],
            },
            "coverage_note": self.coverage_note,
        }
        if timing:
            out["elapsed_ms"] = round(self.elapsed * 1000)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2)


def _volume(a: IntSet) -> int:
    res = volume_exact_1d(a, a.diameter)
    assert isinstance(res, VolumeResult)  # the set itself fits in its own diameter
    return res.value


def _hypothesis_part(k: int, d: int, prefix: tuple[int, ...]) -> dict:
    out = {
        "scanned": 0, "dim1": 0, "higher": 0, "immediate": 0, "searched": 0,
        "violations": [], "skipped": [], "lemma": [],
        "partial": 0, "over_points": [], "over_length": [],
    }
    lo, hi = t_range(k)
    for a in normalized_sets_with_diameter(k, d, prefix):
        out["scanned"] += 1
        if not check_lemma(a):
            out["lemma"].append(a)
        if freiman_dimension(a) != 1:
            out["higher"] += 1
            continue
        out["dim1"] += 1
        t = doubling_size(a)
        v = None
        if lo <= t <= hi:
            f = predicted_V(decompose_T(k, t))
            if d + 1 <= f:
                out["immediate"] += 1
            else:
                out["searched"] += 1
                v = _volume(a)
                if v > f:
                    out["violations"].append(Violation(a, t, v, f))
        else:
            out["skipped"].append((a, t))
        if 3 * k - 3 <= t <= 4 * k - 7:
            out["partial"] += 1
            b = t - (3 * k - 4)
            points_bound = 2 * k - 3 + 2 * b
            if d + 1 > points_bound:
                v = _volume(a) if v is None else v
                if v > points_bound:
                    out["over_points"].append(Violation(a, t, v, points_bound))
                if v > points_bound + 1:
                    out["over_length"].append(Violation(a, t, v, points_bound + 1))
    return out


def hypothesis_scan(k: int, diameter_bound: int, threads: int = 1) -> ScanReport:
    """Check V(A) <= predicted bound for every 1-dimensional normalized set
    of size k and diameter <= diameter_bound.

    A violation would be a counterexample to an open conjecture; the scan
    reports it rather than raising.
    """
    if k < 3:
        raise ValueError("hypothesis scan needs k >= 3")
    start = time.perf_counter()
    rep = ScanReport(k, diameter_bound)
    for part in _run(_hypothesis_part, k, diameter_bound, threads):
        rep.sets_scanned += part["scanned"]
        rep.dim1 += part["dim1"]
        rep.higher_dim += part["higher"]
        rep.immediate_pass += part["immediate"]
        rep.searched += part["searched"]
        rep.violations.extend(part["violations"])
        rep.skipped_T.extend(part["skipped"])
        rep.lemma_failures.extend(part["lemma"])
        rep.partial_checked += part["partial"]
        rep.partial_over_points.extend(part["over_points"])
        rep.partial_over_length.extend(part["over_length"])
    rep.elapsed = time.perf_counter() - start
    return rep
