"""Command-line front end.

Exit codes: 0 success, 1 a valid negative answer (not isomorphic,
infeasible, bound exceeded, violations found), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .checks import check_lemma, dim1_threshold_scan, hypothesis_scan, lemma_bound
from .extremal import (
    ExtremalParams,
    construct_base,
    construct_multi,
    multi_offset,
    predicted_T,
    predicted_V,
)
from .family import duplicate_sets, enumerate_family, family_stats
from .isomorphism import find_isomorphism, freiman_dimension, quadruple_pattern, universal_model
from .knapsack import CapacityError, parse_instance, solve
from .sets import doubling_size, doubling_stats, format_set, parse_set, sumset
from .volume import BoundExceeded, volume_exact_1d


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_sumset(args) -> int:
    a, b = parse_set(args.a), parse_set(args.b)
    s = sumset(a, b)
    _emit(args, {"sumset": list(s), "size": len(s)}, str(s))
    return 0


def cmd_doubling(args) -> int:
    st = doubling_stats(parse_set(args.a))
    c = st.coefficient
    _emit(args, {"k": st.k, "T": st.t, "coefficient": [c.numerator, c.denominator]}, str(st.t))
    return 0


def cmd_iso(args) -> int:
    a, b = parse_set(args.a), parse_set(args.b)
    w = find_isomorphism(a, b)
    if w is None:
        _emit(args, {"isomorphic": False}, "not isomorphic")
        return 1
    mapping = [[a[i], b[j]] for i, j in enumerate(w)]
    text = "isomorphic: " + ", ".join(f"{x}->{y}" for x, y in mapping)
    _emit(args, {"isomorphic": True, "witness": list(w), "mapping": mapping}, text)
    return 0


def cmd_dim(args) -> int:
    a = parse_set(args.a)
    d = freiman_dimension(a)
    payload = {"dimension": d, "identities": str(quadruple_pattern(a))}
    text = str(d)
    if len(a) >= 2:
        model = universal_model(a)
        payload["model"] = [list(p) for p in model.points]
        text += f"\nmodel: {model}"
    _emit(args, payload, text)
    return 0


def cmd_volume(args) -> int:
    a = parse_set(args.a)
    if len(a) >= 2 and freiman_dimension(a) != 1:
        raise UsageError("volume requires a set of Freiman dimension 1")
    res = volume_exact_1d(a, args.bound)
    if isinstance(res, BoundExceeded):
        _emit(args, {"bound_exceeded": res.bound}, f"no image within diameter {res.bound}")
        return 1
    wit = [p[0] for p in res.witness.points]
    payload = {"V": res.value, "witness": wit, "exhausted_bound": res.exhausted_bound}
    _emit(args, payload, f"{res.value}\nwitness: {{{','.join(map(str, wit))}}}")
    return 0


def _params(k: int, c: int, b: int) -> ExtremalParams:
    try:
        return ExtremalParams(k, c, b)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_construct(args) -> int:
    if args.d is None or args.d == 1:
        p = _params(args.k, args.c, args.b)
        s = construct_base(p)
        payload = {"set": list(s), "T": predicted_T(p), "V": predicted_V(p),
                   "T_brute": doubling_size(s)}
        _emit(args, payload, f"{s}\nT={predicted_T(p)} V={predicted_V(p)}")
        return 0
    d = args.d
    inner = _params(args.k - d + 1, args.c, args.b)
    t = predicted_T(inner) + multi_offset(args.k, d)
    s = construct_multi(args.k, t, d)
    payload = {"points": [list(p) for p in s.points], "T": t, "T_brute": doubling_size(s),
               "box_volume": 2 ** (d - 1) * predicted_V(inner)}
    _emit(args, payload, f"{s}\nT={t}")
    return 0


def cmd_family(args) -> int:
    try:
        p = ExtremalParams.from_m(args.k, args.m, args.b)
    except ValueError as e:
        raise UsageError(str(e)) from None
    nodes = enumerate_family(p)
    stats = family_stats(nodes, p)
    summary = {
        "count": len(nodes),
        "T": sorted({st.t for st in stats}),
        "max": sorted({st.max for st in stats}),
        "predicted_T": predicted_T(p),
        "predicted_V": predicted_V(p),
        "all_T_match": all(st.t_matches for st in stats),
        "all_max_match": all(st.max_matches for st in stats),
        "duplicates": [format_set(s) for s in duplicate_sets(nodes)],
    }
    for n in nodes:
        print(format_set(n.set))
    print(json.dumps(summary, sort_keys=True))
    return 0


def cmd_lemma(args) -> int:
    a = parse_set(args.a)
    k, d, t = len(a), freiman_dimension(a), doubling_size(a)
    bound = lemma_bound(k, d) if k >= 2 else 1
    ok = check_lemma(a)
    _emit(args, {"k": k, "dimension": d, "T": t, "bound": bound, "holds": ok},
          f"d={d} T={t} bound={bound} {'holds' if ok else 'FAILS'}")
    return 0 if ok else 1


def cmd_scan(args) -> int:
    if args.kind == "hypothesis":
        rep = hypothesis_scan(args.k, args.bound, threads=args.threads)
        print(rep.to_json(timing=args.timing))
        return 1 if rep.violations else 0
    rep = dim1_threshold_scan(args.k, args.bound, threads=args.threads)
    print(json.dumps(rep.to_dict(), indent=2))
    return 1 if rep.violations else 0


def cmd_knapsack(args) -> int:
    text = sys.stdin.read() if args.file == "-" else open(args.file).read()
    inst = parse_instance(text)
    try:
        sol = solve(inst)
    except CapacityError as e:
        raise UsageError(str(e)) from None
    if sol is None:
        print(json.dumps({"feasible": False, "selection": []}))
        return 1
    print(json.dumps({"feasible": True, "selection": list(sol.selection),
                      "values": sol.values(inst)}))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freiman", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", help="A + B")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_sumset)

    p = sub.add_parser("doubling", help="|2A| and the doubling coefficient")
    p.add_argument("a")
    p.set_defaults(func=cmd_doubling)

    p = sub.add_parser("iso", help="additive isomorphism test")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("dim", help="Freiman dimension and a universal model")
    p.add_argument("a")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("volume", help="exact V(A) of a 1-dimensional set")
    p.add_argument("a")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("construct", help="extremal set for (k, c, b), optionally d-dimensional")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--d", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("family", help="the extremal family grown from B(m)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--b", type=int, default=0)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("scan", help="exhaustive scans")
    p.add_argument("kind", choices=["hypothesis", "dim1"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="add elapsed_ms to the report")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("lemma", help="check |2A| >= (d+1)k - d(d+1)/2")
    p.add_argument("a")
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("knapsack", help="0-1 feasibility; FILE holds JSON or whitespace text")
    p.add_argument("file")
    p.set_defaults(func=cmd_knapsack)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OverflowError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
