"""Command-line front end.

Exit codes: 0 for a passing or true outcome, 1 for failing or false,
2 for bad input, 3 when a search budget ran out before a verdict.
Reports in --json mode (and the always-JSON sigma report) are the only
bytes on stdout; progress and error text go to stderr. Identical
arguments, seed, and limits reproduce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .errors import (BudgetExceededError, ContractError, Graph6Error,
                     InputError, LimitError)
from .extremal import (SigmaReport, extremal_witness, sigma_exact,
                       sigma_lower_bound, verify_conjecture, verify_theorem1)
from .graphs import (DEFAULT_VERTEX_LIMIT, MAX_VERTICES, encode_graph6,
                     km_minus_c4)
from .proof_replay import (ReplayError, replay_theorem2, verify_base_cases,
                           verify_theorem2_range)
from .realizations import havel_hakimi_realize, is_potentially
from .sequences import DegreeSequence, degree_sum, is_graphical

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3

ENV_LIMIT = "KMC4_VERTEX_LIMIT"


@dataclass
class RunConfig:
    vertex_limit: int = DEFAULT_VERTEX_LIMIT
    realization_budget: int | None = None
    parallelism: int = 1
    output_mode: str = "text"  # text | json
    seed: int | None = None
    progress: object = None  # callable taking one message string, or None

    @property
    def json_output(self) -> bool:
        return self.output_mode == "json"


def _resolve_limit(value: int | None) -> int:
    if value is None:
        raw = os.environ.get(ENV_LIMIT)
        if raw is None:
            value = DEFAULT_VERTEX_LIMIT
        else:
            try:
                value = int(raw)
            except ValueError:
                raise InputError(
                    f"{ENV_LIMIT} must be an integer, got {raw!r}") from None
    if not 1 <= value <= MAX_VERTICES:
        raise InputError(
            f"vertex limit must be in 1..{MAX_VERTICES}, got {value}")
    return value


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_graphical(args, cfg: RunConfig) -> int:
    seq = DegreeSequence.from_text(args.sequence)
    ok = is_graphical(seq)
    if cfg.json_output:
        _emit({"sequence": list(seq), "graphical": ok})
    else:
        print("graphical" if ok else "not graphical")
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_realize(args, cfg: RunConfig) -> int:
    seq = DegreeSequence.from_text(args.sequence)
    if seq.n > cfg.vertex_limit:
        raise LimitError(f"realization limited to {cfg.vertex_limit} "
                         f"vertices (got {seq.n})")
    if not is_graphical(seq):
        raise InputError(f"sequence {seq.to_text()} is not graphical")
    g = havel_hakimi_realize(seq)
    if cfg.json_output:
        _emit({"sequence": list(seq), "graph6": encode_graph6(g),
               "edges": g.edge_count})
    else:
        print(encode_graph6(g))
    return EXIT_PASS


def cmd_potential(args, cfg: RunConfig) -> int:
    seq = DegreeSequence.from_text(args.sequence)
    if not is_graphical(seq):
        raise InputError(f"sequence {seq.to_text()} is not graphical")
    target = km_minus_c4(args.m)
    res = is_potentially(seq, target, limit=cfg.vertex_limit,
                         budget=cfg.realization_budget, order_seed=cfg.seed)
    if cfg.json_output:
        _emit({
            "sequence": list(seq),
            "m": args.m,
            "verdict": res.verdict,
            "witness": encode_graph6(res.witness) if res.witness else None,
            "embedding": list(res.embedding) if res.embedding else None,
            "explored": res.explored,
            "exhausted": res.exhausted,
        })
    elif res.verdict:
        print(encode_graph6(res.witness))
    elif res.exhausted:
        print(f"not potential: exhausted {res.explored} realization classes")
    else:
        print(f"inconclusive: budget ran out after {res.explored} classes")
    if res.verdict:
        return EXIT_PASS
    return EXIT_FAIL if res.exhausted else EXIT_INCONCLUSIVE


def cmd_sigma(args, cfg: RunConfig) -> int:
    # This subcommand is a report generator; it always emits JSON.
    bound = sigma_lower_bound(args.m, args.n)
    if args.bound:
        _emit(SigmaReport(m=args.m, n=args.n, lower_bound=bound,
                          exact=None, verdict="not_computed").to_json_dict())
        return EXIT_PASS
    try:
        report = sigma_exact(args.m, args.n, limit=cfg.vertex_limit,
                             workers=cfg.parallelism,
                             budget=cfg.realization_budget,
                             progress=cfg.progress)
    except BudgetExceededError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        _emit(SigmaReport(m=args.m, n=args.n, lower_bound=bound,
                          exact=None, verdict="not_computed").to_json_dict())
        return EXIT_INCONCLUSIVE
    _emit(report.to_json_dict())
    return EXIT_PASS if report.verdict == "matches" else EXIT_FAIL


def cmd_witness(args, cfg: RunConfig) -> int:
    g, seq = extremal_witness(args.m, args.n)
    if cfg.json_output:
        _emit({
            "m": args.m,
            "n": args.n,
            "sequence": list(seq),
            "graph6": encode_graph6(g),
            "degree_sum": degree_sum(seq),
            "lower_bound": sigma_lower_bound(args.m, args.n),
        })
    else:
        print(encode_graph6(g))
    return EXIT_PASS


def cmd_replay(args, cfg: RunConfig) -> int:
    seq = DegreeSequence.from_text(args.sequence)
    trace = replay_theorem2(seq, limit=cfg.vertex_limit)
    if cfg.json_output:
        for line in trace.to_json_lines():
            print(line)
    else:
        print(trace.to_text())
    return EXIT_PASS


def cmd_verify_theorem1(args, cfg: RunConfig) -> int:
    if args.n_max < 4:
        raise InputError(f"need --n-max >= 4, got {args.n_max}")
    if args.m is not None and args.m < 4:
        raise InputError(f"need --m >= 4, got {args.m}")
    ms = [args.m] if args.m is not None else list(range(4, args.n_max + 1))
    reports = []
    for m in ms:
        for n in range(m, args.n_max + 1):
            reports.append(verify_theorem1(m, n, limit=cfg.vertex_limit))
            if cfg.progress is not None:
                cfg.progress(f"checked lower bound at m={m} n={n}")
    if not reports:
        raise InputError(f"empty grid: no n in [{args.m}, {args.n_max}]")
    passed = all(r.passed for r in reports)
    if cfg.json_output:
        _emit({"reports": [r.to_json_dict() for r in reports],
               "passed": passed})
    else:
        for r in reports:
            print(f"m={r.m} n={r.n}: pattern-free {r.pattern_free}, "
                  f"classes {r.realization_classes}, "
                  f"sum-check {r.sum_is_bound_minus_two} -> "
                  f"{'ok' if r.passed else 'FAIL'}")
        print("PASS" if passed else "FAIL")
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_verify_theorem2(args, cfg: RunConfig) -> int:
    report = verify_theorem2_range(args.n_max, limit=cfg.vertex_limit,
                                   workers=cfg.parallelism,
                                   progress=cfg.progress)
    if cfg.json_output:
        _emit(report.to_json_dict())
    else:
        for e in report.entries:
            print(f"n={e['n']}: exact {e['exact']} (expected {e['expected']}), "
                  f"{e['sequences_checked']} sequences replayed, "
                  f"{e['replay_failures']} replay failures, "
                  f"{e['agreement_failures']} disagreements")
        print("PASS" if report.passed else "FAIL")
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_verify_conjecture(args, cfg: RunConfig) -> int:
    if args.m is None:
        raise InputError("verify conjecture needs --m")
    reports = verify_conjecture(args.m, (args.m, args.n_max),
                                limit=cfg.vertex_limit,
                                workers=cfg.parallelism,
                                progress=cfg.progress)
    passed = all(r.verdict == "matches" for r in reports)
    if cfg.json_output:
        _emit({"reports": [r.to_json_dict() for r in reports],
               "passed": passed})
    else:
        for r in reports:
            print(f"m={r.m} n={r.n}: exact {r.exact}, formula {r.lower_bound}, "
                  f"verdict {r.verdict}")
        print("PASS" if passed else "FAIL")
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_verify_base_cases(args, cfg: RunConfig) -> int:
    family = tuple(args.family_n) if args.family_n else (8,)
    report = verify_base_cases(family, limit=cfg.vertex_limit)
    if cfg.json_output:
        _emit(report.to_json_dict())
    else:
        for e in report.entries:
            seq = DegreeSequence(e["sequence"]).to_text()
            tag = e["witness"] if e["potential"] else "NO WITNESS"
            print(f"n={e['n']} ({seq}): {tag}")
        print("PASS" if report.passed else "FAIL")
    return EXIT_PASS if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kmc4",
        description="Potential-subgraph thresholds for the complete graph "
                    "on m vertices with a 4-cycle of edges removed.")
    p.add_argument("--json", action="store_true",
                   help="machine-readable output on stdout")
    p.add_argument("--limit", type=int, default=None, metavar="N",
                   help=f"vertex cap for exhaustive work "
                        f"(default ${ENV_LIMIT} or {DEFAULT_VERTEX_LIMIT})")
    p.add_argument("--budget", type=int, default=None, metavar="K",
                   help="cap on realization classes per search; a negative "
                        "verdict cut short this way exits 3")
    p.add_argument("--workers", type=int, default=1, metavar="W",
                   help="worker processes for threshold sweeps")
    p.add_argument("--seed", type=int, default=None,
                   help="shuffle realization search order, reproducibly")
    p.add_argument("--progress", action="store_true",
                   help="progress lines on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("graphical", help="test a degree sequence")
    sp.add_argument("sequence", help="terms like 4,2,2,2,2 or 5,3^5")
    sp.set_defaults(func=cmd_graphical)

    sp = sub.add_parser("realize", help="greedy realization, graph6 output")
    sp.add_argument("sequence")
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("potential",
                        help="search realizations for the target subgraph")
    sp.add_argument("sequence")
    sp.add_argument("--m", type=int, default=5,
                    help="target size (default 5)")
    sp.set_defaults(func=cmd_potential)

    sp = sub.add_parser("sigma",
                        help="threshold report (always JSON on stdout)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True,
                      help="exhaustive sweep (default)")
    mode.add_argument("--bound", dest="bound", action="store_true",
                      help="closed-form lower bound only, no sweep")
    sp.set_defaults(func=cmd_sigma, bound=False)

    sp = sub.add_parser("witness",
                        help="extremal graph meeting the lower bound")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("replay",
                        help="constructive proof trace for the m=5 threshold")
    sp.add_argument("sequence")
    sp.set_defaults(func=cmd_replay)

    sp = sub.add_parser("verify", help="machine-check one of the claims")
    vsub = sp.add_subparsers(dest="claim", required=True)

    v = vsub.add_parser("theorem1", help="lower-bound witness grid")
    v.add_argument("--m", type=int, default=None,
                   help="single m to check (default: every m from 4)")
    v.add_argument("--n-max", type=int, default=9)
    v.set_defaults(func=cmd_verify_theorem1)

    v = vsub.add_parser("theorem2",
                        help="m=5 equality with full proof replay")
    v.add_argument("--n-max", type=int, default=7)
    v.set_defaults(func=cmd_verify_theorem2)

    v = vsub.add_parser("conjecture", help="equality sweep for one m")
    v.add_argument("--m", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.set_defaults(func=cmd_verify_conjecture)

    v = vsub.add_parser("base-cases",
                        help="induction base sequences have witnesses")
    v.add_argument("--family-n", type=int, action="append", metavar="N",
                   help="extra hub-plus-cycle instance (repeatable; default 8)")
    v.set_defaults(func=cmd_verify_base_cases)

    return p


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    progress = None
    if args.progress:
        def progress(msg):
            print(msg, file=sys.stderr, flush=True)
    cfg = RunConfig(vertex_limit=_resolve_limit(args.limit),
                    realization_budget=args.budget,
                    parallelism=args.workers,
                    output_mode="json" if args.json else "text",
                    seed=args.seed,
                    progress=progress)
    return args.func(args, cfg)


def main(argv=None) -> int:
    try:
        return run(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return EXIT_PASS
        return code if isinstance(code, int) else EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except ReplayError as exc:
        print(f"replay failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (InputError, ContractError, Graph6Error, LimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
