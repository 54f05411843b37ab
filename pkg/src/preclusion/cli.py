"""Command-line front end: generate graphs, run the solvers, build and check
the reduction, and reproduce the verification suites, all with JSON reports.

Exit codes: 0 feasible/pass, 1 infeasible or fail-with-counterexample,
2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import asdict, dataclass
from typing import Optional

from . import __version__
from .errors import PreclusionError
from .formats import detect_format, emit, parse
from .graphs import Graph, generate, hypercube, with_bipartition
from .cubes import (
    lemma_report_conditional_sets,
    super_connectivity_report,
    verify_mps_hypercube,
    verify_trivial_conditional_connected,
)
from .reduction import build_reduction, verify_equivalence, fuzz_equivalence
from .solver import (
    AK,
    MP,
    PreclusionCertificate,
    chain_suite,
    mp_s,
    solve,
)

_FMT = {"edges": "edge_list", "g6": "graph6", "json": "json"}


@dataclass
class RunReport:
    """Machine-readable result of one CLI invocation. All fields are plain
    JSON values, so serialization round-trips losslessly."""

    command: list
    input: dict
    result: dict
    timing: dict
    stats: Optional[dict]
    deterministic: bool
    version: str

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as handle:
            text = handle.read()
    g = parse(detect_format(text), text)
    return with_bipartition(g)


def _json_value(value: float):
    return "infinity" if math.isinf(value) else int(value)


def certificate_to_dict(cert: PreclusionCertificate) -> dict:
    out: dict = {"kind": cert.kind.label(), "value": _json_value(cert.value)}
    if cert.witness is not None:
        out["witness"] = sorted(cert.witness.members)
        out["witness_edges"] = [list(pair) for pair in cert.witness.pairs()]
    else:
        out["witness"] = None
    out["evidence"] = asdict(cert.evidence) if cert.evidence is not None else None
    if cert.reason is not None:
        out["reason"] = cert.reason
    if cert.note is not None:
        out["note"] = cert.note
    return out


def _report(args: argparse.Namespace, command: list, input_summary: dict,
            result: dict, started: float, stats: Optional[dict] = None) -> RunReport:
    return RunReport(
        command=command,
        input=input_summary,
        result=result,
        timing={"wall_seconds": time.perf_counter() - started},
        stats=stats,
        deterministic=bool(getattr(args, "deterministic", False)),
        version=__version__,
    )


def _emit_report(report: RunReport) -> None:
    sys.stdout.write(report.to_json())


def _kind_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace):
    if args.mode == "mp":
        return MP
    if args.mode == "ak":
        return AK
    if args.s is None:
        parser.error("--mode mps requires --s")
    return mp_s(args.s)


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_gen(parser, args) -> int:
    g = generate(args.family, args.params)
    sys.stdout.write(emit(g, _FMT[args.format]))
    return 0


def cmd_solve(parser, args) -> int:
    started = time.perf_counter()
    g = _read_graph(args.input)
    kind = _kind_from_args(parser, args)
    cert = solve(g, kind, budget=args.budget, deterministic=args.deterministic,
                 jobs=args.jobs)
    command = ["solve", "--mode", args.mode]
    if args.mode == "mps":
        command += ["--s", str(args.s)]
    if args.budget is not None:
        command += ["--budget", str(args.budget)]
    report = _report(
        args,
        command=command,
        input_summary={"n": g.n, "m": g.m, "family": None},
        result=certificate_to_dict(cert),
        started=started,
        stats=cert.stats,
    )
    _emit_report(report)
    return 0 if cert.feasible else 1


def cmd_reduce(parser, args) -> int:
    started = time.perf_counter()
    g = _read_graph(args.input)
    r = build_reduction(g)
    gadget: dict = {
        "n": r.gadget.n,
        "m": r.gadget.m,
        "labels": {
            "u_prime": r.u_prime,
            "u_dprime": r.u_dprime,
            "v_prime": r.v_prime,
            "v_dprime": r.v_dprime,
            "edge_e": r.edge_e,
            "edge_e_prime": r.edge_e_prime,
        },
    }
    if args.format == "g6":
        gadget["graph6"] = emit(r.gadget, "graph6").strip()
    else:
        gadget["graph"] = json.loads(emit(r.gadget, "json"))
    result = {"gadget": gadget}
    ok = True
    if args.check is not None:
        eq = verify_equivalence(g, args.check, s=args.s or 1,
                                source_limit=max(16, g.m))
        result["equivalence"] = {
            "k": args.check,
            "s": args.s or 1,
            "left": eq.left,
            "right_ak": eq.right_ak,
            "right_mps": eq.right_mps,
            "agree": eq.agree,
        }
        ok = eq.agree
    report = _report(
        args,
        command=["reduce"] + (["--check", str(args.check)] if args.check is not None else []),
        input_summary={"n": g.n, "m": g.m, "family": None},
        result=result,
        started=started,
    )
    _emit_report(report)
    return 0 if ok else 1


def _verify_hypercube(args) -> tuple[dict, bool]:
    n, s = args.params[0], args.params[1]
    cert = verify_mps_hypercube(n, s, jobs=args.jobs)
    expected = 2 * n - 2
    passed = cert.value == expected
    return {
        "suite": "hypercube",
        "n": n,
        "s": s,
        "expected": expected,
        "certificate": certificate_to_dict(cert),
        "passed": passed,
    }, passed


def _verify_lemma5(args) -> tuple[dict, bool]:
    n = args.params[0]
    samples = args.count if args.count is not None else 100_000
    seed = args.seed if args.seed is not None else 0
    out = super_connectivity_report(n, samples=samples, seed=seed)
    out["suite"] = "lemma5"
    out["trivial_conditional_sets_leave_connected"] = verify_trivial_conditional_connected(n)
    passed = out["passed"] and out["trivial_conditional_sets_leave_connected"]
    return out, passed


def _verify_lemma4(args) -> tuple[dict, bool]:
    n = args.params[0]
    out = lemma_report_conditional_sets(n, allow_slow=args.slow)
    out["suite"] = "lemma4"
    return out, out["passed"]


def _verify_chain(args) -> tuple[dict, bool]:
    seed = args.params[0] if len(args.params) > 0 else (args.seed or 0)
    count = args.params[1] if len(args.params) > 1 else (args.count or 100)
    out = chain_suite(seed, count, jobs=args.jobs)
    out["suite"] = "chain"
    out["seed"] = seed
    return out, out["passed"]


def _verify_reduction_fuzz(args) -> tuple[dict, bool]:
    seed = args.params[0] if len(args.params) > 0 else (args.seed or 0)
    count = args.params[1] if len(args.params) > 1 else (args.count or 200)
    out = fuzz_equivalence(seed, count)
    out["suite"] = "reduction-fuzz"
    out["seed"] = seed
    return out, out["passed"]


_SUITES = {
    "hypercube": (_verify_hypercube, 2),
    "lemma5": (_verify_lemma5, 1),
    "lemma4": (_verify_lemma4, 1),
    "chain": (_verify_chain, 0),
    "reduction-fuzz": (_verify_reduction_fuzz, 0),
}


def cmd_verify(parser, args) -> int:
    started = time.perf_counter()
    runner, needed = _SUITES[args.suite]
    if len(args.params) < needed:
        parser.error(f"suite {args.suite!r} needs {needed} parameter(s)")
    result, passed = runner(args)
    report = _report(
        args,
        command=["verify", args.suite] + [str(p) for p in args.params],
        input_summary={"n": None, "m": None, "family": args.suite},
        result=result,
        started=started,
    )
    _emit_report(report)
    return 0 if passed else 1


def cmd_bench(parser, args) -> int:
    started = time.perf_counter()
    kind = _kind_from_args(parser, args)
    rows = []
    for n in range(args.min_n, args.max_n + 1):
        g = hypercube(n)
        t0 = time.perf_counter()
        cert = solve(g, kind, deterministic=args.deterministic, jobs=args.jobs)
        rows.append({
            "n": n,
            "vertices": g.n,
            "edges": g.m,
            "value": _json_value(cert.value),
            "nodes": cert.stats["nodes"] if cert.stats else None,
            "seconds": time.perf_counter() - t0,
        })
    if args.csv:
        sys.stdout.write("n,vertices,edges,value,nodes,seconds\n")
        for row in rows:
            sys.stdout.write(
                f"{row['n']},{row['vertices']},{row['edges']},{row['value']},"
                f"{row['nodes']},{row['seconds']:.6f}\n")
        return 0
    report = _report(
        args,
        command=["bench", args.mode],
        input_summary={"n": None, "m": None, "family": "hypercube"},
        result={"rows": rows},
        started=started,
    )
    _emit_report(report)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="preclusion",
        description="Exact matching preclusion / anti-Kekule solvers with certificates.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_gen = sub.add_parser("gen", help="generate a named graph family instance")
    p_gen.add_argument("family", choices=[
        "hypercube", "complete", "complete_bipartite", "petersen", "cycle", "path"])
    p_gen.add_argument("params", nargs="*", type=int)
    p_gen.add_argument("--format", choices=sorted(_FMT), default="edges")
    p_gen.set_defaults(func=cmd_gen)

    p_solve = sub.add_parser("solve", help="compute a preclusion certificate")
    p_solve.add_argument("input", nargs="?", default="-",
                         help="graph file (edge list or graph6); '-' for stdin")
    p_solve.add_argument("--mode", choices=["mp", "mps", "ak"], required=True)
    p_solve.add_argument("--s", type=int, default=None,
                         help="restriction level for --mode mps")
    p_solve.add_argument("--budget", type=int, default=None,
                         help="decision mode: search only up to this cardinality")
    p_solve.add_argument("--deterministic", action="store_true")
    p_solve.add_argument("--jobs", type=int, default=1)
    p_solve.set_defaults(func=cmd_solve)

    p_reduce = sub.add_parser("reduce", help="build the gadget for a bipartite source")
    p_reduce.add_argument("input", nargs="?", default="-")
    p_reduce.add_argument("--check", type=int, default=None, metavar="K",
                          help="also verify the equivalence at budget K via the oracle")
    p_reduce.add_argument("--s", type=int, default=None,
                          help="restriction level for the --check equivalence")
    p_reduce.add_argument("--format", choices=["g6", "json"], default="json")
    p_reduce.add_argument("--deterministic", action="store_true")
    p_reduce.set_defaults(func=cmd_reduce)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=sorted(_SUITES))
    p_verify.add_argument("params", nargs="*", type=int)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--count", type=int, default=None)
    p_verify.add_argument("--slow", action="store_true",
                          help="allow the long-running lemma4 n=4 enumeration")
    p_verify.add_argument("--deterministic", action="store_true")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_bench = sub.add_parser("bench", help="time the solver over a hypercube sweep")
    p_bench.add_argument("--mode", choices=["mp", "mps", "ak"], default="mp")
    p_bench.add_argument("--s", type=int, default=None)
    p_bench.add_argument("--min-n", type=int, default=2)
    p_bench.add_argument("--max-n", type=int, default=3)
    p_bench.add_argument("--csv", action="store_true")
    p_bench.add_argument("--deterministic", action="store_true")
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except PreclusionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
