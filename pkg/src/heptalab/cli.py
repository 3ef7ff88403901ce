"""Command-line front end: analyze, verify, generate, decompose.

Reports are JSON Lines with sorted keys and a pinned schema_version; the
--no-timings flag removes the only non-deterministic field, making repeated
runs byte-identical.  Exit codes: 0 clean, 1 violations found, 2
inconclusive results present, 3 input error.  Violations dominate
inconclusive; input errors dominate both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from multiprocessing import Pool
from typing import Iterable, Iterator, Sequence

from . import __version__
from .coloring import chromatic_number_exact
from .corpus import all_graphs_up_to, random_graphs
from .detect import (
    SearchBudgetExceeded,
    clique_number,
    find_full_house,
    find_odd_hole,
    has_c7_complement,
)
from .graph import Graph, Graph6Error, from_graph6, to_graph6
from .harmonious import DEFAULT_PARITY_BUDGET, find_harmonious_cutset
from .structures import (
    GenerationError,
    generate_heptagram_type,
    generate_t11_type,
    recognize_heptagram_type,
    recognize_t11_type,
)

SCHEMA_VERSION = 1
CHI_CAP = 40
DETECTOR_BUDGET = 10**8
EXHAUSTIVE_CUTSET_MAX_N = 12

THEOREM_IDS = {
    "t1.3": "T1.3",
    "t1.4-bound": "T1.4-bound",
    "t1.4-eq": "T1.4-equality",
    "perfection": "perfection-when-no-C7bar",
    "t2.3": "T2.3-dichotomy",
}


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("HEPTALAB_WORKERS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# per-graph analysis
# ---------------------------------------------------------------------------


def analyze_graph(
    g: Graph,
    *,
    structures: bool = False,
    budget: int = DETECTOR_BUDGET,
    cutset_budget: int = DEFAULT_PARITY_BUDGET,
    with_timings: bool = True,
) -> dict:
    """Full per-graph report: class flags, clique and chromatic numbers, and
    (on request, for class members) structure witnesses."""
    t0 = time.perf_counter()
    notes: list[str] = []
    try:
        odd_hole_free = find_odd_hole(g, budget=budget) is None
    except SearchBudgetExceeded:
        odd_hole_free = None
        notes.append("odd hole search hit its budget")
    full_house_free = find_full_house(g) is None
    omega, _ = clique_number(g)
    if g.n <= CHI_CAP:
        chi = chromatic_number_exact(g).chi
    else:
        chi = None
        notes.append(f"chromatic number skipped (n > {CHI_CAP})")
    c7 = has_c7_complement(g)
    report = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "graph6": to_graph6(g).decode("ascii"),
        "n": g.n,
        "m": g.edge_count,
        "flags": {
            "odd_hole_free": odd_hole_free,
            "full_house_free": full_house_free,
            "k4_free": omega < 4,
            "has_c7_complement": c7,
        },
        "omega": omega,
        "chi": chi,
        "seed": None,
        "structures": None,
        "notes": notes,
    }
    if structures and odd_hole_free and full_house_free:
        found: dict = {}
        if g.is_connected() and g.n >= 3:
            res = find_harmonious_cutset(g, budget=cutset_budget)
            found["harmonious_status"] = res.status
            found["harmonious"] = (
                res.partition.to_json_dict() if res.partition else None
            )
        else:
            found["harmonious_status"] = "skipped"
            found["harmonious"] = None
        t11 = recognize_t11_type(g) if g.n >= 11 else None
        hepta = recognize_heptagram_type(g) if g.n >= 7 else None
        found["t11_type"] = t11.to_json_dict() if t11 else None
        found["heptagram_type"] = hepta.to_json_dict() if hepta else None
        report["structures"] = found
    if with_timings:
        report["timings"] = {"total_ms": round((time.perf_counter() - t0) * 1e3, 3)}
    return report


# ---------------------------------------------------------------------------
# theorem evaluation
# ---------------------------------------------------------------------------


def class_record(g: Graph, chi_cap: int = CHI_CAP) -> dict:
    """The per-graph facts the theorem checks consume.  Work stops at the
    first disqualifier: a graph with an odd hole is outside every
    hypothesis, so nothing further is computed for it."""
    rec: dict = {
        "graph6": to_graph6(g).decode("ascii"),
        "n": g.n,
        "connected": g.is_connected(),
        "odd_hole_free": find_odd_hole(g) is None,
    }
    if not rec["odd_hole_free"]:
        return rec
    rec["full_house_free"] = find_full_house(g) is None
    omega, _ = clique_number(g)
    rec["omega"] = omega
    rec["chi"] = chromatic_number_exact(g).chi if g.n <= chi_cap else None
    rec["has_c7_complement"] = has_c7_complement(g)
    return rec


def record_outcome(rec: dict, theorem: str) -> str:
    """Outcome of one record under one theorem: "filtered" (hypothesis not
    met), "pass", "violation", or "inconclusive"."""
    if theorem == "t2.3":
        raise ValueError("t2.3 needs the graph; use evaluate_theorem")
    if not rec["odd_hole_free"]:
        return "filtered"
    omega, chi = rec["omega"], rec["chi"]
    if theorem == "t1.3":
        if omega >= 4:
            return "filtered"
        if chi is None:
            return "inconclusive"
        return "pass" if chi <= 4 else "violation"
    if not rec["full_house_free"]:
        return "filtered"
    if theorem == "t1.4-bound":
        if chi is None:
            return "inconclusive"
        return "pass" if chi <= omega + 1 else "violation"
    if theorem == "t1.4-eq":
        if chi is None:
            return "inconclusive"
        equality = chi == omega + 1
        characterized = omega == 3 and rec["has_c7_complement"]
        return "pass" if equality == characterized else "violation"
    if theorem == "perfection":
        if rec["has_c7_complement"]:
            return "filtered"
        if chi is None:
            return "inconclusive"
        return "pass" if chi == omega else "violation"
    raise ValueError(f"unknown theorem {theorem!r}")


def dichotomy_outcome(g: Graph, rec: dict, budget: int) -> str:
    """Outcome under the structural dichotomy: connected class members with
    the 7-vertex antihole and no harmonious cutset must be recognized as one
    of the two structured classes.  The no-cutset hypothesis is certified by
    exhaustive search only for n <= 12; larger graphs come back
    inconclusive unless an actual cutset filters them out."""
    if not rec["connected"] or not rec["odd_hole_free"]:
        return "filtered"
    if not rec.get("full_house_free") or not rec.get("has_c7_complement"):
        return "filtered"
    exhaustive = g.n <= EXHAUSTIVE_CUTSET_MAX_N
    res = find_harmonious_cutset(
        g, budget=budget, candidates="all" if exhaustive else "auto"
    )
    if res.status == "found":
        return "filtered"
    if res.status == "inconclusive" or not exhaustive:
        return "inconclusive"
    if recognize_t11_type(g) is not None:
        return "pass"
    if recognize_heptagram_type(g) is not None:
        return "pass"
    return "violation"


def verdict_from_records(
    records: Sequence[dict],
    theorem: str,
    *,
    graphs: Sequence[Graph] | None = None,
    budget: int = DEFAULT_PARITY_BUDGET,
    seed: int | None = None,
) -> dict:
    population = 0
    violations: list[str] = []
    inconclusive = 0
    for idx, rec in enumerate(records):
        if theorem == "t2.3":
            assert graphs is not None
            outcome = dichotomy_outcome(graphs[idx], rec, budget)
        else:
            outcome = record_outcome(rec, theorem)
        if outcome == "filtered":
            continue
        population += 1
        if outcome == "violation":
            violations.append(rec["graph6"])
        elif outcome == "inconclusive":
            inconclusive += 1
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "theorem": THEOREM_IDS[theorem],
        "total": len(records),
        "population": population,
        "violations": violations,
        "inconclusive": inconclusive,
        "budget": budget,
        "seed": seed,
    }


def _record_worker(text: str) -> dict:
    return class_record(from_graph6(text))


def evaluate_theorem(
    graphs: Sequence[Graph],
    theorem: str,
    *,
    budget: int = DEFAULT_PARITY_BUDGET,
    workers: int = 1,
    seed: int | None = None,
) -> dict:
    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem {theorem!r}")
    if workers > 1 and theorem != "t2.3":
        lines = [to_graph6(g).decode("ascii") for g in graphs]
        with Pool(workers) as pool:
            records = list(pool.imap(_record_worker, lines, chunksize=64))
    else:
        records = [class_record(g) for g in graphs]
    return verdict_from_records(
        records, theorem, graphs=graphs, budget=budget, seed=seed
    )


# ---------------------------------------------------------------------------
# input plumbing
# ---------------------------------------------------------------------------


def _open_input(path: str):
    if path == "-":
        return sys.stdin
    return open(path, "r", encoding="ascii")


def _parse_debug_line(text: str) -> Graph:
    """Debug adjacency format: "n;u-v,u-v,..." with an empty edge list
    allowed ("3;")."""
    head, _, rest = text.partition(";")
    n = int(head.strip())
    edges = []
    rest = rest.strip()
    if rest:
        for chunk in rest.split(","):
            a, _, b = chunk.partition("-")
            edges.append((int(a), int(b)))
    return Graph.from_edges(n, edges)


def _iter_input_graphs(
    stream, fmt: str
) -> Iterator[tuple[int, str, Graph | None, str | None]]:
    """Yields (line_number, text, graph or None, error or None)."""
    for line_number, raw in enumerate(stream, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            g = _parse_debug_line(text) if fmt == "adjlist" else from_graph6(text)
            yield line_number, text, g, None
        except (Graph6Error, ValueError) as exc:
            yield line_number, text, None, str(exc)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _analyze_worker(args: tuple[str, bool, bool]) -> str:
    text, structures, with_timings = args
    report = analyze_graph(
        from_graph6(text), structures=structures, with_timings=with_timings
    )
    return _dump(report)


def cmd_analyze(args: argparse.Namespace) -> int:
    had_error = False
    tasks: list[tuple[int, str] | tuple[int, dict]] = []
    with _open_input(args.input) as stream:
        for line_number, text, g, error in _iter_input_graphs(stream, args.format):
            if error is not None:
                record = {
                    "schema_version": SCHEMA_VERSION,
                    "line": line_number,
                    "error": error,
                }
                if args.strict:
                    print(_dump(record))
                    return 3
                had_error = True
                tasks.append((line_number, record))
                continue
            tasks.append((line_number, to_graph6(g).decode("ascii")))

    if args.workers > 1:
        payload = [
            (item, args.structures, not args.no_timings)
            for _, item in tasks
            if isinstance(item, str)
        ]
        with Pool(args.workers) as pool:
            results = iter(pool.map(_analyze_worker, payload, chunksize=8))
        for _, item in tasks:
            print(_dump(item) if isinstance(item, dict) else next(results))
    else:
        for _, item in tasks:
            if isinstance(item, dict):
                print(_dump(item))
            else:
                print(_analyze_worker((item, args.structures, not args.no_timings)))
    return 3 if had_error else 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.enumerate is not None:
        if args.enumerate > 8:
            print("--enumerate supports at most n = 8", file=sys.stderr)
            return 3
        graphs = all_graphs_up_to(args.enumerate)
    elif args.input is not None:
        graphs = []
        with _open_input(args.input) as stream:
            for line_number, _, g, error in _iter_input_graphs(stream, "graph6"):
                if error is not None:
                    print(f"line {line_number}: {error}", file=sys.stderr)
                    return 3
                graphs.append(g)
    else:
        print("verify needs --enumerate N or an input file", file=sys.stderr)
        return 3
    t0 = time.perf_counter()
    verdict = evaluate_theorem(
        graphs,
        args.theorem,
        budget=args.budget,
        workers=args.workers,
        seed=args.seed,
    )
    if not args.no_timings:
        verdict["timings"] = {"total_ms": round((time.perf_counter() - t0) * 1e3, 3)}
    print(_dump(verdict))
    if verdict["violations"]:
        return 1
    if verdict["inconclusive"]:
        return 2
    return 0


def _random_outer_sizes(rng) -> list[int]:
    sizes = [rng.randint(0, 2) for _ in range(7)]
    for i in range(7):
        if sizes[i] and sizes[(i + 1) % 7] and sizes[(i + 2) % 7]:
            sizes[(i + 2) % 7] = 0
    return sizes


def cmd_generate(args: argparse.Namespace) -> int:
    import random as _random

    rng = _random.Random(args.seed)
    fixed_sizes = None
    if args.sizes:
        try:
            fixed_sizes = [int(tok) for tok in args.sizes.split(",")]
        except ValueError:
            print("--sizes must be a comma-separated integer list", file=sys.stderr)
            return 3
    fixed_outer = None
    if args.ysizes:
        try:
            fixed_outer = [int(tok) for tok in args.ysizes.split(",")]
        except ValueError:
            print("--ysizes must be a comma-separated integer list", file=sys.stderr)
            return 3

    for index in range(args.count):
        try:
            if args.kind == "t11":
                sizes = fixed_sizes or [rng.randint(1, 3) for _ in range(11)]
                g, witness = generate_t11_type(sizes)
            else:
                sizes = fixed_sizes or [rng.randint(1, 3) for _ in range(7)]
                outer = (
                    fixed_outer
                    if fixed_outer is not None
                    else _random_outer_sizes(rng)
                )
                g, witness = generate_heptagram_type(sizes, outer)
        except GenerationError as exc:
            rule = f" (rule {exc.rule})" if exc.rule else ""
            print(f"generation failed{rule}: {exc}", file=sys.stderr)
            return 3
        if args.g6_only:
            print(to_graph6(g).decode("ascii"))
        else:
            print(
                _dump(
                    {
                        "schema_version": SCHEMA_VERSION,
                        "kind": args.kind,
                        "index": index,
                        "seed": args.seed,
                        "graph6": to_graph6(g).decode("ascii"),
                        "witness": witness.to_json_dict(),
                    }
                )
            )
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    had_error = False
    any_inconclusive = False
    with _open_input(args.input) as stream:
        for line_number, _, g, error in _iter_input_graphs(stream, "graph6"):
            if error is not None:
                print(
                    _dump(
                        {
                            "schema_version": SCHEMA_VERSION,
                            "line": line_number,
                            "error": error,
                        }
                    )
                )
                had_error = True
                continue
            try:
                res = find_harmonious_cutset(
                    g,
                    max_cutset=args.max_cutset,
                    budget=args.budget,
                    candidates=args.candidates,
                )
            except ValueError as exc:
                print(
                    _dump(
                        {
                            "schema_version": SCHEMA_VERSION,
                            "line": line_number,
                            "graph6": to_graph6(g).decode("ascii"),
                            "error": str(exc),
                        }
                    )
                )
                had_error = True
                continue
            if res.status == "inconclusive":
                any_inconclusive = True
            print(
                _dump(
                    {
                        "schema_version": SCHEMA_VERSION,
                        "graph6": to_graph6(g).decode("ascii"),
                        "status": res.status,
                        "partition": res.partition.to_json_dict()
                        if res.partition
                        else None,
                        "steps": res.steps,
                        "budget": args.budget,
                    }
                )
            )
    if had_error:
        return 3
    return 2 if any_inconclusive else 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heptalab",
        description="Structure toolkit for odd-hole-free graph corpora.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="per-graph class flags and invariants")
    p.add_argument("input", metavar="FILE", help="graph6 lines, or - for stdin")
    p.add_argument("--strict", action="store_true", help="stop at the first parse error")
    p.add_argument("--structures", action="store_true", help="search for witnesses")
    p.add_argument("--no-timings", action="store_true")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument(
        "--format",
        choices=("graph6", "adjlist"),
        default="graph6",
        help='input format; "adjlist" is the debug form "n;u-v,u-v,..."',
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check a theorem over a corpus")
    p.add_argument("input", metavar="FILE", nargs="?", help="graph6 lines, or - for stdin")
    p.add_argument("--theorem", required=True, choices=sorted(THEOREM_IDS))
    p.add_argument("--enumerate", type=int, metavar="N", help="all graphs up to N vertices")
    p.add_argument("--budget", type=int, default=DEFAULT_PARITY_BUDGET)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--seed", type=int, default=None, help="recorded in the verdict")
    p.add_argument("--no-timings", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="emit structured instances")
    p.add_argument("--kind", required=True, choices=("t11", "heptagram"))
    p.add_argument("--sizes", help="comma-separated part sizes")
    p.add_argument("--ysizes", help="comma-separated outer group sizes (heptagram)")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--g6-only", action="store_true", help="plain graph6 lines, no JSON")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("decompose", help="search for a harmonious cutset")
    p.add_argument("input", metavar="FILE", help="graph6 lines, or - for stdin")
    p.add_argument("--budget", type=int, default=DEFAULT_PARITY_BUDGET)
    p.add_argument("--max-cutset", type=int, default=4)
    p.add_argument(
        "--candidates",
        choices=("auto", "minimal-separators", "subsets", "all"),
        default="auto",
    )
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def cli_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    cli_entry()
