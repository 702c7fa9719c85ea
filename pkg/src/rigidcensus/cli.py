"""Command-line harness: file ingestion, analyses, and experiment sweeps.

Subcommands: rigidity | census | congruence | pins | energy | sweep.
Reports are structured text by default and JSON with --json; exact rational
values are rendered as strings so they round-trip. With --no-meta the output
contains no timestamps, runtimes, thread counts, or backend names, and is
byte-reproducible across runs and worker counts.

Exit codes: 0 success, 2 parse error, 3 budget error, 4 precondition error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from datetime import datetime, timezone

from . import __version__
from .census import (
    distance_energy,
    graph_distance_census,
    pinned_distance_set,
    rich_pins_greedy,
)
from .congruence import congruence_census
from .errors import BudgetExceededError, ParseError
from .geometry import (
    PointSet,
    lattice_point_set,
    load_config_tuple,
    load_point_set,
    random_point_set,
)
from .graphs import Graph, is_connected, load_graph
from .kernels import DEFAULT_TUPLE_BUDGET, backend_name
from .rigidity import (
    classify_generic,
    exact_rank,
    generic_rank,
    generic_rank_failure_bound,
    motion_dims,
    rigidity_matrix,
)

KATZ_TARDOS_EXPONENT = (48 - 14 * math.e) / (55 - 16 * math.e)

REFERENCE_EXPONENTS = {
    "pair-distances": lambda args, g: 1.0,
    "graph-distances": lambda args, g: float(g.num_vertices - 1),
    "congruence": lambda args, g: float(args.k),
    "energy": lambda args, g: 3.0,
}


def _key_string(key) -> str:
    return ",".join(str(v) for v in key)


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.6f}"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _fit_exponent(rows) -> float:
    xs = [math.log(r["n"]) for r in rows]
    ys = [math.log(r["count"]) for r in rows]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    sxx = sum((x - mean_x) ** 2 for x in xs)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    if sxx == 0:
        raise ValueError("sweep sizes must span more than one point-set size")
    return sxy / sxx


def _graph_summary(g: Graph) -> dict:
    return {
        "v": g.num_vertices,
        "m": g.m,
        "edges": [list(e) for e in g.edges],
    }


def _graph_lines(g: Graph) -> list:
    edges = ",".join(f"({i},{j})" for i, j in g.edges)
    return [f"graph: v={g.num_vertices} m={g.m}", f"edges: {edges}"]


def _is_hinge(g: Graph) -> bool:
    return g.num_vertices == 3 and g.m == 2 and is_connected(g)


def cmd_rigidity(args) -> tuple[dict, list]:
    g = load_graph(args.graph)
    d = args.dim
    report: dict = {
        "command": "rigidity",
        "graph": _graph_summary(g),
        "dim": d,
        "connected": is_connected(g),
        "generic_rank": generic_rank(g, d, args.seed, args.trials),
        "sz_failure_bound": generic_rank_failure_bound(g, d, args.trials),
    }
    lines = ["rigidity report", *_graph_lines(g), f"dim: {d}",
             f"connected: {_fmt(report['connected'])}",
             f"generic_rank: {report['generic_rank']}",
             f"sz_failure_bound: {report['sz_failure_bound']:.3e}"]
    classification = None
    if g.num_vertices >= d + 1:
        classification = classify_generic(g, d, args.seed, args.trials)
    elif args.tuple is None:
        raise ValueError(
            f"classification needs at least d+1 = {d + 1} vertices; "
            "supply --tuple for an at-tuple motion report"
        )
    report["classification"] = classification
    lines.append(f"classification: {classification if classification else 'unavailable (too few vertices)'}")
    if args.tuple is not None:
        t = load_config_tuple(args.tuple)
        if len(t.points) != g.num_vertices:
            raise ValueError(
                f"tuple file has {len(t.points)} points, graph has {g.num_vertices} vertices"
            )
        at = motion_dims(g, t)
        tuple_rank = exact_rank(rigidity_matrix(g, t))
        regular = tuple_rank == report["generic_rank"]
        report["tuple"] = {
            "rank": at.rank,
            "motion_dim": at.motion_dim,
            "trivial_dim": at.trivial_dim,
            "inf_rigid_at_tuple": at.inf_rigid_at_x,
            "regular": regular,
            "status": "regular" if regular else "critical",
        }
        lines += [
            f"tuple_rank: {at.rank}",
            f"motion_dim: {at.motion_dim}",
            f"trivial_dim: {at.trivial_dim}",
            f"inf_rigid_at_tuple: {_fmt(at.inf_rigid_at_x)}",
            "status: regular (rank attains the generic maximum)"
            if regular
            else f"status: critical (rank {at.rank} below generic rank {report['generic_rank']})",
        ]
    else:
        report["tuple"] = None
    return report, lines


def cmd_census(args) -> tuple[dict, list]:
    g = load_graph(args.graph)
    ps = load_point_set(args.points)
    result = graph_distance_census(
        g,
        ps,
        include_degenerate=not args.no_degenerate,
        fibers=args.fibers,
        budget=args.budget,
        threads=args.threads,
    )
    report = {"command": "census", **result.as_dict()}
    lines = ["graph-distance census", *_graph_lines(g),
             f"points: n={result.n} d={result.dim}",
             f"include_degenerate: {_fmt(result.include_degenerate)}",
             f"tuples_enumerated: {result.tuples_enumerated}",
             f"tuples_counted: {result.tuples_counted}",
             f"distinct: {result.count}"]
    if _is_hinge(g):
        richness = max(len(pinned_distance_set(ps, p)) for p in ps)
        bound = richness**2
        holds = result.count >= bound
        report["hinge_max_richness"] = richness
        report["hinge_lower_bound"] = bound
        report["hinge_bound_holds"] = holds
        lines += [
            f"hinge_max_richness: {richness}",
            f"hinge_lower_bound: {bound}",
            f"hinge_bound_holds: {_fmt(holds)}",
        ]
    if args.fibers:
        items = sorted(result.fibers.items())
        report["fibers"] = [[_key_string(k), v] for k, v in items]
        lines.append("fibers:")
        lines += [f"  {_key_string(k)} -> {v}" for k, v in items]
    return report, lines


def cmd_congruence(args) -> tuple[dict, list]:
    ps = load_point_set(args.points)
    result = congruence_census(
        ps,
        args.k,
        group=args.group,
        any_order=args.any_order,
        budget=args.budget,
        threads=args.threads,
    )
    report = {"command": "congruence", **result.as_dict()}
    lines = ["congruence census",
             f"points: n={result.n} d={result.dim}",
             f"k: {result.k}",
             f"group: {result.group}",
             f"any_order: {_fmt(result.any_order)}",
             f"nonsingular_count: {result.nonsingular_count}",
             f"classified_count: {result.classified_count}",
             f"class_count: {result.class_count}",
             "class_size_histogram:"]
    lines += [
        f"  size {size} -> {num} classes"
        for size, num in result.class_size_histogram.items()
    ]
    lines += [
        f"sum_lambda_sq: {result.sum_lambda_sq}",
        f"cs_inequality: {result.cs_lhs} <= {result.cs_rhs}: {_fmt(result.cs_lhs <= result.cs_rhs)}",
    ]
    return report, lines


def cmd_pins(args) -> tuple[dict, list]:
    ps = load_point_set(args.points)
    result = rich_pins_greedy(ps, args.count)
    report = {"command": "pins", "n": len(ps), "d": ps.dim,
              "requested": args.count, **result.as_dict(),
              "katz_tardos_reference_exponent": KATZ_TARDOS_EXPONENT}
    lines = ["pin report", f"points: n={len(ps)} d={ps.dim}",
             f"requested: {args.count}", "pins:"]
    lines += [
        f"  {i}: ({_key_string(p.coords)}) richness {r}"
        for i, (p, r) in enumerate(result.pins, start=1)
    ]
    lines.append("richness_histogram:")
    lines += [f"  richness {k} -> {v} pins" for k, v in result.richness_histogram.items()]
    lines.append(
        f"katz_tardos_reference_exponent: {KATZ_TARDOS_EXPONENT:.6f} (context only)"
    )
    return report, lines


def cmd_energy(args) -> tuple[dict, list]:
    ps = load_point_set(args.points)
    result = distance_energy(ps, threads=args.threads)
    n = len(ps)
    lhs = result.ordered_pairs**2
    rhs = result.distinct_nonzero * result.quadruples
    ratio = result.quadruples / (n**3 * math.log(n))
    report = {"command": "energy", "n": n, "d": ps.dim,
              "quadruples": result.quadruples,
              "ordered_pairs": result.ordered_pairs,
              "distinct_nonzero": result.distinct_nonzero,
              "cs_inequality_lhs": lhs, "cs_inequality_rhs": rhs,
              "cs_inequality_holds": lhs <= rhs,
              "q_over_n3_log_n": ratio}
    lines = ["distance energy", f"points: n={n} d={ps.dim}",
             f"ordered_pairs: {result.ordered_pairs}",
             f"distinct_nonzero: {result.distinct_nonzero}",
             f"quadruples: {result.quadruples}",
             f"cs_inequality: {lhs} <= {rhs}: {_fmt(lhs <= rhs)}",
             f"q_over_n3_log_n: {ratio:.6f}"]
    return report, lines


def _sweep_point_set(family: str, size: int, args) -> PointSet:
    if family == "lattice":
        return lattice_point_set(size)
    return random_point_set(size, 2, args.bound, args.seed * 1_000_003 + size)


def cmd_sweep(args) -> tuple[dict, list]:
    sizes = args.sizes
    if len(sizes) < 3:
        raise ValueError("a sweep needs at least 3 sizes")
    experiment = args.experiment
    family = args.family or ("random" if experiment == "congruence" else "lattice")
    g = load_graph(args.graph) if args.graph else None
    if experiment == "graph-distances" and g is None:
        raise ValueError("graph-distances sweep needs --graph")
    rows = []
    for size in sizes:
        ps = _sweep_point_set(family, size, args)
        start = time.perf_counter()
        if experiment == "pair-distances":
            count = distance_energy(ps, threads=args.threads).distinct_nonzero
        elif experiment == "graph-distances":
            count = graph_distance_census(
                g, ps, include_degenerate=not args.no_degenerate,
                budget=args.budget, threads=args.threads,
            ).count
        elif experiment == "congruence":
            count = congruence_census(
                ps, args.k, group=args.group, budget=args.budget,
                threads=args.threads,
            ).class_count
        else:  # energy
            count = distance_energy(ps, threads=args.threads).quadruples
        elapsed = time.perf_counter() - start
        n = len(ps)
        row = {"size": size, "n": n, "count": count}
        if experiment == "energy":
            row["q_over_n3_log_n"] = count / (n**3 * math.log(n))
        if not args.no_meta:
            row["runtime_s"] = elapsed
        rows.append(row)
    fitted = _fit_exponent(rows)
    reference = REFERENCE_EXPONENTS[experiment](args, g)
    report = {"command": "sweep", "experiment": experiment, "family": family,
              "k": args.k, "group": args.group if experiment == "congruence" else None,
              "seed": args.seed, "sizes": list(sizes), "rows": rows,
              "fitted_exponent": fitted, "reference_exponent": reference}
    if experiment == "energy":
        report["reference_note"] = "count ~ n^3 log n (ratio column reports count / (n^3 ln n))"
    header = ["size", "n", "count"]
    if experiment == "energy":
        header.append("q_over_n3_log_n")
    if not args.no_meta:
        header.append("runtime_s")
    lines = [f"sweep: {experiment}", f"family: {family}"]
    if experiment in ("congruence", "graph-distances"):
        lines.append(f"k: {g.num_vertices - 1 if g is not None else args.k}")
    if experiment == "congruence":
        lines.append(f"group: {args.group}")
    lines.append("columns: " + " ".join(header))
    for row in rows:
        lines.append("row: " + " ".join(_fmt(row[h]) for h in header if h in row))
    lines += [f"fitted_exponent: {fitted:.6f}",
              f"reference_exponent: {_fmt(reference)}"]
    return report, lines


COMMANDS = {
    "rigidity": cmd_rigidity,
    "census": cmd_census,
    "congruence": cmd_congruence,
    "pins": cmd_pins,
    "energy": cmd_energy,
    "sweep": cmd_sweep,
}


def _sizes_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sizes list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--no-meta", action="store_true",
                        help="suppress timestamps/runtimes for byte-reproducible output")
    common.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker cap for censuses (result independent of N)")
    common.add_argument("--budget", type=int, default=None, metavar="N",
                        help=f"tuple enumeration budget (default {DEFAULT_TUPLE_BUDGET})")
    common.add_argument("--seed", type=int, default=0, metavar="N")
    common.add_argument("--group", choices=("O", "SO"), default="O",
                        help="congruence group (default O)")
    common.add_argument("--no-degenerate", action="store_true",
                        help="exclude tuples with repeated points from censuses")
    common.add_argument("--fibers", action="store_true",
                        help="dump the multiplicity of every distance vector")

    parser = argparse.ArgumentParser(
        prog="rigidcensus",
        description="Rigidity classification, congruence canonical forms, and "
                    "exact distance-set censuses for finite point sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rigidity", parents=[common],
                       help="generic rigidity classification of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--tuple", default=None,
                   help="optional tuple file for an at-tuple motion report")
    p.add_argument("--trials", type=int, default=3)

    p = sub.add_parser("census", parents=[common],
                       help="graph-distance census over E^(k+1)")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)

    p = sub.add_parser("congruence", parents=[common],
                       help="congruence-class census of (k+1)-tuples")
    p.add_argument("--points", required=True)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--any-order", action="store_true",
                   help="admit tuples that are non-singular after reordering")

    p = sub.add_parser("pins", parents=[common], help="greedy rich-pin extraction")
    p.add_argument("--points", required=True)
    p.add_argument("--count", type=int, required=True)

    p = sub.add_parser("energy", parents=[common],
                       help="distance-energy quadruple count")
    p.add_argument("--points", required=True)

    p = sub.add_parser("sweep", parents=[common],
                       help="census sweep over point-set sizes with a log-log fit")
    p.add_argument("experiment",
                   choices=("pair-distances", "graph-distances", "congruence", "energy"))
    p.add_argument("--sizes", type=_sizes_list, required=True,
                   help="comma-separated sizes (lattice side s or random-set n)")
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--family", choices=("lattice", "random"), default=None)
    p.add_argument("--bound", type=int, default=10**6,
                   help="coordinate bound for random point sets")
    p.add_argument("--graph", default=None)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report, lines = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    if not args.no_meta:
        meta = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "version": __version__,
            "backend": backend_name(),
            "threads": args.threads,
            "runtime_s": time.perf_counter() - start,
        }
        report["meta"] = meta
        lines += [
            f"meta: version={meta['version']} backend={meta['backend']} "
            f"threads={meta['threads']} runtime_s={meta['runtime_s']:.3f} "
            f"timestamp={meta['timestamp']}"
        ]
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
