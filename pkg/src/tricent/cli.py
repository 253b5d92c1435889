"""Command-line front end.

Subcommands: compute, compare, mapreduce, gen, bench. Scores stream to stdout
as `label<TAB>score` sorted by rank (ties by label); stats go to stderr.
Exit codes: 0 ok, 1 usage, 2 I/O, 3 internal consistency.
"""

import argparse
import json
import os
import sys
import time

from .algebraic import triangle_centrality_algebraic
from .centrality import triangle_centrality, triangle_centrality_basic
from .compare import compute_all, rank_vertices, top_k_jaccard
from .errors import ConsistencyError, InputError
from .generators import GEN_FAMILIES, generate_fixture
from .graph import dump_edge_list, load_edge_list
from .mapreduce import run_mapreduce_tc
from .parallel import ParallelConfig, parallel_triangle_centrality, work_report

USAGE_EXIT, IO_EXIT, INTERNAL_EXIT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_EXIT)


def _build_parser():
    p = _Parser(prog="tc", description="Triangle centrality toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute triangle centrality scores")
    pc.add_argument("path", help="edge-list file, or - for stdin")
    pc.add_argument("--algo", choices=["main", "basic", "algebraic", "parallel", "mapreduce"],
                    default="main")
    pc.add_argument("--threads", type=int, default=None)
    pc.add_argument("--stats", action="store_true", help="print work counters to stderr")
    pc.add_argument("--format", choices=["tsv", "json"], default="tsv")

    pp = sub.add_parser("compare", help="compare against classical measures")
    pp.add_argument("path")
    pp.add_argument("--k", type=int, default=10)

    pm = sub.add_parser("mapreduce", help="run the round simulator with stats")
    pm.add_argument("path")

    pg = sub.add_parser("gen", help="emit a generated edge list")
    pg.add_argument("family", choices=sorted(GEN_FAMILIES))
    pg.add_argument("--n", type=int, default=None, help="clique size (clique family)")
    pg.add_argument("--k", type=int, default=None, help="clique size parameter")
    pg.add_argument("--p", type=int, default=None, help="copy count parameter")
    pg.add_argument("--pendants", type=int, default=None)

    pb = sub.add_parser("bench", help="time algorithms on user-supplied edge lists")
    pb.add_argument("paths", nargs="*")
    pb.add_argument("--algo", action="append",
                    choices=["main", "basic", "algebraic", "parallel", "mapreduce"])
    pb.add_argument("--threads", type=int, default=None)
    return p


def _emit_scores(g, cv, fmt, out):
    ranking = rank_vertices(cv)
    if fmt == "json":
        payload = {
            "method": cv.method,
            "triangle_total": cv.tri_total,
            "triangle_free": cv.triangle_free,
            "scores": [
                {"vertex": str(g.label_of(int(v))), "score": float(cv.scores[int(v)]),
                 "rank": int(ranking.rank[int(v)])}
                for v in ranking.order
            ],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for v in ranking.order:
            out.write(f"{g.label_of(int(v))}\t{float(cv.scores[int(v)])!r}\n")


def _run_algo(g, algo, threads):
    if algo == "main":
        return triangle_centrality(g), None
    if algo == "basic":
        return triangle_centrality_basic(g), None
    if algo == "algebraic":
        return triangle_centrality_algebraic(g), None
    if algo == "parallel":
        cv, counters = parallel_triangle_centrality(g, ParallelConfig(workers=threads))
        return cv, counters
    if algo == "mapreduce":
        cv, stats = run_mapreduce_tc(g)
        return cv, stats
    raise InputError(f"unknown algorithm {algo!r}")


def _cmd_compute(args):
    g = load_edge_list(args.path)
    threads = args.threads
    if threads is None and os.environ.get("TC_THREADS"):
        threads = int(os.environ["TC_THREADS"])
    cv, extra = _run_algo(g, args.algo, threads)
    _emit_scores(g, cv, args.format, sys.stdout)
    if args.stats:
        if args.algo == "parallel" and extra is not None:
            sys.stderr.write(str(work_report(extra, g)) + "\n")
        elif args.algo == "mapreduce" and extra is not None:
            _write_round_table(extra, sys.stderr)
        else:
            sys.stderr.write(f"n={g.n} m={g.m} triangles={cv.tri_total}\n")
    return 0


def _write_round_table(round_stats, out):
    out.write("round\trecords-in\trecords-out\test-bits\n")
    for rs in round_stats:
        out.write(f"{rs.round_index}\t{rs.map_records}\t{rs.reduce_records}\t{rs.est_bits}\n")


def _cmd_mapreduce(args):
    g = load_edge_list(args.path)
    cv, stats = run_mapreduce_tc(g)
    _emit_scores(g, cv, "tsv", sys.stdout)
    _write_round_table(stats, sys.stderr)
    return 0


def _cmd_compare(args):
    g = load_edge_list(args.path)
    if g.n == 0:
        return 0
    results = compute_all(g)
    rankings = {name: rank_vertices(cv) for name, cv in results.items()}
    k = min(args.k, g.n)
    out = sys.stdout
    out.write("measure\ttop\ttop-" + str(k) + "\n")
    for name, rk in rankings.items():
        top = " ".join(str(g.label_of(v)) for v in rk.top(k))
        out.write(f"{name}\t{g.label_of(int(rk.order[0]))}\t{top}\n")
    names = list(rankings)
    out.write("\npairwise top-%d Jaccard\n" % k)
    out.write("\t" + "\t".join(names) + "\n")
    for a in names:
        row = [a]
        for b in names:
            row.append("1" if a == b else str(top_k_jaccard(rankings[a], rankings[b], k)))
        out.write("\t".join(row) + "\n")
    return 0


def _cmd_gen(args):
    params = {}
    if args.family == "clique" and args.n is not None:
        params["k"] = args.n
    if args.k is not None:
        params["k"] = args.k
    if args.p is not None:
        params["p"] = args.p
    if args.pendants is not None:
        params["pendants"] = args.pendants
    g = generate_fixture(args.family, **params)
    dump_edge_list(g, sys.stdout)
    return 0


def _cmd_bench(args):
    algos = args.algo or ["main"]
    sys.stdout.write("graph\talgo\tn\tm\ttriangles\tseconds\n")
    for path in args.paths:
        try:
            g = load_edge_list(path)
        except OSError as exc:
            sys.stderr.write(f"warning: skipping {path}: {exc}\n")
            continue
        for algo in algos:
            t0 = time.perf_counter()
            cv, _ = _run_algo(g, algo, args.threads)
            dt = time.perf_counter() - t0
            sys.stdout.write(f"{path}\t{algo}\t{g.n}\t{g.m}\t{cv.tri_total}\t{dt:.3f}\n")
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "compare": _cmd_compare,
    "mapreduce": _cmd_mapreduce,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_EXIT
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_EXIT
    except ConsistencyError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return INTERNAL_EXIT
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return IO_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
