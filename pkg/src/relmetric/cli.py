"""Command-line entry point: pairwise distance reports and Dowker summaries.

Exit codes: 0 on success, 1 on bad input or usage, 2 when an exact search
exceeds its budget.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .dowker import dowker
from .io import RelationFileError, load_relation
from .kappa import distance_bound, distance_bound_sampled
from .metric import DEFAULT_BUDGET, SearchBudgetExceeded, min_weight_exact
from .relation import RelationError

REPORT_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _threads() -> int:
    raw = os.environ.get("RELMETRIC_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _load(path: str, patterns):
    if Path(path).is_dir():
        return load_relation(path, "pattern-log", patterns)
    return load_relation(path, "dense-csv")


def distance_report(relations, labels, mode="exact", sample=None, seed=None,
                    budget=DEFAULT_BUDGET, threads=1) -> dict:
    """Pairwise report over ``relations``.

    Exact mode fills ``[i][j]`` with the distance, so the matrix is
    symmetric with a zero diagonal.  Bound modes fill every ordered pair
    (diagonal included) independently and never symmetrize; sampled pairs
    draw from a generator seeded by ``(seed, i, j)``.
    """
    n = len(relations)
    if sample is not None and seed is None:
        seed = int(np.random.SeedSequence().entropy % 2**63)

    if mode == "exact":
        jobs = [(i, j) for i in range(n) for j in range(n) if i != j]

        def run(ij):
            i, j = ij
            return min_weight_exact(relations[i], relations[j], budget)[0]
    elif sample is None:
        jobs = [(i, j) for i in range(n) for j in range(n)]

        def run(ij):
            i, j = ij
            return distance_bound(relations[i], relations[j])
    else:
        jobs = [(i, j) for i in range(n) for j in range(n)]

        def run(ij):
            i, j = ij
            ss = np.random.SeedSequence([seed, i, j])
            return distance_bound_sampled(relations[i], relations[j], sample, seed=ss)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        values = list(pool.map(run, jobs))

    matrix = [[0] * n for _ in range(n)]
    for (i, j), v in zip(jobs, values):
        matrix[i][j] = int(v)
    if mode == "exact":
        directed = [row[:] for row in matrix]
        for i in range(n):
            for j in range(n):
                matrix[i][j] = max(directed[i][j], directed[j][i])

    return {
        "version": REPORT_VERSION,
        "mode": mode if sample is None else "bound-sampled",
        "labels": list(labels),
        "matrix": matrix,
        "sample_size": sample,
        "seed": seed if sample is not None else None,
    }


def format_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["", *report["labels"]])
    for label, row in zip(report["labels"], report["matrix"]):
        w.writerow([label, *row])
    return buf.getvalue()


def dowker_report(r, weights=False, max_dim=None) -> dict:
    c = dowker(r)
    out = {
        "version": REPORT_VERSION,
        "vertices": list(r.x_labels),
        "maximal_simplices": c.maximal_labels(),
    }
    if weights:
        out["weights"] = [
            {"simplex": c.simplex_labels(s), "total": t, "differential": d}
            for s, (t, d) in c.weights(max_dim).items()
        ]
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="relmetric", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("distance", help="pairwise distance matrix between relations")
    d.add_argument("files", nargs="+",
                   help="dense-csv files, or directories of text files for pattern-log input")
    d.add_argument("--mode", choices=("exact", "bound"), default="exact")
    d.add_argument("--sample", type=int, metavar="N",
                   help="bound on N columns drawn from each relation")
    d.add_argument("--seed", type=int, metavar="S", help="sampling seed")
    d.add_argument("--format", choices=("json", "csv"), default="json")
    d.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="B",
                   help="largest exact search space per direction")
    d.add_argument("--patterns", help="patterns file for directory inputs")

    k = sub.add_parser("dowker", help="maximal simplices and weights of one relation")
    k.add_argument("file")
    k.add_argument("--weights", action="store_true", help="include total and differential weights")
    k.add_argument("--max-dim", type=int, default=None,
                   help="largest face dimension listed with --weights (-1 for all)")
    k.add_argument("--patterns", help="patterns file for a directory input")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "distance":
            if args.sample is not None:
                if args.mode != "bound":
                    parser.error("--sample requires --mode bound")
                if args.sample < 1:
                    parser.error("--sample must be at least 1")
            rels = [_load(f, args.patterns) for f in args.files]
            for f, r in zip(args.files[1:], rels[1:]):
                if r.x_labels != rels[0].x_labels:
                    raise RelationFileError(f, f"feature labels differ from {args.files[0]}")
            report = distance_report(rels, args.files, args.mode, args.sample, args.seed,
                                     args.budget, _threads())
            if args.format == "json":
                sys.stdout.write(json.dumps(report) + "\n")
            else:
                sys.stdout.write(format_csv(report))
        else:
            r = _load(args.file, args.patterns)
            sys.stdout.write(json.dumps(dowker_report(r, args.weights, args.max_dim)) + "\n")
    except SearchBudgetExceeded as exc:
        print(f"relmetric: {exc}", file=sys.stderr)
        return 2
    except (RelationError, OSError) as exc:
        print(f"relmetric: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
