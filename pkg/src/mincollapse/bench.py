"""Benchmark harness: seeded generator grids, per-algorithm timings, reports.

Timing covers algorithm execution only; generation, target sampling and
serialization stay outside the clock. All graphs and target sets derive from
the master seed, so rerunning a grid reproduces the same instances and result
sets, with only the timings differing.
"""

from __future__ import annotations

import csv
import io
import json
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .collapse import cmsa, minimal_collapsible_bruteforce, sahr
from .gen import GenConfig, InvalidConfigError, generate, pick_targets
from .separators import enumeration_cap

SUITES = ("decomposable", "general")
CSV_COLUMNS = ("model", "n", "p", "algorithm", "reps", "mean_s", "std_s", "mean_edges", "seed")

BENCH_JSON_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["suite", "seed", "targets_per_graph", "rows"],
    "additionalProperties": False,
    "properties": {
        "suite": {"type": "string", "enum": list(SUITES)},
        "seed": {"type": "integer", "minimum": 0},
        "targets_per_graph": {"type": "integer", "minimum": 0},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": list(CSV_COLUMNS),
                "additionalProperties": False,
                "properties": {
                    "model": {"type": "string"},
                    "n": {"type": "integer", "minimum": 1},
                    "p": {"type": "number", "minimum": 0, "maximum": 1},
                    "algorithm": {"type": "string"},
                    "reps": {"type": "integer", "minimum": 1},
                    "mean_s": {"type": "number", "minimum": 0},
                    "std_s": {"type": "number", "minimum": 0},
                    "mean_edges": {"type": "number", "minimum": 0},
                    "seed": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}


@dataclass(frozen=True)
class BenchRow:
    model: str
    n: int
    p: float
    algorithm: str
    reps: int
    mean_s: float
    std_s: float
    mean_edges: float
    seed: int


@dataclass(frozen=True)
class BenchReport:
    suite: str
    seed: int
    targets_per_graph: int
    rows: tuple[BenchRow, ...]


_RUNNERS: dict[str, Callable] = {
    "cmsa": lambda g, t: cmsa(g, t).result,
    "sahr": lambda g, t: sahr(g, t).result,
    "brute": minimal_collapsible_bruteforce,
}


def _algorithms(suite: str, n: int) -> tuple[str, ...]:
    if suite == "decomposable":
        return ("cmsa", "sahr")
    return ("cmsa", "brute") if n <= enumeration_cap() else ("cmsa",)


def _derive_seed(master: int, n: int, p: float, rep: int, stream: int) -> int:
    ss = np.random.SeedSequence([master, n, int(round(p * 1_000_000_000)), rep, stream])
    return int(ss.generate_state(1, np.uint64)[0])


def run_bench(
    suite: str,
    sizes: Sequence[int],
    ps: Sequence[float],
    reps: int,
    targets_per_graph: int = 10,
    seed: int = 0,
    on_result: Callable | None = None,
) -> BenchReport:
    """Run the (sizes x ps x algorithms) grid and aggregate timings.

    suite="decomposable" times cmsa and sahr on chordal graphs;
    suite="general" times cmsa on tree-plus-random-edge graphs, adding the
    brute-force oracle when n fits under the enumeration cap. Per replicate,
    all algorithms see the same graph and targets, and their result sets are
    asserted equal. ``on_result`` receives
    (model, n, p, rep, algorithm, sorted result labels) per run.
    """
    if suite not in SUITES:
        raise InvalidConfigError(f"suite must be one of {SUITES}, got {suite!r}")
    if reps < 1:
        raise InvalidConfigError(f"reps must be >= 1, got {reps}")
    if not sizes or any(n < 1 for n in sizes):
        raise InvalidConfigError(f"sizes must be positive, got {list(sizes)}")
    if not ps or any(not 0.0 <= p <= 1.0 for p in ps):
        raise InvalidConfigError(f"edge probabilities must lie in [0, 1], got {list(ps)}")
    if targets_per_graph < 0:
        raise InvalidConfigError(f"targets_per_graph must be >= 0, got {targets_per_graph}")
    model = "chordal" if suite == "decomposable" else "tree_er"
    rows: list[BenchRow] = []
    for n in sizes:
        for p in ps:
            algs = _algorithms(suite, n)
            times: dict[str, list[float]] = {alg: [] for alg in algs}
            edge_counts: list[int] = []
            for r in range(reps):
                config = GenConfig(model, n, p, _derive_seed(seed, n, p, r, 0))
                graph = generate(config)
                targets = pick_targets(graph, min(targets_per_graph, n), _derive_seed(seed, n, p, r, 1))
                edge_counts.append(graph.m)
                results: dict[str, frozenset[int]] = {}
                for alg in algs:
                    runner = _RUNNERS[alg]
                    t0 = time.perf_counter()
                    res = runner(graph, targets)
                    times[alg].append(time.perf_counter() - t0)
                    results[alg] = res
                    if on_result is not None:
                        on_result(model, n, p, r, alg, graph.sorted_labels(res))
                distinct = set(results.values())
                if len(distinct) > 1:
                    raise RuntimeError(f"algorithms disagree on n={n} p={p} rep={r}")
            for alg in algs:
                ts = times[alg]
                rows.append(
                    BenchRow(
                        model=model,
                        n=n,
                        p=p,
                        algorithm=alg,
                        reps=reps,
                        mean_s=statistics.fmean(ts),
                        std_s=statistics.stdev(ts) if len(ts) > 1 else 0.0,
                        mean_edges=statistics.fmean(edge_counts),
                        seed=seed,
                    )
                )
    return BenchReport(suite, seed, targets_per_graph, tuple(rows))


def to_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [row.model, row.n, row.p, row.algorithm, row.reps,
             f"{row.mean_s:.6f}", f"{row.std_s:.6f}", f"{row.mean_edges:.1f}", row.seed]
        )
    return buf.getvalue()


def to_json(report: BenchReport) -> str:
    payload = {
        "suite": report.suite,
        "seed": report.seed,
        "targets_per_graph": report.targets_per_graph,
        "rows": [
            {
                "model": row.model,
                "n": row.n,
                "p": row.p,
                "algorithm": row.algorithm,
                "reps": row.reps,
                "mean_s": row.mean_s,
                "std_s": row.std_s,
                "mean_edges": row.mean_edges,
                "seed": row.seed,
            }
            for row in report.rows
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def to_table(report: BenchReport) -> str:
    """Pivot rendering: one column per (n, p) cell, one timing row per algorithm."""
    cells: list[tuple[int, float]] = []
    for row in report.rows:
        if (row.n, row.p) not in cells:
            cells.append((row.n, row.p))
    algs: list[str] = []
    for row in report.rows:
        if row.algorithm not in algs:
            algs.append(row.algorithm)
    by_cell = {(r.n, r.p, r.algorithm): r for r in report.rows}
    edge_by_cell = {(r.n, r.p): r.mean_edges for r in report.rows}
    reps = report.rows[0].reps if report.rows else 0

    def fmt_row(name: str, values: Iterable[str]) -> str:
        return "  ".join([f"{name:<14}"] + [f"{v:>18}" for v in values])

    lines = [
        f"suite={report.suite} seed={report.seed} reps={reps} "
        f"targets={report.targets_per_graph}",
        fmt_row("n", (str(n) for n, _ in cells)),
        fmt_row("p", (f"{p:g}" for _, p in cells)),
        fmt_row("mean edges", (f"{edge_by_cell[c]:.1f}" for c in cells)),
    ]
    for alg in algs:
        vals = []
        for c in cells:
            row = by_cell.get((c[0], c[1], alg))
            vals.append(f"{row.mean_s:.4f} ± {row.std_s:.4f}" if row else "-")
        lines.append(fmt_row(f"{alg} (s)", vals))
    return "\n".join(lines) + "\n"
