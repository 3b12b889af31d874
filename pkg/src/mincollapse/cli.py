"""Command-line interface: collapse, check, separator, gen, bench.

Exit codes form the machine contract:
  0 success (check: the set is collapsible)
  1 check: the set is not collapsible
  2 graph file parse error (malformed line, self-loop, duplicate edge)
  3 unknown vertex label
  4 sahr on a non-chordal graph
  5 graph exceeds the exhaustive-search cap
  6 separator endpoints adjacent (or identical)
  7 invalid generator config or benchmark grid
  8 output I/O failure
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import bench as bench_mod
from .collapse import (
    CollapseResult,
    NotChordalError,
    cmsa,
    first_violation,
    minimal_collapsible_bruteforce,
    sahr,
)
from .edgelist import EdgeListParseError, dump_graph, load_graph
from .gen import GenConfig, InvalidConfigError, generate
from .graph import Graph, GraphError, UnknownVertexError
from .separators import (
    AdjacentPairError,
    SameVertexError,
    TooLargeError,
    close_separator,
    enumerate_minimal_separators,
)

EXIT_OK = 0
EXIT_NOT_COLLAPSIBLE = 1
EXIT_PARSE = 2
EXIT_UNKNOWN_VERTEX = 3
EXIT_NOT_CHORDAL = 4
EXIT_TOO_LARGE = 5
EXIT_ADJACENT_PAIR = 6
EXIT_BAD_CONFIG = 7
EXIT_IO = 8

RUN_JSON_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["input", "targets", "algorithm", "result", "trace", "elapsed_s"],
    "additionalProperties": False,
    "properties": {
        "input": {"type": "string"},
        "targets": {"type": "array", "items": {"type": "string"}},
        "algorithm": {"type": "string", "enum": ["cmsa", "sahr", "brute"]},
        "result": {"type": "array", "items": {"type": "string"}},
        "trace": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["component", "pair", "absorbed"],
                "additionalProperties": False,
                "properties": {
                    "component": {"type": "integer", "minimum": 0},
                    "pair": {"type": "array", "items": {"type": "string"}},
                    "absorbed": {"type": "array", "items": {"type": "string"}},
                },
            },
        },
        "elapsed_s": {"type": "number", "minimum": 0},
    },
}


@dataclass(frozen=True)
class RunRecord:
    input_path: str
    targets: tuple[str, ...]
    algorithm: str
    result: tuple[str, ...]
    trace: tuple[dict, ...]
    elapsed: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "input": self.input_path,
                "targets": list(self.targets),
                "algorithm": self.algorithm,
                "result": list(self.result),
                "trace": list(self.trace),
                "elapsed_s": self.elapsed,
            },
            indent=2,
        ) + "\n"


def _labels_arg(raw: str) -> list[str]:
    labels = [tok for chunk in raw.split(",") for tok in chunk.split()]
    return [lab for lab in labels if lab]


def _set_text(labels) -> str:
    return "{" + " ".join(labels) + "}"


def _run_algorithm(graph: Graph, targets, algorithm: str) -> CollapseResult:
    if algorithm == "cmsa":
        return cmsa(graph, targets)
    if algorithm == "sahr":
        return sahr(graph, targets)
    t0 = time.perf_counter()
    result = minimal_collapsible_bruteforce(graph, targets)
    return CollapseResult(result, "brute", (), time.perf_counter() - t0)


def cmd_collapse(args) -> int:
    graph = load_graph(args.graph, dedupe=args.dedupe)
    targets = graph.indices(_labels_arg(args.targets))
    res = _run_algorithm(graph, targets, args.algorithm)
    trace_entries = tuple(
        {
            "component": step.component_index,
            "pair": [graph.labels[step.pair[0]], graph.labels[step.pair[1]]],
            "absorbed": graph.sorted_labels(step.absorbed),
        }
        for step in res.trace
    )
    record = RunRecord(
        input_path=str(args.graph),
        targets=tuple(graph.sorted_labels(targets)),
        algorithm=res.algorithm,
        result=tuple(graph.sorted_labels(res.result)),
        trace=trace_entries,
        elapsed=res.elapsed,
    )
    if args.format == "json":
        sys.stdout.write(record.to_json())
        return EXIT_OK
    print(" ".join(record.result))
    if args.trace:
        outside = graph.connected_components(
            restrict=[v for v in range(graph.n) if v not in targets]
        )
        for entry in record.trace:
            members = _set_text(graph.sorted_labels(outside[entry["component"]]))
            pair = ", ".join(entry["pair"])
            print(
                f"component {entry['component']} {members}: "
                f"pair ({pair}) absorbed {_set_text(entry['absorbed'])}"
            )
    return EXIT_OK


def cmd_check(args) -> int:
    graph = load_graph(args.graph, dedupe=args.dedupe)
    members = graph.indices(_labels_arg(args.set))
    violation = first_violation(graph, members)
    if violation is None:
        print("collapsible")
        return EXIT_OK
    component, boundary = violation
    print(
        "not collapsible: component "
        f"{_set_text(graph.sorted_labels(component))} has incomplete boundary "
        f"{_set_text(graph.sorted_labels(boundary))}"
    )
    return EXIT_NOT_COLLAPSIBLE


def cmd_separator(args) -> int:
    graph = load_graph(args.graph, dedupe=args.dedupe)
    x = graph.index(args.x)
    y = graph.index(args.y)
    if args.enumerate:
        seps = enumerate_minimal_separators(graph, x, y)
        print(", ".join(_set_text(graph.sorted_labels(s)) for s in seps))
        return EXIT_OK
    if args.close_to == "y":
        sep = close_separator(graph, y, x)
    else:
        sep = close_separator(graph, x, y)
    print(" ".join(graph.sorted_labels(sep.vertices)))
    return EXIT_OK


def cmd_gen(args) -> int:
    config = GenConfig(model=args.model, n=args.n, p=args.p, seed=args.seed)
    graph = generate(config)
    dump_graph(graph, args.out, header=(config.header(),))
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in _labels_arg(args.sizes)]
    ps = [float(tok) for tok in _labels_arg(args.p)]
    report = bench_mod.run_bench(
        suite=args.suite,
        sizes=sizes,
        ps=ps,
        reps=args.reps,
        targets_per_graph=args.targets_per_graph,
        seed=args.seed,
    )
    if args.format == "csv":
        text = bench_mod.to_csv(report)
    elif args.format == "json":
        text = bench_mod.to_json(report)
    else:
        text = bench_mod.to_table(report)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plots import save_bench_figure

        save_bench_figure(report, args.plot)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincollapse",
        description="Minimal collapsible sets of undirected graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_collapse = sub.add_parser("collapse", help="compute the minimal collapsible set")
    p_collapse.add_argument("graph", help="edge-list file")
    p_collapse.add_argument("--targets", required=True, help="comma-separated vertex labels")
    p_collapse.add_argument("--algorithm", choices=("cmsa", "sahr", "brute"), default="cmsa")
    p_collapse.add_argument("--format", choices=("text", "json"), default="text")
    p_collapse.add_argument("--trace", action="store_true", help="print absorption steps")
    p_collapse.add_argument("--dedupe", action="store_true", help="drop duplicate edges and self-loops")
    p_collapse.set_defaults(func=cmd_collapse)

    p_check = sub.add_parser("check", help="test whether a set is collapsible")
    p_check.add_argument("graph")
    p_check.add_argument("--set", required=True, help="comma-separated vertex labels")
    p_check.add_argument("--dedupe", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_sep = sub.add_parser("separator", help="close minimal separator of a vertex pair")
    p_sep.add_argument("graph")
    p_sep.add_argument("--x", required=True)
    p_sep.add_argument("--y", required=True)
    p_sep.add_argument("--close-to", choices=("x", "y"), default="x", dest="close_to")
    p_sep.add_argument("--enumerate", action="store_true", help="list all minimal separators (small graphs)")
    p_sep.add_argument("--dedupe", action="store_true")
    p_sep.set_defaults(func=cmd_separator)

    p_gen = sub.add_parser("gen", help="write a seeded random graph")
    p_gen.add_argument("--model", choices=("chordal", "tree_er"), required=True)
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, required=True)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="timing grid over generated graphs")
    p_bench.add_argument("--suite", choices=bench_mod.SUITES, required=True)
    p_bench.add_argument("--sizes", default="250,500,750,1000", help="comma-separated sizes")
    p_bench.add_argument("--p", default="0.01,0.1", help="comma-separated edge probabilities")
    p_bench.add_argument("--reps", type=int, default=5)
    p_bench.add_argument("--targets-per-graph", type=int, default=10, dest="targets_per_graph")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p_bench.add_argument("--out", help="write the report here instead of stdout")
    p_bench.add_argument("--plot", help="also render a runtime figure to this image file")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownVertexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_VERTEX
    except (EdgeListParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotChordalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_CHORDAL
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (AdjacentPairError, SameVertexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ADJACENT_PAIR
    except InvalidConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
