"""Shared edge-list text format.

One edge per non-empty line as two whitespace-separated labels; lines
starting with ``#`` are comments; UTF-8 throughout. The format cannot
express isolated vertices, so only graphs without them round-trip.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .graph import Graph, build_graph


class EdgeListParseError(ValueError):
    """Malformed edge-list input."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_edge_list(text: str, dedupe: bool = False) -> Graph:
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListParseError(lineno, f"expected two labels, found {len(tokens)}")
        pairs.append((tokens[0], tokens[1]))
    return build_graph(pairs, dedupe=dedupe)


def serialize_edge_list(G: Graph, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    labels = G.labels
    lines.extend(f"{labels[u]} {labels[v]}" for u, v in G.index_edges())
    return "\n".join(lines) + "\n" if lines else ""


def load_graph(path, dedupe: bool = False) -> Graph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"), dedupe=dedupe)


def dump_graph(G: Graph, path, header: Iterable[str] = ()) -> None:
    Path(path).write_text(serialize_edge_list(G, header), encoding="utf-8")
