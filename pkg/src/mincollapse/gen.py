"""Seeded random-graph generators.

Two families: uniform random trees with independent extra edges, and
connected chordal graphs grown by clique attachment. Randomness comes from
numpy's PCG64 bit generator seeded through SeedSequence, so equal configs
reproduce bit-identical graphs and parallel callers can derive independent
streams with SeedSequence spawning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

MODELS = ("chordal", "tree_er")


class InvalidConfigError(ValueError):
    """Generator configuration violates its bounds."""


@dataclass(frozen=True)
class GenConfig:
    model: str
    n: int
    p: float
    seed: int

    def __post_init__(self) -> None:
        if self.model not in MODELS:
            raise InvalidConfigError(f"model must be one of {MODELS}, got {self.model!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidConfigError(f"n must be a positive integer, got {self.n!r}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidConfigError(f"p must lie in [0, 1], got {self.p!r}")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise InvalidConfigError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")

    def header(self) -> str:
        """One-line rendering used as the edge-list file header."""
        return f"model={self.model} n={self.n} p={self.p!r} seed={self.seed}"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def expected_edges(config: GenConfig) -> float:
    """Closed-form expected edge count for a config."""
    n, p = config.n, config.p
    if config.model == "chordal":
        return (n - 1) + 0.5 * n * (n - 1) * p
    tree = n - 1 if n > 1 else 0
    return tree + p * (n * (n - 1) // 2 - tree)


def _prufer_edges(n: int, seq: list[int]) -> list[tuple[int, int]]:
    """Decode a length n-2 sequence over [0, n) into the edges of its tree."""
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges: list[tuple[int, int]] = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def _pair_at(k: int, n: int) -> tuple[int, int]:
    """k-th pair (i, j), i < j, in lexicographic order over all n-choose-2."""
    total = n * (n - 1) // 2
    rem = total - k
    t = (math.isqrt(8 * rem + 1) - 1) // 2
    if t * (t + 1) // 2 < rem:
        t += 1
    i = n - 1 - t
    j = i + 1 + (t * (t + 1) // 2 - rem)
    return i, j


def gen_tree_er(config: GenConfig) -> Graph:
    """Uniform random labelled tree plus independent extra edges.

    Each non-tree vertex pair is added with probability p (simulated by
    geometric skip-sampling over the pair index space, so draws landing on
    tree edges change nothing). Connected by construction; labels are the
    decimal vertex indices.
    """
    if config.model != "tree_er":
        raise InvalidConfigError(f"expected model 'tree_er', got {config.model!r}")
    n, p = config.n, config.p
    rng = _rng(config.seed)
    edges: set[tuple[int, int]] = set()
    if n >= 2:
        seq = [int(v) for v in rng.integers(0, n, size=n - 2)] if n > 2 else []
        for u, v in _prufer_edges(n, seq):
            edges.add((u, v) if u < v else (v, u))
    if n >= 3 and p > 0.0:
        total = n * (n - 1) // 2
        if p >= 1.0:
            edges.update(_pair_at(k, n) for k in range(total))
        else:
            log_q = math.log1p(-p)
            idx = -1
            while True:
                u = 1.0 - rng.random()
                idx += 1 + int(math.log(u) / log_q)
                if idx >= total:
                    break
                edges.add(_pair_at(idx, n))
    labels = [str(i) for i in range(n)]
    return Graph.from_index_edges(labels, edges)


def gen_chordal(config: GenConfig) -> Graph:
    """Connected chordal graph by clique attachment.

    Vertex i joins a clique found inside the closed neighbourhood of a
    uniformly chosen earlier vertex, grown by greedy random mutual-adjacency
    selection. The clique-size draw tracks the running deficit against the
    target of n - 1 + 0.5*n*(n-1)*p total edges. Each new vertex's back
    neighbourhood is a clique, so reverse insertion order is an elimination
    ordering and the output is always chordal.
    """
    if config.model != "chordal":
        raise InvalidConfigError(f"expected model 'chordal', got {config.model!r}")
    n, p = config.n, config.p
    rng = _rng(config.seed)
    target = (n - 1) + 0.5 * n * (n - 1) * p
    rows: list[set[int]] = [set() for _ in range(n)]
    edge_count = 0
    for i in range(1, n):
        mu = (target - edge_count) / (n - i)
        k = int(mu)
        if rng.random() < mu - k:
            k += 1
        if k < 1:
            k = 1
        anchor = int(rng.random() * i)
        avail = sorted(rows[anchor] | {anchor})
        clique: list[int] = []
        while len(clique) < k and avail:
            c = avail[int(rng.random() * len(avail))]
            clique.append(c)
            cn = rows[c]
            avail = [w for w in avail if w != c and w in cn]
        for q in clique:
            rows[q].add(i)
            rows[i].add(q)
        edge_count += len(clique)
    labels = [str(i) for i in range(n)]
    return Graph(labels, [sorted(r) for r in rows])


def generate(config: GenConfig) -> Graph:
    return gen_chordal(config) if config.model == "chordal" else gen_tree_er(config)


def pick_targets(G: Graph, k: int, seed: int) -> frozenset[int]:
    """k distinct vertices, uniform without replacement, reproducible per seed."""
    if not 0 <= k <= G.n:
        raise InvalidConfigError(f"cannot sample {k} of {G.n} vertices")
    if not isinstance(seed, int) or seed < 0:
        raise InvalidConfigError(f"seed must be a non-negative integer, got {seed!r}")
    rng = _rng(seed)
    picks = list(range(G.n))
    for i in range(k):
        j = i + int(rng.random() * (G.n - i))
        picks[i], picks[j] = picks[j], picks[i]
    return frozenset(picks[:k])
