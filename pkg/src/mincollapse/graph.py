"""Immutable undirected simple graphs and the local queries shared by every algorithm here."""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for graph construction and lookup failures."""


class SelfLoopError(GraphError):
    """An input edge joins a vertex to itself."""

    def __init__(self, label: str) -> None:
        super().__init__(f"self-loop on vertex {label!r}")
        self.label = label


class DuplicateEdgeError(GraphError):
    """The same unordered vertex pair appeared twice in strict mode."""

    def __init__(self, u: str, v: str) -> None:
        super().__init__(f"duplicate edge {u!r} -- {v!r}")
        self.pair = (u, v)


class UnknownVertexError(GraphError):
    """A vertex index or label does not belong to the graph."""

    def __init__(self, vertex: object) -> None:
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex


class Graph:
    """Undirected simple graph over labelled vertices.

    Vertices are integer indices ``0..n-1``; ``labels[i]`` is the external
    name of vertex ``i``. Adjacency rows are sorted tuples and the whole
    structure is frozen after construction, so a Graph may be shared freely
    between threads; every query below is read-only.
    """

    __slots__ = ("labels", "adj", "nbr_sets", "n", "m", "_index")

    def __init__(self, labels: Sequence[str], adjacency: Sequence[Iterable[int]]) -> None:
        labels = tuple(labels)
        index: dict[str, int] = {}
        for i, lab in enumerate(labels):
            if lab in index:
                raise GraphError(f"duplicate vertex label {lab!r}")
            index[lab] = i
        n = len(labels)
        rows: list[tuple[int, ...]] = []
        total = 0
        for i, raw in enumerate(adjacency):
            row = tuple(raw)
            prev = -1
            for w in row:
                if not 0 <= w < n:
                    raise UnknownVertexError(w)
                if w == i:
                    raise SelfLoopError(labels[i])
                if w <= prev:
                    raise GraphError(f"adjacency row {i} not strictly increasing")
                prev = w
            rows.append(row)
            total += len(row)
        if len(rows) != n:
            raise GraphError("adjacency length does not match label count")
        sets = tuple(frozenset(row) for row in rows)
        for i, row in enumerate(rows):
            for w in row:
                if i not in sets[w]:
                    raise GraphError(f"asymmetric edge {labels[i]!r} -- {labels[w]!r}")
        self.labels = labels
        self.adj = tuple(rows)
        self.nbr_sets = sets
        self.n = n
        self.m = total // 2
        self._index = index

    @classmethod
    def from_index_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from distinct (u, v) index pairs (generator plumbing)."""
        rows: list[set[int]] = [set() for _ in labels]
        for u, v in edges:
            rows[u].add(v)
            rows[v].add(u)
        return cls(labels, [sorted(r) for r in rows])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- vertex addressing ------------------------------------------------

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise UnknownVertexError(v)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownVertexError(label) from None

    def label(self, v: int) -> str:
        self._check(v)
        return self.labels[v]

    def indices(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(lab) for lab in labels)

    def vertex_set(self, vertices: Iterable[int]) -> frozenset[int]:
        """Validate an index iterable into a frozenset."""
        vs = frozenset(vertices)
        for v in vs:
            self._check(v)
        return vs

    def sorted_labels(self, vertices: Iterable[int]) -> list[str]:
        """Labels of ``vertices`` in lexicographic order (the rendering contract)."""
        return sorted(self.labels[v] for v in self.vertex_set(vertices))

    # -- local queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self.nbr_sets[u]

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def neighbors(self, v: int) -> frozenset[int]:
        """N(v); never contains v itself."""
        self._check(v)
        return self.nbr_sets[v]

    def neighbors_of_set(self, vertices: Iterable[int]) -> frozenset[int]:
        """Union of neighbourhoods of ``vertices``, minus ``vertices`` (the boundary)."""
        vs = self.vertex_set(vertices)
        out: set[int] = set()
        for v in vs:
            out.update(self.adj[v])
        return frozenset(out - vs)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on ``vertices`` keeping the parent labels.

        New indices follow ascending parent index.
        """
        members = sorted(self.vertex_set(vertices))
        pos = {v: i for i, v in enumerate(members)}
        rows = [[pos[w] for w in self.adj[v] if w in pos] for v in members]
        return Graph([self.labels[v] for v in members], rows)

    def connected_components(self, restrict: Iterable[int] | None = None) -> list[frozenset[int]]:
        """Components of the subgraph induced by ``restrict`` (defaults to all vertices).

        Ordered by smallest member index; the union equals ``restrict``.
        """
        if restrict is None:
            members: Sequence[int] = range(self.n)
            allowed = None
        else:
            members = sorted(self.vertex_set(restrict))
            allowed = bytearray(self.n)
            for v in members:
                allowed[v] = 1
        seen = bytearray(self.n)
        adj = self.adj
        comps: list[frozenset[int]] = []
        for s in members:
            if seen[s]:
                continue
            seen[s] = 1
            comp = [s]
            stack = [s]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not seen[w] and (allowed is None or allowed[w]):
                        seen[w] = 1
                        comp.append(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def is_complete(self, vertices: Iterable[int]) -> bool:
        """True iff every pair in ``vertices`` is adjacent; vacuously true for size <= 1."""
        vs = self.vertex_set(vertices)
        need = len(vs) - 1
        if need <= 0:
            return True
        sets = self.nbr_sets
        for v in vs:
            if len(sets[v]) < need:
                return False
        for v in vs:
            count = 0
            for w in self.adj[v]:
                if w in vs:
                    count += 1
            if count < need:
                return False
        return True

    def is_simplicial(self, v: int) -> bool:
        """True iff N(v) induces a complete subgraph."""
        self._check(v)
        row = self.adj[v]
        sets = self.nbr_sets
        for i, a in enumerate(row):
            sa = sets[a]
            for b in row[i + 1 :]:
                if b not in sa:
                    return False
        return True

    # -- edge views ---------------------------------------------------------

    def index_edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, ascending."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def label_edges(self) -> list[tuple[str, str]]:
        return [(self.labels[u], self.labels[v]) for u, v in self.index_edges()]


def build_graph(
    pairs: Iterable[tuple[str, str]],
    isolated: Iterable[str] = (),
    dedupe: bool = False,
) -> Graph:
    """Graph from (label, label) pairs; indices follow first appearance.

    Strict by default: a (u, u) pair raises SelfLoopError and a repeated
    unordered pair raises DuplicateEdgeError. With ``dedupe`` both are
    dropped instead of rejected. ``isolated`` appends edge-free vertices,
    which the edge-list file format cannot express.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    rows: list[set[int]] = []

    def vid(lab: str) -> int:
        if not isinstance(lab, str) or not lab or lab.split() != [lab]:
            raise GraphError(f"labels must be non-empty whitespace-free tokens, got {lab!r}")
        i = index.get(lab)
        if i is None:
            i = len(labels)
            index[lab] = i
            labels.append(lab)
            rows.append(set())
        return i

    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if u == v:
            if dedupe:
                vid(u)
                continue
            raise SelfLoopError(u)
        iu, iv = vid(u), vid(v)
        key = (iu, iv) if iu < iv else (iv, iu)
        if key in seen:
            if dedupe:
                continue
            raise DuplicateEdgeError(u, v)
        seen.add(key)
        rows[iu].add(iv)
        rows[iv].add(iu)
    for lab in isolated:
        vid(lab)
    return Graph(labels, [sorted(r) for r in rows])


def perfect_elimination_ordering(G: Graph) -> tuple[int, ...] | None:
    """Elimination order witnessing chordality, or None when the graph has none.

    Runs maximum cardinality search and then the zero-fill-in check on the
    reversed visit order: for each vertex, its later neighbours minus the
    earliest of them must all be adjacent to that earliest one.
    """
    n = G.n
    if n == 0:
        return ()
    adj = G.adj
    weight = [0] * n
    numbered = bytearray(n)
    heap: list[tuple[int, int]] = [(0, v) for v in range(n)]
    visit: list[int] = []
    while heap:
        wneg, v = heapq.heappop(heap)
        if numbered[v] or -wneg != weight[v]:
            continue
        numbered[v] = 1
        visit.append(v)
        for u in adj[v]:
            if not numbered[u]:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    order = visit[::-1]
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    sets = G.nbr_sets
    for v in order:
        later = [u for u in adj[v] if pos[u] > pos[v]]
        if len(later) <= 1:
            continue
        first = min(later, key=pos.__getitem__)
        sf = sets[first]
        for w in later:
            if w != first and w not in sf:
                return None
    return tuple(order)


def is_chordal(G: Graph) -> bool:
    """True iff every cycle of length >= 4 has a chord."""
    return perfect_elimination_ordering(G) is not None
