"""Vertex-pair separation predicates and close minimal separators.

``close_separator`` follows the neighbourhood-deletion construction: delete
N(x), take the connected component M holding y, and return N(M). That set is
the unique minimal xy-separator contained in N(x), found in O(n + m) time
with O(n) scratch. ``enumerate_minimal_separators`` is the exhaustive
small-graph oracle the property tests check everything against.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .graph import Graph

DEFAULT_ENUM_CAP = 16
ENUM_CAP_ENV = "COLLAPSE_ENUM_CAP"


class OverlappingSetsError(ValueError):
    """Sets passed to a separation predicate must be pairwise disjoint."""


class AdjacentPairError(ValueError):
    """The endpoint vertices are adjacent, so no separator exists."""


class SameVertexError(ValueError):
    """The two endpoint vertices coincide."""


class TooLargeError(ValueError):
    """Graph exceeds the exhaustive-enumeration cap."""


def enumeration_cap(cap: int | None = None) -> int:
    """Resolve the exhaustive-search vertex cap.

    Explicit argument wins, then the COLLAPSE_ENUM_CAP environment variable,
    then the default of 16.
    """
    if cap is not None:
        return cap
    raw = os.environ.get(ENUM_CAP_ENV, "").strip()
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class SeparatorSet:
    """A minimal separator for the ordered pair, contained in N(close_to)."""

    pair: tuple[int, int]
    vertices: frozenset[int]
    close_to: int


def is_separator(G: Graph, X, Y, S) -> bool:
    """True iff S blocks every path between X and Y in G.

    Equivalently: no vertex of X reaches a vertex of Y in the subgraph
    induced by V minus S.
    """
    xs = G.vertex_set(X)
    ys = G.vertex_set(Y)
    ss = G.vertex_set(S)
    if xs & ys or xs & ss or ys & ss:
        raise OverlappingSetsError("X, Y and S must be pairwise disjoint")
    if not xs or not ys:
        return True
    n = G.n
    blocked = bytearray(n)
    for v in ss:
        blocked[v] = 1
    target = bytearray(n)
    for v in ys:
        target[v] = 1
    seen = bytearray(n)
    stack = list(xs)
    for v in xs:
        seen[v] = 1
    adj = G.adj
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if blocked[w] or seen[w]:
                continue
            if target[w]:
                return False
            seen[w] = 1
            stack.append(w)
    return True


def _component_without(G: Graph, start: int, removed: frozenset[int]) -> frozenset[int]:
    seen = bytearray(G.n)
    seen[start] = 1
    stack = [start]
    comp = [start]
    adj = G.adj
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w] and w not in removed:
                seen[w] = 1
                comp.append(w)
                stack.append(w)
    return frozenset(comp)


def is_minimal_separator(G: Graph, x: int, y: int, S) -> bool:
    """True iff S is an xy-separator no proper subset of which separates.

    Uses the two-sided neighbour criterion: S separates, and every member of
    S has a neighbour both in the component of x and in the component of y
    after deleting S. The equivalence with the literal proper-subset
    definition is checked by the property suite.
    """
    G._check(x)
    G._check(y)
    if x == y:
        raise SameVertexError(f"x and y are both {G.labels[x]!r}")
    if G.has_edge(x, y):
        raise AdjacentPairError(f"{G.labels[x]!r} and {G.labels[y]!r} are adjacent")
    ss = G.vertex_set(S)
    if x in ss or y in ss:
        raise OverlappingSetsError("S may not contain x or y")
    comp_x = _component_without(G, x, ss)
    if y in comp_x:
        return False
    comp_y = _component_without(G, y, ss)
    sets = G.nbr_sets
    for s in ss:
        if sets[s].isdisjoint(comp_x) or sets[s].isdisjoint(comp_y):
            return False
    return True


def _close_in_scope(G: Graph, scope: bytearray | None, x: int, y: int) -> frozenset[int]:
    """Close-separator core: boundary of y's component after deleting N(x).

    ``scope`` (a 0/1 mask, or None for the whole graph) restricts the search
    to an induced subgraph without materializing it; both x and y must lie in
    scope. O(edges inside scope) time, O(n) scratch.
    """
    n = G.n
    adj = G.adj
    blocked = bytearray(n)
    if scope is None:
        for w in adj[x]:
            blocked[w] = 1
    else:
        for w in adj[x]:
            if scope[w]:
                blocked[w] = 1
    seen = bytearray(n)
    seen[y] = 1
    stack = [y]
    sep: set[int] = set()
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if scope is not None and not scope[w]:
                continue
            if blocked[w]:
                sep.add(w)
            elif not seen[w]:
                seen[w] = 1
                stack.append(w)
    return frozenset(sep)


def close_separator(G: Graph, x: int, y: int) -> SeparatorSet:
    """The minimal xy-separator contained in N(x).

    Returns the empty set when y cannot reach x at all; that empty set is the
    unique minimal separator of a disconnected pair.
    """
    G._check(x)
    G._check(y)
    if x == y:
        raise SameVertexError(f"x and y are both {G.labels[x]!r}")
    if G.has_edge(x, y):
        raise AdjacentPairError(f"{G.labels[x]!r} and {G.labels[y]!r} are adjacent")
    return SeparatorSet((x, y), _close_in_scope(G, None, x, y), x)


def enumerate_minimal_separators(
    G: Graph, x: int, y: int, cap: int | None = None
) -> list[frozenset[int]]:
    """Every minimal xy-separator, by exhaustive subset scan.

    Subsets of V minus {x, y} are tested in ascending size and, within a
    size, in lexicographic index order; exactly those passing
    ``is_minimal_separator`` are returned, in scan order. Minimal separators
    are not downward-closed, so no subset pruning is applied. Refuses graphs
    above the enumeration cap.
    """
    limit = enumeration_cap(cap)
    if G.n > limit:
        raise TooLargeError(f"n={G.n} exceeds the enumeration cap of {limit}")
    G._check(x)
    G._check(y)
    if x == y:
        raise SameVertexError(f"x and y are both {G.labels[x]!r}")
    if G.has_edge(x, y):
        raise AdjacentPairError(f"{G.labels[x]!r} and {G.labels[y]!r} are adjacent")
    candidates = [v for v in range(G.n) if v != x and v != y]
    found: list[frozenset[int]] = []
    for size in range(len(candidates) + 1):
        for combo in itertools.combinations(candidates, size):
            s = frozenset(combo)
            if is_minimal_separator(G, x, y, s):
                found.append(s)
    return found
