"""Collapsibility predicates and the minimal-collapsible-set algorithms.

Three routes to the same unique set: absorption of close minimal separators
(``cmsa``), simplicial reduction for chordal graphs (``sahr``), and an
exhaustive superset scan used as a small-graph oracle.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, is_chordal
from .separators import (
    TooLargeError,
    _close_in_scope,
    enumerate_minimal_separators,
    enumeration_cap,
)


class NotChordalError(ValueError):
    """sahr requires a chordal input graph."""


@dataclass(frozen=True)
class AbsorptionStep:
    """One absorption: the close separators of ``pair`` joined the kept set.

    ``component_index`` names the outside component (by its position in the
    smallest-member-ordered decomposition) being processed; ``absorbed`` are
    the vertices newly moved out of it.
    """

    component_index: int
    pair: tuple[int, int]
    absorbed: frozenset[int]


@dataclass(frozen=True)
class CollapseResult:
    result: frozenset[int]
    algorithm: str
    trace: tuple[AbsorptionStep, ...]
    elapsed: float


def first_violation(
    G: Graph, targets: Iterable[int]
) -> tuple[frozenset[int], frozenset[int]] | None:
    """First outside component whose boundary misses an edge, or None.

    Components are scanned by smallest member; the returned pair is
    (component, boundary).
    """
    a = G.vertex_set(targets)
    n = G.n
    adj = G.adj
    in_a = bytearray(n)
    for v in a:
        in_a[v] = 1
    seen = bytearray(n)
    for s in range(n):
        if in_a[s] or seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        boundary: set[int] = set()
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if in_a[w]:
                    boundary.add(w)
                elif not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        if not G.is_complete(boundary):
            return frozenset(comp), frozenset(boundary)
    return None


def is_collapsible(G: Graph, targets: Iterable[int]) -> bool:
    """Boundary criterion: every component outside ``targets`` has a complete boundary.

    Vacuously true for targets equal to the whole vertex set or empty.
    """
    return first_violation(G, targets) is None


def contains_required_separators(
    G: Graph, targets: Iterable[int], mode: str = "all", cap: int | None = None
) -> bool:
    """Separator characterization of collapsibility, via the exhaustive oracle.

    mode="all": every minimal separator of every non-adjacent target pair
    lies inside ``targets``. mode="at_least_one": each such pair has at least
    one minimal separator inside ``targets``. Both are equivalent to
    ``is_collapsible`` (checked by the property suite).
    """
    if mode not in ("all", "at_least_one"):
        raise ValueError(f"mode must be 'all' or 'at_least_one', got {mode!r}")
    limit = enumeration_cap(cap)
    if G.n > limit:
        raise TooLargeError(f"n={G.n} exceeds the enumeration cap of {limit}")
    a = sorted(G.vertex_set(targets))
    aset = frozenset(a)
    for i, x in enumerate(a):
        for y in a[i + 1 :]:
            if G.has_edge(x, y):
                continue
            seps = enumerate_minimal_separators(G, x, y, cap=limit)
            if mode == "all":
                if any(not s <= aset for s in seps):
                    return False
            elif not any(s <= aset for s in seps):
                return False
    return True


def cmsa(
    G: Graph, targets: Iterable[int], shuffle_seed: int | None = None
) -> CollapseResult:
    """Minimal collapsible superset of ``targets`` by close-separator absorption.

    Per outside component M (scope fixed at targets | M), repeatedly pick a
    non-adjacent pair on the boundary of a remaining sub-component, compute
    both close separators inside the scope, move them out of M, and stop when
    every boundary is complete. Deterministic by default: components go by
    smallest member and the pair is the lexicographically smallest one;
    ``shuffle_seed`` randomizes both choices, which changes the trace but
    never the result set.
    """
    t0 = time.perf_counter()
    a = G.vertex_set(targets)
    n = G.n
    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    in_a = bytearray(n)
    for v in a:
        in_a[v] = 1
    outside = _outside_components(G, in_a)
    order = list(range(len(outside)))
    if rng is not None:
        rng.shuffle(order)
    scope = bytearray(n)
    in_m = bytearray(n)
    in_b = bytearray(in_a)
    trace: list[AbsorptionStep] = []
    for ci in order:
        m0 = outside[ci]
        for v in a:
            scope[v] = 1
        for v in m0:
            scope[v] = 1
            in_m[v] = 1
        m_vertices = m0
        while True:
            pick = _pick_pair(G, m_vertices, in_m, scope, rng)
            if pick is None:
                break
            u, v = pick
            sep = _close_in_scope(G, scope, u, v) | _close_in_scope(G, scope, v, u)
            newly = [w for w in sep if in_m[w]]
            if not newly:
                raise RuntimeError("absorption stalled: close separators added nothing")
            for w in newly:
                in_m[w] = 0
                in_b[w] = 1
            trace.append(AbsorptionStep(ci, (u, v), frozenset(newly)))
            m_vertices = [w for w in m_vertices if in_m[w]]
        for v in a:
            scope[v] = 0
        for v in m0:
            scope[v] = 0
            in_m[v] = 0
    result = frozenset(v for v in range(n) if in_b[v])
    return CollapseResult(result, "cmsa", tuple(trace), time.perf_counter() - t0)


def _outside_components(G, in_a):
    """Components outside the mask, as sorted index lists by smallest member.

    Mask-based twin of Graph.connected_components, used on the hot path to
    keep auxiliary memory at O(n) machine words.
    """
    n = G.n
    adj = G.adj
    seen = bytearray(n)
    comps: list[list[int]] = []
    for s in range(n):
        if in_a[s] or seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not in_a[w] and not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def _pick_pair(G, m_vertices, in_m, scope, rng):
    """Next pair to absorb: a non-adjacent pair on some sub-component boundary.

    Deterministic mode returns the lexicographically smallest pair of the
    first (smallest-member) offending component; with ``rng`` a uniform pick
    over all offending pairs. None means every boundary is complete.
    """
    adj = G.adj
    sets = G.nbr_sets
    seen = bytearray(G.n)
    candidates: list[tuple[int, int]] = []
    for s in m_vertices:
        if seen[s]:
            continue
        seen[s] = 1
        stack = [s]
        boundary: set[int] = set()
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if in_m[w]:
                    if not seen[w]:
                        seen[w] = 1
                        stack.append(w)
                elif scope[w]:
                    boundary.add(w)
        b = sorted(boundary)
        for i, u in enumerate(b):
            su = sets[u]
            for v in b[i + 1 :]:
                if v not in su:
                    if rng is None:
                        return (u, v)
                    candidates.append((u, v))
    if candidates:
        return candidates[rng.randrange(len(candidates))]
    return None


def sahr(G: Graph, targets: Iterable[int]) -> CollapseResult:
    """Simplicial-reduction baseline: strip simplicial non-target vertices.

    Classic fixpoint procedure for chordal graphs; after every removal the
    scan restarts and neighbourhood completeness is re-checked from scratch.
    The survivors equal cmsa's result on any chordal input.
    """
    t0 = time.perf_counter()
    a = G.vertex_set(targets)
    if not is_chordal(G):
        raise NotChordalError("input graph is not chordal")
    n = G.n
    adj = G.adj
    sets = G.nbr_sets
    removed = bytearray(n)
    keep = bytearray(n)
    for v in a:
        keep[v] = 1
    while True:
        victim = -1
        for v in range(n):
            if removed[v] or keep[v]:
                continue
            if _simplicial_alive(adj[v], sets, removed):
                victim = v
                break
        if victim < 0:
            break
        removed[victim] = 1
    result = frozenset(v for v in range(n) if not removed[v])
    return CollapseResult(result, "sahr", (), time.perf_counter() - t0)


def _simplicial_alive(row, sets, removed):
    alive = [w for w in row if not removed[w]]
    for i, p in enumerate(alive):
        sp = sets[p]
        for q in alive[i + 1 :]:
            if q not in sp:
                return False
    return True


def minimal_collapsible_bruteforce(
    G: Graph, targets: Iterable[int], cap: int | None = None
) -> frozenset[int]:
    """Oracle: smallest collapsible superset of ``targets`` by exhaustive scan.

    Supersets are enumerated by ascending size; the scan finishes the winning
    size and asserts the winner is unique there, so every collapsible set it
    encountered contains the winner. Refuses graphs above the cap.
    """
    limit = enumeration_cap(cap)
    if G.n > limit:
        raise TooLargeError(f"n={G.n} exceeds the enumeration cap of {limit}")
    a = G.vertex_set(targets)
    rest = sorted(v for v in range(G.n) if v not in a)
    for size in range(len(rest) + 1):
        winners = [
            a | frozenset(extra)
            for extra in itertools.combinations(rest, size)
            if is_collapsible(G, a | frozenset(extra))
        ]
        if winners:
            if len(winners) > 1:
                raise RuntimeError(
                    f"collapsible supersets of size {len(a) + size} are not unique"
                )
            return winners[0]
    raise RuntimeError("unreachable: the full vertex set is always collapsible")
