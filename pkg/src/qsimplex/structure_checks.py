"""Exact decision procedures for structural predicates of pure complexes.

Everything here runs in integer/set arithmetic: wheel containment, t-neighbor
uniformity, the down-neighbor count bound, and the classification of
complexes on r+3 vertices by the complements of their facets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .complex_core import Complex, Cycle, Face
from .errors import WrongVertexCountError

MAX_REPORTED_VIOLATIONS = 100


@dataclass(frozen=True)
class UniformityReport:
    """Outcome of the neighbor-uniformity scan.

    ``is_uniform`` holds exactly when all observed counts agree; ``t`` is the
    common count (None when there are no facet/outside-vertex pairs at all,
    or when not uniform).  Violations list (facet, vertex, observed count)
    triples whose count differs from the modal count, truncated to a cap.
    """

    is_uniform: bool
    t: int | None
    violations: tuple[tuple[Face, int, int], ...]


@dataclass(frozen=True)
class WheelWitness:
    """An apex face together with a cycle in its link.

    For every edge e of the cycle, ``apex + e`` is a facet of the complex,
    so the closure of these facets is a wheel subcomplex.
    """

    apex: Face
    cycle: Cycle


@dataclass(frozen=True)
class Classification:
    """Structural class of a complex on r+3 vertices.

    ``kind`` is one of "book", "cocycle", "other".  When the facet
    complements form a single cycle its length is reported (a triangle of
    complements means the complex is a book, so "book" carries length 3).
    """

    kind: str
    cycle_length: int | None
    cycle: Cycle | None


def _bfs_path(adj: dict[int, list[int]], start: int, goal: int) -> list[int] | None:
    """Shortest path start -> goal that does not use the edge (start, goal)."""
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if v == start and w == goal:
                continue  # the removed edge
            if w not in parent:
                parent[w] = v
                if w == goal:
                    path = [w]
                    while path[-1] != start:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                queue.append(w)
    return None


def _shortest_cycle(adj: dict[int, list[int]]) -> list[int] | None:
    """A shortest graph cycle as a vertex list, or None for a forest.

    Checks, for each edge in sorted order, the shortest path between its ends
    avoiding the edge itself; the minimum over edges realizes the girth.
    """
    edges = sorted({(min(a, b), max(a, b)) for a in adj for b in adj[a]})
    best: list[int] | None = None
    for a, b in edges:
        path = _bfs_path(adj, a, b)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return best


def contains_wheel(k: Complex) -> WheelWitness | None:
    """Search for a wheel subcomplex: an apex face joined with a cycle.

    A wheel with apex E lies in the complex exactly when the graph on the
    vertices outside E, with an edge {u, v} whenever E + {u, v} is a facet,
    contains a cycle (closure under inclusion supplies all lower faces once
    the top faces are present).  Apexes are scanned in lexicographic order
    and the first witness uses a shortest cycle found by breadth-first
    search; an apex is the empty face when the complex is 1-dimensional.
    """
    r = k.r
    if r < 1:
        return None
    apexes = (Face(),) if r == 1 else k.faces(r - 2)
    for apex in apexes:
        apex_set = set(apex)
        adj: dict[int, list[int]] = {}
        for f in k.facets:
            if apex_set <= set(f):
                u, v = sorted(set(f) - apex_set)
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
        for vs in adj.values():
            vs.sort()
        cycle_vertices = _shortest_cycle(adj)
        if cycle_vertices is not None:
            witness = WheelWitness(apex=apex, cycle=Cycle(cycle_vertices))
            for e in witness.cycle.edges():
                if apex.union(e) not in k:
                    raise RuntimeError(f"unsound wheel witness {witness!r}")
            return witness
    return None


def _neighbor_counts(k: Complex) -> list[tuple[Face, int, int]]:
    """(facet, outside vertex, |restricted down neighbors|) in stable order."""
    out = []
    for f in k.facets:
        inside = set(f)
        for u in range(k.n_vertices):
            if u in inside:
                continue
            count = sum(
                1 for v in f if Face(x for x in f if x != v).union((u,)) in k
            )
            out.append((f, u, count))
    return out


def neighbor_uniformity(k: Complex,
                        max_violations: int = MAX_REPORTED_VIOLATIONS) -> UniformityReport:
    """Scan every facet/outside-vertex pair for a common down-neighbor count.

    Reports the common t when constant; otherwise the pairs whose count
    differs from the most frequent one (smallest count on ties), truncated.
    With no outside vertices at all the report is vacuously uniform with
    ``t=None``.
    """
    counts = _neighbor_counts(k)
    if not counts:
        return UniformityReport(is_uniform=True, t=None, violations=())
    values = {c for _, _, c in counts}
    if len(values) == 1:
        return UniformityReport(is_uniform=True, t=values.pop(), violations=())
    freq: dict[int, int] = {}
    for _, _, c in counts:
        freq[c] = freq.get(c, 0) + 1
    modal = min(freq, key=lambda c: (-freq[c], c))
    violations = tuple(
        (f, u, c) for f, u, c in counts if c != modal)[:max_violations]
    return UniformityReport(is_uniform=False, t=None, violations=violations)


def down_neighbor_bound_violations(k: Complex) -> tuple[tuple[Face, int, int], ...]:
    """All (facet, outside vertex) pairs contributing two or more down neighbors.

    A nonempty result implies the complex contains a wheel: two down
    neighbors through the same outside vertex close a 3-cycle in the link of
    their common codimension-2 face.
    """
    return tuple((f, u, c) for f, u, c in _neighbor_counts(k) if c >= 2)


def _single_cycle(edges: list[Face]) -> Cycle | None:
    """The cycle formed by the given 2-sets, if they are exactly one cycle."""
    if len(edges) < 3 or len(set(edges)) != len(edges):
        return None
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if len(adj) != len(edges):
        return None
    if any(len(vs) != 2 for vs in adj.values()):
        return None
    start = min(adj)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [w for w in sorted(adj[cur]) if w != prev]
        if not nxt:
            return None
        prev, cur = cur, nxt[0]
        if cur == start:
            break
        order.append(cur)
    if len(order) != len(edges):
        return None  # more than one cycle component
    return Cycle(order)


def classify_r_plus_3(k: Complex) -> Classification:
    """Classify a pure complex on exactly r+3 vertices.

    Each facet leaves a 2-set of vertices uncovered; when these complements
    form a single cycle the complex is the cocycle complex of that cycle.  A
    3-cycle of complements means three facets through a common spine, i.e. a
    book.  Anything else is "other".
    """
    if k.n_vertices != k.r + 3:
        raise WrongVertexCountError(
            f"classification needs n = r+3, got n={k.n_vertices}, r={k.r}")
    universe = set(range(k.n_vertices))
    complements = [Face(universe - set(f)) for f in k.facets]
    cycle = _single_cycle(complements)
    if cycle is None:
        return Classification(kind="other", cycle_length=None, cycle=None)
    if len(cycle) == 3:
        return Classification(kind="book", cycle_length=3, cycle=cycle)
    return Classification(kind="cocycle", cycle_length=len(cycle), cycle=cycle)
