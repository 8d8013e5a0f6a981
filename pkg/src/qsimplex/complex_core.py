"""Faces, pure simplicial complexes, and purely combinatorial queries.

A complex is stored by its facet set; every lower-dimensional face is derived
on demand and cached.  Vertices are dense integers ``0 .. n_vertices-1`` and
every face is kept as a strictly increasing tuple, so face lists sort
lexicographically and all derived matrix bases are deterministic.

All objects are immutable after construction (caches fill in idempotently),
so instances can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Iterable, Iterator

from .errors import (
    CycleTooShortError,
    DimensionOutOfRangeError,
    FaceNotInComplexError,
    MixedDimensionError,
    TooLargeError,
    VertexInsideFaceError,
    VertexOutOfRangeError,
)

ISOMORPHISM_VERTEX_CAP = 10
CANONICAL_VERTEX_CAP = 8


class Face(tuple):
    """A face: strictly increasing tuple of vertex indices.

    The empty face ``Face()`` is a valid value of dimension -1.  Construction
    sorts its input and rejects duplicates and negative indices.
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[int] = ()) -> "Face":
        vs = sorted(vertices)
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise VertexOutOfRangeError(f"duplicate vertex {a} in face")
        if vs and vs[0] < 0:
            raise VertexOutOfRangeError(f"negative vertex {vs[0]} in face")
        return super().__new__(cls, vs)

    @property
    def dimension(self) -> int:
        return len(self) - 1

    def union(self, other: Iterable[int]) -> "Face":
        return Face(set(self) | set(other))

    def minus(self, vertex: int) -> "Face":
        return Face(v for v in self if v != vertex)

    def boundary(self) -> Iterator["Face"]:
        """The codimension-1 faces, in order of the omitted position."""
        for j in range(len(self)):
            yield Face(self[:j] + self[j + 1:])

    def __repr__(self) -> str:
        return f"Face({list(self)})"


class Cycle:
    """A cycle given by its vertex sequence (at least 3 distinct vertices)."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]):
        vs = tuple(int(v) for v in vertices)
        if len(vs) < 3:
            raise CycleTooShortError(f"cycle needs >= 3 vertices, got {len(vs)}")
        if len(set(vs)) != len(vs):
            raise CycleTooShortError(f"cycle vertices must be distinct: {vs}")
        self.vertices = vs

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> Iterator[Face]:
        n = len(self.vertices)
        for i in range(n):
            yield Face((self.vertices[i], self.vertices[(i + 1) % n]))

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cycle)
                and frozenset(self.edges()) == frozenset(other.edges()))

    def __hash__(self) -> int:
        return hash(frozenset(self.edges()))

    def __repr__(self) -> str:
        return f"Cycle({list(self.vertices)})"


class Complex:
    """A pure simplicial complex on vertices ``0 .. n_vertices-1``.

    Only the facets are stored; ``faces``, degrees, and the down-neighbor
    adjacency are derived lazily.  The facet set must be non-empty and all
    facets must have the same size (purity).  The special complex whose only
    facet is the empty face (dimension -1) is allowed; it is the identity for
    ``join`` and arises as the link of a facet.
    """

    def __init__(self, n_vertices: int, facets: Iterable[Iterable[int]]):
        if n_vertices < 0:
            raise VertexOutOfRangeError("n_vertices must be non-negative")
        norm = {f if isinstance(f, Face) else Face(f) for f in facets}
        if not norm:
            raise MixedDimensionError("a complex needs at least one facet")
        sizes = {len(f) for f in norm}
        if len(sizes) != 1:
            raise MixedDimensionError(f"facet sizes differ: {sorted(sizes)}")
        for f in norm:
            if f and f[-1] >= n_vertices:
                raise VertexOutOfRangeError(
                    f"vertex {f[-1]} outside universe of size {n_vertices}")
        self.n_vertices = n_vertices
        self.facets: tuple[Face, ...] = tuple(sorted(norm))
        self.r: int = sizes.pop() - 1
        self._facet_set = frozenset(self.facets)
        self._faces_by_dim: dict[int, tuple[Face, ...]] = {self.r: self.facets}
        self._face_sets: dict[int, frozenset] = {self.r: self._facet_set}
        self._cofaces: dict[int, dict[Face, tuple[Face, ...]]] = {}
        self._components: tuple[tuple[Face, ...], ...] | None = None

    @classmethod
    def empty(cls) -> "Complex":
        """The complex whose only face is the empty face (dimension -1)."""
        return cls(0, [Face()])

    # -- basic queries ---------------------------------------------------

    def faces(self, k: int) -> tuple[Face, ...]:
        """All k-faces, sorted lexicographically; ``faces(-1) == (Face(),)``."""
        if not -1 <= k <= self.r:
            raise DimensionOutOfRangeError(f"dimension {k} not in [-1, {self.r}]")
        if k not in self._faces_by_dim:
            out = {Face(c) for f in self.facets
                   for c in itertools.combinations(f, k + 1)}
            self._faces_by_dim[k] = tuple(sorted(out))
            self._face_sets[k] = frozenset(out)
        return self._faces_by_dim[k]

    def face_set(self, k: int) -> frozenset:
        self.faces(k)
        return self._face_sets[k]

    def __contains__(self, face) -> bool:
        f = face if isinstance(face, Face) else Face(face)
        if not -1 <= f.dimension <= self.r:
            return False
        return f in self.face_set(f.dimension)

    def degree(self, face) -> int:
        """Number of faces one dimension up that contain ``face``."""
        f = face if isinstance(face, Face) else Face(face)
        if f not in self:
            raise FaceNotInComplexError(f"{f!r} is not a face")
        if f.dimension >= self.r:
            return 0
        return len(self.cofaces(f))

    def cofaces(self, face: Face) -> tuple[Face, ...]:
        """The (dim+1)-faces containing ``face``."""
        k = face.dimension
        if k + 1 > self.r:
            return ()
        if k + 1 not in self._cofaces:
            table: dict[Face, list[Face]] = {}
            for g in self.faces(k + 1):
                for b in g.boundary():
                    table.setdefault(b, []).append(g)
            self._cofaces[k + 1] = {f: tuple(gs) for f, gs in table.items()}
        return self._cofaces[k + 1].get(face, ())

    def down_neighbors(self, face) -> tuple[Face, ...]:
        """Faces of the same dimension sharing a codimension-1 face with ``face``."""
        f = face if isinstance(face, Face) else Face(face)
        if f not in self:
            raise FaceNotInComplexError(f"{f!r} is not a face")
        out = set()
        for g in f.boundary():
            out.update(self.cofaces(g))
        out.discard(f)
        return tuple(sorted(out))

    def restricted_down_neighbors(self, face, u: int) -> tuple[Face, ...]:
        """Faces ``G + {u}`` present in the complex, for G a codim-1 face of ``face``.

        ``u`` must lie outside ``face``; the result has between 0 and
        ``len(face)`` members.
        """
        f = face if isinstance(face, Face) else Face(face)
        if f not in self:
            raise FaceNotInComplexError(f"{f!r} is not a face")
        if u in f:
            raise VertexInsideFaceError(f"vertex {u} lies inside {f!r}")
        if not 0 <= u < self.n_vertices:
            raise VertexOutOfRangeError(f"vertex {u} outside universe")
        k = f.dimension
        out = set()
        for g in f.boundary():
            cand = g.union((u,))
            if cand in self.face_set(k):
                out.add(cand)
        return tuple(sorted(out))

    # -- connectivity ----------------------------------------------------

    def r_path_components(self) -> tuple[tuple[Face, ...], ...]:
        """Partition of the facets into down-neighbor connected components."""
        if self._components is None:
            unseen = set(self.facets)
            comps = []
            while unseen:
                start = min(unseen)
                comp = {start}
                queue = deque([start])
                unseen.discard(start)
                while queue:
                    f = queue.popleft()
                    for g in self.down_neighbors(f):
                        if g in unseen:
                            unseen.discard(g)
                            comp.add(g)
                            queue.append(g)
                comps.append(tuple(sorted(comp)))
            self._components = tuple(sorted(comps))
        return self._components

    def is_r_path_connected(self) -> bool:
        return len(self.r_path_components()) == 1

    # -- subcomplex helpers ----------------------------------------------

    def link(self, face) -> "Complex":
        """The link of ``face``: faces disjoint from it whose union with it is a face.

        Returned as a complex (on the same vertex universe) generated by the
        maximal such faces.  The link of a facet is the empty-face complex on
        the same universe; the link of the empty face is the complex itself.
        """
        f = face if isinstance(face, Face) else Face(face)
        if f not in self:
            raise FaceNotInComplexError(f"{f!r} is not a face")
        maximal = {Face(v for v in g if v not in f)
                   for g in self.facets if set(f) <= set(g)}
        return Complex(self.n_vertices, maximal)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Complex)
                and self.n_vertices == other.n_vertices
                and self._facet_set == other._facet_set)

    def __hash__(self) -> int:
        return hash((self.n_vertices, self._facet_set))

    def __repr__(self) -> str:
        return (f"Complex(n={self.n_vertices}, r={self.r}, "
                f"facets={len(self.facets)})")


def from_facets(n_vertices: int, facets: Iterable[Iterable[int]]) -> Complex:
    """Build the pure complex with exactly the given facets.

    Duplicate facets collapse; all facets must have equal size >= 1 and use
    vertices below ``n_vertices``.
    """
    k = Complex(n_vertices, facets)
    if k.r < 0:
        raise MixedDimensionError("facets must have size >= 1")
    return k


def join(k1: Complex, k2: Complex) -> Complex:
    """The join: all unions of a facet of ``k1`` with a facet of ``k2``.

    The second operand's vertices are relabeled upward past ``k1``'s universe
    so the operands are vertex-disjoint.  Joining with the empty-face complex
    is the identity.
    """
    shift = k1.n_vertices
    facets = {a.union(v + shift for v in b) for a in k1.facets for b in k2.facets}
    return Complex(k1.n_vertices + k2.n_vertices, facets)


# -- isomorphism and canonical labeling ------------------------------------

def vertex_profiles(k: Complex) -> list:
    """Per-vertex relabeling-invariant profile used for isomorphism pruning.

    Pairs the facet-degree of each vertex with the multiset of partner-degree
    patterns over the facets containing it.
    """
    deg = [0] * k.n_vertices
    for f in k.facets:
        for v in f:
            deg[v] += 1
    prof = []
    for v in range(k.n_vertices):
        patterns = sorted(
            tuple(sorted(deg[u] for u in f if u != v))
            for f in k.facets if v in f)
        prof.append((deg[v], tuple(patterns)))
    return prof


def are_isomorphic(k1: Complex, k2: Complex,
                   cap: int = ISOMORPHISM_VERTEX_CAP) -> bool:
    """Whether some vertex bijection maps one facet set onto the other.

    Backtracking search over bijections, pruned by vertex profiles and by
    facet consistency as soon as a facet is fully mapped.  Intended for small
    universes; raises ``TooLargeError`` beyond ``cap`` vertices.
    """
    if k1.n_vertices != k2.n_vertices or k1.r != k2.r:
        return False
    if len(k1.facets) != len(k2.facets):
        return False
    if max(k1.n_vertices, k2.n_vertices) > cap:
        raise TooLargeError(
            f"isomorphism search capped at {cap} vertices")
    if k1.r < 0:
        return True  # both are the empty-face complex on equal universes
    prof1, prof2 = vertex_profiles(k1), vertex_profiles(k2)
    if sorted(prof1) != sorted(prof2):
        return False

    n = k1.n_vertices
    facet_set2 = frozenset(k2.facets)
    candidates = [
        [w for w in range(n) if prof2[w] == prof1[v]] for v in range(n)
    ]
    # process vertices rarest-candidates-first for early failure
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    position = {v: i for i, v in enumerate(order)}
    # a facet is checked as soon as its last vertex (in search order) maps
    facets_closing = [[] for _ in range(n)]
    for f in k1.facets:
        last = max(f, key=lambda v: position[v])
        facets_closing[last].append(f)

    mapping = [-1] * n
    used = [False] * n

    def extend(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in candidates[v]:
            if used[w]:
                continue
            mapping[v] = w
            used[w] = True
            ok = all(
                Face(mapping[u] for u in f) in facet_set2
                for f in facets_closing[v]
            )
            if ok and extend(idx + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return extend(0)


def canonical_facets(k: Complex,
                     cap: int = CANONICAL_VERTEX_CAP) -> tuple[Face, ...]:
    """Lexicographically minimal facet list over all vertex relabelings.

    Explicit minimization over all n! permutations, so isomorphic complexes
    yield identical output and the result really is the lexicographic
    minimum.  Raises ``TooLargeError`` beyond ``cap`` vertices.
    """
    if k.n_vertices > cap:
        raise TooLargeError(
            f"canonical form capped at {cap} vertices, got {k.n_vertices}")
    facets = [tuple(f) for f in k.facets]
    best: list | None = None
    for perm in itertools.permutations(range(k.n_vertices)):
        cand = sorted(tuple(sorted(perm[v] for v in f)) for f in facets)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return tuple(Face(f) for f in best)


def canonical_complex(k: Complex, cap: int = CANONICAL_VERTEX_CAP) -> Complex:
    """The complex rebuilt from its canonical facet list."""
    return Complex(k.n_vertices, canonical_facets(k, cap))


# -- facet-list text format ----------------------------------------------
#
# Header line "n r", then one facet per line as space-separated vertex
# indices.  The compact reader additionally accepts digit-string facets
# (e.g. "0125") for single-digit vertices.

def format_complex(k: Complex) -> str:
    lines = [f"{k.n_vertices} {k.r}"]
    lines.extend(" ".join(str(v) for v in f) for f in k.facets)
    return "\n".join(lines) + "\n"


def parse_complex(text: str, compact: bool = False) -> Complex:
    """Parse the facet-list text format; see :func:`format_complex`."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MixedDimensionError("empty complex description")
    head = lines[0].split()
    if len(head) != 2:
        raise MixedDimensionError(f"expected header 'n r', got {lines[0]!r}")
    try:
        n, r = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MixedDimensionError(f"bad header {lines[0]!r}") from exc
    facets = []
    for ln in lines[1:]:
        toks = ln.split()
        if compact and len(toks) == 1 and len(toks[0]) > 1:
            facets.append([int(ch) for ch in toks[0]])
        else:
            facets.append([int(t) for t in toks])
    k = from_facets(n, facets)
    if k.r != r:
        raise MixedDimensionError(
            f"header announces dimension {r} but facets have dimension {k.r}")
    return k
