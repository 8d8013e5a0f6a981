"""Canonical builders for the named complexes used throughout the package.

Builders emit deterministic vertex labelings: spine/apex vertices first, then
the remaining vertices in increasing order.
"""

from __future__ import annotations

from .complex_core import Complex, Cycle, Face, from_facets
from .errors import CycleTooShortError, TooFewVerticesError, UniverseMismatchError


def simplex(k_vertices: int) -> Complex:
    """The full simplex on ``k_vertices`` vertices (dimension k_vertices - 1)."""
    if k_vertices < 1:
        raise TooFewVerticesError("a simplex needs at least one vertex")
    return from_facets(k_vertices, [range(k_vertices)])


def isolated_vertices(k: int) -> Complex:
    """k isolated vertices as a pure 0-dimensional complex."""
    if k < 1:
        raise TooFewVerticesError("need at least one vertex")
    return from_facets(k, [[v] for v in range(k)])


def cycle_complex(c: Cycle) -> Complex:
    """A cycle as a pure 1-dimensional complex on vertices 0..max."""
    n = max(c.vertices) + 1
    return from_facets(n, list(c.edges()))


def book(n: int, r: int) -> Complex:
    """The r-dimensional book on n vertices: a spine of r vertices shared by
    n-r pages, one per remaining vertex.

    For r = 1 this is the star graph on n vertices.
    """
    if r < 1:
        raise TooFewVerticesError("book needs r >= 1")
    if n < r + 2:
        raise TooFewVerticesError(f"book needs n >= r+2, got n={n}, r={r}")
    spine = tuple(range(r))
    return from_facets(n, [spine + (v,) for v in range(r, n)])


def wheel(n: int, r: int) -> Complex:
    """The r-dimensional wheel on n vertices: an apex of r-1 vertices joined
    with a cycle on the remaining n-r+1 vertices.

    For r = 1 the apex is empty and the result is the cycle graph on n
    vertices.
    """
    if r < 1:
        raise TooFewVerticesError("wheel needs r >= 1")
    m = n - r + 1
    if m < 3:
        raise CycleTooShortError(f"wheel cycle needs >= 3 vertices, got {m}")
    apex = tuple(range(r - 1))
    rim = list(range(r - 1, n))
    facets = []
    for i in range(m):
        facets.append(apex + (rim[i], rim[(i + 1) % m]))
    return from_facets(n, [Face(f) for f in facets])


def cocycle_complex(r: int, cycle: Cycle, universe: int | None = None) -> Complex:
    """The r-dimensional complex on r+3 vertices whose facets are the
    complements of the edges of ``cycle``.

    The cycle must use vertices from {0, .., r+2} and have length between 3
    and r+3.  Length 3 gives a book, length 4 a wheel, and length >= 5 a
    wheel-free complex, always r-path connected and 1-neighbor uniform.
    """
    n = r + 3
    if universe is not None and universe != n:
        raise UniverseMismatchError(
            f"cocycle complex lives on r+3 = {n} vertices, got universe {universe}")
    if not 3 <= len(cycle) <= n:
        raise CycleTooShortError(
            f"cycle length must be in [3, {n}], got {len(cycle)}")
    if max(cycle.vertices) >= n:
        raise UniverseMismatchError(
            f"cycle vertices must lie in 0..{n - 1}: {cycle.vertices}")
    vertex_set = set(range(n))
    facets = [Face(vertex_set - set(e)) for e in cycle.edges()]
    return from_facets(n, facets)


def remark2_complex() -> Complex:
    """A fixed 7-vertex 3-dimensional complex with ten facets.

    It is wheel-free, 3-path connected, and 1-neighbor uniform (so its
    signless Laplacian radius is exactly 7) yet not isomorphic to the book on
    7 vertices: at small n the books are not the only extremal complexes.
    """
    facet_strings = ["0125", "0136", "0145", "0156", "0345",
                     "1235", "1236", "1346", "2345", "3456"]
    return from_facets(7, [[int(ch) for ch in s] for s in facet_strings])
