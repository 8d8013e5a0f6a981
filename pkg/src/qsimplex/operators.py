"""Boundary, coboundary, and Laplace operators as explicit sparse matrices.

All matrices are assembled with exact integer entries over lexicographically
ordered face bases; floating point only enters downstream in the spectral
module.  Faces are oriented by increasing vertex order throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .complex_core import Complex, Face
from .errors import DimensionOutOfRangeError

KINDS = frozenset({
    "boundary", "signless_boundary",
    "L_up", "L_down", "L_full",
    "Q_up", "Q_down",
})


@dataclass(frozen=True)
class OperatorMatrix:
    """A sparse integer matrix indexed by faces of two fixed dimensions.

    ``entries`` is the coordinate list sorted by (row, col); zero entries are
    never stored.
    """

    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    entries: tuple[tuple[int, int, int], ...]
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        merged: dict[tuple[int, int], int] = {}
        for i, j, v in self.entries:
            merged[(i, j)] = merged.get((i, j), 0) + v
        clean = tuple((i, j, v) for (i, j), v in sorted(merged.items()) if v != 0)
        object.__setattr__(self, "entries", clean)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, j): v for i, j, v in self.entries}

    def to_dense(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.int64)
        for i, j, v in self.entries:
            out[i, j] = v
        return out

    def row_sums(self) -> list[int]:
        sums = [0] * len(self.rows)
        for i, _, v in self.entries:
            sums[i] += v
        return sums

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get((j, i)) == v for (i, j), v in d.items())

    def dump(self) -> str:
        """Triplet text format: face bases in the header, then `i j value` lines."""
        lines = [f"operator {self.kind}",
                 f"rows {len(self.rows)}",
                 f"cols {len(self.cols)}"]
        lines.extend("rowface " + " ".join(str(v) for v in f) for f in self.rows)
        lines.extend("colface " + " ".join(str(v) for v in f) for f in self.cols)
        lines.append(f"entries {len(self.entries)}")
        lines.extend(f"{i} {j} {v}" for i, j, v in self.entries)
        return "\n".join(lines) + "\n"


def _check_dim(i: int, lo: int, hi: int, what: str) -> None:
    if not lo <= i <= hi:
        raise DimensionOutOfRangeError(f"{what} needs {lo} <= i <= {hi}, got {i}")


def signless_boundary(k: Complex, i: int) -> OperatorMatrix:
    """Unsigned incidence from i-faces to (i-1)-faces.

    Entry (G, F) is 1 exactly when G is F with one vertex omitted, so every
    column has i+1 ones and the row sum at G equals deg(G).
    """
    _check_dim(i, 1, k.r, "signless_boundary")
    rows = k.faces(i - 1)
    cols = k.faces(i)
    row_index = {f: n for n, f in enumerate(rows)}
    entries = []
    for j, f in enumerate(cols):
        for g in f.boundary():
            entries.append((row_index[g], j, 1))
    return OperatorMatrix(rows, cols, tuple(entries), "signless_boundary")


def boundary(k: Complex, i: int) -> OperatorMatrix:
    """Signed incidence with faces oriented by increasing vertex order.

    Entry (G, F) is (-1)**j when G equals F with its j-th vertex (0-based in
    sorted order) omitted, else 0.
    """
    _check_dim(i, 1, k.r, "boundary")
    rows = k.faces(i - 1)
    cols = k.faces(i)
    row_index = {f: n for n, f in enumerate(rows)}
    entries = []
    for j, f in enumerate(cols):
        for pos, g in enumerate(f.boundary()):
            entries.append((row_index[g], j, (-1) ** pos))
    return OperatorMatrix(rows, cols, tuple(entries), "boundary")


def q_down(k: Complex, i: int) -> OperatorMatrix:
    """Down signless Laplacian on i-faces.

    Diagonal entry |F| = i+1; off-diagonal (F, F') is 1 exactly when F and F'
    share a codimension-1 face.  Assembled from the neighbor relation; it
    equals the product of the signless boundary with its transpose.
    """
    _check_dim(i, 1, k.r, "q_down")
    faces = k.faces(i)
    index = {f: n for n, f in enumerate(faces)}
    entries = [(n, n, i + 1) for n in range(len(faces))]
    for n, f in enumerate(faces):
        for g in k.down_neighbors(f):
            entries.append((n, index[g], 1))
    return OperatorMatrix(faces, faces, tuple(entries), "Q_down")


def q_up(k: Complex, i: int) -> OperatorMatrix:
    """Up signless Laplacian on i-faces.

    Diagonal entry deg(F); off-diagonal (F, F') counts common (i+1)-cofaces,
    which is 0 or 1 for a simplicial complex.  For a graph (r = 1, i = 0)
    this is the classical signless Laplacian D + A.
    """
    _check_dim(i, 0, k.r - 1, "q_up")
    faces = k.faces(i)
    index = {f: n for n, f in enumerate(faces)}
    entries = [(n, n, k.degree(f)) for n, f in enumerate(faces)]
    for g in k.faces(i + 1):
        for a, b in itertools.combinations(list(g.boundary()), 2):
            entries.append((index[a], index[b], 1))
            entries.append((index[b], index[a], 1))
    return OperatorMatrix(faces, faces, tuple(entries), "Q_up")


class Laplacians(NamedTuple):
    up: OperatorMatrix
    down: OperatorMatrix
    full: OperatorMatrix


def laplacians(k: Complex, i: int) -> Laplacians:
    """Signed (combinatorial) Laplacians on i-faces.

    ``up`` is the matrix of the (i+1)-boundary composed with its transpose,
    ``down`` the transpose composition of the i-boundary, and ``full`` their
    sum; the chain convention has no faces below dimension 0, so ``down`` is
    zero at i = 0 and ``up`` is zero at i = r.  For a graph at i = 0, ``up``
    is the classical Laplacian D - A.
    """
    _check_dim(i, 0, k.r, "laplacians")
    faces = k.faces(i)
    m = len(faces)

    def from_dense(arr: np.ndarray, kind: str) -> OperatorMatrix:
        entries = tuple(
            (a, b, int(arr[a, b]))
            for a in range(m) for b in range(m) if arr[a, b] != 0)
        return OperatorMatrix(faces, faces, entries, kind)

    if i < k.r:
        b_next = boundary(k, i + 1).to_dense()
        up = from_dense(b_next @ b_next.T, "L_up")
    else:
        up = OperatorMatrix(faces, faces, (), "L_up")
    if i >= 1:
        b_here = boundary(k, i).to_dense()
        down = from_dense(b_here.T @ b_here, "L_down")
    else:
        down = OperatorMatrix(faces, faces, (), "L_down")
    full_dense = up.to_dense() + down.to_dense()
    return Laplacians(up, down, from_dense(full_dense, "L_full"))
