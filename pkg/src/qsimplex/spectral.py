"""Spectral radii of signless Laplacians with certified enclosures.

The main entry point is :func:`q_signless`, the spectral radius of the top
down signless Laplacian of a pure complex.  Power iteration runs per
irreducible block (the r-path components of the complex) and reports
Collatz-Wielandt bounds, i.e. the min and max of ``(M x)_i / x_i`` over the
positive iterate ``x``, which always enclose the Perron root.  The positive
diagonal of the operators makes each irreducible block primitive, so the
enclosure contracts without any shift heuristics.

A dense symmetric eigensolver (Householder tridiagonalization followed by
implicit-shift QL) is implemented here as an independent oracle for
cross-validation; it never feeds back into the power-iteration path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complex_core import Complex
from .errors import DimensionOutOfRangeError, TooLargeError
from .operators import OperatorMatrix, q_down
from .structure_checks import neighbor_uniformity

DEFAULT_TOLERANCE = 1e-10
DENSE_DIMENSION_CAP = 512
QL_MAX_SWEEPS = 50


@dataclass(frozen=True)
class SpectralResult:
    """Spectral radius estimate with a certified enclosure.

    ``lower_bound <= radius_estimate <= upper_bound`` always holds; on
    success the enclosure width is at most the requested tolerance.  The
    Perron vector is reported over the full basis, normalized so its largest
    entry is exactly 1; entries outside the dominant irreducible block(s) are
    zero.
    """

    radius_estimate: float
    lower_bound: float
    upper_bound: float
    perron_vector: tuple[float, ...]
    iterations: int
    component_radii: tuple[float, ...]
    converged: bool


def _validate_symmetric_nonnegative(m: OperatorMatrix) -> None:
    if len(m.rows) != len(m.cols):
        raise DimensionOutOfRangeError("matrix must be square")
    d = m.as_dict()
    for (i, j), v in d.items():
        if v < 0:
            raise ValueError(f"negative entry {v} at {(i, j)}")
        if d.get((j, i)) != v:
            raise ValueError(f"matrix not symmetric at {(i, j)}")


def _blocks(m: OperatorMatrix) -> list[list[int]]:
    """Connected components of the off-diagonal nonzero pattern."""
    n = len(m.rows)
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j, _ in m.entries:
        if i != j:
            adj[i].add(j)
            adj[j].add(i)
    seen = [False] * n
    blocks = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        blocks.append(sorted(comp))
    return blocks


def _power_block(a: np.ndarray, tol: float, max_iterations: int):
    """Power iteration on one irreducible nonnegative block.

    Returns (estimate, lower, upper, vector, iterations, converged); the
    vector is positive with max entry exactly 1.
    """
    dim = a.shape[0]
    if dim == 1:
        v = float(a[0, 0])
        return v, v, v, np.ones(1), 0, True
    x = np.ones(dim)
    lower = -math.inf
    upper = math.inf
    iterations = 0
    converged = False
    while iterations < max_iterations:
        y = a @ x
        iterations += 1
        ratios = y / x
        lower = max(lower, float(ratios.min()))
        upper = min(upper, float(ratios.max()))
        x = y / y.max()
        if upper - lower <= tol:
            converged = True
            break
    estimate = 0.5 * (lower + upper)
    return estimate, lower, upper, x, iterations, converged


def spectral_radius(m: OperatorMatrix, tol: float = DEFAULT_TOLERANCE,
                    max_iterations: int | None = None) -> SpectralResult:
    """Certified spectral radius of a symmetric nonnegative matrix.

    The matrix is split into irreducible blocks before iterating, so Perron
    theory applies per block; the radius is the max over blocks and the
    reported enclosure combines the per-block Collatz-Wielandt bounds.  The
    start vector is all-ones (never orthogonal to the Perron vector of a
    nonnegative irreducible block), making iteration counts reproducible.

    On non-convergence the best enclosure so far is returned with
    ``converged=False``; nothing is raised.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _validate_symmetric_nonnegative(m)
    dense = m.to_dense().astype(float)
    n = dense.shape[0]
    if n == 0:
        raise DimensionOutOfRangeError("empty matrix has no spectral radius")
    if max_iterations is None:
        max_iterations = max(100 * n, 100)
    if max_iterations < 1:
        raise ValueError("max_iterations must be at least 1")

    block_results = []
    total_iterations = 0
    for block in _blocks(m):
        sub = dense[np.ix_(block, block)]
        est, lo, up, vec, its, conv = _power_block(sub, tol, max_iterations)
        block_results.append((block, est, lo, up, vec, conv))
        total_iterations += its

    best = max(r[1] for r in block_results)
    lower = max(r[2] for r in block_results)
    upper = max(r[3] for r in block_results)
    perron = np.zeros(n)
    for block, est, _, _, vec, _ in block_results:
        if est == best:
            perron[block] = vec
    return SpectralResult(
        radius_estimate=best,
        lower_bound=lower,
        upper_bound=upper,
        perron_vector=tuple(float(v) for v in perron),
        iterations=total_iterations,
        component_radii=tuple(r[1] for r in block_results),
        converged=all(r[5] for r in block_results),
    )


def q_signless(k: Complex, tol: float = DEFAULT_TOLERANCE) -> SpectralResult:
    """Signless Laplacian spectral radius of a pure complex.

    Computed from the top-dimension down operator, whose irreducible blocks
    are exactly the r-path components; by the transpose relation it shares
    its largest eigenvalue with the (r-1)-up operator.
    """
    if k.r < 1:
        raise DimensionOutOfRangeError(
            "signless Laplacian radius needs dimension >= 1")
    return spectral_radius(q_down(k, k.r), tol)


def exact_radius_if_uniform(k: Complex) -> int | None:
    """Integer-certified radius for 1-neighbor uniform complexes.

    When every facet gains exactly one down neighbor from every outside
    vertex, the all-ones vector is a Perron eigenvector and the radius equals
    the vertex count; this is verified entrywise in integer arithmetic (every
    row of the down operator must sum to n).  Returns None when the complex
    is not 1-neighbor uniform.
    """
    if k.r < 1:
        return None
    report = neighbor_uniformity(k)
    if not report.is_uniform or report.t not in (1, None):
        return None
    n = k.n_vertices
    if any(s != n for s in q_down(k, k.r).row_sums()):
        return None
    return n


# -- dense symmetric eigensolver (oracle) ----------------------------------

def _tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix to tridiagonal form.

    Returns (d, e) where d is the diagonal and e[i] couples d[i] and d[i+1]
    (e has length n with the last slot unused).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for col in range(n - 2):
        x = a[col + 1:, col]
        if not np.any(x[1:]):
            continue  # column already tridiagonal
        norm_x = math.sqrt(float(x @ x))
        alpha = -math.copysign(norm_x, x[0])
        v = x.copy()
        v[0] -= alpha
        v /= math.sqrt(float(v @ v))
        trailing = a[col + 1:, col + 1:]
        w = trailing @ v
        p = w - float(v @ w) * v
        trailing -= 2.0 * np.outer(v, p) + 2.0 * np.outer(p, v)
        a[col + 1, col] = alpha
        a[col, col + 1] = alpha
        a[col + 2:, col] = 0.0
        a[col, col + 2:] = 0.0
    d = np.diag(a).copy()
    e = np.zeros(n)
    if n > 1:
        e[:n - 1] = np.diag(a, -1)
    return d, e


def _ql_implicit(d: np.ndarray, e: np.ndarray) -> np.ndarray:
    """Implicit-shift QL iteration on a symmetric tridiagonal matrix.

    ``d`` is the diagonal, ``e[i]`` couples d[i] and d[i+1]; both arrays are
    consumed.  Returns the eigenvalues in arbitrary order.
    """
    n = len(d)
    eps = np.finfo(float).eps
    for l in range(n):
        sweeps = 0
        while True:
            for m in range(l, n - 1):
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
            else:
                m = n - 1
            if m == l:
                break
            sweeps += 1
            if sweeps > QL_MAX_SWEEPS:
                raise ArithmeticError("QL sweep limit exceeded")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def dense_eigenvalues(m: OperatorMatrix,
                      cap: int = DENSE_DIMENSION_CAP) -> list[float]:
    """Full spectrum of a symmetric operator matrix, sorted descending.

    Uses the in-module tridiagonalization + implicit QL solver; capped at
    ``cap`` rows (raises ``TooLargeError`` beyond).
    """
    if len(m.rows) != len(m.cols):
        raise DimensionOutOfRangeError("matrix must be square")
    if len(m.rows) > cap:
        raise TooLargeError(f"dense oracle capped at {cap}, got {len(m.rows)}")
    dense = m.to_dense().astype(float)
    if not np.array_equal(dense, dense.T):
        raise ValueError("matrix not symmetric")
    d, e = _tridiagonalize(dense)
    vals = _ql_implicit(d, e)
    return sorted((float(v) for v in vals), reverse=True)
