"""Enumeration, sampling, and verification harness for pure complexes.

Exhaustive enumeration walks all nonempty facet subsets of a small universe
up to isomorphism (explicit orbit computation over all vertex permutations)
and yields one canonical representative per class.  The verify operations
scan a stream of complexes, check the spectral upper bound and the
equality/uniformity characterization, and collect extremal witnesses into a
deterministic report.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .complex_core import (
    Complex,
    Face,
    canonical_facets,
    are_isomorphic,
)
from .constructions import book
from .errors import DimensionOutOfRangeError, QsimplexError, TooLargeError
from .spectral import SpectralResult, exact_radius_if_uniform, q_signless
from .structure_checks import classify_r_plus_3, contains_wheel

MAX_FACET_POOL = 21
MAX_ENUM_VERTICES = 7
DEFAULT_WITNESS_CAP = 10


def _facet_pool(n: int, r: int) -> list[Face]:
    return [Face(c) for c in itertools.combinations(range(n), r + 1)]


def _mask_bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def enumerate_pure(n: int, r: int,
                   predicate: Callable[[Complex], bool] | None = None,
                   max_facet_pool: int = MAX_FACET_POOL) -> Iterator[Complex]:
    """One representative per isomorphism class of nonempty facet subsets.

    Classes are collapsed by explicit orbit computation over all n! vertex
    permutations (precomputed as permutations of the facet pool), so the
    walk is exhaustive and deterministic; each representative is emitted in
    canonical form, i.e. with the lexicographically minimal facet list of
    its class.  Exhaustive mode is capped: the facet pool may not exceed
    ``max_facet_pool`` and the universe may not exceed 7 vertices.
    """
    if r < 1 or n < r + 1:
        raise DimensionOutOfRangeError(f"need n >= r+1 >= 2, got n={n}, r={r}")
    pool = _facet_pool(n, r)
    m = len(pool)
    if m > max_facet_pool:
        raise TooLargeError(
            f"facet pool {m} exceeds exhaustive cap {max_facet_pool}")
    if n > MAX_ENUM_VERTICES:
        raise TooLargeError(
            f"exhaustive enumeration capped at {MAX_ENUM_VERTICES} vertices")
    index = {f: i for i, f in enumerate(pool)}
    tables = []
    for perm in itertools.permutations(range(n)):
        tables.append(tuple(index[Face(perm[v] for v in f)] for f in pool))

    seen = bytearray(1 << m)
    for mask in range(1, 1 << m):
        if seen[mask]:
            continue
        bits = _mask_bits(mask)
        orbit = set()
        for table in tables:
            image = 0
            for i in bits:
                image |= 1 << table[i]
            orbit.add(image)
        for image in orbit:
            seen[image] = 1
        # all orbit members have equal popcount, so comparing ascending
        # bit-index tuples is exactly comparing sorted facet lists
        canonical_mask = min(orbit, key=_mask_bits)
        rep = Complex(n, [pool[i] for i in _mask_bits(canonical_mask)])
        if predicate is None or predicate(rep):
            yield rep


def random_complex(n: int, r: int, facet_probability: float,
                   seed: int) -> Complex:
    """A random pure complex: every possible facet enters independently.

    Empty draws are retried; identical (n, r, probability, seed) give an
    identical complex.
    """
    rng = random.Random(seed)
    return _draw(rng, n, r, facet_probability)


def _draw(rng: random.Random, n: int, r: int, p: float) -> Complex:
    if not 0 < p <= 1:
        raise QsimplexError(f"facet probability must be in (0, 1], got {p}")
    if r < 1 or n < r + 1:
        raise DimensionOutOfRangeError(f"need n >= r+1 >= 2, got n={n}, r={r}")
    pool = _facet_pool(n, r)
    while True:
        chosen = [f for f in pool if rng.random() < p]
        if chosen:
            return Complex(n, chosen)


def random_complexes(n: int, r: int, facet_probability: float, seed: int,
                     count: int) -> Iterator[Complex]:
    """A deterministic stream of ``count`` random complexes from one seed."""
    rng = random.Random(seed)
    for _ in range(count):
        yield _draw(rng, n, r, facet_probability)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of an enumeration or sampling run.

    ``witnesses`` holds the canonical facet lists attaining the maximal
    radius among wheel-free complexes (capped), with optional per-witness
    labels (used by the classification run).  ``counterexamples`` pairs a
    canonical facet list with the name of the violated claim; it stays empty
    unless a genuine violation is found.
    """

    kind: str
    n: int
    r: int
    mode: str
    samples: int | None
    seed: int | None
    prob: float | None
    visited: int
    wheel_free: int
    max_radius: SpectralResult | None
    facet_count_max: int
    equality_nonbook: int
    witnesses: tuple[tuple[Face, ...], ...]
    witness_labels: tuple[str, ...]
    counterexamples: tuple[tuple[tuple[Face, ...], str], ...]

    def render(self) -> str:
        """Stable key-value header followed by witness facet lists."""
        def num(x) -> str:
            if x is None:
                return "-"
            if isinstance(x, float):
                return format(x, ".12g")
            return str(x)

        lines = [
            f"report {self.kind}",
            f"n {self.n}",
            f"r {self.r}",
            f"mode {self.mode}",
            f"samples {num(self.samples)}",
            f"seed {num(self.seed)}",
            f"prob {num(self.prob)}",
            f"visited {self.visited}",
            f"wheel_free {self.wheel_free}",
            f"max_radius {num(self.max_radius.radius_estimate if self.max_radius else None)}",
            f"max_radius_lower {num(self.max_radius.lower_bound if self.max_radius else None)}",
            f"max_radius_upper {num(self.max_radius.upper_bound if self.max_radius else None)}",
            f"facet_count_max {self.facet_count_max}",
            f"equality_nonbook {self.equality_nonbook}",
            f"counterexamples {len(self.counterexamples)}",
            f"witnesses {len(self.witnesses)}",
        ]
        for idx, facets in enumerate(self.witnesses, start=1):
            label = ""
            if self.witness_labels:
                label = " " + self.witness_labels[idx - 1]
            lines.append(f"witness {idx}{label}")
            lines.append(f"{self.n} {self.r}")
            lines.extend(" ".join(str(v) for v in f) for f in facets)
        for idx, (facets, claim) in enumerate(self.counterexamples, start=1):
            lines.append(f"counterexample {idx} {claim}")
            lines.append(f"{self.n} {self.r}")
            lines.extend(" ".join(str(v) for v in f) for f in facets)
        return "\n".join(lines) + "\n"


def _stream(n: int, r: int, mode: str, samples: int | None,
            seed: int | None, prob: float | None) -> Iterable[Complex]:
    if mode == "exhaustive":
        return enumerate_pure(n, r)
    if mode == "random":
        if samples is None or seed is None or prob is None:
            raise QsimplexError("random mode needs samples, seed, and prob")
        return random_complexes(n, r, prob, seed, samples)
    raise QsimplexError(f"unknown mode {mode!r}")


def _inspect(k: Complex):
    """Per-complex measurements consumed by the scan reducer."""
    wheel_witness = contains_wheel(k)
    wheel_free = wheel_witness is None
    res = q_signless(k) if wheel_free else None
    exact = exact_radius_if_uniform(k)
    connected = k.is_r_path_connected()
    return k, wheel_free, res, exact, connected


def _scan(n: int, r: int, mode: str, samples: int | None, seed: int | None,
          prob: float | None, tol: float, check_claims: bool,
          workers: int = 1, witness_cap: int = DEFAULT_WITNESS_CAP,
          kind: str = "search") -> SearchReport:
    complexes = _stream(n, r, mode, samples, seed, prob)

    visited = 0
    wheel_free_count = 0
    facet_count_max = 0
    equality_nonbook = 0
    best: SpectralResult | None = None
    candidates: list[tuple[float, Complex]] = []
    counterexamples: list[tuple[tuple[Face, ...], str]] = []
    book_reference = book(n, r) if n >= r + 2 else None

    def reduce_one(item) -> None:
        nonlocal visited, wheel_free_count, facet_count_max
        nonlocal best, equality_nonbook
        k, wheel_free, res, exact, connected = item
        visited += 1
        if check_claims and exact is not None and exact != n:
            counterexamples.append(
                (canonical_facets(k), "uniform-integer-identity"))
        if not wheel_free:
            return
        wheel_free_count += 1
        facet_count_max = max(facet_count_max, len(k.facets))
        assert res is not None
        if best is None or res.radius_estimate > best.radius_estimate:
            best = res
        candidates.append((res.radius_estimate, k))
        cutoff = best.radius_estimate - tol
        if len(candidates) > 1:
            candidates[:] = [c for c in candidates if c[0] >= cutoff]
        if check_claims:
            if res.lower_bound > n + tol:
                counterexamples.append(
                    (canonical_facets(k), "radius-upper-bound"))
            is_eq = abs(res.radius_estimate - n) <= tol
            is_uniform = exact is not None
            if is_uniform and not is_eq:
                counterexamples.append(
                    (canonical_facets(k), "uniformity-implies-equality"))
            if connected and is_eq and not is_uniform:
                counterexamples.append(
                    (canonical_facets(k), "equality-implies-uniformity"))
            if connected and is_eq and book_reference is not None:
                if not are_isomorphic(k, book_reference):
                    equality_nonbook += 1

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for item in pool.map(_inspect, complexes):
                reduce_one(item)
    else:
        for k in complexes:
            reduce_one(_inspect(k))

    witnesses: list[tuple[Face, ...]] = []
    if best is not None:
        cutoff = best.radius_estimate - tol
        seen = set()
        for est, k in candidates:
            if est < cutoff:
                continue
            canon = canonical_facets(k)
            if canon not in seen:
                seen.add(canon)
                witnesses.append(canon)
            if len(witnesses) >= witness_cap:
                break
        witnesses.sort()

    return SearchReport(
        kind=kind, n=n, r=r, mode=mode, samples=samples, seed=seed, prob=prob,
        visited=visited, wheel_free=wheel_free_count, max_radius=best,
        facet_count_max=facet_count_max, equality_nonbook=equality_nonbook,
        witnesses=tuple(witnesses), witness_labels=(),
        counterexamples=tuple(counterexamples),
    )


def search_extremal(n: int, r: int, mode: str = "exhaustive",
                    samples: int | None = None, seed: int | None = None,
                    prob: float | None = None, tol: float = 1e-9,
                    workers: int = 1,
                    witness_cap: int = DEFAULT_WITNESS_CAP) -> SearchReport:
    """Report the maximal radius among wheel-free complexes, with witnesses.

    No claims are checked; the report carries extremal statistics only (the
    facet-count maximum is exploratory and carries no assertion).
    """
    return _scan(n, r, mode, samples, seed, prob, tol,
                 check_claims=False, workers=workers,
                 witness_cap=witness_cap, kind="search")


def verify_upper_bound(n: int, r: int, mode: str = "exhaustive",
                       samples: int | None = None, seed: int | None = None,
                       prob: float | None = None, tol: float = 1e-9,
                       workers: int = 1,
                       witness_cap: int = DEFAULT_WITNESS_CAP) -> SearchReport:
    """Check the radius upper bound and the equality characterization.

    Every wheel-free complex in the stream must have certified radius at
    most n (within ``tol``); on r-path connected wheel-free complexes,
    radius n must coincide with 1-neighbor uniformity, and every 1-neighbor
    uniform complex must pass the integer row-sum identity.  Violations go
    into the report, never raised.
    """
    return _scan(n, r, mode, samples, seed, prob, tol,
                 check_claims=True, workers=workers,
                 witness_cap=witness_cap, kind="verify-upper-bound")


def verify_extremal_classification(r: int, tol: float = 1e-9,
                                   workers: int = 1) -> SearchReport:
    """Classify all extremal connected wheel-free complexes on r+3 vertices.

    Enumerates the isomorphism classes exhaustively, keeps the r-path
    connected wheel-free ones whose radius is integer-certified equal to
    r+3, and requires each to classify as a book or as a cocycle complex of
    cycle length at least 5.
    """
    n = r + 3
    witnesses: list[tuple[Face, ...]] = []
    labels: list[str] = []
    counterexamples: list[tuple[tuple[Face, ...], str]] = []
    visited = 0
    wheel_free_count = 0
    facet_count_max = 0
    best: SpectralResult | None = None

    def work(k: Complex):
        wheel_free = contains_wheel(k) is None
        if not wheel_free:
            return k, False, None, None, False
        exact = exact_radius_if_uniform(k)
        res = q_signless(k)
        return k, True, res, exact, k.is_r_path_connected()

    stream = enumerate_pure(n, r)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            items = pool.map(work, stream)
            items = list(items)
    else:
        items = (work(k) for k in stream)

    for k, wheel_free, res, exact, connected in items:
        visited += 1
        if not wheel_free:
            continue
        wheel_free_count += 1
        facet_count_max = max(facet_count_max, len(k.facets))
        assert res is not None
        if best is None or res.radius_estimate > best.radius_estimate:
            best = res
        if not (connected and abs(res.radius_estimate - n) <= tol):
            continue
        cls = classify_r_plus_3(k)
        canon = canonical_facets(k)
        if exact != n:
            counterexamples.append((canon, "equality-implies-uniformity"))
        if cls.kind == "book":
            labels.append("book")
            witnesses.append(canon)
        elif cls.kind == "cocycle" and cls.cycle_length is not None \
                and cls.cycle_length >= 5:
            labels.append(f"cocycle-{cls.cycle_length}")
            witnesses.append(canon)
        else:
            counterexamples.append((canon, "extremal-classification"))

    order = sorted(range(len(witnesses)), key=lambda i: witnesses[i])
    return SearchReport(
        kind="verify-classification", n=n, r=r, mode="exhaustive",
        samples=None, seed=None, prob=None,
        visited=visited, wheel_free=wheel_free_count, max_radius=best,
        facet_count_max=facet_count_max, equality_nonbook=0,
        witnesses=tuple(witnesses[i] for i in order),
        witness_labels=tuple(labels[i] for i in order),
        counterexamples=tuple(counterexamples),
    )
