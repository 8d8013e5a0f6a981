"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines.  Exhaustive class measurements are shared through session fixtures;
random draws are pinned to fixed seeds so every run is reproducible.
"""

import random
import time

import numpy as np

import qsimplex as qs

SEED_RANDOM_7_2 = 20250407
SEED_RANDOM_8_3 = 20250408
SEED_FUZZ = 1618
SEED_OPERATORS = 271828
NONZERO_CUT = 1e-6


def report(ok: bool, name: str, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} {name}"
    if detail:
        line += f" ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_book_radii():
    start = time.perf_counter()
    checked = 0
    ok = True
    for r in (1, 2, 3, 4):
        for n in range(r + 2, 31):
            b = qs.book(n, r)
            if qs.exact_radius_if_uniform(b) != n:
                ok = False
            if abs(qs.q_signless(b).radius_estimate - n) > 1e-9:
                ok = False
            checked += 1
    elapsed = time.perf_counter() - start
    report(ok and elapsed < 5.0, "criterion 1: book radii equal n",
           f"{checked} books, {elapsed:.2f}s")


def test_criterion_2_cocycle_radii():
    start = time.perf_counter()
    checked = 0
    ok = True
    for r in range(2, 7):
        for length in range(3, r + 4):
            k = qs.cocycle_complex(r, qs.Cycle(range(length)))
            if qs.exact_radius_if_uniform(k) != r + 3:
                ok = False
            if abs(qs.q_signless(k).radius_estimate - (r + 3)) > 1e-9:
                ok = False
            checked += 1
    elapsed = time.perf_counter() - start
    report(ok and elapsed < 2.0, "criterion 2: cocycle radii equal r+3",
           f"{checked} complexes, {elapsed:.2f}s")


def test_criterion_3_ten_facet_exception():
    start = time.perf_counter()
    k = qs.remark2_complex()
    wheel_free = qs.contains_wheel(k) is None
    connected = k.is_r_path_connected()
    uniform = qs.neighbor_uniformity(k).t == 1
    not_book = not qs.are_isomorphic(k, qs.book(7, 3))
    radius_ok = abs(qs.q_signless(k).radius_estimate - 7) <= 1e-9
    elapsed = time.perf_counter() - start
    report(all([wheel_free, connected, uniform, not_book, radius_ok])
           and elapsed < 1.0,
           "criterion 3: 7-vertex exceptional complex",
           f"wheel_free={wheel_free} connected={connected} uniform={uniform} "
           f"not_book={not_book} radius7={radius_ok} {elapsed:.2f}s")


def test_criterion_4_upper_bound(classes_5_2, classes_6_3):
    start = time.perf_counter()
    violations = 0
    for n, records in ((5, classes_5_2), (6, classes_6_3)):
        for rec in records:
            if rec.wheel_free and rec.radius.radius_estimate > n + 1e-9:
                violations += 1
    random_7_2 = qs.verify_upper_bound(
        7, 2, mode="random", samples=10_000, seed=SEED_RANDOM_7_2, prob=0.15)
    random_8_3 = qs.verify_upper_bound(
        8, 3, mode="random", samples=10_000, seed=SEED_RANDOM_8_3, prob=0.08)
    violations += len(random_7_2.counterexamples)
    violations += len(random_8_3.counterexamples)
    elapsed = time.perf_counter() - start
    report(violations == 0 and elapsed < 600.0,
           "criterion 4: wheel-free radius upper bound",
           f"exhaustive (5,2)+(6,3), 2x10^4 random, "
           f"{violations} violations, {elapsed:.1f}s")


def test_criterion_5_equality_characterization(classes_5_2, classes_6_3):
    mismatches = 0
    checked = 0
    for n, records in ((5, classes_5_2), (6, classes_6_3)):
        for rec in records:
            if not (rec.wheel_free and rec.connected):
                continue
            checked += 1
            equality = abs(rec.radius.radius_estimate - n) <= 1e-9
            uniform = rec.exact is not None
            if equality != uniform:
                mismatches += 1
            if equality and uniform and rec.exact != n:
                mismatches += 1
    report(mismatches == 0,
           "criterion 5: radius n iff 1-neighbor uniform (connected wheel-free)",
           f"{checked} classes, {mismatches} mismatches")


def test_criterion_6_down_neighbor_bound_fuzz():
    start = time.perf_counter()
    bad = 0
    for k in qs.random_complexes(7, 2, 0.15, SEED_FUZZ, 10_000):
        violations = qs.down_neighbor_bound_violations(k)
        # violations must co-occur with a wheel witness; equivalently,
        # wheel-free complexes must have none
        if violations and qs.contains_wheel(k) is None:
            bad += 1
    elapsed = time.perf_counter() - start
    report(bad == 0, "criterion 6: excess down-neighbor pairs imply wheels",
           f"10^4 fuzz complexes, {bad} failures, {elapsed:.1f}s")


def test_criterion_7_cocycle_taxonomy():
    ok = True
    for r in range(2, 7):
        three = qs.cocycle_complex(r, qs.Cycle([0, 1, 2]))
        four = qs.cocycle_complex(r, qs.Cycle([0, 1, 2, 3]))
        if not qs.are_isomorphic(three, qs.book(r + 3, r)):
            ok = False
        if not qs.are_isomorphic(four, qs.wheel(r + 3, r)):
            ok = False
        for length in range(3, r + 4):
            k = qs.cocycle_complex(r, qs.Cycle(range(length)))
            if not k.is_r_path_connected():
                ok = False
            if length >= 5 and qs.contains_wheel(k) is not None:
                ok = False
    report(ok, "criterion 7: cocycle taxonomy",
           "r in 2..6: length 3 = book, 4 = wheel, >=5 wheel-free, connected")


def test_criterion_8_all_ones_integer_identity(classes_5_2, classes_6_3):
    checked = 0
    failures = 0

    def check(k):
        nonlocal checked, failures
        rep = qs.neighbor_uniformity(k)
        if not (rep.is_uniform and rep.t == 1):
            return
        checked += 1
        if any(s != k.n_vertices for s in qs.q_down(k, k.r).row_sums()):
            failures += 1

    for r in (1, 2, 3, 4):
        for n in range(r + 2, 31):
            check(qs.book(n, r))
    for r in range(2, 7):
        for length in range(3, r + 4):
            check(qs.cocycle_complex(r, qs.Cycle(range(length))))
    check(qs.remark2_complex())
    for records in (classes_5_2, classes_6_3):
        for rec in records:
            check(rec.complex)
    report(failures == 0 and checked > 0,
           "criterion 8: row sums equal n for every 1-uniform complex",
           f"{checked} complexes, {failures} failures")


def test_criterion_9_extremal_classification():
    start = time.perf_counter()
    ok = True
    r2 = qs.verify_extremal_classification(2)
    r3 = qs.verify_extremal_classification(3)
    if r2.counterexamples or r3.counterexamples:
        ok = False
    if r2.witness_labels != ("book", "cocycle-5"):
        ok = False
    if sorted(r3.witness_labels) != ["book", "cocycle-5", "cocycle-6"]:
        ok = False
    elapsed = time.perf_counter() - start
    report(ok and elapsed < 600.0,
           "criterion 9: extremal classes are books or long cocycles",
           f"r=2: {list(r2.witness_labels)}, r=3: {sorted(r3.witness_labels)}, "
           f"{elapsed:.1f}s")


def test_criterion_10_operator_cross_checks():
    start = time.perf_counter()
    rng = random.Random(SEED_OPERATORS)
    failures = 0
    graph_cases = 0
    for _ in range(200):
        r = rng.choice([1, 2, 3])
        n = rng.randint(max(r + 2, 4), 8)
        prob = rng.choice([0.2, 0.35, 0.5])
        k = qs.random_complex(n, r, prob, rng.randrange(10**9))

        up = [v for v in qs.dense_eigenvalues(qs.q_up(k, k.r - 1))
              if abs(v) > NONZERO_CUT]
        down = [v for v in qs.dense_eigenvalues(qs.q_down(k, k.r))
                if abs(v) > NONZERO_CUT]
        if len(up) != len(down) or any(
                abs(a - b) > 1e-8 for a, b in zip(up, down)):
            failures += 1

        for i in range(2, k.r + 1):
            prod = (qs.boundary(k, i - 1).to_dense()
                    @ qs.boundary(k, i).to_dense())
            if prod.any():
                failures += 1
        for i in range(1, k.r + 1):
            if not np.array_equal(np.abs(qs.boundary(k, i).to_dense()),
                                  qs.signless_boundary(k, i).to_dense()):
                failures += 1

        if k.r == 1:
            graph_cases += 1
            vertices = sorted({v for f in k.facets for v in f})
            index = {v: i for i, v in enumerate(vertices)}
            dplusa = np.zeros((len(vertices), len(vertices)))
            for a, b in k.facets:
                dplusa[index[a], index[b]] += 1
                dplusa[index[b], index[a]] += 1
                dplusa[index[a], index[a]] += 1
                dplusa[index[b], index[b]] += 1
            oracle = float(np.linalg.eigvalsh(dplusa).max())
            if abs(qs.q_signless(k).radius_estimate - oracle) > 1e-9:
                failures += 1
    elapsed = time.perf_counter() - start
    report(failures == 0 and graph_cases > 20,
           "criterion 10: operator cross-checks on 200 random complexes",
           f"{graph_cases} graph cases, {failures} failures, {elapsed:.1f}s")
