"""Power iteration enclosures and the dense eigensolver oracle."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import qsimplex as qs
from qsimplex.complex_core import Face
from qsimplex.errors import TooLargeError
from qsimplex.operators import OperatorMatrix


def dense_to_op(arr, kind="Q_down"):
    arr = np.asarray(arr)
    n = arr.shape[0]
    faces = tuple(Face([i]) for i in range(n))
    entries = tuple((i, j, int(arr[i, j]))
                    for i in range(n) for j in range(n) if arr[i, j] != 0)
    return OperatorMatrix(faces, faces, entries, kind)


def integer_det(mat):
    """Fraction-free Bareiss determinant of an integer matrix."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


@st.composite
def random_complexes(draw, max_n=7, max_r=3):
    r = draw(st.integers(1, max_r))
    n = draw(st.integers(r + 1, max_n))
    seed = draw(st.integers(0, 10**9))
    prob = draw(st.sampled_from([0.2, 0.4, 0.7]))
    return qs.random_complex(n, r, prob, seed)


class TestSpectralRadius:
    def test_book_down_operator(self):
        m = qs.q_down(qs.book(6, 2), 2)  # 2I + J on 4 facets
        res = qs.spectral_radius(m, tol=1e-10)
        assert abs(res.radius_estimate - 6) <= 1e-9
        assert res.lower_bound <= res.radius_estimate <= res.upper_bound

    def test_shifted_cycle_adjacency(self):
        c5 = np.zeros((5, 5), dtype=int)
        for i in range(5):
            c5[i, (i + 1) % 5] = 1
            c5[(i + 1) % 5, i] = 1
        res = qs.spectral_radius(dense_to_op(3 * np.eye(5, dtype=int) + c5))
        assert abs(res.radius_estimate - 5) <= 1e-9

    def test_three_page_fan(self):
        res = qs.spectral_radius(dense_to_op([[3, 1, 1], [1, 3, 1], [1, 1, 3]]))
        assert abs(res.radius_estimate - 5) <= 1e-9

    def test_enclosure_and_perron_normalization(self):
        k = qs.random_complex(7, 2, 0.4, 5)
        res = qs.q_signless(k)
        assert res.lower_bound <= res.radius_estimate <= res.upper_bound
        assert max(res.perron_vector) == 1.0
        assert all(0.0 <= v <= 1.0 for v in res.perron_vector)

    def test_perron_positive_on_connected(self):
        for seed in range(30):
            k = qs.random_complex(6, 2, 0.5, seed)
            if not k.is_r_path_connected():
                continue
            res = qs.q_signless(k)
            assert all(v > 0 for v in res.perron_vector)

    def test_reducible_split_by_component(self):
        k = qs.from_facets(8, [{0, 1, 2}, {0, 1, 3}, {5, 6, 7}])
        res = qs.q_signless(k)
        assert sorted(res.component_radii) == pytest.approx([3.0, 4.0])
        assert abs(res.radius_estimate - 4.0) <= 1e-9
        # entries off the dominant component are zero
        dominant = {Face([0, 1, 2]), Face([0, 1, 3])}
        for f, v in zip(k.facets, res.perron_vector):
            if f in dominant:
                assert v > 0
            else:
                assert v == 0.0

    def test_non_convergence_flag(self):
        path = np.zeros((6, 6), dtype=int)
        for i in range(5):
            path[i, i + 1] = 1
            path[i + 1, i] = 1
        m = dense_to_op(path + 2 * np.eye(6, dtype=int))
        res = qs.spectral_radius(m, tol=1e-14, max_iterations=2)
        assert not res.converged
        assert res.lower_bound <= res.radius_estimate <= res.upper_bound
        truth = max(qs.dense_eigenvalues(m))
        assert res.lower_bound - 1e-12 <= truth <= res.upper_bound + 1e-12

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            qs.spectral_radius(dense_to_op([[0, 1], [2, 0]]))
        with pytest.raises(ValueError):
            qs.spectral_radius(dense_to_op([[1, -1], [-1, 1]]))
        with pytest.raises(ValueError):
            qs.spectral_radius(dense_to_op([[1]]), tol=0.0)


class TestQSignless:
    def test_books(self):
        for r in (1, 2, 3, 4):
            for n in (r + 2, r + 5, 20):
                res = qs.q_signless(qs.book(n, r))
                assert abs(res.radius_estimate - n) <= 1e-9

    def test_remark2(self):
        res = qs.q_signless(qs.remark2_complex())
        assert abs(res.radius_estimate - 7) <= 1e-9

    def test_cocycles(self):
        for r in range(2, 7):
            for length in range(3, r + 4):
                k = qs.cocycle_complex(r, qs.Cycle(range(length)))
                res = qs.q_signless(k)
                assert abs(res.radius_estimate - (r + 3)) <= 1e-9


class TestDenseEigenvalues:
    def test_shifted_all_ones(self):
        m = dense_to_op(2 * np.eye(4, dtype=int) + np.ones((4, 4), dtype=int))
        vals = qs.dense_eigenvalues(m)
        assert vals == pytest.approx([6.0, 2.0, 2.0, 2.0], abs=1e-9)

    def test_one_by_one(self):
        k = qs.simplex(4)
        assert qs.dense_eigenvalues(qs.q_down(k, 3)) == pytest.approx([4.0])

    def test_against_numpy_on_random_symmetric(self):
        rng = np.random.default_rng(7)
        for _ in range(60):
            n = int(rng.integers(1, 30))
            a = rng.integers(-3, 4, size=(n, n))
            a = a + a.T
            mine = qs.dense_eigenvalues(dense_to_op(a))
            ref = sorted(np.linalg.eigvalsh(a.astype(float)), reverse=True)
            assert np.allclose(mine, ref, atol=1e-8)

    def test_characteristic_polynomial_oracle(self):
        # integer determinant evaluation of det(xI - Q) at integer points
        for seed in (1, 2, 3):
            k = qs.random_complex(7, 1, 0.5, seed)
            q = qs.q_up(k, 0)
            vals = qs.dense_eigenvalues(q)
            dense = q.to_dense()
            dim = dense.shape[0]
            for x in range(0, dim + 2):
                exact = integer_det(x * np.eye(dim, dtype=np.int64) - dense)
                from_spectrum = math.prod(x - v for v in vals)
                assert abs(from_spectrum - exact) <= 1e-8 * max(1.0, abs(exact))

    def test_cap(self):
        m = dense_to_op(np.eye(3, dtype=int))
        with pytest.raises(TooLargeError):
            qs.dense_eigenvalues(m, cap=2)


class TestExactRadius:
    def test_book(self):
        assert qs.exact_radius_if_uniform(qs.book(9, 3)) == 9

    def test_remark2(self):
        assert qs.exact_radius_if_uniform(qs.remark2_complex()) == 7

    def test_triangle_fan_not_uniform(self):
        k = qs.from_facets(4, [{0, 1, 2}, {0, 1, 3}, {0, 2, 3}])
        assert qs.exact_radius_if_uniform(k) is None

    def test_full_simplex_universe(self):
        # no outside vertices: the row-sum identity holds vacuously
        assert qs.exact_radius_if_uniform(qs.simplex(4)) == 4


@settings(max_examples=40, deadline=None)
@given(random_complexes())
def test_oracle_agreement(k):
    m = qs.q_down(k, k.r)
    res = qs.spectral_radius(m)
    assert abs(res.radius_estimate - max(qs.dense_eigenvalues(m))) <= 1e-8


@settings(max_examples=40, deadline=None)
@given(random_complexes())
def test_row_sum_bounds(k):
    m = qs.q_down(k, k.r)
    sums = m.row_sums()
    res = qs.spectral_radius(m)
    assert min(sums) - 1e-9 <= res.radius_estimate <= max(sums) + 1e-9


def test_monotone_under_connected_facet_addition():
    import random

    for chain_seed in range(10):
        rng = random.Random(chain_seed)
        n, r = 6, 2
        pool = [Face(c) for c in __import__("itertools").combinations(range(n), r + 1)]
        facets = [rng.choice(pool)]
        previous = qs.q_signless(qs.from_facets(n, facets)).radius_estimate
        for _ in range(8):
            current = set(facets)
            attached = [f for f in pool
                        if f not in current
                        and any(len(set(f) & set(g)) == r for g in current)]
            if not attached:
                break
            facets.append(rng.choice(attached))
            now = qs.q_signless(qs.from_facets(n, facets)).radius_estimate
            assert now >= previous - 1e-9
            previous = now
