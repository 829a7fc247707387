import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import goldens
from fuzzydocs import (
    FcmParams,
    FeatureMatrix,
    harden,
    init_partition,
    load_result,
    objective,
    pairwise_distances,
    run_fcm,
    save_result,
    update_centers,
    update_memberships,
    validate_partition,
)


def random_instance(seed: int, n: int = 6, m: int = 2, c: int = 2):
    rng = np.random.default_rng(seed)
    data = rng.uniform(0.0, 10000.0, size=(n, m))
    x = FeatureMatrix(tuple(f"d{i}" for i in range(n)), data)
    u0 = init_partition(n, c, seed=seed)
    return x, u0


class TestFeatureMatrix:
    def test_basic(self, example_matrix):
        assert example_matrix.n_docs == 8
        assert example_matrix.n_features == 4

    def test_rejects_mismatched_ids(self):
        with pytest.raises(ValueError):
            FeatureMatrix(("a",), np.zeros((2, 3)))

    def test_rejects_duplicate_ids(self):
        with pytest.raises(ValueError):
            FeatureMatrix(("a", "a"), np.zeros((2, 3)))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            FeatureMatrix(("a",), np.array([[-1.0]]))
        with pytest.raises(ValueError):
            FeatureMatrix(("a",), np.array([[10001.0]]))
        with pytest.raises(ValueError):
            FeatureMatrix(("a",), np.array([[np.nan]]))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            FeatureMatrix((), np.zeros((0, 3)))


class TestFcmParams:
    def test_defaults(self):
        params = FcmParams(c=2)
        assert params.fuzzifier == 2.0
        assert params.epsilon == 0.001
        assert params.max_iters == 100

    @pytest.mark.parametrize("kwargs", [
        {"c": 0},
        {"c": 2, "fuzzifier": 1.0},
        {"c": 2, "fuzzifier": 0.5},
        {"c": 2, "epsilon": 0.0},
        {"c": 2, "epsilon": 1.0},
        {"c": 2, "max_iters": 0},
    ])
    def test_rejects_bad_params(self, kwargs):
        with pytest.raises(ValueError):
            FcmParams(**kwargs)


class TestInitPartition:
    def test_explicit_accepted_verbatim(self, crisp_init):
        u = init_partition(8, 2, init=crisp_init)
        np.testing.assert_array_equal(u, crisp_init)

    def test_single_cluster_is_all_ones(self):
        np.testing.assert_array_equal(init_partition(5, 1), np.ones((1, 5)))

    def test_random_mode_is_valid_and_deterministic(self):
        a = init_partition(8, 2, seed=42)
        b = init_partition(8, 2, seed=42)
        np.testing.assert_array_equal(a, b)
        validate_partition(a, n=8, c=2)
        assert np.all(a >= 0.0) and np.all(a <= 1.0)
        np.testing.assert_allclose(a.sum(axis=0), 1.0, atol=1e-9)

    def test_different_seeds_differ(self):
        assert not np.array_equal(init_partition(8, 2, seed=1), init_partition(8, 2, seed=2))

    def test_rejects_invalid_explicit(self):
        bad = np.array([[0.6, 0.6], [0.6, 0.6]])
        with pytest.raises(ValueError, match="invalid partition"):
            init_partition(2, 2, init=bad)
        with pytest.raises(ValueError, match="invalid partition"):
            init_partition(2, 2, init=np.array([[1.5, -0.5], [-0.5, 1.5]]))

    def test_rejects_more_clusters_than_docs(self):
        with pytest.raises(ValueError):
            init_partition(2, 3)


class TestUpdateCenters:
    def test_crisp_centers_are_exact_quarters(self, example_matrix, crisp_init):
        v = update_centers(crisp_init, example_matrix.data, 2.0)
        np.testing.assert_allclose(v[0], goldens.CENTER_1, rtol=0, atol=1e-9)
        np.testing.assert_allclose(v[1], goldens.CENTER_2, rtol=0, atol=1e-9)

    def test_uniform_memberships_give_global_mean(self, example_matrix):
        u = np.full((2, 8), 0.5)
        v = update_centers(u, example_matrix.data, 2.0)
        mean = example_matrix.data.mean(axis=0)
        np.testing.assert_allclose(v[0], mean, rtol=1e-12)
        np.testing.assert_allclose(v[1], mean, rtol=1e-12)

    def test_second_iteration_centers(self, example_matrix):
        u1 = np.array([goldens.U1_ROW1, [1.0 - x for x in goldens.U1_ROW1]])
        v = update_centers(u1, example_matrix.data, 2.0)
        np.testing.assert_allclose(v[0], goldens.SECOND_CENTER_1, rtol=0, atol=1e-6)
        np.testing.assert_allclose(v[1], goldens.SECOND_CENTER_2, rtol=0, atol=1e-6)

    def test_empty_cluster_raises(self, example_matrix):
        u = np.vstack([np.zeros(8), np.ones(8)])
        with pytest.raises(ValueError, match="empty cluster"):
            update_centers(u, example_matrix.data, 2.0)

    def test_centers_inside_data_hull(self, example_matrix):
        u = init_partition(8, 3, seed=5)
        v = update_centers(u, example_matrix.data, 2.0)
        lo = example_matrix.data.min(axis=0) - 1e-9
        hi = example_matrix.data.max(axis=0) + 1e-9
        assert np.all(v >= lo) and np.all(v <= hi)

    def test_crisp_memberships_give_cluster_means_any_fuzzifier(self, example_matrix, crisp_init):
        for fuzzifier in (1.5, 2.0, 3.7):
            v = update_centers(crisp_init, example_matrix.data, fuzzifier)
            members1 = example_matrix.data[crisp_init[0] == 1.0]
            members2 = example_matrix.data[crisp_init[1] == 1.0]
            np.testing.assert_allclose(v[0], members1.mean(axis=0), rtol=1e-12)
            np.testing.assert_allclose(v[1], members2.mean(axis=0), rtol=1e-12)


class TestPairwiseDistances:
    def test_golden_distances(self, example_matrix):
        v = np.array([goldens.CENTER_1, goldens.CENTER_2])
        d = pairwise_distances(example_matrix.data, v)
        np.testing.assert_allclose(d[0], goldens.D1, rtol=0, atol=1e-12)
        np.testing.assert_allclose(d[1], goldens.D2, rtol=0, atol=1e-12)

    def test_point_at_center_is_zero(self):
        x = np.array([[3.0, 4.0]])
        v = np.array([[3.0, 4.0], [0.0, 0.0]])
        d = pairwise_distances(x, v)
        assert d[0, 0] == 0.0
        assert d[1, 0] == 5.0

    def test_shape(self, example_matrix):
        v = np.array([goldens.CENTER_1, goldens.CENTER_2])
        assert pairwise_distances(example_matrix.data, v).shape == (2, 8)


class TestUpdateMemberships:
    def test_golden_first_iteration(self, example_matrix):
        d = np.array([goldens.D1, goldens.D2])
        u = update_memberships(d, 2.0)
        np.testing.assert_allclose(u[0], goldens.U1_ROW1, rtol=0, atol=1e-12)
        np.testing.assert_allclose(u.sum(axis=0), 1.0, rtol=0, atol=1e-12)

    def test_first_column_value(self):
        d = np.array([[goldens.D1[0]], [goldens.D2[0]]])
        u = update_memberships(d, 2.0)
        assert u[0, 0] == pytest.approx(goldens.U1_ROW1[0], abs=1e-12)
        assert u[0, 0] == pytest.approx(0.9057, abs=1e-4)

    def test_equidistant_column(self):
        u = update_memberships(np.array([[7.0], [7.0], [7.0]]), 2.0)
        np.testing.assert_array_equal(u, np.full((3, 1), 1.0 / 3.0))

    def test_zero_distance_is_one_hot(self):
        u = update_memberships(np.array([[0.0], [7.0]]), 2.0)
        np.testing.assert_array_equal(u, [[1.0], [0.0]])

    def test_double_zero_takes_first(self):
        u = update_memberships(np.array([[5.0], [0.0], [0.0]]), 2.0)
        np.testing.assert_array_equal(u, [[0.0], [1.0], [0.0]])

    def test_fuzzifier_sharpens_toward_crisp(self):
        d = np.array([[1.0], [2.0]])
        soft = update_memberships(d, 3.0)[0, 0]
        hard = update_memberships(d, 1.5)[0, 0]
        assert hard > soft > 0.5


class TestObjective:
    def test_point_at_center_is_zero(self):
        x = np.array([[5.0, 5.0]])
        u = np.array([[1.0]])
        v = np.array([[5.0, 5.0]])
        assert objective(x, u, v, 2.0) == 0.0

    def test_crisp_init_objective_is_exact(self, example_matrix, crisp_init):
        v = np.array([goldens.CENTER_1, goldens.CENTER_2])
        j = objective(example_matrix.data, crisp_init, v, 2.0)
        assert j == pytest.approx(goldens.OBJECTIVE_AT_INIT, abs=1e-9)

    def test_matches_brute_force(self, example_matrix, crisp_init):
        v = np.array([goldens.CENTER_1, goldens.CENTER_2])
        expected = 0.0
        for i in range(8):
            for j in range(2):
                dist_sq = sum(
                    (example_matrix.data[i, k] - v[j, k]) ** 2 for k in range(4)
                )
                expected += crisp_init[j, i] ** 2 * dist_sq
        assert objective(example_matrix.data, crisp_init, v, 2.0) == pytest.approx(
            expected, rel=1e-12
        )


class TestRunFcm:
    def test_one_iteration_matches_golden(self, example_matrix, crisp_init):
        params = FcmParams(c=2, init=crisp_init, max_iters=1)
        res = run_fcm(example_matrix, params)
        assert res.iterations == 1
        assert not res.converged
        np.testing.assert_allclose(res.partition[0], goldens.U1_ROW1, rtol=0, atol=1e-12)

    def test_convergence(self, example_matrix, crisp_init):
        res = run_fcm(example_matrix, FcmParams(c=2, init=crisp_init))
        assert res.converged
        assert res.iterations == goldens.CONVERGED_ITERATIONS
        assert res.max_change_history[-1] < 0.001
        np.testing.assert_allclose(
            res.objective_history, goldens.OBJECTIVE_HISTORY_2DP, rtol=0, atol=0.01
        )
        assert harden(res.partition).tolist() == goldens.HARDENED

    def test_objective_history_non_increasing(self, example_matrix, crisp_init):
        res = run_fcm(example_matrix, FcmParams(c=2, init=crisp_init))
        hist = res.objective_history
        for earlier, later in zip(hist, hist[1:]):
            assert later <= earlier * (1 + 1e-9)

    def test_converged_state_is_fixed_point(self, example_matrix, crisp_init):
        params = FcmParams(c=2, init=crisp_init)
        res = run_fcm(example_matrix, params)
        v = update_centers(res.partition, example_matrix.data, 2.0)
        u = update_memberships(pairwise_distances(example_matrix.data, v), 2.0)
        assert np.max(np.abs(u - res.partition)) < params.epsilon

    def test_max_iters_reached_not_converged(self, example_matrix, crisp_init):
        res = run_fcm(example_matrix, FcmParams(c=2, init=crisp_init, max_iters=2))
        assert not res.converged
        assert res.iterations == 2

    def test_identical_rows_collapse_to_empty_cluster_error(self):
        # every weighted mean of identical rows is the row itself, so
        # all distances are zero, every column goes one-hot to the first
        # cluster, and the second center update finds cluster 2 empty
        data = np.tile([[100.0, 200.0]], (4, 1))
        x = FeatureMatrix(("a", "b", "c", "d"), data)
        init = np.full((2, 4), 0.5)
        with pytest.raises(ValueError, match="empty cluster"):
            run_fcm(x, FcmParams(c=2, init=init))

    def test_identical_rows_one_iteration_goes_one_hot(self):
        data = np.tile([[100.0, 200.0]], (4, 1))
        x = FeatureMatrix(("a", "b", "c", "d"), data)
        init = np.full((2, 4), 0.5)
        res = run_fcm(x, FcmParams(c=2, init=init, max_iters=1))
        np.testing.assert_array_equal(res.partition[0], np.ones(4))
        np.testing.assert_allclose(res.centers, np.tile([[100.0, 200.0]], (2, 1)))

    def test_single_cluster(self, example_matrix):
        res = run_fcm(example_matrix, FcmParams(c=1))
        assert res.converged
        assert res.iterations == 1
        np.testing.assert_array_equal(res.partition, np.ones((1, 8)))

    def test_trace_recording(self, example_matrix, crisp_init):
        res = run_fcm(example_matrix, FcmParams(c=2, init=crisp_init), record_trace=True)
        assert res.trace is not None
        assert len(res.trace) == res.iterations
        first = res.trace[0]
        assert first["iteration"] == 1
        np.testing.assert_allclose(
            np.array(first["memberships"])[0], goldens.U1_ROW1, rtol=0, atol=1e-12
        )
        np.testing.assert_allclose(first["centers"], [goldens.CENTER_1, goldens.CENTER_2])

    def test_deterministic_with_seed(self, example_matrix):
        a = run_fcm(example_matrix, FcmParams(c=2, seed=11))
        b = run_fcm(example_matrix, FcmParams(c=2, seed=11))
        np.testing.assert_array_equal(a.partition, b.partition)
        np.testing.assert_array_equal(a.centers, b.centers)
        assert a.objective_history == b.objective_history

    def test_propagates_empty_cluster(self, example_matrix):
        init = np.vstack([np.zeros(8), np.ones(8)])
        with pytest.raises(ValueError, match="empty cluster"):
            run_fcm(example_matrix, FcmParams(c=2, init=init))


class TestHarden:
    def test_final_state_grouping(self):
        row1 = np.array(goldens.FINAL_ROW1)
        u = np.vstack([row1, 1.0 - row1])
        assert harden(u).tolist() == goldens.HARDENED

    def test_tie_takes_lowest_index(self):
        assert harden(np.array([[0.5], [0.5]])).tolist() == [0]

    def test_single_cluster(self):
        assert harden(np.ones((1, 4))).tolist() == [0, 0, 0, 0]


class TestResultFiles:
    def test_round_trip(self, tmp_path, example_matrix, crisp_init):
        res = run_fcm(example_matrix, FcmParams(c=2, init=crisp_init))
        path = tmp_path / "result.json"
        save_result(res, example_matrix.doc_ids, ["stadium", "ball", "team", "democracy"], path)
        loaded = load_result(path)
        assert loaded["doc_ids"] == list(example_matrix.doc_ids)
        assert loaded["features"] == ["stadium", "ball", "team", "democracy"]
        assert loaded["iterations"] == res.iterations
        assert loaded["converged"] is True
        np.testing.assert_array_equal(loaded["memberships"], res.partition)
        np.testing.assert_array_equal(loaded["centers"], res.centers)
        assert loaded["objective_history"] == list(res.objective_history)

    def test_trace_embedded(self, tmp_path, example_matrix, crisp_init):
        res = run_fcm(example_matrix, FcmParams(c=2, init=crisp_init), record_trace=True)
        path = tmp_path / "result.json"
        save_result(res, example_matrix.doc_ids, ["s", "b", "t", "d"], path)
        raw = json.loads(path.read_text(encoding="utf-8"))
        assert len(raw["trace"]) == res.iterations

    def test_load_rejects_missing_keys(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"doc_ids": []}', encoding="utf-8")
        with pytest.raises(ValueError, match="invalid result file"):
            load_result(path)


class TestValidatePartition:
    def test_accepts_valid(self, crisp_init):
        validate_partition(crisp_init, n=8, c=2)

    def test_rejects_bad_column_sum(self):
        with pytest.raises(ValueError, match="invalid partition"):
            validate_partition(np.array([[0.7], [0.7]]))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError, match="invalid partition"):
            validate_partition(np.array([[1.2], [-0.2]]))

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError, match="invalid partition"):
            validate_partition(np.ones(4))
        with pytest.raises(ValueError, match="invalid partition"):
            validate_partition(np.ones((2, 3)), n=4)
        with pytest.raises(ValueError, match="invalid partition"):
            validate_partition(np.full((3, 3), 1.0 / 3.0), c=2)


class TestProperties:
    @given(st.integers(0, 10_000))
    @settings(max_examples=200, deadline=None)
    def test_memberships_column_stochastic(self, seed):
        rng = np.random.default_rng(seed)
        c, n = int(rng.integers(1, 5)), int(rng.integers(1, 9))
        d = rng.uniform(0.0, 500.0, size=(c, n))
        # plant exact zeros in some columns
        for col in range(0, n, 3):
            d[int(rng.integers(0, c)), col] = 0.0
        u = update_memberships(d, float(rng.uniform(1.1, 4.0)))
        assert np.all(u >= 0.0) and np.all(u <= 1.0)
        np.testing.assert_allclose(u.sum(axis=0), 1.0, rtol=0, atol=1e-9)
        for col in range(n):
            zero_rows = np.flatnonzero(d[:, col] == 0.0)
            if zero_rows.size:
                expected = np.zeros(c)
                expected[zero_rows[0]] = 1.0
                np.testing.assert_array_equal(u[:, col], expected)

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_objective_descent(self, seed):
        x, u0 = random_instance(seed, n=8, m=3, c=3)
        res = run_fcm(x, FcmParams(c=3, init=u0, max_iters=20))
        hist = res.objective_history
        for earlier, later in zip(hist, hist[1:]):
            assert later <= earlier * (1 + 1e-9) + 1e-12

    @given(st.integers(0, 10_000))
    @settings(max_examples=200, deadline=None)
    def test_memberships_monotone_in_distance(self, seed):
        rng = np.random.default_rng(seed)
        c = int(rng.integers(2, 5))
        d = rng.uniform(1.0, 400.0, size=(c, 1))
        u = update_memberships(d, 2.0)
        order_by_distance = np.argsort(d[:, 0])
        memberships = u[order_by_distance, 0]
        assert np.all(np.diff(memberships) < 0) or len(set(d[:, 0])) < c

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_permutation_equivariance_one_iteration(self, seed):
        rng = np.random.default_rng(seed)
        n, m, c = 10, 4, 3
        data = rng.uniform(0.0, 10000.0, size=(n, m))
        u0 = init_partition(n, c, seed=seed)
        perm = rng.permutation(n)

        def one_iteration(matrix, u):
            v = update_centers(u, matrix, 2.0)
            return update_memberships(pairwise_distances(matrix, v), 2.0), v

        u_plain, v_plain = one_iteration(data, u0)
        u_perm, v_perm = one_iteration(data[perm], u0[:, perm])
        np.testing.assert_allclose(u_perm, u_plain[:, perm], rtol=1e-9, atol=1e-12)
        np.testing.assert_allclose(v_perm, v_plain, rtol=1e-9, atol=1e-9)

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_converged_runs_are_fixed_points(self, seed):
        x, u0 = random_instance(seed, n=7, m=2, c=2)
        params = FcmParams(c=2, init=u0, max_iters=200)
        res = run_fcm(x, params)
        if not res.converged:
            return
        v = update_centers(res.partition, x.data, 2.0)
        u = update_memberships(pairwise_distances(x.data, v), 2.0)
        assert np.max(np.abs(u - res.partition)) < params.epsilon

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_crisp_centers_are_cluster_means(self, seed):
        rng = np.random.default_rng(seed)
        n, m = 8, 3
        data = rng.uniform(0.0, 10000.0, size=(n, m))
        assignment = rng.integers(0, 2, size=n)
        assignment[0], assignment[1] = 0, 1  # keep both clusters non-empty
        u = np.zeros((2, n))
        u[assignment, np.arange(n)] = 1.0
        fuzzifier = float(rng.uniform(1.1, 4.0))
        v = update_centers(u, data, fuzzifier)
        for j in range(2):
            np.testing.assert_allclose(
                v[j], data[assignment == j].mean(axis=0), rtol=1e-12
            )
