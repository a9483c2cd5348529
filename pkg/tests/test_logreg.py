import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bcpredict.logreg import (
    Coefficients,
    DivergenceError,
    TrainConfig,
    fit_gradient_descent,
    gradient,
    log_likelihood,
    nll_cost,
    predict_label,
    predict_proba,
    sigmoid,
)
from oracles import central_difference_gradient, plain_mean_nll


def random_instance(rng, m=None, n=None):
    m = m if m is not None else int(rng.integers(4, 51))
    n = n if n is not None else int(rng.integers(1, 11))
    X = rng.normal(size=(m, n))
    y = rng.integers(0, 2, size=m).astype(float)
    beta = rng.normal(scale=1.5, size=n + 1)
    return beta, X, y


class TestSigmoid:
    def test_zero_is_half(self):
        assert sigmoid(0.0) == 0.5

    @given(st.floats(-700, 700))
    def test_complement_identity(self, z):
        assert sigmoid(z) + sigmoid(-z) == pytest.approx(1.0, abs=1e-15)

    def test_extreme_negative_no_overflow(self):
        value = sigmoid(-710.0)
        assert 0.0 <= value < 1e-300
        assert math.isfinite(value)

    def test_extreme_positive(self):
        assert sigmoid(710.0) == 1.0  # saturates, never overflows

    def test_strictly_increasing(self):
        zs = np.linspace(-30, 30, 301)
        vals = sigmoid(zs)
        assert (np.diff(vals) > 0).all()

    def test_vectorized_matches_scalar(self):
        zs = np.array([-3.0, 0.0, 2.5])
        assert sigmoid(zs).tolist() == [sigmoid(z) for z in zs]


class TestPredict:
    def test_zero_coefficients_give_half(self):
        coeffs = Coefficients.zeros(4)
        assert predict_proba(coeffs, np.array([3.0, -1.0, 2.0, 9.0])) == 0.5

    def test_single_zero_feature(self):
        coeffs = Coefficients(intercept=0.0, weights=(1.0,))
        assert predict_proba(coeffs, np.array([0.0])) == 0.5

    def test_known_logit(self):
        # logit = 1 + 2*1 + (-1)*1 = 2
        coeffs = Coefficients(intercept=1.0, weights=(2.0, -1.0))
        p = predict_proba(coeffs, np.array([1.0, 1.0]))
        assert p == pytest.approx(0.8807970779778823, abs=1e-12)

    def test_arity_mismatch(self):
        coeffs = Coefficients.zeros(3)
        with pytest.raises(ValueError, match="arity"):
            predict_proba(coeffs, np.zeros(5))

    def test_boundary_probability_is_positive(self):
        coeffs = Coefficients.zeros(2)  # probability exactly 0.5
        assert predict_label(coeffs, np.zeros(2), threshold=0.5) == 1

    def test_below_threshold_is_negative(self):
        coeffs = Coefficients(intercept=-0.05, weights=(0.0,))
        assert predict_proba(coeffs, np.zeros(1)) < 0.5
        assert predict_label(coeffs, np.zeros(1), threshold=0.5) == 0

    def test_high_threshold(self):
        coeffs = Coefficients(intercept=0.847, weights=(0.0,))  # p ~ 0.7
        assert predict_label(coeffs, np.zeros(1), threshold=0.9) == 0

    def test_label_depends_only_on_logit_sign(self):
        rng = np.random.default_rng(0)
        coeffs = Coefficients(intercept=0.3, weights=tuple(rng.normal(size=4)))
        X = rng.normal(size=(50, 4))
        logits = coeffs.intercept + X @ np.asarray(coeffs.weights)
        labels = predict_label(coeffs, X, threshold=0.5)
        assert np.array_equal(labels, (logits >= 0).astype(int))


class TestLikelihoodAndCost:
    def test_zero_coefficients_log_likelihood(self):
        rng = np.random.default_rng(1)
        X = rng.normal(size=(12, 3))
        y = rng.integers(0, 2, size=12)
        assert log_likelihood(Coefficients.zeros(3), X, y) == pytest.approx(
            -12 * math.log(2), rel=1e-14
        )

    def test_confident_correct_prediction_approaches_zero(self):
        X = np.array([[1.0]])
        y = np.array([1])
        coeffs = Coefficients(intercept=0.0, weights=(40.0,))
        ll = log_likelihood(coeffs, X, y)
        assert -1e-15 < ll <= 0.0

    def test_matches_product_form_on_small_instance(self):
        X = np.array([[0.5, -1.0], [1.5, 0.2], [-0.3, 0.8], [2.0, -0.7]])
        y = np.array([1, 0, 1, 0])
        coeffs = Coefficients(intercept=0.25, weights=(0.8, -1.1))
        product = 1.0
        for xi, yi in zip(X, y):
            p = 1.0 / (1.0 + math.exp(-(0.25 + 0.8 * xi[0] - 1.1 * xi[1])))
            product *= p**yi * (1.0 - p) ** (1 - yi)
        assert log_likelihood(coeffs, X, y) == pytest.approx(math.log(product), abs=1e-12)

    def test_cost_of_zero_coefficients_is_log_two(self):
        rng = np.random.default_rng(2)
        X = rng.normal(size=(9, 2))
        y = rng.integers(0, 2, size=9)
        assert nll_cost(Coefficients.zeros(2), X, y) == pytest.approx(math.log(2), rel=1e-14)

    def test_cost_is_negated_mean_likelihood(self):
        rng = np.random.default_rng(3)
        X = rng.normal(size=(10, 3))
        y = rng.integers(0, 2, size=10)
        coeffs = Coefficients(intercept=0.1, weights=tuple(rng.normal(size=3)))
        assert nll_cost(coeffs, X, y) == pytest.approx(
            -log_likelihood(coeffs, X, y) / 10, rel=1e-14
        )

    def test_perfect_confidence_cost_approaches_zero(self):
        X = np.array([[1.0], [-1.0]])
        y = np.array([1, 0])
        coeffs = Coefficients(intercept=0.0, weights=(50.0,))
        assert 0.0 <= nll_cost(coeffs, X, y) < 1e-15

    def test_empty_matrix_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            nll_cost(Coefficients.zeros(2), np.zeros((0, 2)), np.zeros(0))

    def test_convexity_along_random_segments(self):
        rng = np.random.default_rng(4)
        X = rng.normal(size=(25, 3))
        y = rng.integers(0, 2, size=25)
        for _ in range(50):
            beta_a = rng.normal(scale=2, size=4)
            beta_b = rng.normal(scale=2, size=4)
            t = float(rng.random())
            mid = t * beta_a + (1 - t) * beta_b
            cost = lambda b: nll_cost(Coefficients.from_array(b), X, y)
            assert cost(mid) <= t * cost(beta_a) + (1 - t) * cost(beta_b) + 1e-9


class TestGradient:
    def test_balanced_symmetric_intercept_gradient(self):
        rng = np.random.default_rng(5)
        X = rng.normal(size=(20, 3))
        X -= X.mean(axis=0)
        y = np.array([0, 1] * 10)
        g = gradient(Coefficients.zeros(3), X, y)
        assert g[0] == pytest.approx(0.0, abs=1e-15)

    def test_single_row_hand_computed(self):
        g = gradient(Coefficients.zeros(1), np.array([[1.0]]), np.array([1]))
        assert g.tolist() == [-0.5, -0.5]

    def test_matches_central_differences(self):
        rng = np.random.default_rng(6)
        for _ in range(20):
            beta, X, y = random_instance(rng)
            analytic = gradient(Coefficients.from_array(beta), X, y)
            numeric = central_difference_gradient(beta, X, y, step=1e-6)
            rel = np.abs(analytic - numeric) / np.maximum(np.abs(numeric), 1e-12)
            assert rel.max() < 1e-6

    def test_gradient_of_cost_not_sum(self):
        # doubling the rows must not change the mean-normalized gradient
        rng = np.random.default_rng(7)
        X = rng.normal(size=(8, 2))
        y = rng.integers(0, 2, size=8)
        coeffs = Coefficients(intercept=0.2, weights=(0.5, -0.5))
        g1 = gradient(coeffs, X, y)
        g2 = gradient(coeffs, np.vstack([X, X]), np.concatenate([y, y]))
        assert np.allclose(g1, g2, atol=1e-15)


class TestFit:
    def test_separable_toy_problem(self):
        X = np.array([[-1.0], [1.0]] * 20)
        y = np.array([0, 1] * 20)
        coeffs, trace = fit_gradient_descent(X, y, TrainConfig(learning_rate=0.5, max_iters=5000))
        assert coeffs.weights[0] > 0
        assert np.array_equal(predict_label(coeffs, X), y)

    def test_cost_history_non_increasing(self):
        rng = np.random.default_rng(8)
        X = rng.normal(size=(40, 3))
        y = rng.integers(0, 2, size=40)
        _, trace = fit_gradient_descent(X, y, TrainConfig(learning_rate=5.0, max_iters=500))
        diffs = np.diff(trace.cost_history)
        assert (diffs <= 0).all()

    def test_converged_flag_reflects_tolerance(self):
        rng = np.random.default_rng(9)
        X = rng.normal(size=(30, 2))
        y = rng.integers(0, 2, size=30)
        _, trace = fit_gradient_descent(
            X, y, TrainConfig(learning_rate=0.5, max_iters=10_000, tolerance=1e-10)
        )
        assert trace.converged
        h = trace.cost_history
        final_drop = (h[-2] - h[-1]) / max(h[-2], 1e-12)
        assert final_drop < 1e-10

    def test_deterministic(self):
        rng = np.random.default_rng(10)
        X = rng.normal(size=(25, 4))
        y = rng.integers(0, 2, size=25)
        a, _ = fit_gradient_descent(X, y, TrainConfig())
        b, _ = fit_gradient_descent(X, y, TrainConfig())
        assert a == b

    def test_single_class_rejected(self):
        X = np.random.default_rng(0).normal(size=(10, 2))
        with pytest.raises(ValueError, match="both classes"):
            fit_gradient_descent(X, np.ones(10), TrainConfig())

    def test_divergence_guard_trips(self):
        rng = np.random.default_rng(11)
        X = rng.normal(size=(20, 2))
        y = rng.integers(0, 2, size=20)
        with pytest.raises(DivergenceError, match="30"):
            fit_gradient_descent(X, y, TrainConfig(learning_rate=1e300, max_iters=10))

    def test_custom_init_respected(self):
        rng = np.random.default_rng(12)
        X = rng.normal(size=(30, 2))
        y = rng.integers(0, 2, size=30)
        start = Coefficients(intercept=0.5, weights=(1.0, -1.0))
        _, trace = fit_gradient_descent(
            X, y, TrainConfig(init=start, max_iters=1, tolerance=1e-15)
        )
        assert trace.cost_history[0] == pytest.approx(
            plain_mean_nll(0.5, [1.0, -1.0], X, y), rel=1e-12
        )

    def test_config_validation(self):
        with pytest.raises(ValueError):
            TrainConfig(learning_rate=0.0)
        with pytest.raises(ValueError):
            TrainConfig(max_iters=0)
        with pytest.raises(ValueError):
            TrainConfig(tolerance=-1.0)
