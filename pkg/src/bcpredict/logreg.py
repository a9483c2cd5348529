"""Binary logistic regression fit by full-batch gradient descent.

The model scores p = sigmoid(b0 + w.x); training minimizes the mean negative
log-likelihood of the Bernoulli labels. Cost and gradient are both divided by
the number of rows so the usable learning rate does not depend on dataset
size. Descent is guarded: a step that increases the cost is retried with a
halved learning rate, so the recorded cost history is never increasing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class DivergenceError(RuntimeError):
    """Gradient descent could not find a non-increasing step."""


_MAX_HALVINGS = 30


@dataclass(frozen=True)
class Coefficients:
    """Intercept plus one weight per model feature, in feature order."""

    intercept: float
    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        if not math.isfinite(self.intercept) or not all(math.isfinite(w) for w in self.weights):
            raise ValueError("coefficients must be finite")

    @property
    def arity(self) -> int:
        return len(self.weights)

    def as_array(self) -> np.ndarray:
        """[intercept, w1..wn] — the layout gradient() uses."""
        return np.concatenate(([self.intercept], self.weights))

    @staticmethod
    def from_array(beta: np.ndarray) -> "Coefficients":
        return Coefficients(intercept=float(beta[0]), weights=tuple(float(w) for w in beta[1:]))

    @staticmethod
    def zeros(n_features: int) -> "Coefficients":
        return Coefficients(intercept=0.0, weights=(0.0,) * n_features)


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.1
    max_iters: int = 10_000
    tolerance: float = 1e-8
    init: Coefficients | None = None  # None = all zeros

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ValueError(f"learning_rate must be > 0, got {self.learning_rate}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be >= 1, got {self.max_iters}")
        if self.tolerance <= 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")


@dataclass(frozen=True)
class TrainTrace:
    """Cost per accepted iteration (index 0 is the initial cost)."""

    cost_history: tuple[float, ...]
    iterations_run: int
    converged: bool


def sigmoid(z):
    """1 / (1 + exp(-z)), overflow-safe for any finite z; scalar or array."""
    arr = np.asarray(z, dtype=float)
    out = np.empty_like(arr)
    pos = arr >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-arr[pos]))
    ez = np.exp(arr[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out if out.ndim else float(out)


def decision_values(coeffs: Coefficients, X: np.ndarray) -> np.ndarray:
    """Logits b0 + X.w for a (m, n) matrix."""
    X = np.asarray(X, dtype=float)
    if X.shape[-1] != coeffs.arity:
        raise ValueError(f"feature arity {X.shape[-1]} != coefficient arity {coeffs.arity}")
    return coeffs.intercept + X @ np.asarray(coeffs.weights)


def predict_proba(coeffs: Coefficients, features):
    """Malignancy probability; a single feature vector gives a float."""
    arr = np.asarray(features, dtype=float)
    if arr.shape[-1] != coeffs.arity:
        raise ValueError(f"feature arity {arr.shape[-1]} != coefficient arity {coeffs.arity}")
    p = sigmoid(coeffs.intercept + arr @ np.asarray(coeffs.weights))
    return float(p) if arr.ndim == 1 else p


def predict_label(coeffs: Coefficients, features, threshold: float = 0.5):
    """1 (malignant) iff probability >= threshold; the boundary counts positive."""
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must be in (0, 1), got {threshold}")
    p = predict_proba(coeffs, features)
    if isinstance(p, float):
        return int(p >= threshold)
    return (p >= threshold).astype(int)


def _check_xy(X, y) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2:
        raise ValueError("X must be a 2-D matrix")
    if y.shape != (X.shape[0],):
        raise ValueError(f"y length {y.shape} does not match X rows {X.shape[0]}")
    if X.shape[0] == 0:
        raise ValueError("empty X")
    if not np.isin(y, (0.0, 1.0)).all():
        raise ValueError("y must be binary 0/1")
    return X, y


def log_likelihood(coeffs: Coefficients, X, y) -> float:
    """Sum of per-row Bernoulli log-probabilities, stable at extreme logits."""
    X, y = _check_xy(X, y)
    z = decision_values(coeffs, X)
    # log p = -log(1+e^-z), log(1-p) = -log(1+e^z)
    return float(-np.sum(y * np.logaddexp(0.0, -z) + (1.0 - y) * np.logaddexp(0.0, z)))


def nll_cost(coeffs: Coefficients, X, y) -> float:
    """Mean negative log-likelihood; the training objective."""
    X, y = _check_xy(X, y)
    return -log_likelihood(coeffs, X, y) / X.shape[0]


def gradient(coeffs: Coefficients, X, y) -> np.ndarray:
    """Gradient of nll_cost: (1/m) sum (p_i - y_i) * (1, x_i).

    Component order matches Coefficients: index 0 is the intercept.
    """
    X, y = _check_xy(X, y)
    p = sigmoid(decision_values(coeffs, X))
    resid = p - y
    m = X.shape[0]
    return np.concatenate(([resid.sum() / m], (X.T @ resid) / m))


def fit_gradient_descent(X, y, config: TrainConfig) -> tuple[Coefficients, TrainTrace]:
    """Minimize the mean NLL by guarded full-batch descent.

    Stops when the relative cost decrease falls below config.tolerance or
    max_iters is reached. A cost-increasing step halves the learning rate and
    retries; 30 consecutive halvings raise DivergenceError. Deterministic for
    a fixed init.
    """
    X, y = _check_xy(X, y)
    if not (np.any(y == 0.0) and np.any(y == 1.0)):
        raise ValueError("training labels must contain both classes")
    n = X.shape[1]
    init = config.init if config.init is not None else Coefficients.zeros(n)
    if init.arity != n:
        raise ValueError(f"init arity {init.arity} != feature count {n}")

    beta = init.as_array()
    lr = config.learning_rate
    cost = _nll_from_beta(beta, X, y)
    history = [cost]
    converged = False
    iterations = 0

    for _ in range(config.max_iters):
        grad = _gradient_from_beta(beta, X, y)
        halvings = 0
        while True:
            candidate = beta - lr * grad
            new_cost = _nll_from_beta(candidate, X, y)
            if new_cost <= cost:
                break
            lr *= 0.5
            halvings += 1
            if halvings >= _MAX_HALVINGS:
                raise DivergenceError(
                    f"cost still increasing after {_MAX_HALVINGS} learning-rate halvings"
                )
        rel_decrease = (cost - new_cost) / max(cost, 1e-12)
        beta = candidate
        cost = new_cost
        history.append(cost)
        iterations += 1
        if rel_decrease < config.tolerance:
            converged = True
            break

    return (
        Coefficients.from_array(beta),
        TrainTrace(cost_history=tuple(history), iterations_run=iterations, converged=converged),
    )


def _nll_from_beta(beta: np.ndarray, X: np.ndarray, y: np.ndarray) -> float:
    z = beta[0] + X @ beta[1:]
    total = np.sum(y * np.logaddexp(0.0, -z) + (1.0 - y) * np.logaddexp(0.0, z))
    return float(total) / X.shape[0]


def _gradient_from_beta(beta: np.ndarray, X: np.ndarray, y: np.ndarray) -> np.ndarray:
    z = beta[0] + X @ beta[1:]
    resid = sigmoid(z) - y
    m = X.shape[0]
    return np.concatenate(([resid.sum() / m], (X.T @ resid) / m))
