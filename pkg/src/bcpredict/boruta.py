"""All-relevant feature selection against randomized shadow features.

Each iteration appends one shuffled copy of every real column (a "shadow"),
fits a logistic model on the widened matrix, and measures permutation
importance for every column. A real feature scores a hit when its importance
beats the best shadow importance of that iteration. After all iterations,
hit counts are tested two-sided against Binomial(n_iterations, 1/2) with a
Bonferroni correction across features: significantly many hits confirms a
feature, significantly few rejects it, anything else stays tentative.

The importance estimator is the module's own logistic model (mean drop in
training accuracy over five seeded reshuffles of one column), so no second
learner is involved. Per-iteration seeds are derived up front from the config
seed, which keeps results identical whether iterations run sequentially or
in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._util import derive_seeds
from .logreg import TrainConfig, fit_gradient_descent

CONFIRMED = "Confirmed"
REJECTED = "Rejected"
TENTATIVE = "Tentative"

_N_SHUFFLES = 5


def _default_inner_config() -> TrainConfig:
    # importance ranking only needs a decent fit, not a 1e-8 optimum
    return TrainConfig(learning_rate=0.5, max_iters=300, tolerance=1e-6)


@dataclass(frozen=True)
class BorutaConfig:
    n_iterations: int = 50
    significance: float = 0.05
    seed: int = 0
    inner_train_config: TrainConfig = field(default_factory=_default_inner_config)

    def __post_init__(self) -> None:
        if self.n_iterations < 20:
            raise ValueError(
                f"n_iterations must be >= 20 for the binomial test, got {self.n_iterations}"
            )
        if not 0.0 < self.significance < 1.0:
            raise ValueError(f"significance must be in (0, 1), got {self.significance}")


@dataclass(frozen=True)
class FeatureDecision:
    feature_name: str
    status: str  # Confirmed | Rejected | Tentative
    hits: int
    mean_importance: float


def shadow_augment(X: np.ndarray, seed: int) -> np.ndarray:
    """Append one independently row-shuffled copy of every column.

    Shuffling keeps each column's marginal distribution but destroys its
    association with the labels.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] < 1 or X.shape[0] < 2:
        raise ValueError("X must be (m >= 2, n >= 1)")
    rng = np.random.default_rng(seed)
    shadows = np.empty_like(X)
    for j in range(X.shape[1]):
        shadows[:, j] = X[rng.permutation(X.shape[0]), j]
    return np.hstack([X, shadows])


def importance_permutation(
    X_aug: np.ndarray, y: np.ndarray, config: TrainConfig, seed: int
) -> np.ndarray:
    """Permutation importance of every column of X_aug.

    Fits the logistic model once, then scores each column as the mean drop in
    training accuracy over five seeded reshuffles of that column. Only the
    logit contribution of the shuffled column changes, so rescoring is O(m)
    per shuffle.
    """
    X_aug = np.asarray(X_aug, dtype=float)
    y = np.asarray(y, dtype=int)
    coeffs, _ = fit_gradient_descent(X_aug, y, config)
    w = np.asarray(coeffs.weights)
    logits = coeffs.intercept + X_aug @ w
    base_acc = float(np.mean((logits >= 0.0) == (y == 1)))

    rng = np.random.default_rng(seed)
    m, n_cols = X_aug.shape
    importance = np.empty(n_cols, dtype=float)
    for j in range(n_cols):
        drop = 0.0
        for _ in range(_N_SHUFFLES):
            perm = rng.permutation(m)
            shuffled_logits = logits + w[j] * (X_aug[perm, j] - X_aug[:, j])
            acc = float(np.mean((shuffled_logits >= 0.0) == (y == 1)))
            drop += base_acc - acc
        importance[j] = drop / _N_SHUFFLES
    return importance


def boruta_run(
    X: np.ndarray, y: np.ndarray, feature_names: list[str] | tuple[str, ...], config: BorutaConfig
) -> list[FeatureDecision]:
    """Classify every feature as Confirmed, Rejected, or Tentative.

    X is expected standardized; y must contain both classes. Deterministic
    for a fixed config seed.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    n = X.shape[1]
    if len(feature_names) != n:
        raise ValueError(f"{len(feature_names)} names for {n} columns")

    seeds = derive_seeds(config.seed, 2 * config.n_iterations)
    hits = np.zeros(n, dtype=int)
    importance_sum = np.zeros(n, dtype=float)
    for it in range(config.n_iterations):
        X_aug = shadow_augment(X, seeds[2 * it])
        imp = importance_permutation(X_aug, y, config.inner_train_config, seeds[2 * it + 1])
        shadow_max = imp[n:].max()
        hits += imp[:n] > shadow_max
        importance_sum += imp[:n]

    # Bonferroni across the n simultaneous two-sided tests
    cutoff = config.significance / n
    decisions = []
    for j, name in enumerate(feature_names):
        p_two = _binomial_two_sided(int(hits[j]), config.n_iterations)
        if p_two < cutoff and hits[j] > config.n_iterations / 2:
            status = CONFIRMED
        elif p_two < cutoff and hits[j] < config.n_iterations / 2:
            status = REJECTED
        else:
            status = TENTATIVE
        decisions.append(
            FeatureDecision(
                feature_name=name,
                status=status,
                hits=int(hits[j]),
                mean_importance=float(importance_sum[j] / config.n_iterations),
            )
        )
    return decisions


def _binomial_two_sided(hits: int, n: int) -> float:
    """Exact two-sided p-value for hits ~ Binomial(n, 1/2)."""
    upper = sum(math.comb(n, i) for i in range(hits, n + 1)) / 2**n  # P(X >= hits)
    lower = sum(math.comb(n, i) for i in range(0, hits + 1)) / 2**n  # P(X <= hits)
    return min(1.0, 2.0 * min(upper, lower))
