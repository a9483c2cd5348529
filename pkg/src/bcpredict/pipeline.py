"""End-to-end training flow: ingest -> split -> standardize -> select ->
oversample -> fit -> evaluate -> bundle.

Standardization, feature selection, and oversampling all see only the train
fold; the held-out fold is touched exactly once, for the final report. Stage
boundaries are recorded so tests can assert that separation.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Any

import numpy as np

from ._util import derive_seeds
from .artifact import FeatureStats, ModelArtifact, SCHEMA_VERSION, label_map_default
from .boruta import REJECTED, TENTATIVE, BorutaConfig, FeatureDecision, boruta_run
from .dataset import Dataset, SplitIndices, standardize_apply, standardize_fit, stratified_split
from .logreg import TrainConfig, TrainTrace, fit_gradient_descent, predict_proba
from .metrics import EvaluationReport, evaluate_predictions
from .smote import SmoteConfig, smote_oversample


class PipelineError(RuntimeError):
    """A named pipeline stage failed."""

    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"stage '{stage}': {message}")


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for one training run; mirrors the CLI flags."""

    seed: int = 42
    test_fraction: float = 0.2
    learning_rate: float = 0.1
    max_iters: int = 10_000
    tolerance: float = 1e-8
    smote_k: int = 5
    smote_ratio: float = 1.0
    boruta_enabled: bool = True
    boruta_iters: int = 50
    boruta_alpha: float = 0.05
    boruta_drop_tentative: bool = False
    threshold: float = 0.5


@dataclass(frozen=True)
class TrainResult:
    artifact: ModelArtifact
    trace: TrainTrace
    split: SplitIndices
    decisions: tuple[FeatureDecision, ...] | None
    # row indices each fitting stage consumed, for leakage checks
    stage_rows: dict[str, frozenset[int]]


def train_pipeline(data: Dataset, config: PipelineConfig) -> TrainResult:
    boruta_seed, smote_seed = derive_seeds(config.seed, 2)

    with _stage("split"):
        split = stratified_split(data, config.test_fraction, config.seed)
    train_idx = np.asarray(split.train)
    test_idx = np.asarray(split.test)
    y_train = data.labels[train_idx]
    y_test = data.labels[test_idx]

    with _stage("standardize"):
        params_full = standardize_fit(data, split.train)
        X_train = standardize_apply(data.features[train_idx], params_full)

    decisions: tuple[FeatureDecision, ...] | None = None
    selected = list(range(len(data.feature_names)))
    if config.boruta_enabled:
        with _stage("boruta"):
            decisions = tuple(
                boruta_run(
                    X_train,
                    y_train,
                    data.feature_names,
                    BorutaConfig(
                        n_iterations=config.boruta_iters,
                        significance=config.boruta_alpha,
                        seed=boruta_seed,
                    ),
                )
            )
            dropped = {REJECTED}
            if config.boruta_drop_tentative:
                dropped.add(TENTATIVE)
            selected = [j for j, d in enumerate(decisions) if d.status not in dropped]
            if not selected:
                raise ValueError("feature selection dropped every feature")

    feature_names = tuple(data.feature_names[j] for j in selected)
    params = params_full.restrict(selected)
    X_train_sel = X_train[:, selected]

    with _stage("smote"):
        smote_config = SmoteConfig(k=config.smote_k, target_ratio=config.smote_ratio, seed=smote_seed)
        balanced = smote_oversample(X_train_sel, y_train, smote_config)

    with _stage("fit"):
        train_config = TrainConfig(
            learning_rate=config.learning_rate,
            max_iters=config.max_iters,
            tolerance=config.tolerance,
        )
        coeffs, trace = fit_gradient_descent(balanced.features, balanced.labels, train_config)

    with _stage("evaluate"):
        X_test_sel = standardize_apply(data.features[test_idx], params_full)[:, selected]
        scores = predict_proba(coeffs, X_test_sel)
        report = evaluate_predictions(y_test, scores, config.threshold, _protocol(config, split))

    raw_train = data.features[train_idx][:, selected]
    feature_stats = {
        name: FeatureStats(
            min=float(raw_train[:, j].min()),
            mean=float(raw_train[:, j].mean()),
            max=float(raw_train[:, j].max()),
        )
        for j, name in enumerate(feature_names)
    }

    artifact = ModelArtifact(
        schema_version=SCHEMA_VERSION,
        feature_names=feature_names,
        standardization=params,
        coefficients=coeffs,
        threshold=config.threshold,
        label_map=label_map_default(),
        feature_stats=feature_stats,
        training_meta=_training_meta(data, config, split, decisions, trace, balanced, smote_seed, boruta_seed),
        metrics=report,
    )
    train_rows = frozenset(int(i) for i in split.train)
    return TrainResult(
        artifact=artifact,
        trace=trace,
        split=split,
        decisions=decisions,
        stage_rows={"standardize": train_rows, "boruta": train_rows, "smote": train_rows},
    )


def evaluate_artifact(artifact: ModelArtifact, data: Dataset) -> EvaluationReport:
    """Score every row of a dataset through a loaded artifact."""
    name_to_col = {name: j for j, name in enumerate(data.feature_names)}
    missing = [name for name in artifact.feature_names if name not in name_to_col]
    if missing:
        raise ValueError(f"dataset is missing model features: {', '.join(missing)}")
    cols = [name_to_col[name] for name in artifact.feature_names]
    X = standardize_apply(data.features[:, cols], artifact.standardization)
    scores = predict_proba(artifact.coefficients, X)
    protocol = (
        f"full-file evaluation of {len(data)} rows with model {artifact.model_version}; "
        f"threshold={artifact.threshold!r}"
    )
    return evaluate_predictions(data.labels, scores, artifact.threshold, protocol)


class _stage:
    """Context manager that renames stage failures for the CLI."""

    def __init__(self, name: str):
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if exc is not None and not isinstance(exc, PipelineError):
            raise PipelineError(self.name, str(exc)) from exc
        return False


def _protocol(config: PipelineConfig, split: SplitIndices) -> str:
    boruta_part = (
        f"boruta(iters={config.boruta_iters}, alpha={config.boruta_alpha!r}, "
        f"drop_tentative={config.boruta_drop_tentative})"
        if config.boruta_enabled
        else "boruta off"
    )
    return (
        f"stratified holdout: test_fraction={config.test_fraction!r}, seed={split.seed}, "
        f"train={len(split.train)}, test={len(split.test)}; z-score fit on train fold; "
        f"{boruta_part}; smote(k={config.smote_k}, ratio={config.smote_ratio!r}); "
        f"gd(lr={config.learning_rate!r}, max_iters={config.max_iters}, tol={config.tolerance!r}); "
        f"threshold={config.threshold!r}"
    )


def _training_meta(
    data: Dataset,
    config: PipelineConfig,
    split: SplitIndices,
    decisions: tuple[FeatureDecision, ...] | None,
    trace: TrainTrace,
    balanced,
    smote_seed: int,
    boruta_seed: int,
) -> dict[str, Any]:
    meta: dict[str, Any] = {
        "seed": config.seed,
        "test_fraction": config.test_fraction,
        "dataset": {
            "n_records": len(data),
            "n_train": len(split.train),
            "n_test": len(split.test),
            "class_counts": data.class_counts(),
        },
        "smote": {
            "k": config.smote_k,
            "target_ratio": config.smote_ratio,
            "seed": smote_seed,
            "synthetic_rows": len(balanced.provenance),
        },
        "train_config": {
            "learning_rate": config.learning_rate,
            "max_iters": config.max_iters,
            "tolerance": config.tolerance,
            "iterations_run": trace.iterations_run,
            "converged": trace.converged,
            "final_cost": trace.cost_history[-1],
        },
        "threshold": config.threshold,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }
    if config.boruta_enabled and decisions is not None:
        meta["boruta"] = {
            "enabled": True,
            "n_iterations": config.boruta_iters,
            "significance": config.boruta_alpha,
            "seed": boruta_seed,
            "drop_tentative": config.boruta_drop_tentative,
            "decisions": [
                {
                    "feature_name": d.feature_name,
                    "status": d.status,
                    "hits": d.hits,
                    "mean_importance": d.mean_importance,
                }
                for d in decisions
            ],
        }
    else:
        meta["boruta"] = {"enabled": False}
    return meta
