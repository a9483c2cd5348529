"""Persisted model bundle and the one scoring path used by CLI and service.

The artifact is a JSON file: coefficients, the train-fold standardization
parameters restricted to the selected features, per-feature raw min/mean/max
(for form hints), the held-out evaluation report, and training metadata.
Floats are written in Python's shortest exact decimal form, so a load
round-trips every 64-bit value bit-for-bit. The model version string is a
fingerprint of the numeric content only — re-training with the same flags
and seed reproduces it even though the timestamp differs.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

from .dataset import LABEL_DECODING, StandardizationParams, standardize_apply
from .logreg import Coefficients, predict_proba
from .metrics import ConfusionMatrix, EvaluationReport, RocPoint

SCHEMA_VERSION = 1


class ArtifactError(ValueError):
    """Unusable artifact file: wrong schema, bad arity, corrupt numbers."""


class FeatureValidationError(ValueError):
    """Invalid prediction input; carries (field, message) pairs."""

    def __init__(self, problems: list[tuple[str, str]]):
        self.problems = problems
        super().__init__("; ".join(f"{field}: {msg}" for field, msg in problems))


@dataclass(frozen=True)
class FeatureStats:
    """Raw-unit train-fold range hints for one feature."""

    min: float
    mean: float
    max: float


@dataclass(frozen=True)
class ModelArtifact:
    schema_version: int
    feature_names: tuple[str, ...]
    standardization: StandardizationParams
    coefficients: Coefficients
    threshold: float
    label_map: dict[int, str]
    feature_stats: dict[str, FeatureStats]
    training_meta: dict[str, Any]
    metrics: EvaluationReport

    def __post_init__(self) -> None:
        n = len(self.feature_names)
        if self.coefficients.arity != n or self.standardization.arity != n:
            raise ArtifactError(
                f"arity mismatch: {n} features, {self.coefficients.arity} weights, "
                f"{self.standardization.arity} standardization entries"
            )
        if not 0.0 < self.threshold < 1.0:
            raise ArtifactError(f"threshold must be in (0, 1), got {self.threshold}")

    @property
    def model_version(self) -> str:
        """Fingerprint of the numeric model content (not the timestamp)."""
        payload = json.dumps(
            {
                "schema": self.schema_version,
                "features": list(self.feature_names),
                "intercept": self.coefficients.intercept,
                "weights": list(self.coefficients.weights),
                "means": list(self.standardization.means),
                "std_devs": list(self.standardization.std_devs),
                "threshold": self.threshold,
            },
            sort_keys=True,
        )
        digest = hashlib.sha256(payload.encode()).hexdigest()[:12]
        return f"logreg-v{self.schema_version}-{digest}"


@dataclass(frozen=True)
class PredictResponse:
    probability: float
    label: str
    threshold: float
    model_version: str


def predict_one(artifact: ModelArtifact, features: Mapping[str, float]) -> PredictResponse:
    """Score one raw-unit feature mapping.

    Every model feature must be supplied, extras are rejected, values must be
    finite numbers. The boundary probability == threshold classifies
    malignant.
    """
    problems: list[tuple[str, str]] = []
    wanted = set(artifact.feature_names)
    for name in artifact.feature_names:
        if name not in features:
            problems.append((name, "missing feature"))
    for name in features:
        if name not in wanted:
            problems.append((name, "unknown feature"))
    for name, value in features.items():
        if name in wanted and not (isinstance(value, (int, float)) and not isinstance(value, bool)):
            problems.append((name, f"not a number: {value!r}"))
        elif name in wanted and not math.isfinite(float(value)):
            problems.append((name, f"non-finite value: {value!r}"))
    if problems:
        raise FeatureValidationError(sorted(problems))

    raw = [float(features[name]) for name in artifact.feature_names]
    standardized = standardize_apply(raw, artifact.standardization)
    probability = predict_proba(artifact.coefficients, standardized)
    label = artifact.label_map[1] if probability >= artifact.threshold else artifact.label_map[0]
    return PredictResponse(
        probability=probability,
        label=label,
        threshold=artifact.threshold,
        model_version=artifact.model_version,
    )


def save_artifact(artifact: ModelArtifact, path: str | Path) -> None:
    """Write the artifact atomically (no partial file on failure)."""
    path = Path(path)
    payload = json.dumps(artifact_to_dict(artifact), indent=2, sort_keys=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(payload + "\n")
    os.replace(tmp, path)


def load_artifact(path: str | Path) -> ModelArtifact:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"model file not found: {path}")
    try:
        raw = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ArtifactError(f"{path}: not valid JSON: {exc}") from None
    return artifact_from_dict(raw, source=str(path))


def artifact_to_dict(artifact: ModelArtifact) -> dict[str, Any]:
    report = artifact.metrics
    return {
        "schema_version": artifact.schema_version,
        "feature_names": list(artifact.feature_names),
        "standardization": {
            "means": list(artifact.standardization.means),
            "std_devs": list(artifact.standardization.std_devs),
        },
        "coefficients": {
            "intercept": artifact.coefficients.intercept,
            "weights": list(artifact.coefficients.weights),
        },
        "threshold": artifact.threshold,
        "label_map": {str(k): v for k, v in artifact.label_map.items()},
        "feature_stats": {
            name: {"min": st.min, "mean": st.mean, "max": st.max}
            for name, st in artifact.feature_stats.items()
        },
        "training_meta": artifact.training_meta,
        "metrics": report_to_dict(report),
        "model_version": artifact.model_version,
    }


def report_to_dict(report: EvaluationReport) -> dict[str, Any]:
    return {
        "confusion": {
            "tp": report.confusion.tp,
            "fp": report.confusion.fp,
            "fn": report.confusion.fn,
            "tn": report.confusion.tn,
        },
        "accuracy": report.accuracy,
        "precision": report.precision,
        "recall": report.recall,
        "f1": report.f1,
        "auc": report.auc,
        "n_test": report.n_test,
        "protocol": report.protocol,
        "degenerate": list(report.degenerate),
        # the sentinel threshold is +inf, which JSON cannot carry; use null
        "roc": [
            {
                "fpr": p.fpr,
                "tpr": p.tpr,
                "threshold": None if math.isinf(p.threshold) else p.threshold,
            }
            for p in report.roc
        ],
    }


def report_from_dict(raw: dict[str, Any]) -> EvaluationReport:
    cm = raw["confusion"]
    return EvaluationReport(
        confusion=ConfusionMatrix(tp=cm["tp"], fp=cm["fp"], fn=cm["fn"], tn=cm["tn"]),
        accuracy=raw["accuracy"],
        precision=raw["precision"],
        recall=raw["recall"],
        f1=raw["f1"],
        auc=raw["auc"],
        roc=tuple(
            RocPoint(
                fpr=p["fpr"],
                tpr=p["tpr"],
                threshold=math.inf if p["threshold"] is None else p["threshold"],
            )
            for p in raw["roc"]
        ),
        n_test=raw["n_test"],
        protocol=raw["protocol"],
        degenerate=tuple(raw.get("degenerate", ())),
    )


def artifact_from_dict(raw: dict[str, Any], source: str = "<dict>") -> ModelArtifact:
    try:
        version = raw["schema_version"]
        if version != SCHEMA_VERSION:
            raise ArtifactError(f"{source}: unsupported schema version {version!r}")
        feature_names = tuple(raw["feature_names"])
        std = raw["standardization"]
        coeffs = raw["coefficients"]
        for label, values in (
            ("standardization.means", std["means"]),
            ("standardization.std_devs", std["std_devs"]),
            ("coefficients.weights", coeffs["weights"]),
            ("coefficients.intercept", [coeffs["intercept"]]),
            ("threshold", [raw["threshold"]]),
        ):
            _check_numeric(label, values, source)
        artifact = ModelArtifact(
            schema_version=version,
            feature_names=feature_names,
            standardization=StandardizationParams(
                means=tuple(std["means"]), std_devs=tuple(std["std_devs"])
            ),
            coefficients=Coefficients(
                intercept=float(coeffs["intercept"]),
                weights=tuple(float(w) for w in coeffs["weights"]),
            ),
            threshold=float(raw["threshold"]),
            label_map={int(k): v for k, v in raw["label_map"].items()},
            feature_stats={
                name: FeatureStats(min=st["min"], mean=st["mean"], max=st["max"])
                for name, st in raw["feature_stats"].items()
            },
            training_meta=raw["training_meta"],
            metrics=report_from_dict(raw["metrics"]),
        )
    except ArtifactError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ArtifactError(f"{source}: malformed artifact: {exc}") from None
    return artifact


def _check_numeric(label: str, values: Any, source: str) -> None:
    for v in values:
        if not isinstance(v, (int, float)) or isinstance(v, bool) or not math.isfinite(v):
            raise ArtifactError(f"{source}: corrupt numeric field {label}: {v!r}")


def label_map_default() -> dict[int, str]:
    return dict(LABEL_DECODING)
