"""Confusion matrix, threshold metrics, ROC curve, and trapezoidal AUC.

Malignant (label 1) is the positive class in every count and rate. Tied
scores move through the ROC sweep as one block, which makes the trapezoidal
area equal to the rank statistic with the half-tie convention.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int
    fp: int
    fn: int
    tn: int

    def __post_init__(self) -> None:
        if min(self.tp, self.fp, self.fn, self.tn) < 0:
            raise ValueError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class RocPoint:
    fpr: float
    tpr: float
    threshold: float  # math.inf marks the no-positives sentinel


@dataclass(frozen=True)
class ScoreSummary:
    """Precision/recall/F1 with 0/0 cases reported as 0 and flagged."""

    precision: float
    recall: float
    f1: float
    degenerate: tuple[str, ...] = ()


@dataclass(frozen=True)
class EvaluationReport:
    confusion: ConfusionMatrix
    accuracy: float
    precision: float
    recall: float
    f1: float
    auc: float
    roc: tuple[RocPoint, ...]
    n_test: int
    protocol: str
    degenerate: tuple[str, ...] = ()


def _check_binary(vec: np.ndarray, name: str) -> np.ndarray:
    arr = np.asarray(vec)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"{name} must be a non-empty 1-D vector")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError(f"{name} must contain only 0/1 values")
    return arr.astype(int)


def confusion_matrix(y_true, y_pred) -> ConfusionMatrix:
    t = _check_binary(y_true, "y_true")
    p = _check_binary(y_pred, "y_pred")
    if t.shape != p.shape:
        raise ValueError(f"length mismatch: {t.size} vs {p.size}")
    return ConfusionMatrix(
        tp=int(np.sum((t == 1) & (p == 1))),
        fp=int(np.sum((t == 0) & (p == 1))),
        fn=int(np.sum((t == 1) & (p == 0))),
        tn=int(np.sum((t == 0) & (p == 0))),
    )


def accuracy(cm: ConfusionMatrix) -> float:
    if cm.total == 0:
        raise ValueError("empty confusion matrix")
    return (cm.tp + cm.tn) / cm.total


def precision_recall_f1(cm: ConfusionMatrix) -> ScoreSummary:
    if cm.total == 0:
        raise ValueError("empty confusion matrix")
    degenerate = []
    if cm.tp + cm.fp > 0:
        precision = cm.tp / (cm.tp + cm.fp)
    else:
        precision = 0.0
        degenerate.append("precision")
    if cm.tp + cm.fn > 0:
        recall = cm.tp / (cm.tp + cm.fn)
    else:
        recall = 0.0
        degenerate.append("recall")
    if precision + recall > 0:
        f1 = 2.0 * precision * recall / (precision + recall)
    else:
        f1 = 0.0
        degenerate.append("f1")
    return ScoreSummary(precision=precision, recall=recall, f1=f1, degenerate=tuple(degenerate))


def roc_curve(y_true, scores) -> list[RocPoint]:
    """Sweep thresholds over the distinct scores, highest first.

    A sample is predicted positive when its score >= threshold. The curve
    always starts at (0,0) (sentinel threshold above every score) and ends at
    (1,1); a group of tied scores contributes a single point.
    """
    t = _check_binary(y_true, "y_true")
    s = np.asarray(scores, dtype=float)
    if s.shape != t.shape:
        raise ValueError(f"length mismatch: {t.size} vs {s.size}")
    if not np.isfinite(s).all():
        raise ValueError("scores must be finite")
    n_pos = int(t.sum())
    n_neg = t.size - n_pos
    if n_pos == 0 or n_neg == 0:
        raise ValueError("roc_curve needs both classes in y_true")

    order = np.argsort(-s, kind="stable")
    points = [RocPoint(fpr=0.0, tpr=0.0, threshold=math.inf)]
    tp = fp = 0
    i = 0
    while i < t.size:
        j = i
        while j < t.size and s[order[j]] == s[order[i]]:  # tie group moves as one
            tp += int(t[order[j]] == 1)
            fp += int(t[order[j]] == 0)
            j += 1
        points.append(RocPoint(fpr=fp / n_neg, tpr=tp / n_pos, threshold=float(s[order[i]])))
        i = j
    return points


def auc_trapezoid(roc: list[RocPoint]) -> float:
    """Area under a valid ROC polyline by the trapezoid rule."""
    if len(roc) < 2:
        raise ValueError("curve needs at least 2 points")
    if (roc[0].fpr, roc[0].tpr) != (0.0, 0.0) or (roc[-1].fpr, roc[-1].tpr) != (1.0, 1.0):
        raise ValueError("curve must start at (0,0) and end at (1,1)")
    area = 0.0
    for a, b in zip(roc, roc[1:]):
        if (b.fpr, b.tpr) < (a.fpr, a.tpr):
            raise ValueError("curve points must be sorted by ascending (fpr, tpr)")
        area += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0
    return area


def evaluate_predictions(y_true, scores, threshold: float, protocol: str) -> EvaluationReport:
    """Assemble the full report from truth labels and malignancy scores."""
    t = _check_binary(y_true, "y_true")
    s = np.asarray(scores, dtype=float)
    preds = (s >= threshold).astype(int)
    cm = confusion_matrix(t, preds)
    summary = precision_recall_f1(cm)
    roc = tuple(roc_curve(t, s))
    return EvaluationReport(
        confusion=cm,
        accuracy=accuracy(cm),
        precision=summary.precision,
        recall=summary.recall,
        f1=summary.f1,
        auc=auc_trapezoid(list(roc)),
        roc=roc,
        n_test=int(t.size),
        protocol=protocol,
        degenerate=summary.degenerate,
    )


def format_report(report: EvaluationReport) -> str:
    """Key-value text rendering; floats keep full double precision."""
    lines = [
        f"n_test = {report.n_test}",
        f"tp = {report.confusion.tp}",
        f"fp = {report.confusion.fp}",
        f"fn = {report.confusion.fn}",
        f"tn = {report.confusion.tn}",
        f"accuracy = {report.accuracy!r}",
        f"precision = {report.precision!r}",
        f"recall = {report.recall!r}",
        f"f1 = {report.f1!r}",
        f"auc = {report.auc!r}",
        f"degenerate = {','.join(report.degenerate) if report.degenerate else 'none'}",
        f"protocol = {report.protocol}",
    ]
    return "\n".join(lines) + "\n"


def write_roc_csv(roc: tuple[RocPoint, ...] | list[RocPoint], path: str | Path) -> None:
    """Two-column fpr,tpr CSV for plotting."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["fpr", "tpr"])
        for point in roc:
            writer.writerow([repr(point.fpr), repr(point.tpr)])
