"""WDBC ingestion: CSV parsing, z-score standardization, stratified splitting,
and Pearson correlation matrices.

The expected file layout is the common CSV distribution of the Wisconsin
Diagnostic Breast Cancer data: a header row naming 32 columns
(id, diagnosis, then 30 numeric cell-nucleus measurements), one record per
row. Malignant (M) is encoded as 1, benign (B) as 0, everywhere.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from ._util import round_half_up

N_FEATURES = 30
LABEL_ENCODING = {"B": 0, "M": 1}
LABEL_DECODING = {0: "B", 1: "M"}


class DatasetError(ValueError):
    """Malformed input file or invalid dataset operation."""


@dataclass(frozen=True)
class RawRecord:
    """One patient record: opaque id, B/M diagnosis, 30 measurements."""

    record_id: str
    diagnosis: str
    features: tuple[float, ...]

    def __post_init__(self) -> None:
        if self.diagnosis not in LABEL_ENCODING:
            raise DatasetError(f"unknown diagnosis {self.diagnosis!r}")
        if len(self.features) != N_FEATURES:
            raise DatasetError(
                f"record {self.record_id!r} has {len(self.features)} features, "
                f"expected {N_FEATURES}"
            )
        if not all(math.isfinite(v) for v in self.features):
            raise DatasetError(f"record {self.record_id!r} has non-finite feature values")

    @property
    def label(self) -> int:
        return LABEL_ENCODING[self.diagnosis]


@dataclass(frozen=True)
class Dataset:
    """Immutable collection of records plus the feature-name schema."""

    records: tuple[RawRecord, ...]
    feature_names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.feature_names) != N_FEATURES:
            raise DatasetError(f"expected {N_FEATURES} feature names, got {len(self.feature_names)}")
        if len(set(self.feature_names)) != len(self.feature_names):
            raise DatasetError("duplicate feature names")
        if not self.records:
            raise DatasetError("empty dataset")

    def __len__(self) -> int:
        return len(self.records)

    @cached_property
    def features(self) -> np.ndarray:
        """(n, 30) float64 matrix, read-only."""
        mat = np.array([r.features for r in self.records], dtype=float)
        mat.flags.writeable = False
        return mat

    @cached_property
    def labels(self) -> np.ndarray:
        """(n,) int array with M=1, B=0, read-only."""
        y = np.array([r.label for r in self.records], dtype=int)
        y.flags.writeable = False
        return y

    def class_counts(self) -> dict[str, int]:
        counts = {"B": 0, "M": 0}
        for r in self.records:
            counts[r.diagnosis] += 1
        return counts


@dataclass(frozen=True)
class StandardizationParams:
    """Per-feature train-fold mean and sample standard deviation (n-1)."""

    means: tuple[float, ...]
    std_devs: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.means) != len(self.std_devs):
            raise DatasetError("means/std_devs arity mismatch")
        if any(s <= 0 or not math.isfinite(s) for s in self.std_devs):
            raise DatasetError("standard deviations must be positive and finite")

    @property
    def arity(self) -> int:
        return len(self.means)

    def restrict(self, indices: Sequence[int]) -> "StandardizationParams":
        """Parameters for a column subset, in the given order."""
        return StandardizationParams(
            means=tuple(self.means[i] for i in indices),
            std_devs=tuple(self.std_devs[i] for i in indices),
        )


@dataclass(frozen=True)
class SplitIndices:
    """Disjoint train/test row partition produced by stratified_split."""

    train: tuple[int, ...]
    test: tuple[int, ...]
    seed: int


@dataclass(frozen=True)
class CorrelationMatrix:
    values: np.ndarray
    feature_names: tuple[str, ...]


def parse_wdbc_csv(path: str | Path) -> Dataset:
    """Parse a WDBC-layout CSV into a Dataset.

    Rows are kept in file order. A trailing empty column (the usual export
    quirk) is tolerated in both header and rows. Errors name the offending
    1-based file row.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"dataset file not found: {path}")
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DatasetError(f"{path}: empty file") from None
        header = _strip_trailing_empty(header)
        if len(header) != N_FEATURES + 2:
            raise DatasetError(
                f"{path}: header names {len(header)} columns, expected {N_FEATURES + 2}"
            )
        if header[0].lower() != "id" or header[1].lower() != "diagnosis":
            raise DatasetError(f"{path}: header must start with 'id,diagnosis'")
        feature_names = tuple(header[2:])

        records = []
        for row_no, row in enumerate(reader, start=2):
            if not row or all(cell.strip() == "" for cell in row):
                continue  # ignore blank lines
            row = _strip_trailing_empty(row)
            if len(row) != N_FEATURES + 2:
                raise DatasetError(f"wrong number of fields ({len(row)}) at row {row_no}")
            diagnosis = row[1].strip()
            if diagnosis not in LABEL_ENCODING:
                raise DatasetError(f"unknown diagnosis {diagnosis!r} at row {row_no}")
            try:
                values = tuple(float(cell) for cell in row[2:])
            except ValueError:
                raise DatasetError(f"non-numeric feature value at row {row_no}") from None
            if not all(math.isfinite(v) for v in values):
                raise DatasetError(f"non-finite feature value at row {row_no}")
            records.append(RawRecord(record_id=row[0], diagnosis=diagnosis, features=values))

    if not records:
        raise DatasetError(f"{path}: no data rows")
    return Dataset(records=tuple(records), feature_names=feature_names)


def _strip_trailing_empty(cells: list[str]) -> list[str]:
    if cells and cells[-1].strip() == "":
        return cells[:-1]
    return cells


def standardize_fit(data: Dataset, rows: Iterable[int]) -> StandardizationParams:
    """Fit per-feature mean and sample std (n-1 denominator) over the given rows.

    Zero-variance features are an error, never a silent division.
    """
    idx = _as_index_array(rows, len(data))
    if idx.size < 2:
        raise DatasetError("standardize_fit needs at least 2 rows")
    sub = data.features[idx]
    means = sub.mean(axis=0)
    stds = sub.std(axis=0, ddof=1)
    # constancy is a value property; rounding can leave a tiny nonzero std
    constant = sub.max(axis=0) == sub.min(axis=0)
    degenerate = [data.feature_names[j] for j in np.flatnonzero(constant)]
    if degenerate:
        raise DatasetError(f"zero-variance features: {', '.join(degenerate)}")
    return StandardizationParams(means=tuple(means.tolist()), std_devs=tuple(stds.tolist()))


def standardize_apply(features: np.ndarray, params: StandardizationParams) -> np.ndarray:
    """(x - mean) / std, elementwise; accepts one vector or a (m, n) matrix."""
    arr = np.asarray(features, dtype=float)
    if arr.shape[-1] != params.arity:
        raise DatasetError(f"feature arity {arr.shape[-1]} != fitted arity {params.arity}")
    return (arr - np.asarray(params.means)) / np.asarray(params.std_devs)


def standardize_invert(standardized: np.ndarray, params: StandardizationParams) -> np.ndarray:
    """Inverse of standardize_apply."""
    arr = np.asarray(standardized, dtype=float)
    if arr.shape[-1] != params.arity:
        raise DatasetError(f"feature arity {arr.shape[-1]} != fitted arity {params.arity}")
    return arr * np.asarray(params.std_devs) + np.asarray(params.means)


def stratified_split(data: Dataset, test_fraction: float, seed: int) -> SplitIndices:
    """Deterministic stratified train/test split.

    Per-class test counts are round(class_count * test_fraction), halves up;
    class proportions in each partition stay within one record of the full
    dataset's.
    """
    if not 0.0 < test_fraction < 1.0:
        raise DatasetError(f"test_fraction must be in (0,1), got {test_fraction}")
    y = data.labels
    for cls in (0, 1):
        if int((y == cls).sum()) < 2:
            raise DatasetError("each class needs at least 2 records to split")

    rng = np.random.default_rng(seed)
    test: list[int] = []
    train: list[int] = []
    for cls in (0, 1):
        cls_idx = np.flatnonzero(y == cls)
        n_test = round_half_up(cls_idx.size * test_fraction)
        perm = rng.permutation(cls_idx.size)
        shuffled = cls_idx[perm]
        test.extend(shuffled[:n_test].tolist())
        train.extend(shuffled[n_test:].tolist())
    if not test or not train:
        raise DatasetError(f"test_fraction {test_fraction} produces an empty partition")
    return SplitIndices(train=tuple(sorted(train)), test=tuple(sorted(test)), seed=seed)


def pearson_correlation(x: Sequence[float], y: Sequence[float]) -> float:
    """Pearson r, clamped to [-1, 1] against rounding overshoot."""
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if xa.shape != ya.shape or xa.ndim != 1:
        raise DatasetError("pearson_correlation needs two equal-length vectors")
    if xa.size < 2:
        raise DatasetError("pearson_correlation needs at least 2 points")
    if np.ptp(xa) == 0.0 or np.ptp(ya) == 0.0:
        raise DatasetError("correlation undefined for a constant vector")
    xc = xa - xa.mean()
    yc = ya - ya.mean()
    sxx = float(np.dot(xc, xc))
    syy = float(np.dot(yc, yc))
    if sxx == 0.0 or syy == 0.0:
        # non-constant values whose spread underflows double precision
        raise DatasetError("correlation undefined for a constant vector")
    # sqrt of the rounded product keeps r exactly +-1 for (anti)proportional
    # inputs; fall back to separate roots if the product over/underflows
    denom = math.sqrt(sxx * syy) if math.isfinite(sxx * syy) and sxx * syy > 0.0 else 0.0
    if denom == 0.0:
        denom = math.sqrt(sxx) * math.sqrt(syy)
    r = float(np.dot(xc, yc) / denom)
    return min(1.0, max(-1.0, r))


def correlation_matrix(data: Dataset, rows: Iterable[int]) -> CorrelationMatrix:
    """Pairwise Pearson correlations of all features over the given rows.

    The result is exactly symmetric (lower triangle mirrors the upper) with a
    unit diagonal.
    """
    idx = _as_index_array(rows, len(data))
    if idx.size < 2:
        raise DatasetError("correlation_matrix needs at least 2 rows")
    sub = data.features[idx]
    centered = sub - sub.mean(axis=0)
    sq_norms = (centered**2).sum(axis=0)
    # constant in value, or spread lost to double precision
    flat = (sub.max(axis=0) == sub.min(axis=0)) | (sq_norms == 0.0)
    constant = [data.feature_names[j] for j in np.flatnonzero(flat)]
    if constant:
        raise DatasetError(f"correlation undefined for constant features: {', '.join(constant)}")

    n = sub.shape[1]
    denom = np.sqrt(np.outer(sq_norms, sq_norms))
    bad = (denom == 0.0) | ~np.isfinite(denom)  # product over/underflow fallback
    if bad.any():
        roots = np.sqrt(sq_norms)
        denom = np.where(bad, np.outer(roots, roots), denom)
    values = (centered.T @ centered) / denom
    np.clip(values, -1.0, 1.0, out=values)
    # mirror the upper triangle so values[i,j] == values[j,i] bit-for-bit
    iu = np.triu_indices(n, k=1)
    values[(iu[1], iu[0])] = values[iu]
    np.fill_diagonal(values, 1.0)
    values.flags.writeable = False
    return CorrelationMatrix(values=values, feature_names=data.feature_names)


def write_correlation_csv(matrix: CorrelationMatrix, path: str | Path) -> None:
    """Export as CSV with feature names as header row and leading column.

    Entries use the shortest exact decimal form (full float64 precision).
    """
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["", *matrix.feature_names])
        for name, row in zip(matrix.feature_names, matrix.values):
            writer.writerow([name, *(repr(float(v)) for v in row)])


def _as_index_array(rows: Iterable[int], n: int) -> np.ndarray:
    idx = np.asarray(sorted(rows), dtype=int)
    if idx.size == 0:
        raise DatasetError("row index set is empty")
    if idx[0] < 0 or idx[-1] >= n:
        raise DatasetError(f"row index out of range for dataset of size {n}")
    return idx
