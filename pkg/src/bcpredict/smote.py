"""Minority-class oversampling by nearest-neighbor interpolation.

New samples are drawn on the segment between a minority point and one of its
k nearest minority neighbors (Euclidean distance, expected to be measured in
standardized feature space). Base points are visited round-robin so coverage
is even; the neighbor pick and the interpolation gap come from one seeded
generator, which makes the augmented set reproducible byte-for-byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._util import round_half_up


@dataclass(frozen=True)
class SmoteConfig:
    k: int = 5
    target_ratio: float = 1.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0.0 < self.target_ratio <= 1.0:
            raise ValueError(f"target_ratio must be in (0, 1], got {self.target_ratio}")


@dataclass(frozen=True)
class NeighborTable:
    """Row i holds the k nearest neighbors of point i, nearest first.

    A point is never its own neighbor; distance ties break by ascending index.
    """

    indices: np.ndarray
    distances: np.ndarray

    @property
    def k(self) -> int:
        return self.indices.shape[1]


@dataclass(frozen=True)
class SyntheticProvenance:
    """Where one synthetic row came from: row = base + gap * (neighbor - base)."""

    base_index: int
    neighbor_index: int
    gap: float


@dataclass(frozen=True)
class SmoteResult:
    features: np.ndarray
    labels: np.ndarray
    provenance: tuple[SyntheticProvenance, ...]


def k_nearest_neighbors(points: np.ndarray, k: int) -> NeighborTable:
    """Exact k-NN under Euclidean distance, deterministic tie-break by index."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2:
        raise ValueError("points must be a 2-D array")
    n = pts.shape[0]
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k >= n:
        raise ValueError(f"k={k} must be smaller than the number of points ({n})")
    if not np.isfinite(pts).all():
        raise ValueError("points must be finite")

    sq = (pts**2).sum(axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (pts @ pts.T)
    np.maximum(d2, 0.0, out=d2)  # clip the tiny negatives from cancellation

    indices = np.empty((n, k), dtype=int)
    distances = np.empty((n, k), dtype=float)
    for i in range(n):
        order = np.argsort(d2[i], kind="stable")  # stable => ties by index
        order = order[order != i][:k]
        indices[i] = order
        distances[i] = np.sqrt(d2[i, order])
    indices.flags.writeable = False
    distances.flags.writeable = False
    return NeighborTable(indices=indices, distances=distances)


def synthesize_sample(base: np.ndarray, neighbor: np.ndarray, gap: float) -> np.ndarray:
    """Point at fraction `gap` along the segment from base to neighbor."""
    b = np.asarray(base, dtype=float)
    m = np.asarray(neighbor, dtype=float)
    if b.shape != m.shape:
        raise ValueError(f"arity mismatch: base {b.shape} vs neighbor {m.shape}")
    if not 0.0 <= gap <= 1.0:
        raise ValueError(f"gap must be in [0, 1], got {gap}")
    return b + gap * (m - b)


def smote_oversample(
    features: np.ndarray, labels: np.ndarray, config: SmoteConfig
) -> SmoteResult:
    """Append synthetic minority rows until minority = round(ratio * majority).

    Original rows come first, unchanged; synthetic rows carry the minority
    label and a provenance record. If the target is already met the data is
    returned as-is (no-op, not an error).
    """
    X = np.asarray(features, dtype=float)
    y = np.asarray(labels, dtype=int)
    if X.ndim != 2 or y.ndim != 1 or X.shape[0] != y.shape[0]:
        raise ValueError("features must be (m, n) with one label per row")
    classes, counts = np.unique(y, return_counts=True)
    if classes.size != 2:
        raise ValueError("smote_oversample needs exactly two classes present")

    minority_label = int(classes[np.argmin(counts)])
    n_minority = int(counts.min())
    n_majority = int(counts.max())
    target = round_half_up(config.target_ratio * n_majority)
    n_synthetic = max(0, target - n_minority)
    if n_synthetic == 0:
        return SmoteResult(features=X.copy(), labels=y.copy(), provenance=())

    if config.k >= n_minority:
        raise ValueError(
            f"k={config.k} must be smaller than the minority class size ({n_minority})"
        )

    minority_rows = np.flatnonzero(y == minority_label)
    table = k_nearest_neighbors(X[minority_rows], config.k)

    rng = np.random.default_rng(config.seed)
    synthetic = np.empty((n_synthetic, X.shape[1]), dtype=float)
    provenance = []
    for i in range(n_synthetic):
        base_pos = i % n_minority  # round-robin base selection
        neighbor_pos = int(table.indices[base_pos, rng.integers(config.k)])
        gap = float(rng.random())
        base_row = int(minority_rows[base_pos])
        neighbor_row = int(minority_rows[neighbor_pos])
        synthetic[i] = synthesize_sample(X[base_row], X[neighbor_row], gap)
        provenance.append(
            SyntheticProvenance(base_index=base_row, neighbor_index=neighbor_row, gap=gap)
        )

    out_X = np.vstack([X, synthetic])
    out_y = np.concatenate([y, np.full(n_synthetic, minority_label, dtype=int)])
    return SmoteResult(features=out_X, labels=out_y, provenance=tuple(provenance))
