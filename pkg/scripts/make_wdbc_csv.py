"""Regenerate data/wdbc.csv from scikit-learn's bundled copy of the dataset.

The bundled copy carries the canonical 569 records in original file order but
drops the patient id column, so ids here are synthesized (P0001..P0569).
Feature columns follow the standard CSV distribution order: the ten mean
measurements, then the ten standard errors, then the ten worst values.

Run from the repository root:  python scripts/make_wdbc_csv.py
"""

from __future__ import annotations

import csv
from pathlib import Path

from sklearn.datasets import load_breast_cancer

OUT = Path(__file__).resolve().parent.parent / "data" / "wdbc.csv"


def column_name(sklearn_name: str) -> str:
    """'mean radius' -> 'radius_mean', 'radius error' -> 'radius_se', etc."""
    words = sklearn_name.split()
    if words[0] == "mean":
        base, suffix = words[1:], "mean"
    elif words[0] == "worst":
        base, suffix = words[1:], "worst"
    elif words[-1] == "error":
        base, suffix = words[:-1], "se"
    else:
        raise ValueError(f"unexpected feature name {sklearn_name!r}")
    return "_".join(base) + "_" + suffix


def main() -> None:
    bundle = load_breast_cancer()
    names = [column_name(n) for n in bundle.feature_names]
    # sklearn encodes 0=malignant, 1=benign
    diagnoses = ["M" if t == 0 else "B" for t in bundle.target]

    OUT.parent.mkdir(parents=True, exist_ok=True)
    with open(OUT, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "diagnosis", *names])
        for i, (row, diag) in enumerate(zip(bundle.data, diagnoses), start=1):
            writer.writerow([f"P{i:04d}", diag, *(repr(float(v)) for v in row)])
    print(f"wrote {len(bundle.target)} records to {OUT}")


if __name__ == "__main__":
    main()
