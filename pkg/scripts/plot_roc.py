"""Plot a ROC CSV (as written by `bcpredict evaluate`) with the chance line.

Usage: python scripts/plot_roc.py report.roc.csv roc.png
"""

from __future__ import annotations

import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main() -> None:
    if len(sys.argv) != 3:
        sys.exit(__doc__.strip())
    src, dst = sys.argv[1], sys.argv[2]
    with open(src, newline="") as fh:
        reader = csv.DictReader(fh)
        points = [(float(row["fpr"]), float(row["tpr"])) for row in reader]

    fpr, tpr = zip(*points)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.plot(fpr, tpr, marker=".", lw=1.5, label="model")
    ax.plot([0, 1], [0, 1], ls="--", color="gray", label="chance")
    ax.set_xlabel("false positive rate")
    ax.set_ylabel("true positive rate")
    ax.set_title("ROC")
    ax.legend(loc="lower right")
    fig.tight_layout()
    fig.savefig(dst, dpi=150)
    print(f"wrote {dst}")


if __name__ == "__main__":
    main()
