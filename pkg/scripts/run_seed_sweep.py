"""Train across a range of seeds and tabulate held-out accuracy and AUC.

Usage: python scripts/run_seed_sweep.py [--data data/wdbc.csv] [--seeds 10]
"""

from __future__ import annotations

import argparse
import time
from pathlib import Path

from bcpredict import PipelineConfig, parse_wdbc_csv, train_pipeline


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--data", default=str(Path(__file__).resolve().parent.parent / "data" / "wdbc.csv"))
    parser.add_argument("--seeds", type=int, default=10, help="number of seeds, starting at --first-seed")
    parser.add_argument("--first-seed", type=int, default=42)
    parser.add_argument("--no-boruta", action="store_true")
    args = parser.parse_args()

    data = parse_wdbc_csv(args.data)
    print(f"{'seed':>6} {'accuracy':>9} {'auc':>9} {'features':>9} {'iters':>7} {'secs':>6}")
    accuracies = []
    for seed in range(args.first_seed, args.first_seed + args.seeds):
        config = PipelineConfig(seed=seed, boruta_enabled=not args.no_boruta)
        start = time.time()
        result = train_pipeline(data, config)
        elapsed = time.time() - start
        report = result.artifact.metrics
        accuracies.append(report.accuracy)
        print(
            f"{seed:>6} {report.accuracy:>9.4f} {report.auc:>9.4f} "
            f"{len(result.artifact.feature_names):>9} {result.trace.iterations_run:>7} {elapsed:>6.1f}"
        )
    print(f"\naccuracy range: [{min(accuracies):.4f}, {max(accuracies):.4f}] over {args.seeds} seeds")


if __name__ == "__main__":
    main()
