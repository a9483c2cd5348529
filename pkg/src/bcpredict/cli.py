"""Command-line interface: train, evaluate, predict, serve, corr."""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

from .artifact import (
    ArtifactError,
    FeatureValidationError,
    load_artifact,
    predict_one,
    save_artifact,
)
from .dataset import DatasetError, correlation_matrix, parse_wdbc_csv, write_correlation_csv
from .logreg import DivergenceError
from .metrics import format_report, write_roc_csv
from .pipeline import PipelineConfig, PipelineError, evaluate_artifact, train_pipeline
from .service import serve_http


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bcpredict", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    train = sub.add_parser("train", help="train a model and persist the artifact")
    train.add_argument("--data", required=True, help="WDBC-layout CSV")
    train.add_argument("--out", required=True, help="output artifact JSON path")
    train.add_argument("--seed", type=int, default=42)
    train.add_argument("--test-fraction", type=float, default=0.2)
    train.add_argument("--learning-rate", type=float, default=0.1)
    train.add_argument("--max-iters", type=int, default=10_000)
    train.add_argument("--tol", type=float, default=1e-8)
    train.add_argument("--smote-k", type=int, default=5)
    train.add_argument("--smote-ratio", type=float, default=1.0)
    train.add_argument("--boruta", action=argparse.BooleanOptionalAction, default=True)
    train.add_argument("--boruta-iters", type=int, default=50)
    train.add_argument("--boruta-alpha", type=float, default=0.05)
    train.add_argument("--boruta-drop-tentative", action="store_true", default=False)
    train.add_argument("--threshold", type=float, default=0.5)

    evaluate = sub.add_parser("evaluate", help="score a dataset through a saved model")
    evaluate.add_argument("--model", required=True)
    evaluate.add_argument("--data", required=True)
    evaluate.add_argument("--report", required=True, help="output report text path")
    evaluate.add_argument("--roc-out", default=None, help="ROC CSV path (default: <report>.roc.csv)")

    predict = sub.add_parser("predict", help="score one case")
    predict.add_argument("--model", required=True)
    predict.add_argument("--input", default=None, help="one-row CSV with a feature-name header")
    predict.add_argument("values", nargs="*", metavar="name=value", help="inline feature values")

    serve = sub.add_parser("serve", help="serve predictions over HTTP")
    serve.add_argument("--model", required=True)
    serve.add_argument("--port", type=int, default=8080)

    corr = sub.add_parser("corr", help="export the feature correlation matrix")
    corr.add_argument("--data", required=True)
    corr.add_argument("--out", required=True, help="output CSV path")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DatasetError, ArtifactError, FeatureValidationError, DivergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "train":
        return _cmd_train(args)
    if args.command == "evaluate":
        return _cmd_evaluate(args)
    if args.command == "predict":
        return _cmd_predict(args)
    if args.command == "serve":
        serve_http(args.model, args.port)
        return 0
    if args.command == "corr":
        data = parse_wdbc_csv(args.data)
        matrix = correlation_matrix(data, range(len(data)))
        write_correlation_csv(matrix, args.out)
        print(f"wrote {len(matrix.feature_names)}x{len(matrix.feature_names)} matrix to {args.out}")
        return 0
    raise ValueError(f"unknown command {args.command!r}")


def _cmd_train(args: argparse.Namespace) -> int:
    data = parse_wdbc_csv(args.data)
    config = PipelineConfig(
        seed=args.seed,
        test_fraction=args.test_fraction,
        learning_rate=args.learning_rate,
        max_iters=args.max_iters,
        tolerance=args.tol,
        smote_k=args.smote_k,
        smote_ratio=args.smote_ratio,
        boruta_enabled=args.boruta,
        boruta_iters=args.boruta_iters,
        boruta_alpha=args.boruta_alpha,
        boruta_drop_tentative=args.boruta_drop_tentative,
        threshold=args.threshold,
    )
    result = train_pipeline(data, config)
    save_artifact(result.artifact, args.out)

    report = result.artifact.metrics
    print(f"trained on {len(result.split.train)} rows, evaluated on {len(result.split.test)}")
    if result.decisions is not None:
        kept = len(result.artifact.feature_names)
        print(f"feature selection kept {kept}/{len(data.feature_names)} features")
        for status in ("Confirmed", "Tentative", "Rejected"):
            names = [d.feature_name for d in result.decisions if d.status == status]
            if names:
                print(f"  {status.lower()} ({len(names)}): {', '.join(names)}")
    print(
        f"iterations = {result.trace.iterations_run} "
        f"(converged = {result.trace.converged}, final cost = {result.trace.cost_history[-1]:.6f})"
    )
    print(format_report(report), end="")
    print(f"artifact written to {args.out}")
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    artifact = load_artifact(args.model)
    data = parse_wdbc_csv(args.data)
    report = evaluate_artifact(artifact, data)
    report_path = Path(args.report)
    report_path.write_text(format_report(report))
    roc_path = Path(args.roc_out) if args.roc_out else report_path.with_suffix(".roc.csv")
    write_roc_csv(report.roc, roc_path)
    print(format_report(report), end="")
    print(f"report written to {report_path}, ROC points to {roc_path}")
    return 0


def _cmd_predict(args: argparse.Namespace) -> int:
    artifact = load_artifact(args.model)
    features: dict[str, float] = {}
    if args.input is not None:
        features.update(_read_one_row_csv(args.input))
    for pair in args.values:
        if "=" not in pair:
            raise ValueError(f"expected name=value, got {pair!r}")
        name, _, raw = pair.partition("=")
        try:
            features[name.strip()] = float(raw)
        except ValueError:
            raise FeatureValidationError([(name.strip(), f"not a number: {raw!r}")]) from None
    response = predict_one(artifact, features)
    print(f"probability = {response.probability!r}")
    print(f"label = {response.label}")
    print(f"threshold = {response.threshold!r}")
    print(f"model_version = {response.model_version}")
    return 0


def _read_one_row_csv(path: str) -> dict[str, float]:
    """Header + single data row; id/diagnosis columns are ignored if present."""
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"input file not found: {p}")
    with open(p, newline="") as fh:
        rows = [row for row in csv.reader(fh) if any(cell.strip() for cell in row)]
    if len(rows) != 2:
        raise ValueError(f"{p}: expected a header and exactly one data row, got {len(rows)} rows")
    header, values = rows
    out: dict[str, float] = {}
    for name, cell in zip(header, values):
        name = name.strip()
        if name.lower() in ("id", "diagnosis", ""):
            continue
        try:
            out[name] = float(cell)
        except ValueError:
            raise FeatureValidationError([(name, f"not a number: {cell!r}")]) from None
    return out


if __name__ == "__main__":
    sys.exit(main())
