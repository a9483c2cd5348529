"""Breast-cancer diagnosis pipeline: dataset handling, minority oversampling,
shadow-feature selection, logistic regression by gradient descent, evaluation
metrics, model artifacts, CLI, and an HTTP prediction service."""

from .artifact import ModelArtifact, PredictResponse, load_artifact, predict_one, save_artifact
from .boruta import BorutaConfig, FeatureDecision, boruta_run
from .dataset import Dataset, StandardizationParams, parse_wdbc_csv, stratified_split
from .logreg import Coefficients, TrainConfig, TrainTrace, fit_gradient_descent, predict_proba, sigmoid
from .metrics import ConfusionMatrix, EvaluationReport, RocPoint, auc_trapezoid, confusion_matrix, roc_curve
from .pipeline import PipelineConfig, TrainResult, evaluate_artifact, train_pipeline
from .smote import SmoteConfig, SmoteResult, smote_oversample

__all__ = [
    "BorutaConfig",
    "Coefficients",
    "ConfusionMatrix",
    "Dataset",
    "EvaluationReport",
    "FeatureDecision",
    "ModelArtifact",
    "PipelineConfig",
    "PredictResponse",
    "RocPoint",
    "SmoteConfig",
    "SmoteResult",
    "StandardizationParams",
    "TrainConfig",
    "TrainResult",
    "TrainTrace",
    "auc_trapezoid",
    "boruta_run",
    "confusion_matrix",
    "evaluate_artifact",
    "fit_gradient_descent",
    "load_artifact",
    "parse_wdbc_csv",
    "predict_one",
    "predict_proba",
    "roc_curve",
    "save_artifact",
    "sigmoid",
    "smote_oversample",
    "stratified_split",
    "train_pipeline",
]
