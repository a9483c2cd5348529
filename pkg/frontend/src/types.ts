// Shapes of the /api/v1 JSON payloads.

export interface FeatureStats {
  min: number;
  mean: number;
  max: number;
}

export interface ModelMetadata {
  model_version: string;
  threshold: number;
  feature_names: string[];
  feature_stats: Record<string, FeatureStats>;
  label_map: Record<string, string>;
  test_accuracy: number;
}

export interface PredictionResponse {
  probability: number;
  label: string;
  threshold: number;
  model_version: string;
}

export interface FieldProblem {
  field: string;
  message: string;
}

export interface ConfusionCounts {
  tp: number;
  fp: number;
  fn: number;
  tn: number;
}

export interface RocPoint {
  fpr: number;
  tpr: number;
  threshold: number | null;
}

export interface MetricsReport {
  confusion: ConfusionCounts;
  accuracy: number;
  precision: number;
  recall: number;
  f1: number;
  auc: number;
  n_test: number;
  protocol: string;
  degenerate: string[];
  roc: RocPoint[];
}

/** A 422 from the service, carrying per-field messages. */
export class ValidationFailure extends Error {
  constructor(public readonly problems: FieldProblem[]) {
    super(problems.map((p) => `${p.field}: ${p.message}`).join("; "));
    this.name = "ValidationFailure";
  }
}
