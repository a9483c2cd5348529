import {
  MetricsReport,
  ModelMetadata,
  PredictionResponse,
  RocPoint,
  ValidationFailure,
} from "./types.js";

/**
 * Thin typed client for the prediction service. At most one prediction is in
 * flight: firing a new one aborts the previous request.
 */
export class ApiClient {
  private inflight: AbortController | null = null;

  constructor(readonly baseUrl: string) {}

  private url(path: string): string {
    return `${this.baseUrl.replace(/\/$/, "")}/api/v1${path}`;
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await fetch(this.url(path));
    if (!response.ok) {
      throw new Error(`GET ${path} failed: ${response.status}`);
    }
    return (await response.json()) as T;
  }

  fetchModel(): Promise<ModelMetadata> {
    return this.getJson<ModelMetadata>("/model");
  }

  fetchMetrics(): Promise<MetricsReport> {
    return this.getJson<MetricsReport>("/metrics");
  }

  fetchRoc(): Promise<RocPoint[]> {
    return this.getJson<RocPoint[]>("/roc");
  }

  /** POST /predict; throws ValidationFailure on a 422, DOMException on abort. */
  async predict(features: Record<string, number>): Promise<PredictionResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const response = await fetch(this.url("/predict"), {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify({ features }),
        signal: controller.signal,
      });
      if (response.status === 422) {
        const body = (await response.json()) as { detail: { field: string; message: string }[] };
        throw new ValidationFailure(body.detail);
      }
      if (!response.ok) {
        throw new Error(`predict failed: ${response.status}`);
      }
      return (await response.json()) as PredictionResponse;
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
      }
    }
  }
}

export function isAbort(error: unknown): boolean {
  return error instanceof DOMException && error.name === "AbortError";
}
