import { ModelMetadata } from "../src/types.js";

export function makeMetadata(names: string[]): ModelMetadata {
  const feature_stats: ModelMetadata["feature_stats"] = {};
  names.forEach((name, i) => {
    feature_stats[name] = { min: i, mean: i + 0.5, max: i + 2 };
  });
  return {
    model_version: "logreg-v1-test",
    threshold: 0.5,
    feature_names: names,
    feature_stats,
    label_map: { "0": "B", "1": "M" },
    test_accuracy: 0.97,
  };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export async function until(
  check: () => boolean,
  timeoutMs = 10_000,
  stepMs = 20,
): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (!check()) {
    if (Date.now() > deadline) {
      throw new Error("condition not met in time");
    }
    await new Promise((resolve) => setTimeout(resolve, stepMs));
  }
}
