export function formatProbability(p: number): string {
  return p.toFixed(3);
}

export function formatPercent(x: number, digits = 1): string {
  return `${(100 * x).toFixed(digits)}%`;
}

/** The value exactly as served, for figures that must match the API verbatim. */
export function verbatim(x: number): string {
  return String(x);
}
