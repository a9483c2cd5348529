import { ApiClient } from "./api.js";
import { formatPercent, verbatim } from "./format.js";
import { MetricsReport, RocPoint } from "./types.js";

/** Confusion grid, headline figures, and the ROC polyline with chance line. */
export class QualityPanel {
  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {}

  async load(): Promise<void> {
    this.root.innerHTML = `<p class="loading">loading model quality…</p>`;
    let metrics: MetricsReport;
    let roc: RocPoint[];
    try {
      [metrics, roc] = await Promise.all([this.api.fetchMetrics(), this.api.fetchRoc()]);
    } catch (error) {
      this.root.innerHTML = "";
      const box = document.createElement("div");
      box.className = "panel-error";
      box.textContent = `could not load metrics: ${String(error)}`;
      const retry = document.createElement("button");
      retry.textContent = "retry";
      retry.addEventListener("click", () => void this.load());
      box.appendChild(retry);
      this.root.appendChild(box);
      return;
    }
    this.render(metrics, roc);
  }

  private render(metrics: MetricsReport, roc: RocPoint[]): void {
    const cm = metrics.confusion;
    this.root.innerHTML = `
      <div class="quality-grid">
        <section>
          <h3>Confusion matrix (${metrics.n_test} test cases)</h3>
          <table class="confusion">
            <tr><td></td><td>predicted M</td><td>predicted B</td></tr>
            <tr><td>actual M</td>
                <td class="cm-tp" data-raw="${cm.tp}">${cm.tp}</td>
                <td class="cm-fn" data-raw="${cm.fn}">${cm.fn}</td></tr>
            <tr><td>actual B</td>
                <td class="cm-fp" data-raw="${cm.fp}">${cm.fp}</td>
                <td class="cm-tn" data-raw="${cm.tn}">${cm.tn}</td></tr>
          </table>
          <dl class="figures">
            <dt>accuracy</dt><dd class="fig-accuracy" data-raw="${verbatim(metrics.accuracy)}">${formatPercent(metrics.accuracy)}</dd>
            <dt>precision</dt><dd class="fig-precision" data-raw="${verbatim(metrics.precision)}">${formatPercent(metrics.precision)}</dd>
            <dt>recall</dt><dd class="fig-recall" data-raw="${verbatim(metrics.recall)}">${formatPercent(metrics.recall)}</dd>
            <dt>F1</dt><dd class="fig-f1" data-raw="${verbatim(metrics.f1)}">${formatPercent(metrics.f1)}</dd>
            <dt>AUC</dt><dd class="fig-auc" data-raw="${verbatim(metrics.auc)}">${verbatim(metrics.auc)}</dd>
          </dl>
          <p class="protocol">${metrics.protocol}</p>
        </section>
        <section>
          <h3>ROC</h3>
          ${renderRocSvg(roc)}
        </section>
      </div>
    `;
  }
}

export function renderRocSvg(points: RocPoint[], size = 280): string {
  const toX = (fpr: number) => (fpr * size).toFixed(2);
  const toY = (tpr: number) => ((1 - tpr) * size).toFixed(2);
  const path = points.map((p) => `${toX(p.fpr)},${toY(p.tpr)}`).join(" ");
  return `
    <svg class="roc" viewBox="0 0 ${size} ${size}" width="${size}" height="${size}">
      <rect x="0" y="0" width="${size}" height="${size}" class="roc-frame" />
      <line x1="0" y1="${size}" x2="${size}" y2="0" class="chance" stroke-dasharray="6 4" />
      <polyline class="roc-line" fill="none" points="${path}" />
    </svg>
  `;
}
