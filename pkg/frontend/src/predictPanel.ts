import { ApiClient, isAbort } from "./api.js";
import { FormModel } from "./form.js";
import { formatProbability } from "./format.js";
import { ModelMetadata, PredictionResponse, ValidationFailure } from "./types.js";

/**
 * The what-if form plus result display. The previous result stays on screen
 * next to the new one so a clinician can compare scenarios. All numbers and
 * labels shown come from service responses; nothing is recomputed here.
 */
export class PredictPanel {
  readonly form: FormModel;
  private lastResult: PredictionResponse | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
    private readonly meta: ModelMetadata,
  ) {
    this.form = new FormModel(meta);
    this.render();
  }

  private render(): void {
    this.root.innerHTML = `
      <form class="predict-form" novalidate>
        <div class="fields"></div>
        <button type="submit" class="submit">Predict</button>
      </form>
      <section class="results">
        <div class="result current" hidden></div>
        <div class="result previous" hidden></div>
      </section>
    `;
    const fieldsBox = this.query(".fields");
    for (const field of this.form.fields) {
      const row = document.createElement("div");
      row.className = "field-row";
      row.innerHTML = `
        <label for="feat-${field.name}">${field.name}</label>
        <input id="feat-${field.name}" name="${field.name}" type="number" step="any"
               inputmode="decimal" value="${field.raw}" />
        <span class="hint">${field.hint.min} … ${field.hint.max}</span>
        <span class="field-message" role="alert"></span>
      `;
      const input = row.querySelector("input") as HTMLInputElement;
      input.addEventListener("input", () => {
        this.form.setValue(field.name, input.value);
        this.refreshField(field.name, row);
        this.refreshSubmit();
      });
      fieldsBox.appendChild(row);
    }
    this.query<HTMLFormElement>("form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });
    this.refreshSubmit();
  }

  private refreshField(name: string, row: HTMLElement): void {
    const message = row.querySelector(".field-message") as HTMLElement;
    row.classList.remove("invalid", "out-of-range");
    if (!this.form.fieldValid(name)) {
      row.classList.add("invalid");
      message.textContent = "enter a number";
    } else if (this.form.outOfRange(name)) {
      const { min, max } = this.form.fields.find((f) => f.name === name)!.hint;
      row.classList.add("out-of-range");
      message.textContent = `outside training range [${min}, ${max}]`;
    } else {
      message.textContent = "";
    }
  }

  private refreshSubmit(): void {
    this.query<HTMLButtonElement>(".submit").disabled = !this.form.canSubmit;
  }

  private clearFieldMessages(): void {
    for (const row of Array.from(this.root.querySelectorAll(".field-row"))) {
      const name = (row.querySelector("input") as HTMLInputElement).name;
      this.refreshField(name, row as HTMLElement);
    }
  }

  async submit(): Promise<void> {
    if (!this.form.canSubmit) {
      return;
    }
    this.clearFieldMessages();
    let response: PredictionResponse;
    try {
      response = await this.api.predict(this.form.payload());
    } catch (error) {
      if (isAbort(error)) {
        return; // superseded by a newer submission
      }
      if (error instanceof ValidationFailure) {
        this.attachProblems(error);
        return;
      }
      this.showError(String(error));
      return;
    }
    this.showResult(response);
  }

  private attachProblems(failure: ValidationFailure): void {
    for (const problem of failure.problems) {
      const input = this.root.querySelector<HTMLInputElement>(`input[name="${problem.field}"]`);
      const message = input?.closest(".field-row")?.querySelector(".field-message");
      if (message) {
        message.textContent = problem.message;
        input!.closest(".field-row")!.classList.add("invalid");
      }
    }
  }

  private showError(text: string): void {
    const box = this.query(".result.current");
    box.hidden = false;
    box.innerHTML = `<p class="error">${text}</p>`;
  }

  private showResult(response: PredictionResponse): void {
    if (this.lastResult !== null) {
      this.renderResult(this.query(".result.previous"), this.lastResult, "previous");
    }
    this.renderResult(this.query(".result.current"), response, "current");
    this.lastResult = response;
  }

  private renderResult(box: HTMLElement, r: PredictionResponse, title: string): void {
    const pct = (100 * r.probability).toFixed(1);
    const thresholdPct = (100 * r.threshold).toFixed(1);
    box.hidden = false;
    box.innerHTML = `
      <h3>${title}</h3>
      <span class="badge badge-${r.label}">${r.label}</span>
      <div class="probability" data-raw="${r.probability}">${formatProbability(r.probability)}</div>
      <div class="bar">
        <div class="fill" style="width: ${pct}%"></div>
        <div class="threshold-marker" style="left: ${thresholdPct}%"
             title="threshold ${r.threshold}"></div>
      </div>
      <div class="meta">model ${r.model_version}</div>
    `;
  }

  private query<T extends HTMLElement = HTMLElement>(selector: string): T {
    return this.root.querySelector(selector) as T;
  }
}
