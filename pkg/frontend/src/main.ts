import { ApiClient } from "./api.js";
import { formatPercent } from "./format.js";
import { PredictPanel } from "./predictPanel.js";
import { QualityPanel } from "./qualityPanel.js";

export function resolveApiBase(search: string): string {
  const override = new URLSearchParams(search).get("api");
  return override ?? "http://127.0.0.1:8080";
}

/**
 * Boot the two-panel app. Nothing interactive is rendered until the model
 * metadata loads; on failure the only control is the retry button.
 */
export async function mountApp(root: HTMLElement, api: ApiClient): Promise<void> {
  root.innerHTML = `<p class="loading">contacting prediction service…</p>`;
  let meta;
  try {
    meta = await api.fetchModel();
  } catch {
    root.innerHTML = "";
    const banner = document.createElement("div");
    banner.className = "retry-banner";
    banner.textContent = `prediction service unreachable at ${api.baseUrl} `;
    const retry = document.createElement("button");
    retry.textContent = "retry";
    retry.addEventListener("click", () => void mountApp(root, api));
    banner.appendChild(retry);
    root.appendChild(banner);
    return;
  }

  root.innerHTML = `
    <header>
      <h1>Breast-cancer what-if console</h1>
      <p class="headline">
        model <code class="model-version">${meta.model_version}</code> ·
        held-out accuracy <strong class="headline-accuracy">${formatPercent(meta.test_accuracy)}</strong>
      </p>
      <nav class="tabs">
        <button class="tab tab-predict active">Predict</button>
        <button class="tab tab-quality">Model quality</button>
      </nav>
    </header>
    <main>
      <div class="panel panel-predict"></div>
      <div class="panel panel-quality" hidden></div>
    </main>
  `;

  const predictBox = root.querySelector(".panel-predict") as HTMLElement;
  const qualityBox = root.querySelector(".panel-quality") as HTMLElement;
  new PredictPanel(predictBox, api, meta);
  const quality = new QualityPanel(qualityBox, api);
  let qualityLoaded = false;

  const predictTab = root.querySelector(".tab-predict") as HTMLButtonElement;
  const qualityTab = root.querySelector(".tab-quality") as HTMLButtonElement;
  predictTab.addEventListener("click", () => {
    predictBox.hidden = false;
    qualityBox.hidden = true;
    predictTab.classList.add("active");
    qualityTab.classList.remove("active");
  });
  qualityTab.addEventListener("click", () => {
    predictBox.hidden = true;
    qualityBox.hidden = false;
    qualityTab.classList.add("active");
    predictTab.classList.remove("active");
    if (!qualityLoaded) {
      qualityLoaded = true;
      void quality.load();
    }
  });
}

declare global {
  interface Window {
    BCPREDICT_SKIP_AUTOMOUNT?: boolean;
  }
}

if (typeof document !== "undefined" && !window.BCPREDICT_SKIP_AUTOMOUNT) {
  const root = document.getElementById("app");
  if (root !== null) {
    void mountApp(root, new ApiClient(resolveApiBase(location.search)));
  }
}
