import { ApiClient } from "./api.js";
import { svgMarkup } from "./graph.js";
import { Store } from "./state.js";
import {
  renderChecklist,
  renderClassOptions,
  renderJobPanel,
  renderRanking,
} from "./ui.js";

const api = new ApiClient("");
const store = new Store(api);

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const classPicker = $<HTMLSelectElement>("class-picker");
const depthInput = $<HTMLInputElement>("depth");
const hubInput = $<HTMLInputElement>("hub-limit");
const errorBanner = $<HTMLDivElement>("error-banner");
const graphHost = $<HTMLDivElement>("graph");
const checklistHost = $<HTMLDivElement>("checklist");
const rankingHost = $<HTMLDivElement>("ranking");
const jobHost = $<HTMLDivElement>("job-panel");
const configInput = $<HTMLTextAreaElement>("config");
const datasetLabel = $<HTMLSpanElement>("dataset-label");

function hubLimitValue(): number | null | undefined {
  const raw = hubInput.value.trim();
  if (raw === "") return undefined; // server default
  return Number(raw); // -1 turns suppression off
}

function render(): void {
  const state = store.getState();

  errorBanner.textContent = state.error ?? "";
  errorBanner.hidden = !state.error;
  datasetLabel.textContent = state.dataset ? `dataset: ${state.dataset}` : "";

  classPicker.innerHTML = renderClassOptions(state.classes, state.classId);
  classPicker.disabled = state.busy;

  graphHost.innerHTML = state.graph
    ? svgMarkup(state.graph, state.selection)
    : `<p class="hint">Pick a document class to see its schema neighborhood.</p>`;

  checklistHost.innerHTML = renderChecklist(state.selection);
  rankingHost.innerHTML = renderRanking(state.ranking);
  jobHost.innerHTML = renderJobPanel(state.job, state.resultText !== null);

  for (const button of document.querySelectorAll<HTMLButtonElement>("[data-needs-selection]")) {
    button.disabled = state.busy || !state.selection;
  }
}

function download(): void {
  const state = store.getState();
  if (state.resultText === null) return;
  const blob = new Blob([state.resultText], { type: "application/json" });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = `${state.classId ?? "extraction"}.ocel.json`;
  a.click();
  URL.revokeObjectURL(url);
}

classPicker.addEventListener("change", () => {
  if (classPicker.value) void store.pickClass(classPicker.value);
});

$("expand").addEventListener("click", () => {
  const depth = Number(depthInput.value || "1");
  void store.expand(depth, hubLimitValue());
});

checklistHost.addEventListener("change", (event) => {
  const box = event.target as HTMLInputElement;
  const table = box.dataset.table;
  if (table) void store.toggle(table, box.checked);
});

$("rank").addEventListener("click", () => void store.refreshRanking());

$("extract").addEventListener("click", () => void store.extract(configInput.value));

jobHost.addEventListener("click", (event) => {
  if ((event.target as HTMLElement).id === "download") download();
});

store.subscribe(render);
render();
void store.init();
