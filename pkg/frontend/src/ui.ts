import type {
  ClassInfo,
  JobDocument,
  RankingDocument,
  SelectionDocument,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function renderClassOptions(
  classes: ClassInfo[],
  selected: string | null,
): string {
  const options = classes
    .filter((c) => c.seedable)
    .map(
      (c) =>
        `<option value="${escapeHtml(c.id)}"${c.id === selected ? " selected" : ""}>` +
        `${escapeHtml(c.label)}</option>`,
    );
  return `<option value=""${selected ? "" : " selected"} disabled>pick a document class</option>${options.join("")}`;
}

/** The checklist is a verbatim render of the last selection document. */
export function renderChecklist(selection: SelectionDocument | null): string {
  if (!selection) return `<p class="hint">No selection yet.</p>`;
  const rows = selection.entries.map((entry) => {
    const badge =
      entry.provenance === "seed"
        ? `<span class="badge seed">seed</span>`
        : entry.provenance === "expansion"
          ? `<span class="badge">depth ${entry.depth}</span>`
          : `<span class="badge">manual</span>`;
    return (
      `<label class="entry${entry.included ? "" : " off"}">` +
      `<input type="checkbox" data-table="${escapeHtml(entry.table)}"` +
      `${entry.included ? " checked" : ""}/> ` +
      `<code>${escapeHtml(entry.table)}</code> ${badge}</label>`
    );
  });
  const count = selection.entries.filter((e) => e.included).length;
  return `<p class="hint">${count} of ${selection.entries.length} tables included</p>${rows.join("")}`;
}

export function renderRanking(ranking: RankingDocument | null): string {
  if (!ranking) return `<p class="hint">Run the ranking to see related tables.</p>`;
  if (ranking.candidates.length === 0) {
    return `<p class="hint">No further candidates.</p>`;
  }
  const rows = ranking.candidates
    .slice(0, 10)
    .map(
      (c) =>
        `<tr><td><code>${escapeHtml(c.table)}</code></td><td>${c.score}</td>` +
        `<td>${c.connectors.map(escapeHtml).join(", ")}</td></tr>`,
    );
  return (
    `<table><thead><tr><th>table</th><th>score</th><th>connected via</th></tr></thead>` +
    `<tbody>${rows.join("")}</tbody></table>`
  );
}

export function renderJobPanel(
  job: JobDocument | null,
  haveResult: boolean,
): string {
  if (!job) return `<p class="hint">No extraction started.</p>`;
  const progress =
    job.progress && job.progress.total > 0
      ? ` ${job.progress.done}/${job.progress.total}`
      : "";
  const status = `<p class="job-state ${job.state}">job <code>${escapeHtml(job.job)}</code>: ${job.state}${progress}</p>`;
  if (job.state === "failed") {
    return status + `<p class="error-text">${escapeHtml(job.error ?? "")}</p>`;
  }
  if (job.state === "done" && haveResult) {
    return status + `<button id="download" class="primary">Download OCEL</button>`;
  }
  return status;
}
