import type { NeighborhoodDocument, SelectionDocument } from "./types.js";
import { escapeHtml } from "./ui.js";

// Server coordinates go into the markup untouched; the viewBox does the
// fitting. Layout units are small (the whole drawing spans ~12), so sizes
// below are in those units.
const PAD = 1.6;
const TABLE_R = 0.28;
const CLASS_R = 0.42;

function nodeClass(
  id: string,
  kind: string,
  selection: SelectionDocument | null,
): string {
  if (kind === "document_class") return "node class-node";
  const entry = selection?.entries.find((e) => e.table === id);
  if (!entry) return "node outside";
  if (!entry.included) return "node excluded";
  return entry.provenance === "seed" ? "node seed" : "node included";
}

export function svgMarkup(
  doc: NeighborhoodDocument,
  selection: SelectionDocument | null,
): string {
  const nodes = doc.graph.nodes;
  if (nodes.length === 0) return "<svg class='schema-graph'></svg>";

  const xs = nodes.map((n) => n.x);
  const ys = nodes.map((n) => n.y);
  const minX = Math.min(...xs) - PAD;
  const minY = Math.min(...ys) - PAD;
  const width = Math.max(...xs) - minX + PAD;
  const height = Math.max(...ys) - minY + PAD;

  const at = new Map(nodes.map((n) => [n.id, n]));
  const parts: string[] = [];
  parts.push(
    `<svg class="schema-graph" viewBox="${minX} ${minY} ${width} ${height}" ` +
      `preserveAspectRatio="xMidYMid meet">`,
  );

  for (const edge of doc.graph.edges) {
    const a = at.get(edge.a);
    const b = at.get(edge.b);
    if (!a || !b) continue;
    parts.push(
      `<line class="edge ${edge.kind}" x1="${a.x}" y1="${a.y}" ` +
        `x2="${b.x}" y2="${b.y}"/>`,
    );
  }

  for (const node of nodes) {
    const cls = nodeClass(node.id, node.kind, selection);
    const r = node.kind === "document_class" ? CLASS_R : TABLE_R;
    const label = escapeHtml(node.label);
    parts.push(
      `<g class="${cls}" data-node="${escapeHtml(node.id)}">` +
        `<circle cx="${node.x}" cy="${node.y}" r="${r}"><title>${label}</title></circle>` +
        `<text x="${node.x}" y="${node.y + r + 0.42}" text-anchor="middle">${label}</text>` +
        `</g>`,
    );
  }

  parts.push("</svg>");
  return parts.join("");
}
