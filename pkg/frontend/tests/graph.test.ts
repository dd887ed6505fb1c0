import { describe, expect, it } from "vitest";

import { svgMarkup } from "../src/graph.js";
import type {
  GraphEdge,
  GraphNode,
  NeighborhoodDocument,
  SelectionDocument,
} from "../src/types.js";

function doc(nodes: GraphNode[], edges: GraphEdge[] = []): NeighborhoodDocument {
  return {
    node: "purchase_orders",
    depth: 1,
    hubLimit: 9,
    depths: {},
    graph: { nodes, edges },
  };
}

function tableNode(id: string, x: number, y: number): GraphNode {
  return { id, kind: "table", label: id, x, y };
}

function selectionWith(
  entries: Array<[string, "seed" | "expansion" | "manual", boolean]>,
): SelectionDocument {
  return {
    id: "sel1",
    class_id: "purchase_orders",
    entries: entries.map(([table, provenance, included]) => ({
      table,
      provenance,
      depth: provenance === "seed" ? null : 1,
      included,
    })),
    created: "2026-08-17T00:00:00Z",
    modified: "2026-08-17T00:00:00Z",
  };
}

describe("svgMarkup", () => {
  it("emits server coordinates verbatim", () => {
    const markup = svgMarkup(
      doc([tableNode("EKKO", 1.25, -3.5), tableNode("EKPO", -0.75, 2.125)]),
      null,
    );
    expect(markup).toContain('cx="1.25" cy="-3.5"');
    expect(markup).toContain('cx="-0.75" cy="2.125"');
  });

  it("sizes the viewBox around the coordinate extent", () => {
    const markup = svgMarkup(
      doc([tableNode("A", -2, -1), tableNode("B", 4, 3)]),
      null,
    );
    const m = markup.match(/viewBox="([^"]+)"/);
    expect(m).not.toBeNull();
    const [minX, minY, width, height] = m![1].split(" ").map(Number);
    expect(minX).toBeLessThan(-2);
    expect(minY).toBeLessThan(-1);
    expect(minX + width).toBeGreaterThan(4);
    expect(minY + height).toBeGreaterThan(3);
  });

  it("classifies nodes from the selection document", () => {
    const nodes = [
      { id: "purchase_orders", kind: "document_class", label: "Purchase Orders", x: 0, y: 0 } as GraphNode,
      tableNode("EKKO", 1, 0),
      tableNode("EKBE", 2, 0),
      tableNode("EKET", 3, 0),
      tableNode("LFA1", 4, 0),
    ];
    const selection = selectionWith([
      ["EKKO", "seed", true],
      ["EKBE", "expansion", true],
      ["EKET", "seed", false],
    ]);
    const markup = svgMarkup(doc(nodes), selection);
    expect(markup).toContain('class="node class-node" data-node="purchase_orders"');
    expect(markup).toContain('class="node seed" data-node="EKKO"');
    expect(markup).toContain('class="node included" data-node="EKBE"');
    expect(markup).toContain('class="node excluded" data-node="EKET"');
    expect(markup).toContain('class="node outside" data-node="LFA1"');
  });

  it("treats every node as outside when there is no selection", () => {
    const markup = svgMarkup(doc([tableNode("EKKO", 0, 0)]), null);
    expect(markup).toContain('class="node outside"');
    expect(markup).not.toContain("node seed");
  });

  it("draws edges between endpoint coordinates with the edge kind as a class", () => {
    const nodes = [tableNode("EKKO", 1, 2), tableNode("EKPO", 3, 4)];
    const markup = svgMarkup(
      doc(nodes, [{ a: "EKKO", b: "EKPO", kind: "fk_link" }]),
      null,
    );
    expect(markup).toContain(
      '<line class="edge fk_link" x1="1" y1="2" x2="3" y2="4"/>',
    );
  });

  it("skips edges whose endpoints are not drawn", () => {
    const markup = svgMarkup(
      doc([tableNode("EKKO", 0, 0)], [{ a: "EKKO", b: "GHOST", kind: "fk_link" }]),
      null,
    );
    expect(markup).not.toContain("<line");
  });

  it("escapes labels", () => {
    const markup = svgMarkup(
      doc([{ id: "T", kind: "table", label: "a<b>&c", x: 0, y: 0 }]),
      null,
    );
    expect(markup).toContain("a&lt;b&gt;&amp;c");
    expect(markup).not.toContain("<b>");
  });

  it("renders an empty svg for an empty graph", () => {
    const markup = svgMarkup(doc([]), null);
    expect(markup).toContain("<svg");
    expect(markup).not.toContain("circle");
  });
});
