// Document shapes as the service returns them. Field names mirror the wire
// format exactly (including class_id snake case) so responses can be stored
// and re-rendered without translation.

export type ClassInfo = {
  id: string;
  label: string;
  tables: string[];
  changeTracked: boolean;
  seedable: boolean;
};

export type ClassListDocument = {
  dataset: string;
  hubLimitDefault: number | null;
  classes: ClassInfo[];
};

export type SelectionEntry = {
  table: string;
  provenance: "seed" | "expansion" | "manual";
  depth: number | null;
  included: boolean;
};

export type SelectionDocument = {
  id: string;
  class_id: string;
  entries: SelectionEntry[];
  created: string;
  modified: string;
};

export type GraphNode = {
  id: string;
  kind: "table" | "document_class";
  label: string;
  x: number;
  y: number;
};

export type GraphEdge = { a: string; b: string; kind: string };

export type NeighborhoodDocument = {
  node: string;
  depth: number;
  hubLimit: number | null;
  depths: Record<string, number>;
  graph: { nodes: GraphNode[]; edges: GraphEdge[] };
};

export type RankingCandidate = {
  table: string;
  score: number;
  connectors: string[];
};

export type RankingDocument = {
  selection: string;
  candidates: RankingCandidate[];
};

export type JobState = "queued" | "running" | "done" | "failed";

export type JobDocument = {
  job: string;
  state: JobState;
  progress: { done: number; total: number } | null;
  error: string | null;
  result: string | null;
};

export type SessionDocument = {
  session: string;
  dataset: string;
  created: string;
};
