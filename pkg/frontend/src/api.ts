import type {
  ClassListDocument,
  JobDocument,
  NeighborhoodDocument,
  RankingDocument,
  SelectionDocument,
  SessionDocument,
} from "./types.js";

/** Error body the service sends: {"error": slug, "detail": message}. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly slug: string,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

async function raiseFor(res: Response): Promise<never> {
  let slug = "error";
  let detail = `${res.status} ${res.statusText}`;
  try {
    const body = await res.json();
    if (typeof body.error === "string") slug = body.error;
    if (typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body, keep the status line
  }
  throw new ApiError(res.status, slug, detail);
}

/**
 * Thin client for the extraction service. `base` is empty when the UI is
 * served from the same origin (the /app mount); tests point it elsewhere.
 */
export class ApiClient {
  constructor(readonly base: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.base + path, init);
    if (!res.ok) await raiseFor(res);
    return res.json() as Promise<T>;
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
  }

  openSession(): Promise<SessionDocument> {
    return this.post("/sessions", {});
  }

  listClasses(): Promise<ClassListDocument> {
    return this.request("/classes");
  }

  neighborhood(
    node: string,
    depth: number,
    hubLimit?: number | null,
  ): Promise<NeighborhoodDocument> {
    const params = new URLSearchParams({ node, depth: String(depth) });
    if (hubLimit !== undefined && hubLimit !== null) {
      params.set("hubLimit", String(hubLimit));
    }
    return this.request(`/graph/neighborhood?${params}`);
  }

  createSelection(session: string, classId: string): Promise<SelectionDocument> {
    return this.post("/selections", { session, class: classId });
  }

  getSelection(id: string): Promise<SelectionDocument> {
    return this.request(`/selections/${id}`);
  }

  toggleTable(
    id: string,
    table: string,
    included: boolean,
  ): Promise<SelectionDocument> {
    return this.request(`/selections/${id}`, {
      method: "PATCH",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ table, included }),
    });
  }

  expandSelection(
    id: string,
    depth: number,
    hubLimit?: number | null,
  ): Promise<SelectionDocument> {
    const body: Record<string, unknown> = { depth };
    if (hubLimit !== undefined && hubLimit !== null) body.hubLimit = hubLimit;
    return this.post(`/selections/${id}/expand`, body);
  }

  ranking(id: string): Promise<RankingDocument> {
    return this.request(`/selections/${id}/ranking`);
  }

  startExtraction(
    session: string,
    config: unknown,
  ): Promise<{ job: string; state: string }> {
    return this.post("/extractions", { session, config });
  }

  jobStatus(jobId: string): Promise<JobDocument> {
    return this.request(`/jobs/${jobId}`);
  }

  /** The finished OCEL file as raw text, so downloads are byte-faithful. */
  async jobResult(jobId: string): Promise<string> {
    const res = await fetch(`${this.base}/jobs/${jobId}/result`);
    if (!res.ok) await raiseFor(res);
    return res.text();
  }
}
