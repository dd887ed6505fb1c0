import { ApiClient, ApiError } from "./api.js";
import { pollJob, PollerHandle } from "./poller.js";
import type {
  ClassInfo,
  JobDocument,
  NeighborhoodDocument,
  RankingDocument,
  SelectionDocument,
} from "./types.js";

export type ViewState = {
  session: string | null;
  dataset: string | null;
  hubLimitDefault: number | null;
  classes: ClassInfo[];
  classId: string | null;
  selection: SelectionDocument | null;
  graph: NeighborhoodDocument | null;
  ranking: RankingDocument | null;
  job: JobDocument | null;
  resultText: string | null;
  error: string | null;
  busy: boolean;
};

function initialState(): ViewState {
  return {
    session: null,
    dataset: null,
    hubLimitDefault: null,
    classes: [],
    classId: null,
    selection: null,
    graph: null,
    ranking: null,
    job: null,
    resultText: null,
    error: null,
    busy: false,
  };
}

/**
 * All authoritative state lives on the server; this store only caches the
 * last response for each view and re-renders from it. Mutating actions are
 * serialized (at most one in flight); the job poller runs on its own.
 */
export class Store {
  private state = initialState();
  private listeners: Array<() => void> = [];
  private poller: PollerHandle | null = null;
  private readonly pollIntervalMs: number;

  constructor(
    private readonly api: ApiClient,
    opts: { pollIntervalMs?: number } = {},
  ) {
    this.pollIntervalMs = opts.pollIntervalMs ?? 1000;
  }

  getState(): ViewState {
    return this.state;
  }

  subscribe(listener: () => void): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private patch(partial: Partial<ViewState>): void {
    this.state = { ...this.state, ...partial };
    for (const listener of this.listeners) listener();
  }

  private fail(err: unknown): void {
    const message =
      err instanceof ApiError
        ? `${err.slug}: ${err.message}`
        : err instanceof Error
          ? err.message
          : String(err);
    this.patch({ error: message, busy: false });
  }

  /** Serialize mutations: a second action while one is in flight is a no-op. */
  private async mutate(action: () => Promise<void>): Promise<boolean> {
    if (this.state.busy) return false;
    this.patch({ busy: true, error: null });
    try {
      await action();
      this.patch({ busy: false });
      return true;
    } catch (err) {
      this.fail(err);
      return false;
    }
  }

  async init(): Promise<void> {
    await this.mutate(async () => {
      const session = await this.api.openSession();
      const classes = await this.api.listClasses();
      this.patch({
        session: session.session,
        dataset: classes.dataset,
        hubLimitDefault: classes.hubLimitDefault,
        classes: classes.classes,
      });
    });
  }

  async pickClass(classId: string): Promise<void> {
    const record = this.state.classes.find((c) => c.id === classId);
    if (!record || !record.seedable) return;
    await this.mutate(async () => {
      const session = this.requireSession();
      const selection = await this.api.createSelection(session, classId);
      const graph = await this.api.neighborhood(classId, 0);
      this.stopPolling();
      this.patch({
        classId,
        selection,
        graph,
        ranking: null,
        job: null,
        resultText: null,
      });
    });
  }

  async expand(depth: number, hubLimit?: number | null): Promise<void> {
    await this.mutate(async () => {
      const selection = this.requireSelection();
      const updated = await this.api.expandSelection(
        selection.id,
        depth,
        hubLimit,
      );
      const graph = await this.api.neighborhood(
        this.state.classId as string,
        depth,
        hubLimit,
      );
      this.patch({ selection: updated, graph });
    });
  }

  async toggle(table: string, included: boolean): Promise<void> {
    await this.mutate(async () => {
      const selection = this.requireSelection();
      // the checklist only changes once the server acknowledges
      const updated = await this.api.toggleTable(selection.id, table, included);
      this.patch({ selection: updated });
    });
  }

  async refreshRanking(): Promise<void> {
    try {
      const selection = this.requireSelection();
      const ranking = await this.api.ranking(selection.id);
      this.patch({ ranking });
    } catch (err) {
      this.fail(err);
    }
  }

  /**
   * Re-fetch everything the view renders from the ids at hand. Used on page
   * load with a known session and after reconnects; the result must be
   * identical to what was last shown, since nothing is kept client-side.
   */
  async refresh(): Promise<void> {
    const { selection, graph } = this.state;
    if (selection) {
      const fresh = await this.api.getSelection(selection.id);
      this.patch({ selection: fresh });
    }
    if (graph && this.state.classId) {
      const freshGraph = await this.api.neighborhood(
        this.state.classId,
        graph.depth,
        graph.hubLimit,
      );
      this.patch({ graph: freshGraph });
    }
  }

  /** Parse the config text, queue a job, and start the 1 s poller. */
  async extract(configText: string): Promise<void> {
    let config: unknown;
    try {
      config = JSON.parse(configText);
    } catch (err) {
      this.patch({ error: `config is not valid JSON: ${(err as Error).message}` });
      return;
    }
    await this.mutate(async () => {
      const session = this.requireSession();
      this.requireSelection();
      const started = await this.api.startExtraction(session, config);
      this.patch({
        job: {
          job: started.job,
          state: "queued",
          progress: null,
          error: null,
          result: null,
        },
        resultText: null,
      });
      this.startPolling(started.job);
    });
  }

  private startPolling(jobId: string): void {
    this.stopPolling();
    this.poller = pollJob(
      this.api,
      jobId,
      (job: JobDocument) => this.patch({ job }),
      this.pollIntervalMs,
    );
    this.poller.settled
      .then(async (job) => {
        const text = await this.api.jobResult(job.job);
        this.patch({ resultText: text });
      })
      .catch((err) => this.fail(err));
  }

  stopPolling(): void {
    if (this.poller) {
      this.poller.stop();
      this.poller = null;
    }
  }

  private requireSession(): string {
    if (!this.state.session) throw new Error("no session open");
    return this.state.session;
  }

  private requireSelection(): SelectionDocument {
    if (!this.state.selection) throw new Error("no selection yet");
    return this.state.selection;
  }
}

export type { NeighborhoodDocument, RankingDocument, SelectionDocument };
