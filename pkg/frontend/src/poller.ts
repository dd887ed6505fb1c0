import type { ApiClient } from "./api.js";
import type { JobDocument } from "./types.js";

export type PollerHandle = {
  stop(): void;
  /** Resolves with the terminal job document; rejects when the job failed. */
  settled: Promise<JobDocument>;
};

/**
 * Poll a job once a second until it is done or failed. Ticks never overlap:
 * a slow response just delays the next read. The poller runs independently
 * of user actions; stop() abandons it without touching the job.
 */
export function pollJob(
  api: ApiClient,
  jobId: string,
  onTick: (job: JobDocument) => void,
  intervalMs = 1000,
): PollerHandle {
  let timer: ReturnType<typeof setInterval> | null = null;
  let inFlight = false;

  const stop = () => {
    if (timer !== null) {
      clearInterval(timer);
      timer = null;
    }
  };

  const settled = new Promise<JobDocument>((resolve, reject) => {
    const tick = async () => {
      if (inFlight) return;
      inFlight = true;
      try {
        const job = await api.jobStatus(jobId);
        onTick(job);
        if (job.state === "done") {
          stop();
          resolve(job);
        } else if (job.state === "failed") {
          stop();
          reject(new Error(job.error ?? "extraction failed"));
        }
      } catch (err) {
        stop();
        reject(err instanceof Error ? err : new Error(String(err)));
      } finally {
        inFlight = false;
      }
    };
    timer = setInterval(tick, intervalMs);
  });

  return { stop, settled };
}
