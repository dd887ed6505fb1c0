import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("ApiClient", () => {
  afterEach(() => vi.unstubAllGlobals());

  it("opens sessions with a POST to /sessions", async () => {
    const fetchMock = vi.fn().mockResolvedValue(
      jsonResponse({ session: "s1", dataset: "d", created: "t" }, 201),
    );
    vi.stubGlobal("fetch", fetchMock);
    const doc = await new ApiClient().openSession();
    expect(doc.session).toBe("s1");
    const [url, init] = fetchMock.mock.calls[0];
    expect(url).toBe("/sessions");
    expect(init.method).toBe("POST");
  });

  it("prefixes every path with the base", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse({ classes: [] }));
    vi.stubGlobal("fetch", fetchMock);
    await new ApiClient("http://x:1").listClasses();
    expect(fetchMock.mock.calls[0][0]).toBe("http://x:1/classes");
  });

  it("sends expand bodies with depth and optional hubLimit", async () => {
    // fresh Response per call; a body is single-use
    const fetchMock = vi.fn(async () => jsonResponse({ entries: [] }));
    vi.stubGlobal("fetch", fetchMock);
    const api = new ApiClient();
    await api.expandSelection("abc", 2, -1);
    expect(JSON.parse(fetchMock.mock.calls[0][1].body)).toEqual({
      depth: 2,
      hubLimit: -1,
    });
    await api.expandSelection("abc", 1);
    // no hubLimit key at all when the caller wants the server default
    expect(JSON.parse(fetchMock.mock.calls[1][1].body)).toEqual({ depth: 1 });
  });

  it("toggles via PATCH with table and included", async () => {
    const fetchMock = vi.fn().mockResolvedValue(jsonResponse({ entries: [] }));
    vi.stubGlobal("fetch", fetchMock);
    await new ApiClient().toggleTable("abc", "EKET", false);
    const [url, init] = fetchMock.mock.calls[0];
    expect(url).toBe("/selections/abc");
    expect(init.method).toBe("PATCH");
    expect(JSON.parse(init.body)).toEqual({ table: "EKET", included: false });
  });

  it("encodes neighborhood query parameters", async () => {
    const fetchMock = vi.fn(async () => jsonResponse({}));
    vi.stubGlobal("fetch", fetchMock);
    const api = new ApiClient();
    await api.neighborhood("purchase_orders", 1, -1);
    expect(fetchMock.mock.calls[0][0]).toBe(
      "/graph/neighborhood?node=purchase_orders&depth=1&hubLimit=-1",
    );
    await api.neighborhood("EKKO", 0);
    expect(fetchMock.mock.calls[1][0]).toBe(
      "/graph/neighborhood?node=EKKO&depth=0",
    );
  });

  it("turns service error documents into ApiError", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(
        jsonResponse({ error: "unknown_selection", detail: "no such id" }, 404),
      ),
    );
    const err = await new ApiClient().getSelection("nope").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(404);
    expect(err.slug).toBe("unknown_selection");
    expect(err.message).toBe("no such id");
  });

  it("copes with non-JSON error bodies", async () => {
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(new Response("boom", { status: 502, statusText: "Bad Gateway" })),
    );
    const err = await new ApiClient().listClasses().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.slug).toBe("error");
    expect(err.message).toContain("502");
  });

  it("returns job results as raw text", async () => {
    const body = '{\n  "ocel:version": "1.0"\n}\n';
    vi.stubGlobal(
      "fetch",
      vi.fn().mockResolvedValue(new Response(body, { status: 200 })),
    );
    const text = await new ApiClient().jobResult("j1");
    expect(text).toBe(body); // byte-for-byte, not reserialized
  });

  it("starts extractions with session and config only", async () => {
    const fetchMock = vi.fn().mockResolvedValue(
      jsonResponse({ job: "j2", state: "queued" }, 201),
    );
    vi.stubGlobal("fetch", fetchMock);
    await new ApiClient().startExtraction("s1", { tables: {} });
    expect(JSON.parse(fetchMock.mock.calls[0][1].body)).toEqual({
      session: "s1",
      config: { tables: {} },
    });
  });
});
