import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiError, GameApi } from "../src/api";

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("api client", () => {
  afterEach(() => {
    vi.unstubAllGlobals();
  });

  it("posts session creation payloads", async () => {
    const calls: Array<[string, RequestInit | undefined]> = [];
    vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
      calls.push([url, init]);
      return jsonResponse(200, { id: "abc" });
    });
    const api = new GameApi("http://server");
    const state = await api.createSession({
      kind: "gonality",
      family: "tetrahedron",
      budget: 3,
    });
    expect(state.id).toBe("abc");
    expect(calls[0][0]).toBe("http://server/api/v1/sessions");
    expect(calls[0][1]?.method).toBe("POST");
    expect(JSON.parse(String(calls[0][1]?.body))).toEqual({
      kind: "gonality",
      family: "tetrahedron",
      budget: 3,
    });
  });

  it("hits the per-session endpoints", async () => {
    const urls: string[] = [];
    vi.stubGlobal("fetch", async (url: string) => {
      urls.push(url);
      return jsonResponse(200, {});
    });
    const api = new GameApi();
    await api.getSession("s1");
    await api.place("s1", [1, 0]);
    await api.placeDebt("s1", 1);
    await api.fire("s1", [0, 2]);
    await api.hint("s1");
    await api.resign("s1");
    expect(urls).toEqual([
      "/api/v1/sessions/s1",
      "/api/v1/sessions/s1/place",
      "/api/v1/sessions/s1/debt",
      "/api/v1/sessions/s1/fire",
      "/api/v1/sessions/s1/hint",
      "/api/v1/sessions/s1/resign",
    ]);
  });

  it("surfaces server errors with their message", async () => {
    vi.stubGlobal("fetch", async () =>
      jsonResponse(409, { error: "action requires phase firing" }),
    );
    const api = new GameApi();
    await expect(api.fire("s1", [0])).rejects.toThrowError(ApiError);
    await expect(api.fire("s1", [0])).rejects.toThrowError(
      /action requires phase firing/,
    );
  });
});
