import type { CreateSessionBody, HintPayload, SessionState } from "./types";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

/** Thin typed client for the game API; every UI action goes through here. */
export class GameApi {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    let body: unknown = {};
    try {
      body = await response.json();
    } catch {
      body = {};
    }
    if (!response.ok) {
      const message =
        typeof body === "object" && body !== null && "error" in body
          ? String((body as { error: unknown }).error)
          : `${response.status} ${response.statusText}`;
      throw new ApiError(response.status, message);
    }
    return body as T;
  }

  createSession(body: CreateSessionBody): Promise<SessionState> {
    return this.request("/api/v1/sessions", {
      method: "POST",
      body: JSON.stringify(body),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request(`/api/v1/sessions/${id}`);
  }

  place(id: string, chips: number[]): Promise<SessionState> {
    return this.request(`/api/v1/sessions/${id}/place`, {
      method: "POST",
      body: JSON.stringify({ chips }),
    });
  }

  placeDebt(id: string, vertex: number): Promise<SessionState> {
    return this.request(`/api/v1/sessions/${id}/debt`, {
      method: "POST",
      body: JSON.stringify({ vertex }),
    });
  }

  fire(id: string, vertices: number[]): Promise<SessionState> {
    return this.request(`/api/v1/sessions/${id}/fire`, {
      method: "POST",
      body: JSON.stringify({ vertices }),
    });
  }

  hint(id: string): Promise<HintPayload> {
    return this.request(`/api/v1/sessions/${id}/hint`);
  }

  resign(id: string): Promise<SessionState> {
    return this.request(`/api/v1/sessions/${id}/resign`, { method: "POST" });
  }
}
