// Thin fetch wrapper over the session API.

import type { CreateResponse, MutateResponse, SessionState } from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export interface SessionApi {
  create(body: Record<string, unknown>): Promise<CreateResponse>;
  state(id: string): Promise<SessionState>;
  mutate(id: string, vertex: number): Promise<MutateResponse>;
  undo(id: string): Promise<SessionState>;
}

async function call<T>(url: string, method: "GET" | "POST", body?: unknown): Promise<T> {
  const response = await fetch(url, {
    method,
    headers: body === undefined ? undefined : { "Content-Type": "application/json" },
    body: body === undefined ? undefined : JSON.stringify(body),
  });
  const payload = (await response.json()) as Record<string, unknown>;
  if (!response.ok) {
    throw new ApiError(response.status, String(payload["error"] ?? response.statusText));
  }
  return payload as T;
}

export function httpApi(baseUrl: string): SessionApi {
  const root = baseUrl.replace(/\/+$/, "");
  return {
    create: (body) => call<CreateResponse>(`${root}/sessions`, "POST", body),
    state: async (id) =>
      (await call<{ state: SessionState }>(`${root}/sessions/${id}`, "GET")).state,
    mutate: (id, vertex) =>
      call<MutateResponse>(`${root}/sessions/${id}/mutate`, "POST", { vertex }),
    undo: async (id) =>
      (await call<{ state: SessionState }>(`${root}/sessions/${id}/undo`, "POST")).state,
  };
}
