// Fetch-based client with response-shape validation. A payload that does
// not match the published schema surfaces as SchemaError so the UI can
// show an error banner instead of rendering nonsense.

import type { ApiAnswer, FiltersResponse, QueryBody } from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(message: string, public status: number, public body: unknown) {
    super(message);
    this.name = "ApiError";
  }
}

export class SchemaError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaError";
  }
}

function isStringArray(value: unknown): value is string[] {
  return Array.isArray(value) && value.every((v) => typeof v === "string");
}

export function validateFilters(data: unknown): FiltersResponse {
  const d = data as Record<string, unknown>;
  if (
    !d || typeof d !== "object" ||
    !isStringArray(d.whom) || !isStringArray(d.about) ||
    !isStringArray(d.countries) || !isStringArray(d.languages)
  ) {
    throw new SchemaError("filters payload does not match the schema");
  }
  return d as unknown as FiltersResponse;
}

export function validateAnswer(data: unknown): ApiAnswer {
  const d = data as Record<string, unknown>;
  const bad = (what: string) => new SchemaError(`answer payload invalid: ${what}`);
  if (!d || typeof d !== "object") throw bad("not an object");
  if (typeof d.overview !== "string") throw bad("overview");
  if (typeof d.insufficient_evidence !== "boolean") throw bad("insufficient_evidence");
  if (!d.group_insights || typeof d.group_insights !== "object" || Array.isArray(d.group_insights)) {
    throw bad("group_insights");
  }
  for (const bullets of Object.values(d.group_insights as Record<string, unknown>)) {
    if (!isStringArray(bullets)) throw bad("group_insights bullets");
  }
  if (!isStringArray(d.recommendations)) throw bad("recommendations");
  if (!Array.isArray(d.sources)) throw bad("sources");
  for (const s of d.sources as unknown[]) {
    const src = s as Record<string, unknown>;
    if (!src || typeof src.record_id !== "string" || typeof src.excerpt !== "string") {
      throw bad("source entry");
    }
  }
  const stats = d.retrieval_stats as Record<string, unknown> | undefined;
  if (
    !stats ||
    typeof stats.candidates !== "number" ||
    typeof stats.after_filter !== "number" ||
    typeof stats.after_rerank !== "number"
  ) {
    throw bad("retrieval_stats");
  }
  return d as unknown as ApiAnswer;
}

export interface ApiClient {
  getFilters(): Promise<FiltersResponse>;
  newSession(): Promise<string>;
  query(body: QueryBody, signal?: AbortSignal): Promise<ApiAnswer>;
}

export function createApiClient(fetchFn: FetchLike, base = ""): ApiClient {
  async function request(path: string, init?: RequestInit): Promise<unknown> {
    const resp = await fetchFn(base + path, init);
    let body: unknown = null;
    try {
      body = await resp.json();
    } catch {
      body = null;
    }
    if (!resp.ok) {
      const message =
        body && typeof body === "object" && "error" in (body as object)
          ? String((body as Record<string, unknown>).error)
          : `request failed with status ${resp.status}`;
      throw new ApiError(message, resp.status, body);
    }
    return body;
  }

  return {
    async getFilters() {
      return validateFilters(await request("/api/filters"));
    },
    async newSession() {
      const body = (await request("/api/session/new", { method: "POST" })) as
        | Record<string, unknown>
        | null;
      if (!body || typeof body.session_id !== "string") {
        throw new SchemaError("session payload does not match the schema");
      }
      return body.session_id;
    },
    async query(body: QueryBody, signal?: AbortSignal) {
      const data = await request("/api/query", {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal,
      });
      return validateAnswer(data);
    },
  };
}
