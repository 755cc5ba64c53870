// Application behavior, independent of the DOM: filter loading, query
// submission with abort semantics, new-chat reset.

import type { ApiClient } from "./api.js";
import { ApiError, SchemaError } from "./api.js";
import type { QueryBody, ViewState } from "./types.js";
import { Store } from "./store.js";

let requestCounter = 0;

function nextRequestId(): string {
  requestCounter += 1;
  return `q-${requestCounter.toString(36)}-${Math.random().toString(36).slice(2, 8)}`;
}

export class AppController {
  private inflight: AbortController | null = null;
  private inflightKey: string | null = null;

  constructor(private api: ApiClient, public store: Store) {}

  /** Load filter vocabularies and open a session. Filter failures leave
   * the controls disabled but never block free-text querying. */
  async init(): Promise<void> {
    try {
      const sessionId = await this.api.newSession();
      this.store.set({ sessionId });
    } catch {
      this.store.set({ sessionId: null });
    }
    try {
      const filters = await this.api.getFilters();
      this.store.set({ filters, filtersError: false });
    } catch {
      this.store.set({ filters: null, filtersError: true });
    }
  }

  setQuestion(question: string): void {
    this.store.set({ question });
  }

  setLanguage(language: string): void {
    this.store.set({ language });
  }

  toggleWhom(value: string): void {
    const current = this.store.get().whom;
    this.store.set({
      whom: current.includes(value)
        ? current.filter((v) => v !== value)
        : [...current, value],
    });
  }

  toggleAbout(value: string): void {
    const current = this.store.get().about;
    this.store.set({
      about: current.includes(value)
        ? current.filter((v) => v !== value)
        : [...current, value],
    });
  }

  private submissionKey(state: ViewState): string {
    return JSON.stringify([state.question, [...state.whom].sort(), [...state.about].sort(), state.language]);
  }

  /** Submit the current question. An identical re-submission while one
   * is pending is a no-op; a different submission aborts the prior
   * request (single in-flight query). */
  async submit(): Promise<void> {
    const state = this.store.get();
    const question = state.question.trim();
    if (!question) return;

    const key = this.submissionKey(state);
    if (this.inflight && this.inflightKey === key) return;
    this.inflight?.abort();

    const controller = new AbortController();
    this.inflight = controller;
    this.inflightKey = key;
    const requestId = nextRequestId();

    // "All" means no constraint: empty selections are omitted entirely
    const body: QueryBody = { question };
    if (state.whom.length) body.whom = state.whom;
    if (state.about.length) body.about = state.about;
    if (state.language !== "auto") body.language = state.language;
    if (state.sessionId) body.session_id = state.sessionId;

    this.store.set({ status: "pending", error: null });
    try {
      const answer = await this.api.query(body, controller.signal);
      if (this.inflight !== controller) return; // superseded or reset
      this.store.set({
        status: answer.insufficient_evidence ? "refused" : "answered",
        answer,
        scope: { whom: state.whom, about: state.about, question },
        error: null,
      });
    } catch (err) {
      if (this.inflight !== controller) return;
      if ((err as Error).name === "AbortError") return;
      const message =
        err instanceof SchemaError
          ? `The server reply did not match the expected schema: ${err.message}`
          : err instanceof ApiError
            ? err.message
            : "The request failed.";
      this.store.set({
        status: "error",
        answer: null,
        scope: null,
        error: { message, requestId },
      });
    } finally {
      if (this.inflight === controller) {
        this.inflight = null;
        this.inflightKey = null;
      }
    }
  }

  /** Reset to a blank page: clears question, filters, answer; aborts any
   * pending request; asks for a fresh session id. Idempotent. */
  async newChat(): Promise<void> {
    this.inflight?.abort();
    this.inflight = null;
    this.inflightKey = null;
    this.store.set({
      status: "idle",
      question: "",
      whom: [],
      about: [],
      answer: null,
      scope: null,
      error: null,
    });
    try {
      const sessionId = await this.api.newSession();
      this.store.set({ sessionId });
    } catch {
      this.store.set({ sessionId: null });
    }
  }

  hasPendingRequest(): boolean {
    return this.inflight !== null;
  }
}
