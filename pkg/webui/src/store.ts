// Minimal observable state container.

import type { ViewState } from "./types.js";
import { initialViewState } from "./types.js";

export type Listener = (state: ViewState) => void;

export class Store {
  private state: ViewState;
  private listeners = new Set<Listener>();

  constructor(initial?: ViewState) {
    this.state = initial ?? initialViewState();
  }

  get(): ViewState {
    return this.state;
  }

  set(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }
}
