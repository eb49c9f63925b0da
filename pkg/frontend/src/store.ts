import type { ApiClient } from './api';
import type { ViewState } from './types';

type Listener = (state: ViewState) => void;

export function initialState(): ViewState {
  return {
    query: '',
    status: 'idle',
    readings: [],
    activeReadingIndex: 0,
    relatedPanel: [],
    lastError: null,
  };
}

/**
 * Holds the view state and runs the three user actions: search, toggle
 * meaning, pivot to a related form. At most one request is relevant at a
 * time: a newer search supersedes any still in flight (latest wins).
 */
export class SearchStore {
  private state: ViewState = initialState();
  private listeners: Listener[] = [];
  private requestSeq = 0;

  constructor(private api: ApiClient) {}

  getState(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
    listener(this.state);
  }

  private set(next: ViewState): void {
    this.state = next;
    for (const listener of this.listeners) listener(next);
  }

  /** Search an inflected form; whitespace-only queries are ignored. */
  async submitSearch(query: string): Promise<void> {
    const trimmed = query.trim();
    if (!trimmed) return;
    const token = ++this.requestSeq;
    this.set({ ...this.state, query: trimmed, status: 'loading', lastError: null });
    try {
      const payload = await this.api.analyze(trimmed);
      if (token !== this.requestSeq) return; // superseded by a newer search
      if (payload === null || payload.readings.length === 0) {
        this.set({
          query: trimmed,
          status: 'empty',
          readings: [],
          activeReadingIndex: 0,
          relatedPanel: [],
          lastError: null,
        });
        return;
      }
      const first = payload.readings[0]!;
      this.set({
        query: trimmed,
        status: 'ready',
        readings: payload.readings,
        activeReadingIndex: 0,
        relatedPanel: first.related,
        lastError: null,
      });
    } catch (err) {
      if (token !== this.requestSeq) return;
      this.set({
        ...this.state,
        status: 'failed',
        lastError: err instanceof Error ? err.message : String(err),
      });
    }
  }

  /** Switch the active meaning; out-of-range indices are ignored. */
  toggleMeaning(index: number): void {
    const reading = this.state.readings[index];
    if (index === this.state.activeReadingIndex || !reading) return;
    this.set({
      ...this.state,
      activeReadingIndex: index,
      relatedPanel: reading.related,
    });
  }

  /** Pivot: a click on a related word becomes a fresh search. */
  async selectRelated(form: string): Promise<void> {
    await this.submitSearch(form);
  }
}
