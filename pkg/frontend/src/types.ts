export interface RelatedWord {
  form: string;
  confidence: number;
}

export interface Reading {
  lemma: string;
  labels: string;
  confidence: number;
  related: RelatedWord[];
}

export interface AnalyzePayload {
  form: string;
  readings: Reading[];
}

export interface ApiEnvelope<T> {
  apiVersion: string;
  status: 'ok' | 'not_found' | 'error';
  payload?: T;
  message?: string;
}

export type ViewStatus = 'idle' | 'loading' | 'ready' | 'empty' | 'failed';

export interface ViewState {
  query: string;
  status: ViewStatus;
  readings: Reading[];
  activeReadingIndex: number;
  relatedPanel: RelatedWord[];
  lastError: string | null;
}
