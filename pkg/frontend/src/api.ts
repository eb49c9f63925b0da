import type { AnalyzePayload, ApiEnvelope } from './types';

/** Result of an /analyze call: the payload, or null for unknown forms. */
export type AnalyzeResult = AnalyzePayload | null;

export interface ApiClient {
  analyze(form: string): Promise<AnalyzeResult>;
}

/**
 * Client for the katsuyo HTTP API. Label strings and confidence values are
 * passed through untouched; the server is the single source of truth.
 */
export function createApiClient(baseUrl: string): ApiClient {
  const root = baseUrl.replace(/\/$/, '');
  return {
    async analyze(form: string): Promise<AnalyzeResult> {
      const response = await fetch(`${root}/analyze?form=${encodeURIComponent(form)}`);
      const body = (await response.json()) as ApiEnvelope<AnalyzePayload>;
      if (body.status === 'not_found') return null;
      if (body.status !== 'ok' || !body.payload) {
        throw new Error(body.message ?? `unexpected response (${response.status})`);
      }
      return body.payload;
    },
  };
}
