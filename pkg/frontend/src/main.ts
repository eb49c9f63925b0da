import { createApiClient } from './api';
import { renderApp } from './render';
import { SearchStore } from './store';

export interface App {
  store: SearchStore;
}

/** Mount the visualizer into a root element against a given API base URL. */
export function createApp(root: HTMLElement, baseUrl: string): App {
  const store = new SearchStore(createApiClient(baseUrl));
  renderApp(root, store);
  return { store };
}

declare global {
  interface Window {
    KATSUYO_API_URL?: string;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  const baseUrl = window.KATSUYO_API_URL ?? 'http://127.0.0.1:8765';
  createApp(document.getElementById('app') as HTMLElement, baseUrl);
}
