/**
 * End-to-end: the real API server (spawned as a subprocess) behind the real
 * DOM, driven the way a user would drive it — type a form, press Search,
 * toggle meanings, click a related word.
 */
import { spawn, type ChildProcess } from 'node:child_process';
import { afterAll, beforeAll, describe, expect, it } from 'vitest';

import { createApp } from '../src/main';
import type { App } from '../src/main';
import type { AnalyzePayload, ApiEnvelope } from '../src/types';

let server: ChildProcess;
let baseUrl: string;

async function waitFor(check: () => boolean, timeoutMs = 20000): Promise<void> {
  const start = Date.now();
  while (!check()) {
    if (Date.now() - start > timeoutMs) throw new Error('condition not met in time');
    await new Promise((resolve) => setTimeout(resolve, 50));
  }
}

function startServer(): Promise<string> {
  return new Promise((resolve, reject) => {
    server = spawn('python3', ['-u', '-m', 'katsuyo.cli', 'serve', '--port', '0'], {
      cwd: '..',
      stdio: ['ignore', 'pipe', 'pipe'],
    });
    let out = '';
    server.stdout!.on('data', (chunk: Buffer) => {
      out += chunk.toString();
      const match = out.match(/serving on http:\/\/[^:]+:(\d+)\//);
      if (match) resolve(`http://127.0.0.1:${match[1]}`);
    });
    server.stderr!.on('data', (chunk: Buffer) => {
      process.stderr.write(chunk);
    });
    server.on('error', reject);
    server.on('exit', (code) => reject(new Error(`server exited early (${code})`)));
  });
}

function mount(): App {
  document.body.innerHTML = '<div id="root"></div>';
  return createApp(document.getElementById('root') as HTMLElement, baseUrl);
}

function search(query: string): void {
  const input = document.getElementById('search-input') as HTMLInputElement;
  const form = input.closest('form') as HTMLFormElement;
  input.value = query;
  form.dispatchEvent(new Event('submit', { bubbles: true, cancelable: true }));
}

function meaningButtons(): HTMLButtonElement[] {
  return Array.from(document.querySelectorAll<HTMLButtonElement>('.meaning'));
}

function relatedForms(): string[] {
  return Array.from(document.querySelectorAll<HTMLAnchorElement>('.related-form')).map(
    (a) => a.textContent ?? '',
  );
}

beforeAll(async () => {
  baseUrl = await startServer();
});

afterAll(() => {
  server?.kill();
});

describe('visualizer against a live server', () => {
  it('shows three toggleable meanings for 見られる, matching the API payload', async () => {
    const app = mount();
    search('見られる');
    await waitFor(() => meaningButtons().length === 3);

    const response = await fetch(`${baseUrl}/analyze?form=${encodeURIComponent('見られる')}`);
    const body = (await response.json()) as ApiEnvelope<AnalyzePayload>;
    const served = body.payload!.readings;

    const rendered = meaningButtons().map((b) => b.textContent);
    served.forEach((reading, i) => {
      expect(rendered[i]).toContain(reading.labels);
    });

    // labels of the active reading are rendered as chips, verbatim
    const chips = Array.from(document.querySelectorAll('.label-chip')).map((c) => c.textContent);
    expect(chips).toEqual(served[0]!.labels.split(';'));

    // confidence is displayed exactly as served, no rescaling
    const shown = document.querySelector('.reading .confidence-value')!.textContent;
    expect(shown).toBe(String(served[0]!.confidence));

    // toggling switches the highlighted meaning and reloads the panel
    meaningButtons()[1]!.click();
    await waitFor(() => meaningButtons()[1]!.classList.contains('active'));
    const panel = relatedForms();
    expect(panel).toEqual(served[1]!.related.map((w) => w.form));
    expect(app.store.getState().activeReadingIndex).toBe(1);
  });

  it('clicking a related word pivots to a new search', async () => {
    mount();
    search('食べろ');
    await waitFor(() => relatedForms().length > 0);
    expect(relatedForms()).toContain('召し上がれ');

    const link = Array.from(document.querySelectorAll<HTMLAnchorElement>('.related-form')).find(
      (a) => a.textContent === '召し上がれ',
    )!;
    link.click();
    await waitFor(() => {
      const input = document.getElementById('search-input') as HTMLInputElement;
      return input.value === '召し上がれ' && meaningButtons().length > 0;
    });
    const heading = document.querySelector('#results h2')!.textContent;
    expect(heading).toBe('Search Results');
    // honorific forms are filed under their own lemma
    expect(meaningButtons()[0]!.textContent).toContain('召し上がる');
    // and the new panel points back at the plain imperative
    expect(relatedForms()).toContain('食べろ');
  });

  it('renders an explicit empty state for unknown forms', async () => {
    mount();
    search('そんな活用はない');
    await waitFor(() => document.querySelector('.empty-state') !== null);
    expect(document.querySelector('.empty-state')!.textContent).toContain('そんな活用はない');
  });

  it('blocks whitespace-only queries client-side', async () => {
    const app = mount();
    search('   ');
    await new Promise((resolve) => setTimeout(resolve, 150));
    expect(app.store.getState().status).toBe('idle');
  });
});
