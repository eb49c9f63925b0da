import { SearchStore } from './store';
import type { Reading, ViewState } from './types';

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function confidenceBar(doc: Document, value: number): HTMLElement {
  // the value is rendered exactly as served; the bar width mirrors it
  const wrap = el(doc, 'span', 'confidence');
  const bar = el(doc, 'span', 'confidence-bar');
  const fill = el(doc, 'span', 'confidence-fill');
  fill.style.width = `${value}%`;
  bar.appendChild(fill);
  wrap.appendChild(bar);
  wrap.appendChild(el(doc, 'span', 'confidence-value', String(value)));
  return wrap;
}

function renderMeaningTabs(doc: Document, state: ViewState, store: SearchStore): HTMLElement {
  const tabs = el(doc, 'div', 'meanings');
  state.readings.forEach((reading, index) => {
    const active = index === state.activeReadingIndex;
    const button = el(doc, 'button', active ? 'meaning active' : 'meaning');
    button.type = 'button';
    button.dataset.index = String(index);
    button.textContent = `${reading.lemma} ・ ${reading.labels}`;
    button.addEventListener('click', () => store.toggleMeaning(index));
    tabs.appendChild(button);
  });
  return tabs;
}

function renderActiveReading(doc: Document, reading: Reading): HTMLElement {
  const box = el(doc, 'div', 'reading');
  const labels = el(doc, 'div', 'labels');
  for (const label of reading.labels.split(';')) {
    labels.appendChild(el(doc, 'span', 'label-chip', label));
  }
  box.appendChild(el(doc, 'div', 'lemma', `Lemma: ${reading.lemma}`));
  box.appendChild(labels);
  box.appendChild(confidenceBar(doc, reading.confidence));
  return box;
}

function renderRelated(doc: Document, state: ViewState, store: SearchStore): HTMLElement {
  const section = el(doc, 'section', 'related');
  section.appendChild(el(doc, 'h2', undefined, 'Related Words'));
  const list = el(doc, 'ul', 'related-list');
  for (const word of state.relatedPanel) {
    const item = el(doc, 'li', 'related-item');
    const link = el(doc, 'a', 'related-form', word.form);
    link.href = '#';
    link.addEventListener('click', (event) => {
      event.preventDefault();
      void store.selectRelated(word.form);
    });
    item.appendChild(link);
    item.appendChild(confidenceBar(doc, word.confidence));
    list.appendChild(item);
  }
  section.appendChild(list);
  return section;
}

export function renderApp(root: HTMLElement, store: SearchStore): void {
  const doc = root.ownerDocument;
  root.textContent = '';

  const form = el(doc, 'form', 'search-box');
  const input = el(doc, 'input');
  input.type = 'text';
  input.id = 'search-input';
  input.placeholder = '例: 見られる';
  const button = el(doc, 'button', 'search-button', 'Search');
  button.type = 'submit';
  form.appendChild(input);
  form.appendChild(button);
  form.addEventListener('submit', (event) => {
    event.preventDefault();
    void store.submitSearch(input.value);
  });
  root.appendChild(form);

  const results = el(doc, 'section', 'results');
  results.id = 'results';
  root.appendChild(results);

  store.subscribe((state) => {
    input.value = state.query || input.value;
    results.textContent = '';
    switch (state.status) {
      case 'idle':
        results.appendChild(el(doc, 'p', 'hint', 'Type an inflected form and press Search.'));
        return;
      case 'loading':
        results.appendChild(el(doc, 'p', 'hint', 'Searching…'));
        return;
      case 'empty':
        results.appendChild(
          el(doc, 'p', 'empty-state', `No entry found for “${state.query}”.`),
        );
        return;
      case 'failed':
        results.appendChild(
          el(doc, 'p', 'error-state', `Request failed: ${state.lastError ?? 'unknown error'}`),
        );
        return;
      case 'ready':
        break;
    }
    const heading = el(doc, 'h2', undefined, 'Search Results');
    results.appendChild(heading);
    results.appendChild(renderMeaningTabs(doc, state, store));
    const active = state.readings[state.activeReadingIndex];
    if (active) results.appendChild(renderActiveReading(doc, active));
    results.appendChild(renderRelated(doc, state, store));
  });
}
