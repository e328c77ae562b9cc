import { ApiClient } from './api.js';
import { falseNegativeForm } from './falseNegativeForm.js';
import { reviewTable } from './reviewTable.js';
import { stemmerPanel } from './stemmerPanel.js';

function categoryFilter(onChange: (category: string | undefined) => void): HTMLElement {
  const wrap = document.createElement('label');
  wrap.className = 'category-filter';
  wrap.textContent = 'Category: ';
  const select = document.createElement('select');
  for (const value of ['', 'REDUP', 'PARTIAL_REDUP_MEANINGFUL',
                       'PARTIAL_REDUP_NONMEANINGFUL', 'COMPOUND_NOUN',
                       'COMPOUND_VERB', 'CONJUNCT_VERB', 'ADJ_NOUN',
                       'NOUN_COMPOUND_NGRAM', 'HYPHENATED', 'COLLOCATION']) {
    const option = document.createElement('option');
    option.value = value;
    option.textContent = value || 'all';
    select.appendChild(option);
  }
  select.addEventListener('change', () => onChange(select.value || undefined));
  wrap.appendChild(select);
  return wrap;
}

export function mountApp(root: HTMLElement, baseUrl = ''): void {
  const api = new ApiClient(baseUrl);
  root.innerHTML = '<h1>MWE validation workbench</h1>';

  const summary = document.createElement('p');
  summary.className = 'run-summary';
  root.appendChild(summary);
  void api.stats().then((stats) => {
    summary.textContent =
      `${stats.rankedCandidates} ranked candidates over ${stats.totalTokens} tokens `
      + `(${stats.sentences} sentences) · ${stats.goldEntries} gold entries · run ${stats.runId}`;
  }).catch(() => {
    summary.textContent = 'API unreachable; the review queue below will retry.';
  });

  let table = reviewTable(api);
  const tableHost = document.createElement('div');
  root.appendChild(categoryFilter((category) => {
    table.element.remove();
    table = reviewTable(api, { category });
    tableHost.appendChild(table.element);
    void table.load();
  }));
  root.appendChild(tableHost);
  tableHost.appendChild(table.element);
  void table.load();

  root.appendChild(falseNegativeForm(api, () => void table.load()).element);
  root.appendChild(stemmerPanel(api).element);
}

declare global {
  interface Window {
    MWEXT_API_URL?: string;
  }
}

const rootElement = typeof document !== 'undefined' ? document.getElementById('app') : null;
if (rootElement) {
  mountApp(rootElement, window.MWEXT_API_URL ?? '');
}
