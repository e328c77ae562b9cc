import { ApiClient, ConflictError } from './api.js';
import type { CandidateRecord, RowState, Verdict, VerdictConflict } from './types.js';

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function score(value: number): string {
  return value.toFixed(4);
}

export function conflictDialog(conflict: VerdictConflict,
                               onClose: () => void): HTMLElement {
  const overlay = el('div', 'conflict-dialog');
  overlay.setAttribute('role', 'dialog');
  const box = el('div', 'conflict-box');
  box.appendChild(el('h3', undefined, 'Conflicting verdict'));
  box.appendChild(el('p', undefined,
    'Another lexicographer already recorded a different verdict for this candidate.'));
  const table = el('table', 'conflict-table');
  for (const [label, entry] of [['Stored', conflict.existing],
                                ['Yours', conflict.attempted]] as const) {
    const row = el('tr');
    row.appendChild(el('th', undefined, label));
    row.appendChild(el('td', `verdict-${entry.verdict.toLowerCase()}`, entry.verdict));
    row.appendChild(el('td', undefined, entry.addedBy));
    row.appendChild(el('td', undefined, entry.timestamp));
    table.appendChild(row);
  }
  box.appendChild(table);
  const close = el('button', 'close-conflict', 'Close and refresh');
  close.addEventListener('click', onClose);
  box.appendChild(close);
  overlay.appendChild(box);
  return overlay;
}

export interface ReviewRowHandle {
  element: HTMLTableRowElement;
  state: () => RowState;
}

/**
 * One candidate row: score breakdown, provenance badges, accept/reject.
 * Accepting reveals a meaning field; the row only shows "persisted" after
 * the server acknowledged the verdict with a 2xx.
 */
export function reviewRow(api: ApiClient, record: CandidateRecord,
                          onConflict: (c: VerdictConflict) => void): ReviewRowHandle {
  let state: RowState = record.goldVerdict
    ? { kind: 'persisted', verdict: record.goldVerdict }
    : { kind: 'idle' };

  const row = el('tr', 'candidate-row');
  row.dataset.rank = String(record.rank);
  row.dataset.grams = record.grams.join(' ');

  const render = () => {
    row.replaceChildren();
    row.appendChild(el('td', 'rank', String(record.rank)));
    row.appendChild(el('td', 'grams', record.grams.join(' ')));
    row.appendChild(el('td', 'category', record.category));

    const scores = el('td', 'scores');
    scores.appendChild(el('span', 'combined', score(record.combined)));
    scores.appendChild(el('span', 'breakdown',
      `pmi ${score(record.npmi)} · llr ${score(record.bllr)} · dice ${score(record.dice)}`));
    scores.appendChild(el('span', 'count', `×${record.count}`));
    row.appendChild(scores);

    const badges = el('td', 'badges');
    const badgeNames = record.provenance.filter(
      (p) => p === 'NE' || p === 'HYPHEN' || p.startsWith('SEMANTIC:'));
    if (record.reduplication && record.reduplication !== 'NONE') {
      badgeNames.push(`REDUP:${record.reduplication}`);
    }
    for (const name of badgeNames) {
      badges.appendChild(el('span', 'badge', name));
    }
    row.appendChild(badges);

    const actions = el('td', 'actions');
    if (state.kind === 'persisted') {
      row.classList.add('persisted');
      row.classList.remove('pending');
      actions.appendChild(el('span', `verdict-${state.verdict.toLowerCase()}`,
        state.verdict));
    } else if (state.kind === 'pending') {
      row.classList.add('pending');
      actions.appendChild(el('span', 'saving', `saving ${state.verdict}…`));
    } else {
      row.classList.remove('persisted', 'pending');
      const accept = el('button', 'accept', 'Accept');
      const reject = el('button', 'reject', 'Reject');
      const meaning = el('input', 'meaning') as HTMLInputElement;
      meaning.placeholder = 'meaning (optional)';
      meaning.hidden = true;
      const confirm = el('button', 'confirm-accept', 'Save');
      confirm.hidden = true;

      accept.addEventListener('click', () => {
        meaning.hidden = false;
        confirm.hidden = false;
        accept.hidden = true;
        reject.hidden = true;
      });
      confirm.addEventListener('click', () => {
        void submit('ACCEPTED', meaning.value.trim() || undefined);
      });
      reject.addEventListener('click', () => {
        void submit('REJECTED');
      });
      actions.append(accept, reject, meaning, confirm);
    }
    row.appendChild(actions);
  };

  const submit = async (verdict: Verdict, meaning?: string) => {
    state = { kind: 'pending', verdict };
    render();
    try {
      await api.postVerdict(record.grams, record.category, verdict, meaning);
      state = { kind: 'persisted', verdict };
    } catch (err) {
      if (err instanceof ConflictError) {
        state = { kind: 'conflict', conflict: err.conflict };
        onConflict(err.conflict);
      } else {
        state = { kind: 'idle' };
      }
    }
    render();
  };

  render();
  return { element: row, state: () => state };
}

export interface ReviewTableOptions {
  pageSize?: number;
  category?: string;
  minScore?: number;
}

export interface ReviewTable {
  element: HTMLElement;
  load: (offset?: number) => Promise<void>;
  rows: () => ReviewRowHandle[];
  runId: () => string | null;
}

/**
 * Paginated review queue. Rows render strictly in the order the server
 * returned them; a run-id change between loads raises a stale warning.
 */
export function reviewTable(api: ApiClient, options: ReviewTableOptions = {}): ReviewTable {
  const pageSize = options.pageSize ?? 25;
  const container = el('section', 'review-queue');
  const banner = el('div', 'error-banner');
  banner.hidden = true;
  const staleWarning = el('div', 'stale-warning',
    'The ranked list changed on the server; refresh to review the new run.');
  staleWarning.hidden = true;
  const table = el('table', 'candidates');
  const head = el('tr');
  for (const title of ['#', 'candidate', 'category', 'scores', 'flags', 'verdict']) {
    head.appendChild(el('th', undefined, title));
  }
  table.appendChild(head);
  const pager = el('div', 'pager');
  const prev = el('button', 'prev', '‹ prev');
  const next = el('button', 'next', 'next ›');
  const status = el('span', 'page-status');
  pager.append(prev, status, next);
  container.append(banner, staleWarning, table, pager);

  let handles: ReviewRowHandle[] = [];
  let offset = 0;
  let total = 0;
  let runId: string | null = null;

  const showConflict = (conflict: VerdictConflict) => {
    const dialog = conflictDialog(conflict, () => {
      dialog.remove();
      void load(offset);
    });
    container.appendChild(dialog);
  };

  const load = async (newOffset = 0): Promise<void> => {
    banner.hidden = true;
    try {
      const page = await api.candidates({
        offset: newOffset,
        limit: pageSize,
        category: options.category,
        minScore: options.minScore,
      });
      if (runId !== null && page.runId !== runId) staleWarning.hidden = false;
      runId = page.runId;
      offset = page.offset;
      total = page.total;
      for (const handle of handles) handle.element.remove();
      handles = page.items.map((item) => reviewRow(api, item, showConflict));
      for (const handle of handles) table.appendChild(handle.element);
      status.textContent = `${offset + 1}–${offset + handles.length} of ${total}`;
      prev.disabled = offset === 0;
      next.disabled = offset + pageSize >= total;
    } catch (err) {
      banner.hidden = false;
      banner.replaceChildren();
      banner.appendChild(el('span', undefined,
        `Could not reach the API: ${err instanceof Error ? err.message : err}`));
      const retry = el('button', 'retry', 'Retry');
      retry.addEventListener('click', () => void load(newOffset));
      banner.appendChild(retry);
    }
  };

  prev.addEventListener('click', () => void load(Math.max(0, offset - pageSize)));
  next.addEventListener('click', () => void load(offset + pageSize));

  return { element: container, load, rows: () => handles, runId: () => runId };
}
