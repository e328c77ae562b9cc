import { ApiClient, ConflictError } from './api.js';
import type { VerdictConflict } from './types.js';

const CATEGORIES = [
  'REDUP', 'PARTIAL_REDUP_MEANINGFUL', 'PARTIAL_REDUP_NONMEANINGFUL',
  'COMPOUND_NOUN', 'COMPOUND_VERB', 'CONJUNCT_VERB', 'ADJ_NOUN',
  'NOUN_COMPOUND_NGRAM', 'HYPHENATED', 'COLLOCATION',
];

export interface FalseNegativeForm {
  element: HTMLFormElement;
  /** null on success, otherwise the message shown to the user. */
  lastError: () => string | null;
}

/**
 * "The ranking missed one": space-separated words plus a category. Empty
 * grams never reach the network; the entry lands in the gold store as an
 * accepted false negative.
 */
export function falseNegativeForm(api: ApiClient,
                                  onSaved: () => void,
                                  onConflict?: (c: VerdictConflict) => void): FalseNegativeForm {
  const form = document.createElement('form');
  form.className = 'false-negative';
  form.innerHTML = `
    <h3>Report a missed expression</h3>
    <input name="grams" placeholder="words, space-separated" />
    <select name="category">
      ${CATEGORIES.map((c) => `<option value="${c}">${c}</option>`).join('')}
    </select>
    <input name="meaning" placeholder="meaning (optional)" />
    <button type="submit">Add to dictionary</button>
    <span class="form-error" hidden></span>
  `;
  const gramsInput = form.querySelector<HTMLInputElement>('input[name=grams]')!;
  const categorySelect = form.querySelector<HTMLSelectElement>('select[name=category]')!;
  const meaningInput = form.querySelector<HTMLInputElement>('input[name=meaning]')!;
  const errorSpan = form.querySelector<HTMLSpanElement>('.form-error')!;
  let lastError: string | null = null;

  const fail = (message: string) => {
    lastError = message;
    errorSpan.hidden = false;
    errorSpan.textContent = message;
  };

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    errorSpan.hidden = true;
    lastError = null;
    const grams = gramsInput.value.split(/\s+/).filter((w) => w.length > 0);
    if (grams.length === 0) {
      fail('Enter at least one word.');
      return;
    }
    void (async () => {
      try {
        await api.postFalseNegative(grams, categorySelect.value,
          meaningInput.value.trim() || undefined);
        form.reset();
        onSaved();
      } catch (err) {
        if (err instanceof ConflictError) {
          fail('Already judged differently in the gold store.');
          onConflict?.(err.conflict);
        } else {
          fail(err instanceof Error ? err.message : String(err));
        }
      }
    })();
  });

  return { element: form, lastError: () => lastError };
}
