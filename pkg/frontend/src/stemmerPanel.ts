import { ApiClient } from './api.js';
import type { LemmaSuggestion } from './types.js';

export interface StemmerPanel {
  element: HTMLElement;
  current: () => LemmaSuggestion | null;
  level: () => number;
}

/**
 * Interactive stem/lemma lookup. A lookup starts at backtrack level 0;
 * the "Show More" control re-queries one level up, which never shrinks
 * the suggestion list. Exact dictionary words need no feedback control.
 */
export function stemmerPanel(api: ApiClient): StemmerPanel {
  const panel = document.createElement('section');
  panel.className = 'stemmer';
  panel.innerHTML = `
    <h3>Stemmer</h3>
    <form class="lookup">
      <input name="word" placeholder="inflected word" />
      <button type="submit" disabled>Lemmatize</button>
    </form>
    <div class="result" hidden>
      <p class="stem-line">stem: <span class="stem"></span></p>
      <ul class="lemmas"></ul>
      <button class="show-more" hidden>Show More (not the right lemma?)</button>
    </div>
    <div class="stemmer-error" hidden></div>
  `;
  const form = panel.querySelector<HTMLFormElement>('form.lookup')!;
  const wordInput = panel.querySelector<HTMLInputElement>('input[name=word]')!;
  const submitButton = form.querySelector<HTMLButtonElement>('button')!;
  const result = panel.querySelector<HTMLDivElement>('.result')!;
  const stemSpan = panel.querySelector<HTMLSpanElement>('.stem')!;
  const lemmaList = panel.querySelector<HTMLUListElement>('.lemmas')!;
  const showMore = panel.querySelector<HTMLButtonElement>('.show-more')!;
  const errorBox = panel.querySelector<HTMLDivElement>('.stemmer-error')!;

  let suggestion: LemmaSuggestion | null = null;
  let level = 0;

  wordInput.addEventListener('input', () => {
    submitButton.disabled = wordInput.value.trim() === '';
  });

  const render = () => {
    if (!suggestion) return;
    result.hidden = false;
    stemSpan.textContent = suggestion.stem || '(none)';
    lemmaList.replaceChildren();
    for (const lemma of suggestion.lemmas) {
      const item = document.createElement('li');
      item.textContent = lemma;
      lemmaList.appendChild(item);
    }
    // An exact hit is its own lemma; backtracking makes no sense there.
    showMore.hidden = suggestion.exact;
  };

  const query = async (word: string, atLevel: number) => {
    errorBox.hidden = true;
    try {
      suggestion = await api.lemmatize(word, atLevel);
      level = atLevel;
      render();
    } catch (err) {
      errorBox.hidden = false;
      errorBox.textContent = err instanceof Error ? err.message : String(err);
    }
  };

  form.addEventListener('submit', (event) => {
    event.preventDefault();
    const word = wordInput.value.trim();
    if (!word) return;
    void query(word, 0);
  });

  showMore.addEventListener('click', () => {
    if (suggestion) void query(suggestion.word, level + 1);
  });

  return { element: panel, current: () => suggestion, level: () => level };
}
