"""Linguistic filter trio: verb gating, named-entity penalty, hyphen boost.

The verb gate drops verb-final candidates whose final verb is not a known
vector verb / verbalizer (conjunct candidates may alternatively be rescued
by the ontological complex-predicate check). The other two filters only
reweight; they never drop.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .candidates import Candidate, Category
from .lexicon import Lexicon


@dataclass(frozen=True)
class VerbLists:
    vector_verbs: frozenset[str] = frozenset()
    verbalizers: frozenset[str] = frozenset()


@dataclass(frozen=True)
class NamedEntityList:
    entities: frozenset[tuple[str, ...]] = frozenset()

    def member_tokens(self) -> frozenset[str]:
        """Tokens occurring inside multi-token entities."""
        toks = set()
        for ent in self.entities:
            if len(ent) > 1:
                toks.update(ent)
        return frozenset(toks)


def load_word_list(path: str | Path) -> frozenset[str]:
    words = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            words.add(unicodedata.normalize("NFC", line))
    return frozenset(words)


def load_verb_lists(vector_path: str | Path | None,
                    verbalizer_path: str | Path | None) -> VerbLists:
    return VerbLists(
        vector_verbs=load_word_list(vector_path) if vector_path else frozenset(),
        verbalizers=load_word_list(verbalizer_path) if verbalizer_path else frozenset(),
    )


def load_named_entities(path: str | Path) -> NamedEntityList:
    entities = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            entities.add(tuple(unicodedata.normalize("NFC", tok) for tok in line.split()))
    return NamedEntityList(entities=frozenset(entities))


def _surface_and_lemmas(lex: Lexicon | None, word: str) -> set[str]:
    forms = {word}
    if lex is not None:
        forms.update(lex.lemmatize(word, 0).lemmas)
    return forms


def verb_gate(cand: Candidate, lists: VerbLists, lex: Lexicon | None = None,
              cp_accept: Callable[[str, str], bool] | None = None) -> bool:
    """Keep/drop decision for V+V and N+V candidates; everything else passes.

    Compound verbs survive when the final verb (surface or lemma) is a
    listed vector verb. Conjunct verbs survive on a verbalizer hit or when
    the ontological complex-predicate check accepts the (noun, verb) pair.
    """
    if cand.category not in (Category.COMPOUND_VERB, Category.CONJUNCT_VERB):
        return True
    last = cand.grams[-1]
    forms = _surface_and_lemmas(lex, last)
    if cand.category is Category.COMPOUND_VERB:
        return bool(forms & lists.vector_verbs)
    if forms & lists.verbalizers:
        return True
    if cp_accept is not None and cp_accept(cand.grams[0], last):
        return True
    return False


def ne_weight(cand: Candidate, nel: NamedEntityList, penalty: float = 0.5) -> Candidate:
    """Down-weight candidates overlapping a named entity.

    A candidate is hit when some contiguous sub-tuple of its grams is a
    listed entity, or when any single gram occurs inside a multi-token
    entity (partial NE overlap is exactly what creates false positives).
    """
    if not nel.entities:
        return cand
    hit = False
    grams = cand.grams
    for m in range(1, len(grams) + 1):
        for i in range(len(grams) - m + 1):
            if grams[i:i + m] in nel.entities:
                hit = True
                break
        if hit:
            break
    if not hit:
        member = nel.member_tokens()
        hit = any(g in member for g in grams)
    if not hit:
        return cand
    return cand.with_weight(penalty, "NE")


def hyphen_weight(cand: Candidate, boost: float = 1.5) -> Candidate:
    if cand.category is not Category.HYPHENATED:
        return cand
    return cand.with_weight(boost, "HYPHEN")
