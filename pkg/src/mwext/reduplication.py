"""Full and partial reduplication classification.

A pair is FULL when the surfaces match (case-insensitively for bicameral
scripts). Partial reduplication splits into the meaningful kind, where
both words rhyme and resolve to real lexicon words, and the echo-word
kind, where a meaningful word is followed by an out-of-lexicon variant
differing only in a short leading prefix. Verdicts are purely lexical:
corpus counts play no part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .lexicon import Lexicon


class RedupKind(str, Enum):
    FULL = "FULL"
    PARTIAL_MEANINGFUL = "PARTIAL_MEANINGFUL"
    PARTIAL_NONMEANINGFUL = "PARTIAL_NONMEANINGFUL"
    NONE = "NONE"


@dataclass(frozen=True)
class RedupConfig:
    min_suffix_frac: float = 0.5
    max_prefix_delta: int = 2


@dataclass(frozen=True)
class RedupEvidence:
    shared_suffix_len: int = 0
    lemma1: str | None = None
    lemma2: str | None = None
    prefix_delta_len: int = 0


@dataclass(frozen=True)
class ReduplicationVerdict:
    kind: RedupKind
    evidence: RedupEvidence = RedupEvidence()


def common_suffix_len(w1: str, w2: str) -> int:
    k = 0
    while k < len(w1) and k < len(w2) and w1[-1 - k] == w2[-1 - k]:
        k += 1
    return k


def is_meaningful(lex: Lexicon, word: str) -> bool:
    """A word counts as meaningful when stored directly or when the
    lemmatizer can suggest lemmas for it at backtrack level 0."""
    if lex.contains(word):
        return True
    return bool(lex.lemmatize(word, 0).lemmas)


def _candidate_lemmas(lex: Lexicon, word: str) -> tuple[str, ...]:
    return lex.lemmatize(word, 0).lemmas


def classify_reduplication(lex: Lexicon, w1: str, w2: str,
                           cfg: RedupConfig = RedupConfig()) -> ReduplicationVerdict:
    if not w1 or not w2:
        raise ValueError("reduplication check needs two non-empty words")

    if w1.casefold() == w2.casefold():
        return ReduplicationVerdict(RedupKind.FULL,
                                    RedupEvidence(shared_suffix_len=len(w1)))

    suffix_len = common_suffix_len(w1, w2)
    shorter = min(len(w1), len(w2))
    needed = math.ceil(cfg.min_suffix_frac * shorter)

    meaningful1 = is_meaningful(lex, w1)
    meaningful2 = is_meaningful(lex, w2)

    if suffix_len >= needed and meaningful1 and meaningful2:
        if lex.contains(w1) and lex.contains(w2):
            # Both already dictionary words: the surface rhyme is evidence
            # enough, no lemma-level agreement required.
            return ReduplicationVerdict(
                RedupKind.PARTIAL_MEANINGFUL,
                RedupEvidence(shared_suffix_len=suffix_len, lemma1=w1, lemma2=w2))
        pair = _matching_lemma_pair(_candidate_lemmas(lex, w1),
                                    _candidate_lemmas(lex, w2))
        if pair is not None:
            return ReduplicationVerdict(
                RedupKind.PARTIAL_MEANINGFUL,
                RedupEvidence(shared_suffix_len=suffix_len,
                              lemma1=pair[0], lemma2=pair[1]))

    if len(w1) == len(w2):
        delta = len(w1) - suffix_len
        if delta <= cfg.max_prefix_delta and meaningful1 and not meaningful2:
            return ReduplicationVerdict(
                RedupKind.PARTIAL_NONMEANINGFUL,
                RedupEvidence(shared_suffix_len=suffix_len, prefix_delta_len=delta))

    return ReduplicationVerdict(RedupKind.NONE,
                                RedupEvidence(shared_suffix_len=suffix_len))


def _matching_lemma_pair(lemmas1: tuple[str, ...],
                         lemmas2: tuple[str, ...]) -> tuple[str, str] | None:
    """First lemma pair (in suggestion rank order) sharing a suffix of >= 2."""
    for l1 in lemmas1:
        for l2 in lemmas2:
            if common_suffix_len(l1, l2) >= 2:
                return (l1, l2)
    return None
