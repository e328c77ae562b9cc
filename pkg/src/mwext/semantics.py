"""Semantic relationship tagging for bigram constituents.

Checks synonymy, antonymy and sisterhood (shared direct hypernym) between
the two words of a bigram, falling back to lemma suggestions when the
surfaces themselves are not in the lexicon. The strongest relation wins:
SYNONYM over ANTONYM over SISTER.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lexicon import Lexicon


class SemanticRelation(str, Enum):
    SYNONYM = "SYNONYM"
    ANTONYM = "ANTONYM"
    SISTER = "SISTER"
    NONE = "NONE"


@dataclass(frozen=True)
class SemanticVerdict:
    relation: SemanticRelation
    via_lemmas: tuple[str, str] | None = None


_CHECKS = (
    (SemanticRelation.SYNONYM, Lexicon.are_synonyms),
    (SemanticRelation.ANTONYM, Lexicon.are_antonyms),
    (SemanticRelation.SISTER, Lexicon.are_sister_words),
)


def semantic_relation(lex: Lexicon, w1: str, w2: str) -> SemanticVerdict:
    """Relation between two words, surfaces first, lemma pairs second.

    Scanning is relation-major so that the priority order (and therefore
    the reported relation) is independent of argument order.
    """
    for relation, check in _CHECKS:
        if check(lex, w1, w2):
            return SemanticVerdict(relation, (w1, w2))
    lemmas1 = lex.lemmatize(w1, 0).lemmas if w1 else ()
    lemmas2 = lex.lemmatize(w2, 0).lemmas if w2 else ()
    for relation, check in _CHECKS:
        for l1 in lemmas1:
            for l2 in lemmas2:
                if check(lex, l1, l2):
                    return SemanticVerdict(relation, (l1, l2))
    return SemanticVerdict(SemanticRelation.NONE)
