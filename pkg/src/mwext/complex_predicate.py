"""Ontology-driven conjunct verb detection.

A noun + verb pair forms a conjunct when the verb's selectional
preference is violated, which we approximate by rule pairs over
ontological categories: an action/occurrence verb taking an abstract noun
is not using the verb in its literal sense. The rule table is data and
can be overridden per language.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .corpus import CoarseTag
from .lexicon import Lexicon


@dataclass(frozen=True)
class CPDecisionRule:
    verb_category: str
    noun_category: str
    accept: bool


DEFAULT_CP_RULES = (
    CPDecisionRule("VOA", "ABSTRACT_NOUN", accept=True),
    CPDecisionRule("VOO", "ABSTRACT_NOUN", accept=True),
)


@dataclass(frozen=True)
class ConjunctVerdict:
    accepted: bool
    matched_rule: tuple[str, str] | None
    verb_categories: frozenset[str]
    noun_categories: frozenset[str]


def _categories(lex: Lexicon, word: str, pos: CoarseTag) -> frozenset[str]:
    cats = lex.onto_category(word, pos)
    if cats:
        return frozenset(cats)
    # Corpora carry inflected forms; fall back to lemma suggestions.
    collected: set[str] = set()
    for lemma in lex.lemmatize(word, 0).lemmas:
        collected |= lex.onto_category(lemma, pos)
    return frozenset(collected)


def is_conjunct(lex: Lexicon, noun: str, verb: str,
                rules: tuple[CPDecisionRule, ...] = DEFAULT_CP_RULES) -> ConjunctVerdict:
    """True iff some accept rule matches a (verb category, noun category)
    pair; categories resolve through lemmas when surfaces yield none."""
    verb_cats = _categories(lex, verb, CoarseTag.VERB)
    noun_cats = _categories(lex, noun, CoarseTag.NOUN)
    for rule in rules:
        if rule.accept and rule.verb_category in verb_cats \
                and rule.noun_category in noun_cats:
            return ConjunctVerdict(True, (rule.verb_category, rule.noun_category),
                                   verb_cats, noun_cats)
    return ConjunctVerdict(False, None, verb_cats, noun_cats)


def load_cp_rules(path: str | Path) -> tuple[CPDecisionRule, ...]:
    """Rules file: TSV "VERB_CAT<TAB>NOUN_CAT<TAB>accept|reject"."""
    rules = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3 or parts[2] not in ("accept", "reject"):
            raise ValueError(f"{path}:{lineno}: expected VERB_CAT<TAB>NOUN_CAT<TAB>accept|reject")
        rules.append(CPDecisionRule(parts[0].strip(), parts[1].strip(),
                                    accept=parts[2] == "accept"))
    seen = set()
    for rule in rules:
        key = (rule.verb_category, rule.noun_category)
        if key in seen:
            raise ValueError(f"{path}: duplicate rule for {key}")
        seen.add(key)
    return tuple(rules)
