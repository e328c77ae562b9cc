"""POS-pattern candidate generation.

This stage is recall-oriented: every contiguous within-sentence window
matching a pattern becomes a candidate, and repeated matches of one
surface sequence aggregate into a single candidate. Hyphen-carrying
single tokens are candidates in their own right.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from pathlib import Path

from .corpus import CoarseTag, TaggedCorpus, Token
from .ngrams import Gram, NGramIndex


class Category(str, Enum):
    REDUP = "REDUP"
    PARTIAL_REDUP_MEANINGFUL = "PARTIAL_REDUP_MEANINGFUL"
    PARTIAL_REDUP_NONMEANINGFUL = "PARTIAL_REDUP_NONMEANINGFUL"
    COMPOUND_NOUN = "COMPOUND_NOUN"
    COMPOUND_VERB = "COMPOUND_VERB"
    CONJUNCT_VERB = "CONJUNCT_VERB"
    ADJ_NOUN = "ADJ_NOUN"
    NOUN_COMPOUND_NGRAM = "NOUN_COMPOUND_NGRAM"
    HYPHENATED = "HYPHENATED"
    COLLOCATION = "COLLOCATION"


@dataclass(frozen=True)
class Candidate:
    grams: Gram
    tags: tuple[CoarseTag, ...]
    category: Category
    first_occurrence: tuple[int, int] | None
    weight: float = 1.0
    provenance: frozenset[str] = frozenset()

    def key(self) -> tuple[Gram, Category]:
        return (self.grams, self.category)

    def with_weight(self, factor: float, tag: str) -> "Candidate":
        return replace(self, weight=self.weight * factor,
                       provenance=self.provenance | {tag})

    def with_provenance(self, tag: str) -> "Candidate":
        return replace(self, provenance=self.provenance | {tag})


_SORT_FAR = (1 << 60, 1 << 60)


def candidate_sort_key(c: Candidate):
    return (c.first_occurrence or _SORT_FAR, c.category.value, c.grams)


class CandidateSet:
    """Candidates keyed by (grams, category); occurrences aggregate."""

    def __init__(self) -> None:
        self._by_key: dict[tuple[Gram, Category], Candidate] = {}

    def add(self, cand: Candidate) -> None:
        key = cand.key()
        existing = self._by_key.get(key)
        if existing is None:
            self._by_key[key] = cand
            return
        first = existing.first_occurrence
        if cand.first_occurrence is not None and (first is None or cand.first_occurrence < first):
            first = cand.first_occurrence
        self._by_key[key] = replace(
            existing,
            first_occurrence=first,
            provenance=existing.provenance | cand.provenance,
        )

    def replace(self, cand: Candidate) -> None:
        self._by_key[cand.key()] = cand

    def remove(self, key: tuple[Gram, Category]) -> None:
        self._by_key.pop(key, None)

    def get(self, key: tuple[Gram, Category]) -> Candidate | None:
        return self._by_key.get(key)

    def __len__(self) -> int:
        return len(self._by_key)

    def __iter__(self):
        return iter(self.sorted())

    def __contains__(self, key: tuple[Gram, Category]) -> bool:
        return key in self._by_key

    def sorted(self) -> list[Candidate]:
        return sorted(self._by_key.values(), key=candidate_sort_key)


SLOT_NAMES = {"NOUN", "VERB", "ADJ", "ADV", "ANY", "SAME"}


@dataclass(frozen=True)
class PatternRule:
    name: str
    slots: tuple[str, ...]
    category: Category
    surface_constraint: str | None = None  # "internal-hyphen" for R7

    @property
    def arity(self) -> int:
        return len(self.slots)

    def matches(self, window: tuple[Token, ...]) -> bool:
        if len(window) != self.arity:
            return False
        for slot, token in zip(self.slots, window):
            if slot in ("ANY", "SAME"):
                continue
            if token.coarse_tag.value != slot:
                return False
        for i, slot in enumerate(self.slots):
            # SAME compares case-insensitively; taggers and sentence-initial
            # capitalization make exact comparison too strict.
            if slot == "SAME" and i > 0 and \
                    window[i].surface.casefold() != window[i - 1].surface.casefold():
                return False
        if self.surface_constraint == "internal-hyphen":
            if not all(t.has_internal_hyphen for t in window):
                return False
        return True


def default_rules(adj_noun_bigram: bool = True) -> list[PatternRule]:
    rules = [
        PatternRule("reduplication", ("ANY", "SAME"), Category.REDUP),
        PatternRule("compound_noun", ("NOUN", "NOUN"), Category.COMPOUND_NOUN),
        PatternRule("compound_verb", ("VERB", "VERB"), Category.COMPOUND_VERB),
        PatternRule("conjunct_verb", ("NOUN", "VERB"), Category.CONJUNCT_VERB),
    ]
    for n in (3, 4, 5):
        rules.append(PatternRule(f"noun_compound_{n}", ("NOUN",) * n,
                                 Category.NOUN_COMPOUND_NGRAM))
    start = 1 if adj_noun_bigram else 2
    for n_nouns in range(start, 5):
        rules.append(PatternRule(f"adj_noun_{n_nouns + 1}",
                                 ("ADJ",) + ("NOUN",) * n_nouns, Category.ADJ_NOUN))
    rules.append(PatternRule("hyphenated", ("ANY",), Category.HYPHENATED,
                             surface_constraint="internal-hyphen"))
    return rules


def load_rules(path: str | Path) -> list[PatternRule]:
    """Custom rules: TSV "name<TAB>category<TAB>pattern", pattern tokens
    drawn from NOUN/VERB/ADJ/ADV/ANY/SAME."""
    rules = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{lineno}: expected name<TAB>category<TAB>pattern")
        name, category, pattern = parts
        slots = tuple(pattern.split())
        bad = [s for s in slots if s not in SLOT_NAMES]
        if bad:
            raise ValueError(f"{path}:{lineno}: unknown slot(s) {bad}")
        if not 2 <= len(slots) <= 5:
            raise ValueError(f"{path}:{lineno}: pattern arity must be 2..5")
        if slots[0] == "SAME":
            raise ValueError(f"{path}:{lineno}: SAME needs a preceding slot")
        rules.append(PatternRule(name, slots, Category(category)))
    return rules


def generate_candidates(corpus: TaggedCorpus, rules: list[PatternRule]) -> CandidateSet:
    """Scan every sentence window against every rule."""
    if not rules:
        raise ValueError("no pattern rules given")
    out = CandidateSet()
    for sent in corpus.sentences:
        for rule in rules:
            n = rule.arity
            for i in range(len(sent) - n + 1):
                window = tuple(sent[i:i + n])
                if not rule.matches(window):
                    continue
                out.add(Candidate(
                    grams=tuple(t.surface for t in window),
                    tags=tuple(t.coarse_tag for t in window),
                    category=rule.category,
                    first_occurrence=(window[0].sentence_index,
                                      window[0].position_in_sentence),
                    provenance=frozenset({rule.name}),
                ))
    return out


def all_ngrams_as_collocation_candidates(index: NGramIndex, n: int,
                                         min_count: int = 2) -> CandidateSet:
    """Every observed n-gram with count >= min_count becomes a COLLOCATION
    candidate. Tag and position information is not recoverable from the
    index, so tags are OTHER placeholders and first_occurrence is unset."""
    if not 2 <= n <= 5:
        raise ValueError(f"n must be in 2..5, got {n}")
    if min_count < 1:
        raise ValueError("min_count must be positive")
    out = CandidateSet()
    for gram, cnt in index.grams_of_order(n).items():
        if cnt >= min_count:
            out.add(Candidate(
                grams=gram,
                tags=(CoarseTag.OTHER,) * n,
                category=Category.COLLOCATION,
                first_occurrence=None,
                provenance=frozenset({"collocation_scan"}),
            ))
    return out
