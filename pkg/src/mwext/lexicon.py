"""Wordnet-style lexical knowledge and the trie lemmatizer.

Synsets carry lemmas, hypernym/antonym links and an optional ontological
category tag. Every lemma is indexed in a character trie whose end-of-word
nodes record the owning synset ids; the lemmatizer walks the trie to the
deepest prefix of an inflected form, optionally backtracks toward the
root, and suggests every stored word below that node ranked by how close
its length is to the input's.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import CoarseTag


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class Synset:
    id: str
    pos: CoarseTag
    lemmas: frozenset[str]
    hypernym_ids: frozenset[str] = frozenset()
    antonym_ids: frozenset[str] = frozenset()
    onto_category: str | None = None


class TrieNode:
    __slots__ = ("edge_char", "children", "is_end_of_word", "pos_set",
                 "synset_ids", "parent")

    def __init__(self, edge_char: str | None = None, parent: "TrieNode | None" = None):
        self.edge_char = edge_char
        self.children: dict[str, TrieNode] = {}
        self.is_end_of_word = False
        self.pos_set: set[CoarseTag] = set()
        self.synset_ids: set[str] = set()
        self.parent = parent


@dataclass(frozen=True)
class LemmaSuggestion:
    stem: str
    lemmas: tuple[str, ...]
    match_depth: int


class Lexicon:
    """Immutable after construction; all queries are pure."""

    def __init__(self, synsets: dict[str, Synset], dangling_refs: list[str] | None = None):
        self.synsets = synsets
        self.dangling_refs = dangling_refs or []
        self.root = TrieNode()
        for synset in synsets.values():
            for lemma in synset.lemmas:
                self._insert(lemma, synset)

    def _insert(self, lemma: str, synset: Synset) -> None:
        node = self.root
        for ch in lemma:
            nxt = node.children.get(ch)
            if nxt is None:
                nxt = TrieNode(edge_char=ch, parent=node)
                node.children[ch] = nxt
            node = nxt
        node.is_end_of_word = True
        node.pos_set.add(synset.pos)
        node.synset_ids.add(synset.id)

    def _walk(self, word: str) -> TrieNode | None:
        node = self.root
        for ch in word:
            node = node.children.get(ch)
            if node is None:
                return None
        return node

    def contains(self, word: str) -> bool:
        node = self._walk(word)
        return node is not None and node.is_end_of_word

    def synsets_of(self, word: str) -> list[Synset]:
        node = self._walk(word)
        if node is None or not node.is_end_of_word:
            return []
        return [self.synsets[sid] for sid in sorted(node.synset_ids)]

    def all_lemmas(self) -> set[str]:
        out: set[str] = set()
        for synset in self.synsets.values():
            out |= synset.lemmas
        return out

    def _deepest_prefix_node(self, word: str) -> tuple[TrieNode, int]:
        node = self.root
        depth = 0
        for ch in word:
            nxt = node.children.get(ch)
            if nxt is None:
                break
            node = nxt
            depth += 1
        return node, depth

    def _subtree_words(self, node: TrieNode, prefix: str) -> list[str]:
        words = []
        stack = [(node, prefix)]
        while stack:
            cur, spelled = stack.pop()
            if cur.is_end_of_word:
                words.append(spelled)
            for ch, child in cur.children.items():
                stack.append((child, spelled + ch))
        return words

    def lemmatize(self, word: str, backtrack_level: int = 0) -> LemmaSuggestion:
        """Suggest lemmas for ``word``.

        A word stored in the lexicon is its own stem and lemma. Otherwise
        the stem is the maximal trie prefix of the word, moved up
        ``backtrack_level`` parent nodes (never past the root), and the
        lemmas are every stored word below that node, ranked by ascending
        length difference with the input, ties broken lexicographically.
        A word whose first character matches nothing yields the empty
        suggestion.
        """
        if not word:
            raise LexiconError("cannot lemmatize the empty string")
        if self.contains(word):
            return LemmaSuggestion(stem=word, lemmas=(word,), match_depth=len(word))
        node, depth = self._deepest_prefix_node(word)
        if depth == 0:
            return LemmaSuggestion(stem="", lemmas=(), match_depth=0)
        for _ in range(backtrack_level):
            if node.parent is None:
                break
            node = node.parent
            depth -= 1
        stem = word[:depth]
        lemmas = self._subtree_words(node, stem)
        lemmas.sort(key=lambda lemma: (abs(len(lemma) - len(word)), lemma))
        return LemmaSuggestion(stem=stem, lemmas=tuple(lemmas), match_depth=depth)

    def are_synonyms(self, w1: str, w2: str) -> bool:
        ids1 = {s.id for s in self.synsets_of(w1)}
        return any(s.id in ids1 for s in self.synsets_of(w2))

    def are_antonyms(self, w1: str, w2: str) -> bool:
        syn1 = self.synsets_of(w1)
        syn2 = self.synsets_of(w2)
        ids1 = {s.id for s in syn1}
        ids2 = {s.id for s in syn2}
        forward = any(aid in ids2 for s in syn1 for aid in s.antonym_ids)
        backward = any(aid in ids1 for s in syn2 for aid in s.antonym_ids)
        return forward or backward

    def are_sister_words(self, w1: str, w2: str) -> bool:
        """Two words whose (distinct) synsets share a direct hypernym."""
        for s1 in self.synsets_of(w1):
            if not s1.hypernym_ids:
                continue
            for s2 in self.synsets_of(w2):
                if s1.id != s2.id and s1.hypernym_ids & s2.hypernym_ids:
                    return True
        return False

    def onto_category(self, word: str, pos: CoarseTag) -> set[str]:
        return {s.onto_category for s in self.synsets_of(word)
                if s.pos == pos and s.onto_category}


def _split_ids(fieldvalue: str) -> frozenset[str]:
    return frozenset(x for x in fieldvalue.split(",") if x)


def load_lexicon(path: str | Path) -> Lexicon:
    """Load a lexicon TSV: id, pos, lemmas, hypernym ids, antonym ids,
    ontological category; the last three columns may be empty or missing.

    Malformed lines abort with their line number; references to unknown
    synset ids are collected in ``dangling_refs`` without aborting.
    """
    p = Path(path)
    synsets: dict[str, Synset] = {}
    for lineno, line in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if not 3 <= len(parts) <= 6:
            raise LexiconError(f"{p}:{lineno}: expected 3..6 tab-separated fields")
        while len(parts) < 6:
            parts.append("")
        sid, pos_name, lemma_field, hyper_field, anto_field, onto = (x.strip() for x in parts[:6])
        try:
            pos = CoarseTag(pos_name)
        except ValueError:
            raise LexiconError(f"{p}:{lineno}: unknown pos {pos_name!r}") from None
        lemmas = frozenset(unicodedata.normalize("NFC", x.strip())
                           for x in lemma_field.split(",") if x.strip())
        if not lemmas:
            raise LexiconError(f"{p}:{lineno}: synset {sid!r} has no lemmas")
        if sid in synsets:
            raise LexiconError(f"{p}:{lineno}: duplicate synset id {sid!r}")
        synsets[sid] = Synset(
            id=sid, pos=pos, lemmas=lemmas,
            hypernym_ids=_split_ids(hyper_field),
            antonym_ids=_split_ids(anto_field),
            onto_category=onto or None,
        )
    dangling = []
    for synset in synsets.values():
        for ref in sorted(synset.hypernym_ids | synset.antonym_ids):
            if ref not in synsets:
                dangling.append(f"{synset.id} -> {ref}")
    return Lexicon(synsets, dangling_refs=dangling)


def build_lexicon(synsets: list[Synset]) -> Lexicon:
    """Assemble a lexicon from in-memory synsets (fixtures, tests)."""
    by_id: dict[str, Synset] = {}
    for synset in synsets:
        if synset.id in by_id:
            raise LexiconError(f"duplicate synset id {synset.id!r}")
        by_id[synset.id] = synset
    return Lexicon(by_id)
