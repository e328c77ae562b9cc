"""POS-tagged corpus ingestion.

Input format: UTF-8 text, one sentence per line, tokens separated by
whitespace, each token "word_TAG" split at the rightmost underscore so
surfaces may themselves contain underscores. Empty lines are skipped.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path


class CoarseTag(str, Enum):
    NOUN = "NOUN"
    VERB = "VERB"
    ADJ = "ADJ"
    ADV = "ADV"
    OTHER = "OTHER"


# Noun and verb alternations follow the tagsets the pattern rules are
# written against; adjective/adverb rows cover the common Penn/BIS tags so
# the ADJ+NOUN rule can fire out of the box.
DEFAULT_TAG_ENTRIES = {
    "NN": CoarseTag.NOUN,
    "NNP": CoarseTag.NOUN,
    "NNC": CoarseTag.NOUN,
    "NNPC": CoarseTag.NOUN,
    "VB": CoarseTag.VERB,
    "VBD": CoarseTag.VERB,
    "VBG": CoarseTag.VERB,
    "VBP": CoarseTag.VERB,
    "VBN": CoarseTag.VERB,
    "VBZ": CoarseTag.VERB,
    "VM": CoarseTag.VERB,
    "JJ": CoarseTag.ADJ,
    "JJR": CoarseTag.ADJ,
    "JJS": CoarseTag.ADJ,
    "RB": CoarseTag.ADV,
    "RBR": CoarseTag.ADV,
    "RBS": CoarseTag.ADV,
}


class CorpusError(ValueError):
    """Raised for unreadable or empty corpus input."""


@dataclass(frozen=True)
class TagsetMap:
    entries: dict[str, CoarseTag] = field(default_factory=lambda: dict(DEFAULT_TAG_ENTRIES))
    default_class: CoarseTag = CoarseTag.OTHER

    @classmethod
    def load(cls, path: str | Path) -> "TagsetMap":
        """Read "RAWTAG<TAB>CLASS" lines; a missing file means the default map."""
        p = Path(path)
        if not p.exists():
            return cls()
        entries: dict[str, CoarseTag] = {}
        for lineno, line in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise CorpusError(f"{p}:{lineno}: expected RAWTAG<TAB>CLASS, got {line!r}")
            raw, cls_name = parts[0].strip(), parts[1].strip()
            try:
                entries[raw] = CoarseTag(cls_name)
            except ValueError:
                raise CorpusError(f"{p}:{lineno}: unknown tag class {cls_name!r}") from None
        return cls(entries=entries)


def classify_tag(raw_tag: str, tagset: TagsetMap) -> CoarseTag:
    """Table lookup; unmapped tags fall back to the tagset's default class."""
    return tagset.entries.get(raw_tag, tagset.default_class)


def has_internal_hyphen(surface: str) -> bool:
    """True iff a "-" sits strictly between two non-hyphen characters."""
    for i in range(1, len(surface) - 1):
        if surface[i] == "-" and surface[i - 1] != "-" and surface[i + 1] != "-":
            return True
    return False


@dataclass(frozen=True)
class Token:
    surface: str
    raw_tag: str
    coarse_tag: CoarseTag
    sentence_index: int
    position_in_sentence: int
    has_internal_hyphen: bool


@dataclass(frozen=True)
class TaggedCorpus:
    sentences: tuple[tuple[Token, ...], ...]
    language_id: str
    token_count: int

    def surfaces(self) -> list[list[str]]:
        return [[t.surface for t in sent] for sent in self.sentences]


def _split_token(raw: str) -> tuple[str, str]:
    """Split "word_TAG" at the rightmost underscore; no underscore -> empty tag.

    A split that would leave an empty surface (token starting with the only
    underscore) keeps the whole token as the surface instead.
    """
    idx = raw.rfind("_")
    if idx <= 0:
        return raw, ""
    return raw[:idx], raw[idx + 1:]


def parse_sentences(lines: list[str], tagset: TagsetMap, language_id: str) -> TaggedCorpus:
    """Build a TaggedCorpus from already-decoded sentence lines."""
    sentences: list[tuple[Token, ...]] = []
    total = 0
    for line in lines:
        raw_tokens = line.split()
        if not raw_tokens:
            continue
        sent_idx = len(sentences)
        tokens = []
        for pos, raw in enumerate(raw_tokens):
            surface, raw_tag = _split_token(raw)
            surface = unicodedata.normalize("NFC", surface)
            tokens.append(Token(
                surface=surface,
                raw_tag=raw_tag,
                coarse_tag=classify_tag(raw_tag, tagset),
                sentence_index=sent_idx,
                position_in_sentence=pos,
                has_internal_hyphen=has_internal_hyphen(surface),
            ))
        sentences.append(tuple(tokens))
        total += len(tokens)
    if total == 0:
        raise CorpusError("corpus contains no tokens")
    return TaggedCorpus(sentences=tuple(sentences), language_id=language_id, token_count=total)


def parse_corpus(path: str | Path, tagset: TagsetMap | None = None,
                 language_id: str = "") -> TaggedCorpus:
    """Parse a tagged corpus file.

    Raises CorpusError on IO failure, invalid UTF-8 (with line number), or
    an entirely empty corpus.
    """
    tagset = tagset or TagsetMap()
    p = Path(path)
    try:
        data = p.read_bytes()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {p}: {exc}") from exc
    lines = []
    # Decode line by line so a bad byte sequence is reported with its line.
    for lineno, raw_line in enumerate(data.split(b"\n"), 1):
        if raw_line.endswith(b"\r"):
            raw_line = raw_line[:-1]
        try:
            lines.append(raw_line.decode("utf-8"))
        except UnicodeDecodeError as exc:
            raise CorpusError(f"{p}:{lineno}: invalid UTF-8: {exc}") from exc
    return parse_sentences(lines, tagset, language_id)
