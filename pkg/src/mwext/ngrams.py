"""Frequency index over contiguous within-sentence 1..5-grams.

All statistical filters read counts and probabilities from here and
nowhere else. Probabilities divide by the total token count N for every
n-gram order, so values remain comparable across orders.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .corpus import TaggedCorpus

MAX_ORDER = 5

Gram = tuple[str, ...]


class NGramError(ValueError):
    pass


@dataclass(frozen=True)
class NGramIndex:
    counts: dict[int, dict[Gram, int]]
    total_tokens: int
    sentence_count: int
    max_n: int

    def count(self, gram: Gram) -> int:
        """Stored count, or 0 when the gram was never observed."""
        n = len(gram)
        if not 1 <= n <= MAX_ORDER:
            raise NGramError(f"gram length {n} outside 1..{MAX_ORDER}")
        return self.counts.get(n, {}).get(tuple(gram), 0)

    def prob(self, gram: Gram) -> float:
        return self.count(gram) / self.total_tokens

    def grams_of_order(self, n: int) -> dict[Gram, int]:
        if not 1 <= n <= MAX_ORDER:
            raise NGramError(f"order {n} outside 1..{MAX_ORDER}")
        return self.counts.get(n, {})


def build_index(corpus: TaggedCorpus, max_n: int = MAX_ORDER) -> NGramIndex:
    """Count every contiguous within-sentence n-gram for 1 <= n <= max_n."""
    if not 2 <= max_n <= MAX_ORDER:
        raise NGramError(f"max_n must be in 2..{MAX_ORDER}, got {max_n}")
    if corpus.token_count < 1:
        raise NGramError("empty corpus")
    tables: dict[int, Counter] = {n: Counter() for n in range(1, max_n + 1)}
    for sent in corpus.sentences:
        surfaces = [t.surface for t in sent]
        length = len(surfaces)
        for n in range(1, max_n + 1):
            table = tables[n]
            for i in range(length - n + 1):
                table[tuple(surfaces[i:i + n])] += 1
    return NGramIndex(
        counts={n: dict(c) for n, c in tables.items()},
        total_tokens=corpus.token_count,
        sentence_count=len(corpus.sentences),
        max_n=max_n,
    )


def dump_index(index: NGramIndex, path: str | Path) -> None:
    """Cache the index as TSV: header "#N=<total>", then "n<TAB>tokens<TAB>count".

    A "#S=<sentences>" header is written too so a reload preserves the
    sentence count; loaders treat it as optional.
    """
    lines = [f"#N={index.total_tokens}", f"#S={index.sentence_count}"]
    for n in sorted(index.counts):
        for gram in sorted(index.counts[n]):
            lines.append(f"{n}\t{' '.join(gram)}\t{index.counts[n][gram]}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_index(path: str | Path) -> NGramIndex:
    total = None
    sentence_count = 1
    counts: dict[int, dict[Gram, int]] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].partition("=")
            if key == "N":
                total = int(value)
            elif key == "S":
                sentence_count = int(value)
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise NGramError(f"{path}:{lineno}: expected n<TAB>tokens<TAB>count")
        n = int(parts[0])
        gram = tuple(parts[1].split(" "))
        if len(gram) != n:
            raise NGramError(f"{path}:{lineno}: gram arity mismatch")
        counts.setdefault(n, {})[gram] = int(parts[2])
    if total is None:
        raise NGramError(f"{path}: missing #N= header")
    max_n = max(counts) if counts else MAX_ORDER
    return NGramIndex(counts=counts, total_tokens=total,
                      sentence_count=sentence_count, max_n=max_n)
