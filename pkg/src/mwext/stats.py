"""Association measures and score fusion for 2..5-grams.

Three measures are computed from the frequency index alone:

* a frequency-weighted pointwise mutual information with the squared
  joint probability in the numerator and the two overlapping (n-1)-gram
  probabilities in the denominator,
* a bi-directional log-likelihood ratio averaging Dunning-style binomial
  log ratios for "last token given prefix" and "first token given
  suffix" (always <= 0; more negative = stronger association),
* the count ratio c(gram) / (c(prefix) + c(suffix)), bounded by 0.5,
  with an optional doubled variant (pure positive scaling, rank-neutral).

Fusion maps each measure onto [0, 1] so its best candidate scores 1.0 -
dice and negated LLR divide by their maximum, the PMI variant (typically
negative) is mapped affinely from [min, max], which preserves order - and
sums the three normalized scores, scaled by the candidate's weight. A
measure that is constant across the candidate set contributes 1.0 to
every candidate. Candidates with any undefined measure are excluded from
fusion and reported separately rather than silently scored 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .candidates import Candidate
from .ngrams import Gram, NGramIndex


class ScoreError(ValueError):
    """A measure is undefined for this gram (zero or inconsistent cells)."""


def _order(gram: Gram) -> int:
    n = len(gram)
    if not 2 <= n <= 5:
        raise ScoreError(f"association measures need 2..5-grams, got arity {n}")
    return n


def npmi(index: NGramIndex, gram: Gram) -> float:
    """log2( p(gram)^2 / (p(prefix) * p(suffix)) ), all probabilities c/N."""
    _order(gram)
    c_gram = index.count(gram)
    c_pre = index.count(gram[:-1])
    c_suf = index.count(gram[1:])
    if c_gram < 1:
        raise ScoreError(f"gram {gram} unobserved")
    if c_pre < 1 or c_suf < 1:
        raise ScoreError(f"zero denominator count for {gram}")
    n_tok = index.total_tokens
    p_gram = c_gram / n_tok
    return math.log2((p_gram * p_gram) / ((c_pre / n_tok) * (c_suf / n_tok)))


def dice(index: NGramIndex, gram: Gram, doubled: bool = False) -> float:
    """c(gram) / (c(prefix) + c(suffix)); 0 for unobserved grams."""
    _order(gram)
    c_pre = index.count(gram[:-1])
    c_suf = index.count(gram[1:])
    if c_pre + c_suf == 0:
        raise ScoreError(f"zero denominator count for {gram}")
    score = index.count(gram) / (c_pre + c_suf)
    return 2.0 * score if doubled else score


def _binom_log2(k: int, n: int, p: float) -> float:
    acc = 0.0
    if k > 0:
        acc += k * math.log2(p)
    if n - k > 0:
        acc += (n - k) * math.log2(1.0 - p)
    return acc


def _direction_score(k1: int, n1: int, k2: int, n2: int) -> float:
    """log2 of pooled-p likelihood minus split-p likelihood (<= 0)."""
    if n1 <= 0 or n2 <= 0:
        raise ScoreError("empty conditioning cell")
    if not (0 <= k1 <= n1 and 0 <= k2 <= n2):
        # Overlapping self-grams can make token counts inconsistent as
        # binomial cells (e.g. c(w,w) with 2c(w)-c(w,w) > N).
        raise ScoreError("inconsistent binomial cells")
    pooled = (k1 + k2) / (n1 + n2)
    same = _binom_log2(k1, n1, pooled) + _binom_log2(k2, n2, pooled)
    split = _binom_log2(k1, n1, k1 / n1) + _binom_log2(k2, n2, k2 / n2)
    return same - split


def bllr_directions(index: NGramIndex, gram: Gram) -> tuple[float, float]:
    """Forward and backward log ratios before averaging."""
    _order(gram)
    c_gram = index.count(gram)
    if c_gram < 1:
        raise ScoreError(f"gram {gram} unobserved")
    c_pre = index.count(gram[:-1])
    c_suf = index.count(gram[1:])
    if c_pre < 1 or c_suf < 1:
        raise ScoreError(f"conditioning gram unobserved for {gram}")
    c_first = index.count(gram[:1])
    c_last = index.count(gram[-1:])
    n_tok = index.total_tokens
    fwd = _direction_score(c_gram, c_pre, c_last - c_gram, n_tok - c_pre)
    bwd = _direction_score(c_gram, c_suf, c_first - c_gram, n_tok - c_suf)
    return fwd, bwd


def bllr(index: NGramIndex, gram: Gram) -> float:
    fwd, bwd = bllr_directions(index, gram)
    return (fwd + bwd) / 2.0


@dataclass(frozen=True)
class ScoreVector:
    npmi: float | None = None
    bllr: float | None = None
    dice: float | None = None
    norm_npmi: float | None = None
    norm_bllr: float | None = None
    norm_dice: float | None = None
    combined: float | None = None
    error: str | None = None

    @property
    def complete(self) -> bool:
        return self.npmi is not None and self.bllr is not None and self.dice is not None


def score_candidate(index: NGramIndex, cand: Candidate,
                    dice_doubled: bool = False) -> ScoreVector:
    """Raw scores for one candidate; partial results carry the first error."""
    errors = []
    values: dict[str, float | None] = {"npmi": None, "bllr": None, "dice": None}
    if len(cand.grams) < 2:
        return ScoreVector(error="single tokens carry no association score")
    for name, fn in (("npmi", lambda: npmi(index, cand.grams)),
                     ("bllr", lambda: bllr(index, cand.grams)),
                     ("dice", lambda: dice(index, cand.grams, doubled=dice_doubled))):
        try:
            values[name] = fn()
        except ScoreError as exc:
            errors.append(f"{name}: {exc}")
    return ScoreVector(npmi=values["npmi"], bllr=values["bllr"], dice=values["dice"],
                       error="; ".join(errors) or None)


def score_candidates(index: NGramIndex, cands, dice_doubled: bool = False
                     ) -> list[tuple[Candidate, ScoreVector]]:
    return [(c, score_candidate(index, c, dice_doubled=dice_doubled)) for c in cands]


@dataclass(frozen=True)
class RankedItem:
    rank: int
    candidate: Candidate
    scores: ScoreVector
    count: int


@dataclass(frozen=True)
class RankedList:
    items: tuple[RankedItem, ...]
    excluded: tuple[tuple[Candidate, ScoreVector], ...] = ()

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)


def _normalize_by_max(values: list[float]) -> list[float]:
    top = max(values)
    if top <= 0.0:
        return [1.0] * len(values)
    return [v / top for v in values]


def _normalize_affine(values: list[float]) -> list[float]:
    lo, hi = min(values), max(values)
    if hi == lo:
        return [1.0] * len(values)
    return [(v - lo) / (hi - lo) for v in values]


def combine_and_rank(scored: list[tuple[Candidate, ScoreVector]],
                     index: NGramIndex) -> RankedList:
    """Normalize per measure, fuse, and order the candidate set.

    Each arity's measures form their own normalization pool: the bigram,
    trigram, quad and pent variants of a measure are distinct algorithms
    with incomparable raw ranges, so each divides by its own extreme.
    Sorting is by combined score descending, raw corpus count descending,
    then gram tuple; the result is a deterministic total order.
    """
    fused = [(c, s) for c, s in scored if s.complete]
    excluded = tuple((c, s) for c, s in scored if not s.complete)
    if not fused:
        return RankedList(items=(), excluded=excluded)

    rows = []
    for arity in sorted({len(c.grams) for c, _ in fused}):
        pool = [(c, s) for c, s in fused if len(c.grams) == arity]
        norm_npmi = _normalize_affine([s.npmi for _, s in pool])
        norm_bllr = _normalize_by_max([-s.bllr for _, s in pool])
        norm_dice = _normalize_by_max([s.dice for _, s in pool])
        for (cand, sv), nn, nl, nd in zip(pool, norm_npmi, norm_bllr, norm_dice):
            combined = (nn + nl + nd) * cand.weight
            rows.append((cand, replace(sv, norm_npmi=nn, norm_bllr=nl,
                                       norm_dice=nd, combined=combined)))
    rows.sort(key=lambda row: (-row[1].combined, -index.count(row[0].grams),
                               row[0].grams, row[0].category.value))
    items = tuple(RankedItem(rank=i + 1, candidate=cand, scores=sv,
                             count=index.count(cand.grams))
                  for i, (cand, sv) in enumerate(rows))
    return RankedList(items=items, excluded=excluded)
