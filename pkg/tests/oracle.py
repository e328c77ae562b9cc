"""Brute-force reference implementations used to cross-check the engine.

Everything here is written as naively as possible and deliberately shares
no code with the package under test: counting walks python lists, scores
are evaluated straight from the formulas, and the fused ranking re-does
normalization from scratch. Slow is fine; correct is the point.
"""

import math
from collections import Counter


def oracle_counts(sentences, max_n=5):
    """Count every within-sentence n-gram by sliding a window, n = 1..max_n.

    ``sentences`` is a list of lists of surface strings. Returns a dict
    n -> Counter mapping surface tuples to occurrence counts.
    """
    tables = {n: Counter() for n in range(1, max_n + 1)}
    for sent in sentences:
        for n in range(1, max_n + 1):
            for i in range(len(sent) - n + 1):
                tables[n][tuple(sent[i:i + n])] += 1
    return tables


def oracle_total(sentences):
    return sum(len(s) for s in sentences)


def oracle_npmi(tables, total, gram):
    """log2( p(gram)^2 / (p(prefix) * p(suffix)) ), probabilities = count/N."""
    n = len(gram)
    c_gram = tables[n][gram]
    c_pre = tables[n - 1][gram[:-1]]
    c_suf = tables[n - 1][gram[1:]]
    if c_pre == 0 or c_suf == 0:
        raise ZeroDivisionError("denominator gram unobserved")
    p_gram = c_gram / total
    p_pre = c_pre / total
    p_suf = c_suf / total
    return math.log2((p_gram * p_gram) / (p_pre * p_suf))


def oracle_dice(tables, total, gram, doubled=False):
    """count(gram) / (count(prefix) + count(suffix)); optional factor 2."""
    n = len(gram)
    c_gram = tables[n][gram]
    c_pre = tables[n - 1][gram[:-1]]
    c_suf = tables[n - 1][gram[1:]]
    if c_pre + c_suf == 0:
        raise ZeroDivisionError("both denominator grams unobserved")
    score = c_gram / (c_pre + c_suf)
    return 2.0 * score if doubled else score


def _binom_loglik(k, n, p):
    """k*log2(p) + (n-k)*log2(1-p), with the 0*log2(0) = 0 convention."""
    acc = 0.0
    if k > 0:
        acc += k * math.log2(p)
    if n - k > 0:
        acc += (n - k) * math.log2(1.0 - p)
    return acc


def _one_direction_llr(k1, n1, k2, n2):
    """log2 L(pooled) - log2 L(per-cell) for two binomial cells."""
    pooled = (k1 + k2) / (n1 + n2)
    p1 = k1 / n1
    p2 = k2 / n2
    same = _binom_loglik(k1, n1, pooled) + _binom_loglik(k2, n2, pooled)
    diff = _binom_loglik(k1, n1, p1) + _binom_loglik(k2, n2, p2)
    return same - diff


def oracle_bllr_cells(tables, total, gram):
    """The four binomial cells, forward then backward direction."""
    n = len(gram)
    c_gram = tables[n][gram]
    c_pre = tables[n - 1][gram[:-1]]
    c_suf = tables[n - 1][gram[1:]]
    c_first = tables[1][gram[:1]]
    c_last = tables[1][gram[-1:]]
    fwd = (c_gram, c_pre, c_last - c_gram, total - c_pre)
    bwd = (c_gram, c_suf, c_first - c_gram, total - c_suf)
    return fwd, bwd


def oracle_bllr(tables, total, gram):
    """Average of forward and backward pooled-vs-split log ratios (<= 0)."""
    fwd, bwd = oracle_bllr_cells(tables, total, gram)
    for k1, n1, k2, n2 in (fwd, bwd):
        if n1 <= 0 or n2 <= 0:
            raise ZeroDivisionError("empty conditioning cell")
        if not (0 <= k1 <= n1 and 0 <= k2 <= n2):
            # overlapping self-grams make token counts unusable as cells
            raise ZeroDivisionError("inconsistent binomial cells")
    return (_one_direction_llr(*fwd) + _one_direction_llr(*bwd)) / 2.0


def oracle_fused_ranking(tables, total, grams, weights=None, dice_doubled=False):
    """Re-derive the combined ranking for a candidate list from scratch.

    Normalization happens inside each arity pool (the bigram and trigram
    variants of a measure are different algorithms): dice and negated bllr
    divide by their pool max, npmi maps affinely [min, max] -> [0, 1]; a
    measure that is constant across its pool contributes 1.0 to everyone.
    Returns the list of (gram, combined, npmi, bllr, dice) sorted by
    combined desc, count desc, gram.
    """
    weights = weights or {}

    def norm_max(values):
        top = max(values)
        if top <= 0:
            return [1.0] * len(values)
        return [v / top for v in values]

    def norm_affine(values):
        lo, hi = min(values), max(values)
        if hi == lo:
            return [1.0] * len(values)
        return [(v - lo) / (hi - lo) for v in values]

    rows = []
    for arity in sorted({len(g) for g in grams}):
        pool = [g for g in grams if len(g) == arity]
        raw = [(g,
                oracle_npmi(tables, total, g),
                oracle_bllr(tables, total, g),
                oracle_dice(tables, total, g, doubled=dice_doubled))
               for g in pool]
        n_npmi = norm_affine([r[1] for r in raw])
        n_bllr = norm_max([-r[2] for r in raw])
        n_dice = norm_max([r[3] for r in raw])
        for (g, i_raw, l_raw, d_raw), ni, nl, nd in zip(raw, n_npmi, n_bllr, n_dice):
            combined = (ni + nl + nd) * weights.get(g, 1.0)
            rows.append((g, combined, i_raw, l_raw, d_raw))
    rows.sort(key=lambda r: (-r[1], -tables[len(r[0])][r[0]], r[0]))
    return rows


TOY1_SENTENCES = [
    ["a", "b", "c"],
    ["a", "b", "d"],
    ["a", "c", "b"],
]


def main():
    tables = oracle_counts(TOY1_SENTENCES)
    total = oracle_total(TOY1_SENTENCES)
    print(f"N = {total}")
    for n in (1, 2, 3):
        for gram, cnt in sorted(tables[n].items()):
            print(f"c{gram!r} = {cnt}")
    for gram in sorted(tables[2]):
        print(f"npmi{gram!r} = {oracle_npmi(tables, total, gram)!r}")
        print(f"bllr{gram!r} = {oracle_bllr(tables, total, gram)!r}")
        print(f"dice{gram!r} = {oracle_dice(tables, total, gram)!r}")
    print("fused bigram ranking:")
    for row in oracle_fused_ranking(tables, total, sorted(tables[2])):
        print("  ", row)


if __name__ == "__main__":
    main()
