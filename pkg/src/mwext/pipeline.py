"""End-to-end extraction pipeline and the evaluation harness.

Stage order: ingest, index, pattern candidates, reduplication
classification, verb gate (with the ontological conjunct check as a
rescue path), named-entity weighting, hyphen weighting, semantic tagging,
optional exhaustive collocation scan, scoring and fusion. A run is a pure
function of its input files and configuration: re-running writes
byte-identical outputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .candidates import (Candidate, CandidateSet, Category,
                         all_ngrams_as_collocation_candidates, default_rules,
                         generate_candidates, load_rules)
from .complex_predicate import DEFAULT_CP_RULES, is_conjunct, load_cp_rules
from .corpus import TaggedCorpus, TagsetMap, parse_corpus
from .goldstore import GoldStore, Verdict
from .lexicon import Lexicon, load_lexicon
from .lingfilters import (NamedEntityList, VerbLists, hyphen_weight,
                          load_named_entities, load_verb_lists, ne_weight,
                          verb_gate)
from .ngrams import Gram, NGramIndex, build_index
from .reduplication import RedupConfig, RedupKind, classify_reduplication
from .semantics import SemanticRelation, semantic_relation
from .stats import RankedList, combine_and_rank, score_candidates


class PipelineError(RuntimeError):
    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"pipeline failed at stage '{stage}': {cause}")
        self.stage = stage
        self.cause = cause


@dataclass
class PipelineConfig:
    corpus: str = ""
    lexicon: str | None = None
    tagset: str | None = None
    vector_verbs: str | None = None
    verbalizers: str | None = None
    named_entities: str | None = None
    cp_rules: str | None = None
    rules: str | None = None
    gold_store: str | None = None
    out_dir: str = "out"
    language: str = ""
    topk: int = 200
    stats_scope: str = "candidates"  # or "all"
    max_n: int = 5
    min_count: int = 2
    dice_doubled: bool = False
    ne_penalty: float = 0.5
    hyphen_boost: float = 1.5
    ne_drop: bool = False
    redup_min_suffix_frac: float = 0.5
    redup_max_prefix_delta: int = 2
    adj_noun_bigram: bool = True

    def validate(self) -> None:
        if not self.corpus:
            raise ValueError("config needs corpus=<path>")
        if self.stats_scope not in ("candidates", "all"):
            raise ValueError("pipeline.stats_scope must be candidates|all")
        if self.topk < 1:
            raise ValueError("topk must be >= 1")


_CONFIG_KEYS = {
    "corpus": ("corpus", str),
    "lexicon": ("lexicon", str),
    "tagset": ("tagset", str),
    "vector_verbs": ("vector_verbs", str),
    "verbalizers": ("verbalizers", str),
    "named_entities": ("named_entities", str),
    "cp_rules": ("cp_rules", str),
    "rules": ("rules", str),
    "gold_store": ("gold_store", str),
    "out_dir": ("out_dir", str),
    "language": ("language", str),
    "topk": ("topk", int),
    "pipeline.stats_scope": ("stats_scope", str),
    "pipeline.max_n": ("max_n", int),
    "stats.min_count": ("min_count", int),
    "stats.dice_doubled": ("dice_doubled", bool),
    "filters.ne_penalty": ("ne_penalty", float),
    "filters.hyphen_boost": ("hyphen_boost", float),
    "filters.ne_drop": ("ne_drop", bool),
    "redup.min_suffix_frac": ("redup_min_suffix_frac", float),
    "redup.max_prefix_delta": ("redup_max_prefix_delta", int),
    "candidates.adj_noun_bigram": ("adj_noun_bigram", bool),
}


def _parse_bool(value: str) -> bool:
    if value.lower() in ("true", "1", "yes", "on"):
        return True
    if value.lower() in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


def load_config(path: str | Path) -> PipelineConfig:
    """Config file: UTF-8 "key=value" lines, '#' comments."""
    cfg = PipelineConfig()
    base = Path(path).parent
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
        attr, typ = _CONFIG_KEYS[key]
        if typ is bool:
            setattr(cfg, attr, _parse_bool(value))
        elif typ in (int, float):
            setattr(cfg, attr, typ(value))
        else:
            # Path-valued keys resolve relative to the config file.
            if attr in ("corpus", "lexicon", "tagset", "vector_verbs", "verbalizers",
                        "named_entities", "cp_rules", "rules", "gold_store", "out_dir"):
                value = str((base / value)) if not Path(value).is_absolute() else value
            setattr(cfg, attr, value)
    cfg.validate()
    return cfg


@dataclass
class StageSnapshot:
    name: str
    kind: str  # "generate" | "augment" | "drop" | "weight" | "tag"
    candidates: list[Candidate]

    @property
    def count(self) -> int:
        return len(self.candidates)


@dataclass
class PipelineResult:
    corpus: TaggedCorpus
    index: NGramIndex
    ranked: RankedList
    stages: list[StageSnapshot]
    redup_verdicts: dict[Gram, RedupKind]
    semantic_verdicts: dict[Gram, SemanticRelation]
    config: PipelineConfig


def _load_resources(cfg: PipelineConfig):
    lexicon = load_lexicon(cfg.lexicon) if cfg.lexicon else Lexicon({})
    verb_lists = load_verb_lists(cfg.vector_verbs, cfg.verbalizers)
    nel = load_named_entities(cfg.named_entities) if cfg.named_entities \
        else NamedEntityList()
    cp_rules = load_cp_rules(cfg.cp_rules) if cfg.cp_rules else DEFAULT_CP_RULES
    return lexicon, verb_lists, nel, cp_rules


def run_pipeline(cfg: PipelineConfig) -> PipelineResult:
    cfg.validate()
    stages: list[StageSnapshot] = []

    def stage(name: str, fn):
        try:
            return fn()
        except Exception as exc:
            raise PipelineError(name, exc) from exc

    tagset = stage("tagset", lambda: TagsetMap.load(cfg.tagset) if cfg.tagset else TagsetMap())
    corpus = stage("ingest", lambda: parse_corpus(cfg.corpus, tagset, cfg.language))
    index = stage("index", lambda: build_index(corpus, cfg.max_n))
    lexicon, verb_lists, nel, cp_rules = stage("resources", lambda: _load_resources(cfg))

    def gen():
        rules = default_rules(adj_noun_bigram=cfg.adj_noun_bigram)
        if cfg.rules:
            rules = rules + load_rules(cfg.rules)
        return generate_candidates(corpus, rules)

    cands = stage("candidate_gen", gen)
    stages.append(StageSnapshot("candidate_gen", "generate", cands.sorted()))

    redup_cfg = RedupConfig(min_suffix_frac=cfg.redup_min_suffix_frac,
                            max_prefix_delta=cfg.redup_max_prefix_delta)
    redup_verdicts: dict[Gram, RedupKind] = {}

    def classify_redups():
        for cand in cands.sorted():
            if len(cand.grams) != 2 or cand.grams in redup_verdicts:
                continue
            verdict = classify_reduplication(lexicon, cand.grams[0], cand.grams[1],
                                             redup_cfg)
            redup_verdicts[cand.grams] = verdict.kind
            if verdict.kind is RedupKind.PARTIAL_MEANINGFUL:
                new_cat = Category.PARTIAL_REDUP_MEANINGFUL
            elif verdict.kind is RedupKind.PARTIAL_NONMEANINGFUL:
                new_cat = Category.PARTIAL_REDUP_NONMEANINGFUL
            else:
                continue
            cands.add(Candidate(grams=cand.grams, tags=cand.tags, category=new_cat,
                                first_occurrence=cand.first_occurrence,
                                provenance=cand.provenance | {"partial_redup"}))

    stage("reduplication", classify_redups)
    stages.append(StageSnapshot("reduplication", "augment", cands.sorted()))

    def cp_accept(noun: str, verb: str) -> bool:
        return is_conjunct(lexicon, noun, verb, cp_rules).accepted

    def gate():
        for cand in cands.sorted():
            if not verb_gate(cand, verb_lists, lexicon, cp_accept):
                cands.remove(cand.key())

    stage("verb_gate", gate)
    stages.append(StageSnapshot("verb_gate", "drop", cands.sorted()))

    def apply_ne():
        for cand in cands.sorted():
            adjusted = ne_weight(cand, nel, cfg.ne_penalty)
            if adjusted is not cand:
                if cfg.ne_drop:
                    cands.remove(cand.key())
                else:
                    cands.replace(adjusted)

    stage("ne_filter", apply_ne)
    stages.append(StageSnapshot("ne_filter", "drop" if cfg.ne_drop else "weight",
                                cands.sorted()))

    def apply_hyphen():
        for cand in cands.sorted():
            adjusted = hyphen_weight(cand, cfg.hyphen_boost)
            if adjusted is not cand:
                cands.replace(adjusted)

    stage("hyphen_weight", apply_hyphen)
    stages.append(StageSnapshot("hyphen_weight", "weight", cands.sorted()))

    semantic_verdicts: dict[Gram, SemanticRelation] = {}

    def tag_semantics():
        for cand in cands.sorted():
            if len(cand.grams) != 2:
                continue
            if cand.grams not in semantic_verdicts:
                verdict = semantic_relation(lexicon, cand.grams[0], cand.grams[1])
                semantic_verdicts[cand.grams] = verdict.relation
            relation = semantic_verdicts[cand.grams]
            if relation is not SemanticRelation.NONE:
                cands.replace(cand.with_provenance(f"SEMANTIC:{relation.value}"))

    stage("semantic", tag_semantics)
    stages.append(StageSnapshot("semantic", "tag", cands.sorted()))

    if cfg.stats_scope == "all":
        def add_collocations():
            for n in range(2, cfg.max_n + 1):
                for cand in all_ngrams_as_collocation_candidates(index, n, cfg.min_count):
                    cands.add(cand)

        stage("collocations", add_collocations)
        stages.append(StageSnapshot("collocations", "augment", cands.sorted()))

    def rank():
        scored = score_candidates(index, cands.sorted(), dice_doubled=cfg.dice_doubled)
        return combine_and_rank(scored, index)

    ranked = stage("scoring", rank)
    return PipelineResult(corpus=corpus, index=index, ranked=ranked, stages=stages,
                          redup_verdicts=redup_verdicts,
                          semantic_verdicts=semantic_verdicts, config=cfg)


def ranked_tsv(result: PipelineResult) -> str:
    """TSV: rank, combined, npmi, bllr, dice, count, category, grams."""
    lines = []
    for item in result.ranked:
        sv = item.scores
        lines.append("\t".join([
            str(item.rank), repr(sv.combined), repr(sv.npmi), repr(sv.bllr),
            repr(sv.dice), str(item.count), item.candidate.category.value,
            " ".join(item.candidate.grams),
        ]))
    return "\n".join(lines) + ("\n" if lines else "")


def _candidate_record(result: PipelineResult, item) -> dict:
    cand = item.candidate
    sv = item.scores
    return {
        "rank": item.rank,
        "grams": list(cand.grams),
        "category": cand.category.value,
        "combined": sv.combined,
        "npmi": sv.npmi,
        "bllr": sv.bllr,
        "dice": sv.dice,
        "normNpmi": sv.norm_npmi,
        "normBllr": sv.norm_bllr,
        "normDice": sv.norm_dice,
        "count": item.count,
        "weight": cand.weight,
        "provenance": sorted(cand.provenance),
        "semantic": result.semantic_verdicts.get(cand.grams, SemanticRelation.NONE).value
        if len(cand.grams) == 2 else None,
        "reduplication": result.redup_verdicts.get(cand.grams, RedupKind.NONE).value
        if len(cand.grams) == 2 else None,
        "firstOccurrence": list(cand.first_occurrence) if cand.first_occurrence else None,
    }


def write_outputs(result: PipelineResult, out_dir: str | Path,
                  dump_stages: bool = False) -> dict[str, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {}

    ranked_path = out / "ranked.tsv"
    ranked_path.write_text(ranked_tsv(result), encoding="utf-8")
    paths["ranked_tsv"] = ranked_path

    jsonl_path = out / "ranked.jsonl"
    with jsonl_path.open("w", encoding="utf-8") as fh:
        for item in result.ranked:
            fh.write(json.dumps(_candidate_record(result, item),
                                ensure_ascii=False, sort_keys=True) + "\n")
    paths["ranked_jsonl"] = jsonl_path

    excl_path = out / "excluded.jsonl"
    with excl_path.open("w", encoding="utf-8") as fh:
        for cand, sv in result.ranked.excluded:
            fh.write(json.dumps({
                "grams": list(cand.grams),
                "category": cand.category.value,
                "weight": cand.weight,
                "provenance": sorted(cand.provenance),
                "error": sv.error,
            }, ensure_ascii=False, sort_keys=True) + "\n")
    paths["excluded_jsonl"] = excl_path

    if dump_stages:
        stage_dir = out / "stages"
        stage_dir.mkdir(exist_ok=True)
        for i, snap in enumerate(result.stages):
            lines = [f"#stage={snap.name}\tkind={snap.kind}\tcount={snap.count}"]
            for cand in snap.candidates:
                lines.append("\t".join([
                    cand.category.value, " ".join(cand.grams), repr(cand.weight),
                    ",".join(sorted(cand.provenance)),
                ]))
            (stage_dir / f"{i:02d}_{snap.name}.tsv").write_text(
                "\n".join(lines) + "\n", encoding="utf-8")
        paths["stages"] = stage_dir
    return paths


@dataclass(frozen=True)
class RankedRecord:
    """One ranked-list row, as produced by the run or re-read from TSV."""
    rank: int
    combined: float
    npmi: float
    bllr: float
    dice: float
    count: int
    category: str
    grams: tuple[str, ...]


def records_from_result(result: PipelineResult) -> list[RankedRecord]:
    return [RankedRecord(item.rank, item.scores.combined, item.scores.npmi,
                         item.scores.bllr, item.scores.dice, item.count,
                         item.candidate.category.value, item.candidate.grams)
            for item in result.ranked]


def read_ranked_tsv(path: str | Path) -> list[RankedRecord]:
    records = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 8:
            raise ValueError(f"{path}:{lineno}: expected 8 TSV columns")
        records.append(RankedRecord(
            rank=int(parts[0]), combined=float(parts[1]), npmi=float(parts[2]),
            bllr=float(parts[3]), dice=float(parts[4]), count=int(parts[5]),
            category=parts[6], grams=tuple(parts[7].split(" ")),
        ))
    return records


@dataclass(frozen=True)
class PrecisionCell:
    hits: int          # judged candidates among those considered
    correct: int       # judged ACCEPTED
    unjudged: int

    @property
    def precision(self) -> float | None:
        return self.correct / self.hits if self.hits else None


@dataclass
class EvalReport:
    k: int
    overall: PrecisionCell
    per_category: dict[str, PrecisionCell]
    per_measure: dict[str, dict[int, PrecisionCell]]
    conjunct_by_verb: dict[str, PrecisionCell]

    def to_json(self) -> str:
        def cell(c: PrecisionCell):
            return {"hits": c.hits, "correct": c.correct, "unjudged": c.unjudged,
                    "precision": c.precision}
        return json.dumps({
            "k": self.k,
            "overall": cell(self.overall),
            "perCategory": {k: cell(v) for k, v in sorted(self.per_category.items())},
            "perMeasure": {m: {str(n): cell(v) for n, v in sorted(by_n.items())}
                           for m, by_n in sorted(self.per_measure.items())},
            "conjunctByVerb": {k: cell(v) for k, v in sorted(self.conjunct_by_verb.items())},
        }, ensure_ascii=False, sort_keys=True, indent=2)


def _judge(records, gold: GoldStore) -> PrecisionCell:
    hits = correct = unjudged = 0
    for rec in records:
        entry = gold.get(rec.grams, rec.category)
        if entry is None:
            unjudged += 1
        else:
            hits += 1
            if entry.verdict is Verdict.ACCEPTED:
                correct += 1
    return PrecisionCell(hits=hits, correct=correct, unjudged=unjudged)


_MEASURE_ORDER = {
    "npmi": lambda r: -r.npmi,   # larger is stronger
    "bllr": lambda r: r.bllr,    # more negative is stronger
    "dice": lambda r: -r.dice,   # larger is stronger
}


def evaluate(records: list[RankedRecord], gold: GoldStore, k: int) -> EvalReport:
    """Precision at K against ACCEPTED gold entries.

    Unjudged candidates are excluded from precision denominators and
    reported separately; per-measure lists re-rank the records by each
    raw measure within each n-gram order.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    by_rank = sorted(records, key=lambda r: r.rank)
    overall = _judge(by_rank[:k], gold)

    per_category: dict[str, PrecisionCell] = {}
    for category in sorted({r.category for r in records}):
        cat_records = [r for r in by_rank if r.category == category]
        per_category[category] = _judge(cat_records[:k], gold)

    per_measure: dict[str, dict[int, PrecisionCell]] = {}
    for measure, keyfn in _MEASURE_ORDER.items():
        by_n: dict[int, PrecisionCell] = {}
        for n in range(2, 6):
            n_records = sorted((r for r in records if len(r.grams) == n),
                               key=lambda r: (keyfn(r), r.grams))
            if n_records:
                by_n[n] = _judge(n_records[:k], gold)
        per_measure[measure] = by_n

    conjunct: dict[str, PrecisionCell] = {}
    conj_records = [r for r in by_rank if r.category == Category.CONJUNCT_VERB.value]
    for verb in sorted({r.grams[-1] for r in conj_records}):
        conjunct[verb] = _judge([r for r in conj_records if r.grams[-1] == verb], gold)

    return EvalReport(k=k, overall=overall, per_category=per_category,
                      per_measure=per_measure, conjunct_by_verb=conjunct)
