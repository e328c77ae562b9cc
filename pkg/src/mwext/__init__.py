"""Multiword-expression extraction engine.

Turns a POS-tagged corpus plus lightweight lexical resources (wordnet
dump, verb lists, named entities) into a ranked list of MWE candidates,
and provides the validation workflow that turns that list into a
gold-standard MWE dictionary.
"""

from .candidates import Candidate, CandidateSet, Category, PatternRule
from .corpus import CoarseTag, TaggedCorpus, TagsetMap, Token, parse_corpus
from .goldstore import EntrySource, GoldEntry, GoldStore, Verdict
from .lexicon import LemmaSuggestion, Lexicon, Synset, build_lexicon, load_lexicon
from .ngrams import NGramIndex, build_index
from .pipeline import PipelineConfig, PipelineResult, evaluate, load_config, run_pipeline
from .reduplication import RedupConfig, RedupKind, classify_reduplication
from .semantics import SemanticRelation, SemanticVerdict, semantic_relation
from .stats import RankedList, ScoreVector, bllr, combine_and_rank, dice, npmi

__version__ = "0.1.0"
