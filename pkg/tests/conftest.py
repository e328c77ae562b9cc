from pathlib import Path

import pytest

from mwext.corpus import CoarseTag, TagsetMap, parse_corpus
from mwext.lexicon import Lexicon, Synset, build_lexicon, load_lexicon
from mwext.ngrams import build_index

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def toy1_corpus():
    return parse_corpus(DATA / "toy1.txt", TagsetMap(), "toy")


@pytest.fixture(scope="session")
def toy1_index(toy1_corpus):
    return build_index(toy1_corpus, max_n=5)


@pytest.fixture(scope="session")
def hindi_lexicon():
    return load_lexicon(DATA / "lexicon_hi.tsv")


@pytest.fixture()
def small_lexicon():
    """Programmatic lexicon for targeted relation tests."""
    return build_lexicon([
        Synset("s1", CoarseTag.NOUN, frozenset({"day"}), antonym_ids=frozenset({"s2"})),
        Synset("s2", CoarseTag.NOUN, frozenset({"night"})),
        Synset("s3", CoarseTag.NOUN, frozenset({"kin", "relation"})),
        Synset("s4", CoarseTag.NOUN, frozenset({"brother"}), hypernym_ids=frozenset({"s6"})),
        Synset("s5", CoarseTag.NOUN, frozenset({"sister"}), hypernym_ids=frozenset({"s6"})),
        Synset("s6", CoarseTag.NOUN, frozenset({"sibling"})),
    ])


def make_corpus(tmp_path, text, name="corpus.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return parse_corpus(path, TagsetMap(), "test")
