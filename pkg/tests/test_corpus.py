import unicodedata

import pytest
from hypothesis import given, strategies as st

from mwext.corpus import (CoarseTag, CorpusError, TagsetMap, classify_tag,
                          has_internal_hyphen, parse_corpus, parse_sentences)


def write(tmp_path, text, name="c.txt"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


class TestParse:
    def test_two_nouns(self, tmp_path):
        corpus = parse_corpus(write(tmp_path, "railway_NN station_NN\n"))
        assert corpus.token_count == 2
        (sent,) = corpus.sentences
        assert [t.surface for t in sent] == ["railway", "station"]
        assert all(t.coarse_tag is CoarseTag.NOUN for t in sent)

    def test_empty_lines_skipped(self, tmp_path):
        corpus = parse_corpus(write(tmp_path, "\na_NN\n\n\nb_VB\n"))
        assert len(corpus.sentences) == 2
        assert corpus.token_count == 2

    def test_hyphen_flag(self, tmp_path):
        corpus = parse_corpus(write(tmp_path, "चतुर-चालाक_JJ\n"))
        token = corpus.sentences[0][0]
        assert token.has_internal_hyphen
        assert token.coarse_tag is CoarseTag.ADJ

    def test_rightmost_underscore_split(self, tmp_path):
        corpus = parse_corpus(write(tmp_path, "co_operation_NN\n"))
        token = corpus.sentences[0][0]
        assert token.surface == "co_operation"
        assert token.raw_tag == "NN"

    def test_missing_tag_defaults(self, tmp_path):
        corpus = parse_corpus(write(tmp_path, "bare\n"))
        token = corpus.sentences[0][0]
        assert token.raw_tag == ""
        assert token.coarse_tag is CoarseTag.OTHER

    def test_leading_underscore_token_keeps_surface(self, tmp_path):
        corpus = parse_corpus(write(tmp_path, "_NN\n"))
        token = corpus.sentences[0][0]
        assert token.surface == "_NN"
        assert token.raw_tag == ""

    def test_positions(self, tmp_path):
        corpus = parse_corpus(write(tmp_path, "a_NN b_NN\nc_VB\n"))
        flat = [(t.sentence_index, t.position_in_sentence)
                for sent in corpus.sentences for t in sent]
        assert flat == [(0, 0), (0, 1), (1, 0)]

    def test_nfc_normalization(self, tmp_path):
        decomposed = "éclat"  # e + combining acute composes to é
        corpus = parse_corpus(write(tmp_path, f"{decomposed}_NN\n"))
        surface = corpus.sentences[0][0].surface
        assert surface == unicodedata.normalize("NFC", decomposed)
        assert surface.startswith("é")

    def test_crlf(self, tmp_path):
        p = tmp_path / "crlf.txt"
        p.write_bytes(b"a_NN b_NN\r\nc_VB\r\n")
        corpus = parse_corpus(p)
        assert corpus.token_count == 3
        assert corpus.sentences[0][1].surface == "b"

    def test_zero_tokens_error(self, tmp_path):
        with pytest.raises(CorpusError):
            parse_corpus(write(tmp_path, "\n\n"))

    def test_missing_file_error(self, tmp_path):
        with pytest.raises(CorpusError):
            parse_corpus(tmp_path / "nope.txt")

    def test_invalid_utf8_reports_line(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_bytes(b"ok_NN\n\xff\xfe_NN\n")
        with pytest.raises(CorpusError, match=r":2:"):
            parse_corpus(p)

    def test_deterministic(self, tmp_path):
        p = write(tmp_path, "a_NN b_VB\nc_NN\n")
        assert parse_corpus(p) == parse_corpus(p)


class TestClassify:
    @pytest.mark.parametrize("raw,expected", [
        ("NN", CoarseTag.NOUN), ("NNP", CoarseTag.NOUN), ("NNC", CoarseTag.NOUN),
        ("NNPC", CoarseTag.NOUN), ("VB", CoarseTag.VERB), ("VBD", CoarseTag.VERB),
        ("VBG", CoarseTag.VERB), ("VBP", CoarseTag.VERB), ("VBN", CoarseTag.VERB),
        ("VBZ", CoarseTag.VERB), ("VM", CoarseTag.VERB),
        ("XYZ", CoarseTag.OTHER), ("", CoarseTag.OTHER),
    ])
    def test_default_map(self, raw, expected):
        assert classify_tag(raw, TagsetMap()) is expected

    def test_custom_default_class(self):
        tagset = TagsetMap(entries={}, default_class=CoarseTag.NOUN)
        assert classify_tag("ANYTHING", tagset) is CoarseTag.NOUN

    def test_load_tagset_file(self, tmp_path):
        p = tmp_path / "tags.tsv"
        p.write_text("FOO\tNOUN\nBAR\tVERB\n", encoding="utf-8")
        tagset = TagsetMap.load(p)
        assert classify_tag("FOO", tagset) is CoarseTag.NOUN
        assert classify_tag("BAR", tagset) is CoarseTag.VERB
        assert classify_tag("NN", tagset) is CoarseTag.OTHER

    def test_load_missing_file_gives_default(self, tmp_path):
        tagset = TagsetMap.load(tmp_path / "absent.tsv")
        assert classify_tag("NN", tagset) is CoarseTag.NOUN

    def test_load_bad_class_errors(self, tmp_path):
        p = tmp_path / "tags.tsv"
        p.write_text("FOO\tNOPE\n", encoding="utf-8")
        with pytest.raises(CorpusError, match=":1:"):
            TagsetMap.load(p)


class TestHyphen:
    @pytest.mark.parametrize("surface,expected", [
        ("a-b", True), ("चतुर-चालाक", True), ("-ab", False), ("ab-", False),
        ("a--b", False), ("-", False), ("ab", False), ("a-b-c", True),
    ])
    def test_internal_hyphen(self, surface, expected):
        assert has_internal_hyphen(surface) == expected


word_st = st.text(alphabet=st.characters(whitelist_categories=("Ll", "Lu", "Lo")),
                  min_size=1, max_size=6)
tag_st = st.sampled_from(["NN", "VB", "JJ", "RB", "XX"])
sentence_st = st.lists(st.tuples(word_st, tag_st), min_size=1, max_size=8)


@given(st.lists(sentence_st, min_size=1, max_size=6))
def test_roundtrip_serialization(sentences):
    lines = [" ".join(f"{w}_{t}" for w, t in sent) for sent in sentences]
    corpus = parse_sentences(lines, TagsetMap(), "prop")
    rebuilt = [" ".join(f"{tok.surface}_{tok.raw_tag}" for tok in sent)
               for sent in corpus.sentences]
    normalized = [" ".join(f"{unicodedata.normalize('NFC', w)}_{t}" for w, t in sent)
                  for sent in sentences]
    assert rebuilt == normalized


@given(st.lists(sentence_st, min_size=1, max_size=6))
def test_underscore_count_property(sentences):
    lines = [" ".join(f"{w}_{t}" for w, t in sent) for sent in sentences]
    corpus = parse_sentences(lines, TagsetMap(), "prop")
    for sent in corpus.sentences:
        for tok in sent:
            if tok.raw_tag:
                assert (tok.surface + "_" + tok.raw_tag).count("_") >= 1
