import json
from pathlib import Path

import pytest

from mwext.cli import main
from mwext.goldstore import EntrySource, GoldEntry, GoldStore, Verdict
from mwext.ngrams import load_index

DATA = Path(__file__).parent / "data"


@pytest.fixture()
def config_file(tmp_path):
    corpus = tmp_path / "corpus.txt"
    corpus.write_text("railway_NN station_NN\nrailway_NN station_NN\n"
                      "traffic_NN light_NN\n", encoding="utf-8")
    cfg = tmp_path / "run.cfg"
    cfg.write_text(f"corpus={corpus}\nout_dir={tmp_path / 'out'}\n"
                   f"lexicon={DATA / 'lexicon_hi.tsv'}\n"
                   "stats.min_count=1\n", encoding="utf-8")
    return cfg


class TestExtract:
    def test_writes_ranked_outputs(self, config_file, tmp_path, capsys):
        assert main(["extract", "--config", str(config_file)]) == 0
        out = tmp_path / "out"
        assert (out / "ranked.tsv").exists()
        assert "ranked" in capsys.readouterr().out

    def test_dump_stages_flag(self, config_file, tmp_path):
        assert main(["extract", "--config", str(config_file), "--dump-stages"]) == 0
        assert list((tmp_path / "out" / "stages").glob("*.tsv"))

    def test_stats_scope_override(self, config_file, tmp_path):
        assert main(["extract", "--config", str(config_file),
                     "--stats-scope", "all"]) == 0
        lines = (tmp_path / "out" / "ranked.tsv").read_text("utf-8").splitlines()
        grams = {tuple(line.split("\t")[7].split(" ")) for line in lines}
        assert ("traffic", "light") in grams

    def test_pipeline_error_exit_code(self, tmp_path, capsys):
        corpus = tmp_path / "empty.txt"
        corpus.write_text("\n", encoding="utf-8")
        cfg = tmp_path / "bad.cfg"
        cfg.write_text(f"corpus={corpus}\nout_dir={tmp_path / 'o'}\n", encoding="utf-8")
        assert main(["extract", "--config", str(cfg)]) == 1
        assert "ingest" in capsys.readouterr().err


class TestEval:
    def test_eval_report(self, config_file, tmp_path, capsys):
        main(["extract", "--config", str(config_file)])
        ranked = tmp_path / "out" / "ranked.tsv"
        gold_path = tmp_path / "gold.jsonl"
        store = GoldStore(gold_path)
        first = ranked.read_text("utf-8").splitlines()[0].split("\t")
        store.upsert(GoldEntry(grams=tuple(first[7].split(" ")), category=first[6],
                               verdict=Verdict.ACCEPTED, meaning=None,
                               added_by="t", timestamp="2024-01-01T00:00:00+00:00",
                               source=EntrySource.RANKED_LIST))
        capsys.readouterr()
        assert main(["eval", "--ranked", str(ranked), "--gold", str(gold_path),
                     "--k", "5"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["overall"]["correct"] == 1
        assert report["k"] == 5


class TestLemmatize:
    def test_with_lexicon_flag(self, capsys):
        assert main(["lemmatize", "--word", "घुमते",
                     "--lexicon", str(DATA / "lexicon_hi.tsv")]) == 0
        out = capsys.readouterr().out
        assert "stem: घुम" in out
        assert "lemma: घुमना" in out

    def test_with_config(self, config_file, capsys):
        assert main(["lemmatize", "--word", "चलती", "--config", str(config_file)]) == 0
        assert "stem: चल" in capsys.readouterr().out

    def test_level_flag(self, capsys):
        assert main(["lemmatize", "--word", "चलती", "--level", "1",
                     "--lexicon", str(DATA / "lexicon_hi.tsv")]) == 0
        assert "stem: च\n" in capsys.readouterr().out

    def test_missing_source_errors(self, capsys):
        assert main(["lemmatize", "--word", "x"]) == 2


class TestIndex:
    def test_dump_reloads(self, config_file, tmp_path):
        dump = tmp_path / "index.tsv"
        assert main(["index", "--config", str(config_file),
                     "--dump", str(dump)]) == 0
        index = load_index(dump)
        assert index.count(("railway", "station")) == 2
        assert index.total_tokens == 6
