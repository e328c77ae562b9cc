import pytest
from fastapi.testclient import TestClient

from mwext.goldstore import GoldStore
from mwext.lexicon import load_lexicon
from mwext.pipeline import run_pipeline
from mwext.server import create_app, state_from_result

from .test_pipeline import DATA, hindi_config


@pytest.fixture()
def client(tmp_path):
    cfg = hindi_config(tmp_path, stats_scope="all")
    result = run_pipeline(cfg)
    gold = GoldStore(tmp_path / "gold.jsonl")
    lexicon = load_lexicon(DATA / "lexicon_hi.tsv")
    app = create_app(state_from_result(result, gold, lexicon))
    return TestClient(app)


def first_candidate(client):
    return client.get("/candidates", params={"limit": 1}).json()["items"][0]


class TestCandidates:
    def test_page_shape_and_order(self, client):
        body = client.get("/candidates", params={"limit": 5}).json()
        assert body["total"] >= 5
        ranks = [item["rank"] for item in body["items"]]
        assert ranks == sorted(ranks)
        assert set(body["items"][0]) >= {"rank", "grams", "category", "combined",
                                         "npmi", "bllr", "dice", "count", "weight",
                                         "provenance", "semantic", "reduplication",
                                         "goldVerdict"}

    def test_limit_zero_is_400(self, client):
        assert client.get("/candidates", params={"limit": 0}).status_code == 400

    def test_negative_offset_is_400(self, client):
        assert client.get("/candidates", params={"offset": -1}).status_code == 400

    def test_unknown_category_is_400(self, client):
        response = client.get("/candidates", params={"category": "NOPE"})
        assert response.status_code == 400

    def test_category_filter(self, client):
        body = client.get("/candidates",
                          params={"category": "COMPOUND_NOUN", "limit": 50}).json()
        assert body["items"]
        assert all(i["category"] == "COMPOUND_NOUN" for i in body["items"])

    def test_min_score_filter(self, client):
        body = client.get("/candidates", params={"minScore": 2.5, "limit": 50}).json()
        assert all(i["combined"] >= 2.5 for i in body["items"])

    def test_offset_paging(self, client):
        all_items = client.get("/candidates", params={"limit": 10}).json()["items"]
        page2 = client.get("/candidates",
                           params={"offset": 5, "limit": 5}).json()["items"]
        assert [i["rank"] for i in page2] == [i["rank"] for i in all_items[5:]]


class TestVerdicts:
    def test_post_then_export(self, client):
        target = first_candidate(client)
        response = client.post("/verdict", json={
            "grams": target["grams"], "category": target["category"],
            "verdict": "ACCEPTED", "meaning": "a known expression",
        })
        assert response.status_code == 200
        exported = client.get("/gold/export").json()["entries"]
        assert len(exported) == 1
        entry = exported[0]
        assert entry["grams"] == target["grams"]
        assert entry["timestamp"]
        assert entry["source"] == "RANKED_LIST"

    def test_unknown_candidate_404(self, client):
        response = client.post("/verdict", json={
            "grams": ["no", "such"], "category": "COMPOUND_NOUN",
            "verdict": "ACCEPTED",
        })
        assert response.status_code == 404

    def test_malformed_body_400(self, client):
        assert client.post("/verdict", json={"verdict": "ACCEPTED"}).status_code == 400
        assert client.post("/verdict", json={
            "grams": [], "category": "COMPOUND_NOUN", "verdict": "ACCEPTED",
        }).status_code == 400
        target = first_candidate(client)
        assert client.post("/verdict", json={
            "grams": target["grams"], "category": target["category"],
            "verdict": "MAYBE",
        }).status_code == 400

    def test_conflict_409_carries_both_sides(self, client):
        target = first_candidate(client)
        key = {"grams": target["grams"], "category": target["category"]}
        assert client.post("/verdict", json=key | {"verdict": "ACCEPTED"}).status_code == 200
        response = client.post("/verdict", json=key | {"verdict": "REJECTED"})
        assert response.status_code == 409
        body = response.json()
        assert body["existing"]["verdict"] == "ACCEPTED"
        assert body["attempted"]["verdict"] == "REJECTED"

    def test_idempotent_repost(self, client):
        target = first_candidate(client)
        payload = {"grams": target["grams"], "category": target["category"],
                   "verdict": "ACCEPTED"}
        client.post("/verdict", json=payload)
        client.post("/verdict", json=payload)
        assert len(client.get("/gold/export").json()["entries"]) == 1

    def test_verdict_visible_in_candidates(self, client):
        target = first_candidate(client)
        client.post("/verdict", json={"grams": target["grams"],
                                      "category": target["category"],
                                      "verdict": "REJECTED"})
        refreshed = first_candidate(client)
        assert refreshed["goldVerdict"] == "REJECTED"


class TestFalseNegatives:
    def test_submission_appears_in_gold(self, client):
        response = client.post("/false-negative", json={
            "grams": ["दम", "तोड़ा"], "category": "CONJUNCT_VERB",
            "meaning": "to die",
        })
        assert response.status_code == 200
        entries = client.get("/gold/export").json()["entries"]
        assert entries[0]["source"] == "FALSE_NEGATIVE"
        assert entries[0]["verdict"] == "ACCEPTED"

    def test_empty_grams_rejected(self, client):
        response = client.post("/false-negative", json={
            "grams": [], "category": "CONJUNCT_VERB",
        })
        assert response.status_code == 400

    def test_conflicts_with_rejected_verdict(self, client):
        target = first_candidate(client)
        client.post("/verdict", json={"grams": target["grams"],
                                      "category": target["category"],
                                      "verdict": "REJECTED"})
        response = client.post("/false-negative", json={
            "grams": target["grams"], "category": target["category"]})
        assert response.status_code == 409


class TestLemmatize:
    def test_ghumte_anchor(self, client):
        body = client.get("/lemmatize", params={"word": "घुमते", "level": 0}).json()
        assert body["stem"] == "घुम"
        assert "घुमना" in body["lemmas"]

    def test_level_increment_superset(self, client):
        level0 = client.get("/lemmatize", params={"word": "चलती", "level": 0}).json()
        level1 = client.get("/lemmatize", params={"word": "चलती", "level": 1}).json()
        assert set(level0["lemmas"]) <= set(level1["lemmas"])
        assert len(level1["stem"]) <= len(level0["stem"])

    def test_exact_word_flagged(self, client):
        body = client.get("/lemmatize", params={"word": "चलना"}).json()
        assert body["exact"] is True
        assert body["lemmas"] == ["चलना"]

    def test_empty_word_400(self, client):
        assert client.get("/lemmatize", params={"word": ""}).status_code == 400

    def test_negative_level_400(self, client):
        assert client.get("/lemmatize",
                          params={"word": "x", "level": -1}).status_code == 400


class TestStats:
    def test_summary_fields(self, client):
        body = client.get("/stats").json()
        assert body["totalTokens"] > 0
        assert body["rankedCandidates"] > 0
        assert body["runId"]
        assert isinstance(body["categories"], dict)

    def test_gold_count_tracks_writes(self, client):
        before = client.get("/stats").json()["goldEntries"]
        target = first_candidate(client)
        client.post("/verdict", json={"grams": target["grams"],
                                      "category": target["category"],
                                      "verdict": "ACCEPTED"})
        after = client.get("/stats").json()["goldEntries"]
        assert after == before + 1
