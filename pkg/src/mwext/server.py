"""JSON API for the lexicographer validation workflow.

Serves a completed run's ranked candidates, accepts verdicts and
false-negative reports into the gold store, and exposes the lemmatizer
(the UI's "Show More" backtracking drives the level parameter).
Conflicting verdicts are rejected with 409 carrying both sides; the gold
store serializes writes internally.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .candidates import Category
from .goldstore import EntrySource, GoldConflict, GoldEntry, GoldStore, Verdict, now_iso
from .lexicon import Lexicon
from .pipeline import PipelineResult, _candidate_record, ranked_tsv


@dataclass
class ServerState:
    records: list[dict]
    gold: GoldStore
    lexicon: Lexicon
    run_id: str
    info: dict = field(default_factory=dict)

    def candidate_keys(self) -> set[tuple[tuple[str, ...], str]]:
        return {(tuple(r["grams"]), r["category"]) for r in self.records}


def state_from_result(result: PipelineResult, gold: GoldStore,
                      lexicon: Lexicon) -> ServerState:
    records = [_candidate_record(result, item) for item in result.ranked]
    run_id = hashlib.sha256(ranked_tsv(result).encode("utf-8")).hexdigest()[:12]
    info = {
        "languageId": result.corpus.language_id,
        "totalTokens": result.index.total_tokens,
        "sentences": result.index.sentence_count,
        "rankedCandidates": len(records),
        "excluded": len(result.ranked.excluded),
        "topK": result.config.topk,
        "statsScope": result.config.stats_scope,
    }
    return ServerState(records=records, gold=gold, lexicon=lexicon,
                       run_id=run_id, info=info)


class VerdictBody(BaseModel):
    grams: list[str]
    category: str
    verdict: str
    meaning: str | None = None
    addedBy: str = "api"


class FalseNegativeBody(BaseModel):
    grams: list[str]
    category: str
    meaning: str | None = None
    addedBy: str = "api"


def _entry_json(entry: GoldEntry) -> dict:
    return {
        "grams": list(entry.grams),
        "category": entry.category,
        "verdict": entry.verdict.value,
        "meaning": entry.meaning,
        "addedBy": entry.added_by,
        "timestamp": entry.timestamp,
        "source": entry.source.value,
    }


def create_app(state: ServerState) -> FastAPI:
    app = FastAPI(title="mwext validation API")
    # The workbench is served from its own origin.
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    known_keys = state.candidate_keys()

    @app.exception_handler(RequestValidationError)
    async def malformed_body(_req: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors()[:3])})

    def bad_request(message: str) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": message})

    @app.get("/candidates")
    def candidates(offset: int = 0, limit: int = 50, category: str | None = None,
                   minScore: float | None = None):
        if offset < 0:
            return bad_request("offset must be >= 0")
        if limit < 1:
            return bad_request("limit must be >= 1")
        if category is not None:
            try:
                Category(category)
            except ValueError:
                return bad_request(f"unknown category {category!r}")
        rows = state.records
        if category is not None:
            rows = [r for r in rows if r["category"] == category]
        if minScore is not None:
            rows = [r for r in rows if r["combined"] >= minScore]
        page = rows[offset:offset + limit]
        annotated = []
        for row in page:
            entry = state.gold.get(tuple(row["grams"]), row["category"])
            annotated.append(row | {"goldVerdict": entry.verdict.value if entry else None})
        return {"total": len(rows), "offset": offset, "limit": limit,
                "runId": state.run_id, "items": annotated}

    def _store_entry(entry: GoldEntry):
        try:
            saved = state.gold.upsert(entry)
        except GoldConflict as conflict:
            return JSONResponse(status_code=409, content={
                "error": "conflicting verdict",
                "existing": _entry_json(conflict.existing),
                "attempted": _entry_json(conflict.attempted),
            })
        return {"entry": _entry_json(saved)}

    @app.post("/verdict")
    def post_verdict(body: VerdictBody):
        if not body.grams or any(not g for g in body.grams):
            return bad_request("grams must be non-empty strings")
        try:
            verdict = Verdict(body.verdict)
            Category(body.category)
        except ValueError as exc:
            return bad_request(str(exc))
        key = (tuple(body.grams), body.category)
        if key not in known_keys:
            return JSONResponse(status_code=404,
                                content={"error": "candidate not in ranked list"})
        return _store_entry(GoldEntry(
            grams=tuple(body.grams), category=body.category, verdict=verdict,
            meaning=body.meaning, added_by=body.addedBy, timestamp=now_iso(),
            source=EntrySource.RANKED_LIST))

    @app.post("/false-negative")
    def post_false_negative(body: FalseNegativeBody):
        if not body.grams or any(not g for g in body.grams):
            return bad_request("grams must be non-empty strings")
        try:
            Category(body.category)
        except ValueError as exc:
            return bad_request(str(exc))
        return _store_entry(GoldEntry(
            grams=tuple(body.grams), category=body.category, verdict=Verdict.ACCEPTED,
            meaning=body.meaning, added_by=body.addedBy, timestamp=now_iso(),
            source=EntrySource.FALSE_NEGATIVE))

    @app.get("/gold/export")
    def gold_export():
        return {"entries": [_entry_json(e) for e in state.gold.entries()]}

    @app.get("/lemmatize")
    def lemmatize(word: str = "", level: int = 0):
        if not word:
            return bad_request("word must be non-empty")
        if level < 0:
            return bad_request("level must be >= 0")
        suggestion = state.lexicon.lemmatize(word, level)
        return {"word": word, "level": level, "stem": suggestion.stem,
                "lemmas": list(suggestion.lemmas),
                "matchDepth": suggestion.match_depth,
                "exact": state.lexicon.contains(word)}

    @app.get("/stats")
    def stats():
        categories: dict[str, int] = {}
        for row in state.records:
            categories[row["category"]] = categories.get(row["category"], 0) + 1
        return {"runId": state.run_id, "goldEntries": len(state.gold),
                "categories": categories, **state.info}

    return app
