"""Gold-standard MWE store: JSON Lines, append-preferred, compacted on load.

One line per validated entry, keyed by (grams, category). Appending keeps
the file merge-friendly for teams; on load the last line for a key wins.
Conflicting verdicts for the same key are rejected rather than
overwritten - validated lexicographic data is too valuable for
last-writer-wins.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path


class Verdict(str, Enum):
    ACCEPTED = "ACCEPTED"
    REJECTED = "REJECTED"


class EntrySource(str, Enum):
    RANKED_LIST = "RANKED_LIST"
    FALSE_NEGATIVE = "FALSE_NEGATIVE"


class GoldConflict(Exception):
    def __init__(self, existing: "GoldEntry", attempted: "GoldEntry"):
        super().__init__(f"conflicting verdict for {existing.grams} "
                         f"[{existing.category}]: {existing.verdict.value} "
                         f"vs {attempted.verdict.value}")
        self.existing = existing
        self.attempted = attempted


@dataclass(frozen=True)
class GoldEntry:
    grams: tuple[str, ...]
    category: str
    verdict: Verdict
    meaning: str | None
    added_by: str
    timestamp: str
    source: EntrySource

    def __post_init__(self):
        if not self.grams or any(not g for g in self.grams):
            raise ValueError("gold entry needs non-empty grams")
        if self.source is EntrySource.FALSE_NEGATIVE and self.verdict is not Verdict.ACCEPTED:
            raise ValueError("false-negative entries are accepted by definition")

    def key(self) -> tuple[tuple[str, ...], str]:
        return (self.grams, self.category)

    def to_json(self) -> str:
        payload = {
            "grams": list(self.grams),
            "category": self.category,
            "verdict": self.verdict.value,
            "meaning": self.meaning,
            "addedBy": self.added_by,
            "timestamp": self.timestamp,
            "source": self.source.value,
        }
        return json.dumps(payload, ensure_ascii=False, sort_keys=True,
                          separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "GoldEntry":
        obj = json.loads(line)
        return cls(
            grams=tuple(obj["grams"]),
            category=obj["category"],
            verdict=Verdict(obj["verdict"]),
            meaning=obj.get("meaning"),
            added_by=obj.get("addedBy", ""),
            timestamp=obj.get("timestamp", ""),
            source=EntrySource(obj.get("source", "RANKED_LIST")),
        )


def now_iso() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


class GoldStore:
    """Keyed gold entries with serialized writes."""

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._entries: dict[tuple[tuple[str, ...], str], GoldEntry] = {}
        self._lock = threading.Lock()

    @classmethod
    def load(cls, path: str | Path) -> "GoldStore":
        store = cls(path)
        p = Path(path)
        if p.exists():
            for lineno, line in enumerate(p.read_text(encoding="utf-8").splitlines(), 1):
                if not line.strip():
                    continue
                try:
                    entry = GoldEntry.from_json(line)
                except (json.JSONDecodeError, KeyError, ValueError) as exc:
                    raise ValueError(f"{p}:{lineno}: bad gold entry: {exc}") from exc
                store._entries[entry.key()] = entry
        return store

    def get(self, grams: tuple[str, ...], category: str) -> GoldEntry | None:
        return self._entries.get((tuple(grams), category))

    def upsert(self, entry: GoldEntry) -> GoldEntry:
        """Insert or update; a different verdict for an existing key raises
        GoldConflict. Re-posting the same verdict updates in place."""
        with self._lock:
            existing = self._entries.get(entry.key())
            if existing is not None and existing.verdict is not entry.verdict:
                raise GoldConflict(existing, entry)
            self._entries[entry.key()] = entry
            if self.path is not None:
                with self.path.open("a", encoding="utf-8") as fh:
                    fh.write(entry.to_json() + "\n")
            return entry

    def entries(self) -> list[GoldEntry]:
        return sorted(self._entries.values(), key=lambda e: (e.grams, e.category))

    def __len__(self) -> int:
        return len(self._entries)

    def export_text(self) -> str:
        """Canonical compacted JSONL: one line per key, sorted."""
        return "".join(entry.to_json() + "\n" for entry in self.entries())

    def export(self, path: str | Path) -> None:
        Path(path).write_text(self.export_text(), encoding="utf-8")

    def accepted_keys(self) -> set[tuple[tuple[str, ...], str]]:
        return {k for k, e in self._entries.items() if e.verdict is Verdict.ACCEPTED}
