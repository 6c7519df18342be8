"""Embedded record store: journal-backed persistence, the moderation state
machine, atomic view counters, and snapshot import/export.

One data directory holds everything: an append-only ``journal.ndjson``
(replayed on open; a torn trailing line is discarded) and a ``teasers/``
directory with the raw teaser image blobs. All mutation goes through one
lock, so moderation and counters are linearizable; readers work on
immutable record snapshots.
"""

from __future__ import annotations

import json
import os
import random
import threading
from dataclasses import dataclass, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path
from typing import Callable, Mapping

from .errors import (BadFormat, InvalidTransition, NonEmptyStore, NotPublic,
                     StorageFailure, UnknownId, VersionMismatch)
from .model import (DatasetRecord, Status, ValidatedDraft, canonical_json,
                    canonical_slug, format_timestamp, parse_timestamp,
                    record_from_json, record_to_json, FLAG_DUPLICATE_SUSPECT)

SNAPSHOT_VERSION = 1


class Decision(str, Enum):
    APPROVE = "approve"
    REJECT = "reject"

    @property
    def resulting_status(self) -> Status:
        return Status.APPROVED if self is Decision.APPROVE else Status.REJECTED


@dataclass(frozen=True)
class ModerationEvent:
    """Append-only audit entry for one pending -> approved/rejected step."""

    record_id: str
    decision: Decision
    moderator_id: str
    reason: str | None
    at: datetime


def event_to_json(event: ModerationEvent) -> dict:
    return {
        "record_id": event.record_id,
        "decision": event.decision.value,
        "moderator_id": event.moderator_id,
        "reason": event.reason,
        "at": format_timestamp(event.at),
    }


def event_from_json(doc: Mapping) -> ModerationEvent:
    return ModerationEvent(
        record_id=str(doc["record_id"]),
        decision=Decision(doc["decision"]),
        moderator_id=str(doc["moderator_id"]),
        reason=None if doc.get("reason") is None else str(doc["reason"]),
        at=parse_timestamp(doc["at"]),
    )


# --------------------------------------------------------------------------
# ULID-style sortable ids (48-bit ms timestamp + 80-bit randomness)

_CROCKFORD = "0123456789ABCDEFGHJKMNPQRSTVWXYZ"


def _base32(value: int, length: int) -> str:
    chars = []
    for _ in range(length):
        chars.append(_CROCKFORD[value & 31])
        value >>= 5
    return "".join(reversed(chars))


class _IdGenerator:
    """Lexicographically sortable ids, strictly increasing per process."""

    def __init__(self, rng: random.Random):
        self._rng = rng
        self._last = (0, 0)

    def next(self, now: datetime) -> str:
        ts_ms = int(now.timestamp() * 1000)
        rand = self._rng.getrandbits(80)
        if (ts_ms, rand) <= self._last:
            ts_ms, rand = self._last
            rand += 1
            if rand >= 1 << 80:
                ts_ms, rand = ts_ms + 1, 0
        self._last = (ts_ms, rand)
        return _base32(ts_ms, 10) + _base32(rand, 16)


class Store:
    """Single-node document store for dataset records.

    With ``data_dir=None`` everything lives in memory (tests, dry runs).
    ``fsync=False`` keeps writes buffered through the OS, for test speed.
    """

    def __init__(self, data_dir: Path | str | None = None, *,
                 fsync: bool = True,
                 clock: Callable[[], datetime] | None = None,
                 rng: random.Random | None = None):
        self._records: dict[str, DatasetRecord] = {}
        self._events: list[ModerationEvent] = []
        self._teasers_mem: dict[str, bytes] = {}
        self._lock = threading.RLock()
        self._fsync = fsync
        self._clock = clock or (lambda: datetime.now(timezone.utc))
        self._ids = _IdGenerator(rng or random.Random())
        self._journal = None
        self._data_dir = Path(data_dir) if data_dir is not None else None
        if self._data_dir is not None:
            self._open_data_dir()

    # -- lifecycle ---------------------------------------------------------

    def _open_data_dir(self):
        try:
            self._data_dir.mkdir(parents=True, exist_ok=True)
            (self._data_dir / "teasers").mkdir(exist_ok=True)
            journal_path = self._data_dir / "journal.ndjson"
            self._recover(journal_path)
            self._journal = open(journal_path, "ab")
        except OSError as exc:
            raise StorageFailure(str(exc)) from exc

    def _recover(self, journal_path: Path):
        if not journal_path.exists():
            return
        raw = journal_path.read_bytes()
        good_end = 0
        pos = 0
        while pos < len(raw):
            newline = raw.find(b"\n", pos)
            line = raw[pos:] if newline == -1 else raw[pos:newline]
            try:
                op = json.loads(line.decode("utf-8"))
                self._apply(op)
            except (ValueError, KeyError):
                break  # torn trailing write; drop it and everything after
            pos = len(raw) if newline == -1 else newline + 1
            good_end = pos
        if good_end < len(raw):
            with open(journal_path, "r+b") as fh:
                fh.truncate(good_end)

    def _apply(self, op: Mapping):
        kind = op["op"]
        if kind == "record":
            record = record_from_json(op["record"])
            self._records[record.id] = record
        elif kind == "event":
            event = event_from_json(op["event"])
            record = self._records[event.record_id]
            self._records[event.record_id] = replace(
                record, status=event.decision.resulting_status)
            self._events.append(event)
        elif kind == "view":
            record = self._records[op["record_id"]]
            count = int(op["view_count"])
            if count > record.view_count:
                self._records[record.id] = replace(record, view_count=count)
        else:
            raise ValueError(f"unknown journal op {kind!r}")

    def close(self):
        with self._lock:
            if self._journal is not None:
                self._journal.close()
                self._journal = None

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

    # -- journal -----------------------------------------------------------

    def _append(self, op: dict):
        if self._journal is None:
            return
        try:
            self._journal.write(canonical_json(op).encode("utf-8") + b"\n")
            self._journal.flush()
            if self._fsync:
                os.fsync(self._journal.fileno())
        except OSError as exc:
            raise StorageFailure(str(exc)) from exc

    def _write_teaser(self, record_id: str, data: bytes):
        if self._data_dir is None:
            self._teasers_mem[record_id] = data
            return
        path = self._data_dir / "teasers" / record_id
        tmp = path.with_suffix(".tmp")
        try:
            tmp.write_bytes(data)
            os.replace(tmp, path)
        except OSError as exc:
            raise StorageFailure(str(exc)) from exc

    # -- reads -------------------------------------------------------------

    def records(self) -> tuple[DatasetRecord, ...]:
        with self._lock:
            return tuple(self._records.values())

    def events(self) -> tuple[ModerationEvent, ...]:
        with self._lock:
            return tuple(self._events)

    def get(self, record_id: str) -> DatasetRecord:
        with self._lock:
            record = self._records.get(record_id)
        if record is None:
            raise UnknownId(record_id)
        return record

    def get_by_slug(self, slug: str) -> DatasetRecord:
        with self._lock:
            for record in self._records.values():
                if record.slug == slug:
                    return record
        raise UnknownId(slug)

    def get_teaser(self, record_id: str) -> tuple[str, bytes]:
        record = self.get(record_id)
        if self._data_dir is None:
            data = self._teasers_mem.get(record_id)
        else:
            path = self._data_dir / "teasers" / record_id
            data = path.read_bytes() if path.exists() else None
        if data is None:
            raise UnknownId(f"no teaser stored for {record_id}")
        return record.teaser_image.media_type, data

    def stats(self) -> dict[str, int]:
        with self._lock:
            records = list(self._records.values())
        return {
            "approved": sum(r.status is Status.APPROVED for r in records),
            "pending": sum(r.status is Status.PENDING for r in records),
            "rejected": sum(r.status is Status.REJECTED for r in records),
            "views": sum(r.view_count for r in records),
        }

    # -- writes ------------------------------------------------------------

    def submit(self, draft: ValidatedDraft,
               flags: frozenset[str] = frozenset()) -> str:
        """Persist a validated draft as a fresh pending record.

        A submission whose name and download URL both match an existing
        record is stored anyway, flagged duplicate_suspect for moderators.
        """
        with self._lock:
            duplicate = any(
                r.name.casefold() == draft.name.casefold()
                and r.download_url == draft.download_url
                for r in self._records.values())
            if duplicate:
                flags = flags | {FLAG_DUPLICATE_SUSPECT}
            now = self._clock()
            record = DatasetRecord(
                id=self._ids.next(now),
                slug=canonical_slug(draft.name,
                                    (r.slug for r in self._records.values())),
                name=draft.name,
                published_on=draft.published_on,
                location=draft.location,
                sensors=draft.sensors,
                tasks=draft.tasks,
                size_bytes=draft.size_bytes,
                download_url=draft.download_url,
                teaser_image=draft.teaser_image,
                description=draft.description,
                submitter_name=draft.submitter_name,
                submitter_email=draft.submitter_email,
                status=Status.PENDING,
                view_count=0,
                created_at=now,
                flags=flags,
            )
            self._write_teaser(record.id, draft.teaser_bytes)
            self._append({"op": "record",
                          "record": record_to_json(record, include_private=True)})
            self._records[record.id] = record
            return record.id

    def put_teaser(self, record_id: str, data: bytes):
        """Attach teaser bytes to an existing record (seeding path; normal
        submissions store the teaser inside submit)."""
        self.get(record_id)
        with self._lock:
            self._write_teaser(record_id, data)

    def moderate(self, record_id: str, decision: Decision, moderator_id: str,
                 reason: str | None = None) -> Status:
        """Apply one moderation decision; approved/rejected are terminal."""
        with self._lock:
            record = self._records.get(record_id)
            if record is None:
                raise UnknownId(record_id)
            if record.status is not Status.PENDING:
                raise InvalidTransition(
                    f"{record_id} is {record.status.value}, not pending")
            event = ModerationEvent(record_id=record_id, decision=decision,
                                    moderator_id=moderator_id, reason=reason,
                                    at=self._clock())
            self._append({"op": "event", "event": event_to_json(event)})
            self._records[record_id] = replace(
                record, status=decision.resulting_status)
            self._events.append(event)
            return decision.resulting_status

    def increment_views(self, record_id: str) -> int:
        with self._lock:
            record = self._records.get(record_id)
            if record is None:
                raise UnknownId(record_id)
            if record.status is not Status.APPROVED:
                raise NotPublic(record_id)
            count = record.view_count + 1
            self._append({"op": "view", "record_id": record_id,
                          "view_count": count})
            self._records[record_id] = replace(record, view_count=count)
            return count

    # -- snapshots ----------------------------------------------------------

    def export_snapshot(self) -> bytes:
        """Header line, then records sorted by id, then events in log order."""
        with self._lock:
            records = sorted(self._records.values(), key=lambda r: r.id)
            events = list(self._events)
        lines = [canonical_json({"format_version": SNAPSHOT_VERSION})]
        lines += [canonical_json(record_to_json(r, include_private=True))
                  for r in records]
        lines += [canonical_json(event_to_json(e)) for e in events]
        return ("\n".join(lines) + "\n").encode("utf-8")

    def import_snapshot(self, data: bytes, *, merge: bool = False) -> int:
        """Load a snapshot; refuses a non-empty store unless merge is set."""
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise BadFormat(f"snapshot is not UTF-8: {exc}") from exc
        lines = text.splitlines()
        if not lines:
            raise BadFormat("empty snapshot")
        header = _parse_line(lines[0], 1)
        if "format_version" not in header:
            raise BadFormat("first line must carry format_version")
        if header["format_version"] != SNAPSHOT_VERSION:
            raise VersionMismatch(
                f"format_version {header['format_version']}, expected {SNAPSHOT_VERSION}")

        records: list[DatasetRecord] = []
        events: list[ModerationEvent] = []
        for lineno, line in enumerate(lines[1:], start=2):
            if not line.strip():
                raise BadFormat(f"line {lineno}: blank line")
            doc = _parse_line(line, lineno)
            try:
                if "decision" in doc:
                    events.append(event_from_json(doc))
                else:
                    records.append(record_from_json(doc))
            except (KeyError, ValueError) as exc:
                raise BadFormat(f"line {lineno}: {exc}") from exc

        with self._lock:
            if self._records and not merge:
                raise NonEmptyStore(
                    f"store already holds {len(self._records)} records")
            _check_snapshot_consistency(records, events, self._records)
            for record in records:
                self._append({"op": "record",
                              "record": record_to_json(record, include_private=True)})
                self._records[record.id] = record
            for event in events:
                self._append({"op": "event", "event": event_to_json(event)})
                self._events.append(event)
        return len(records)


def _parse_line(line: str, lineno: int) -> dict:
    try:
        doc = json.loads(line)
    except ValueError as exc:
        raise BadFormat(f"line {lineno}: not valid JSON") from exc
    if not isinstance(doc, dict):
        raise BadFormat(f"line {lineno}: expected a JSON object")
    return doc


def _check_snapshot_consistency(records, events, existing):
    ids = [r.id for r in records]
    if len(set(ids)) != len(ids):
        raise BadFormat("duplicate record ids in snapshot")
    clash = set(ids) & set(existing)
    if clash:
        raise BadFormat(f"record ids already present: {sorted(clash)[:3]}")
    slugs = [r.slug for r in records] + [r.slug for r in existing.values()]
    if len(set(slugs)) != len(slugs):
        raise BadFormat("duplicate slugs")
    # Events may only reference records in this snapshot; an event aimed at
    # a pre-existing record would rewrite its status on journal replay.
    known = set(ids)
    last_decision: dict[str, Decision] = {}
    for event in events:
        if event.record_id not in known:
            raise BadFormat(f"event references unknown record {event.record_id}")
        last_decision[event.record_id] = event.decision
    for record in records:
        if record.status is Status.PENDING:
            continue
        decision = last_decision.get(record.id)
        if decision is None or decision.resulting_status is not record.status:
            raise BadFormat(
                f"record {record.id} is {record.status.value} but its events do not end in a matching decision")
