"""HTTP surface: query, catalogue, markers, compare, submission, rankings,
teasers, and token-gated moderation.

Handlers parse wire parameters by hand (no framework validation) so every
failure funnels through the domain errors and the status table below.
"""

from __future__ import annotations

import dataclasses
import hmac
import json
import threading
import time
from collections import deque
from contextlib import asynccontextmanager
from typing import Mapping, Sequence
from urllib.parse import urlencode

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import fixtures
from .config import ApiConfig, GeocoderConfig
from .errors import (BadParam, EodError, FieldIssue, InvalidTransition,
                     NotPublic, OversizeUpload, RateLimited, SubmissionInvalid,
                     TooFewIds, Unauthorized, UnknownId)
from .geo import (BoundingBox, FixtureGazetteer, Geocoder, HttpGeocoder,
                  markers, records_near_marker)
from .model import (DatasetRecord, GeoPoint, OVERSIZE_TEASER, Sensor,
                    SingleLocation, Status, Task, UnresolvedLocation,
                    FLAG_LOW_CONFIDENCE_LOCATION, FLAG_NEEDS_GEOCODING,
                    human_size, location_display, record_to_json, sorted_terms,
                    validate_submission)
from .errors import GeocoderUnavailable, NoMatch
from .query import (FacetMode, MultiLocationOnly, NameContains, Near,
                    QueryFilters, build_comparison, execute_query, rank_popular,
                    rank_recent)
from .store import Decision, Store

RANKING_MAX_N = 50
RANKING_DEFAULT_N = 10

# Every domain error a handler can raise, and the one status it maps to.
# SubmissionInvalid is the exception: 413 when an oversize_teaser issue is
# present, else 400.
ERROR_STATUS: dict[type, int] = {
    BadParam: 400,
    TooFewIds: 400,
    SubmissionInvalid: 400,
    Unauthorized: 401,
    UnknownId: 404,
    NotPublic: 404,
    InvalidTransition: 409,
    OversizeUpload: 413,
    RateLimited: 429,
}


def status_for(exc: EodError) -> int:
    if isinstance(exc, SubmissionInvalid):
        if any(i.code == OVERSIZE_TEASER for i in exc.issues):
            return 413
        return 400
    return ERROR_STATUS[type(exc)]


# --------------------------------------------------------------------------
# Wire grammar for query filters

_BAD = "bad_param"


def parse_query_params(params: Sequence[tuple[str, str]]) -> QueryFilters:
    """Parse ordered key-value pairs into QueryFilters.

    sensors/tasks accept repeated or comma-separated taxonomy names
    (case-insensitive); modes are and/or; location= / near=lat,lon,km /
    multi_location=true are mutually exclusive. Unknown keys are ignored.
    """
    issues: list[FieldIssue] = []
    merged: dict[str, list[str]] = {}
    for key, value in params:
        merged.setdefault(key, []).append(value)

    def single(key: str) -> str | None:
        values = merged.get(key)
        if not values:
            return None
        if len(values) > 1:
            issues.append(FieldIssue(key, _BAD, "parameter given more than once"))
            return None
        return values[0]

    def facet(key: str, cls) -> frozenset:
        terms = set()
        for chunk in merged.get(key, []):
            for token in chunk.split(","):
                if not token.strip():
                    continue
                try:
                    terms.add(cls.parse(token))
                except ValueError as exc:
                    issues.append(FieldIssue(key, _BAD, str(exc)))
        return frozenset(terms)

    def mode(key: str) -> FacetMode:
        value = single(key)
        if value is None:
            return FacetMode.ALL
        try:
            return FacetMode(value.strip().lower())
        except ValueError:
            issues.append(FieldIssue(key, _BAD, "mode must be and or or"))
            return FacetMode.ALL

    def positive_int(key: str, default: int, upper: int | None = None) -> int:
        value = single(key)
        if value is None:
            return default
        try:
            number = int(value)
        except ValueError:
            issues.append(FieldIssue(key, _BAD, "must be an integer"))
            return default
        if number < 1 or (upper is not None and number > upper):
            bound = f"1..{upper}" if upper else ">= 1"
            issues.append(FieldIssue(key, _BAD, f"must be {bound}"))
            return default
        return number

    sensors = facet("sensors", Sensor)
    tasks = facet("tasks", Task)
    sensors_mode = mode("sensors_mode")
    tasks_mode = mode("tasks_mode")
    page = positive_int("page", 1)
    per_page = positive_int("per_page", 20, upper=100)

    location = None
    location_text = single("location")
    near_text = single("near")
    multi_text = single("multi_location")
    multi = False
    if multi_text is not None:
        lowered = multi_text.strip().lower()
        if lowered in ("true", "1", "yes"):
            multi = True
        elif lowered not in ("false", "0", "no", ""):
            issues.append(FieldIssue("multi_location", _BAD,
                                     "expected true or false"))
    given = [name for name, present in
             (("location", location_text is not None),
              ("near", near_text is not None),
              ("multi_location", multi)) if present]
    if len(given) > 1:
        issues.append(FieldIssue("location", _BAD,
                                 f"{' and '.join(given)} are mutually exclusive"))
    elif multi:
        location = MultiLocationOnly()
    elif location_text is not None:
        try:
            location = NameContains(location_text)
        except ValueError as exc:
            issues.append(FieldIssue("location", _BAD, str(exc)))
    elif near_text is not None:
        location = _parse_near(near_text, issues)

    if issues:
        raise BadParam(issues)
    return QueryFilters(sensors=sensors, sensors_mode=sensors_mode,
                        tasks=tasks, tasks_mode=tasks_mode,
                        location=location, page=page, per_page=per_page)


def _parse_near(text: str, issues: list[FieldIssue]) -> Near | None:
    parts = text.split(",")
    if len(parts) != 3:
        issues.append(FieldIssue("near", _BAD, "expected lat,lon,km"))
        return None
    try:
        lat, lon, radius = (float(p) for p in parts)
    except ValueError:
        issues.append(FieldIssue("near", _BAD, "expected three numbers"))
        return None
    try:
        return Near(GeoPoint(lat, lon), radius)
    except ValueError as exc:
        issues.append(FieldIssue("near", _BAD, str(exc)))
        return None


def print_query_params(filters: QueryFilters) -> str:
    """Serialize filters to a query string; parse_query_params inverts this."""
    parts: list[tuple[str, str]] = []
    if filters.sensors:
        parts.append(("sensors", ",".join(t.value for t in sorted_terms(filters.sensors))))
    parts.append(("sensors_mode", filters.sensors_mode.value))
    if filters.tasks:
        parts.append(("tasks", ",".join(t.value for t in sorted_terms(filters.tasks))))
    parts.append(("tasks_mode", filters.tasks_mode.value))
    loc = filters.location
    if isinstance(loc, MultiLocationOnly):
        parts.append(("multi_location", "true"))
    elif isinstance(loc, NameContains):
        parts.append(("location", loc.text))
    elif isinstance(loc, Near):
        parts.append(("near", f"{loc.center.lat!r},{loc.center.lon!r},{loc.radius_km!r}"))
    parts.append(("page", str(filters.page)))
    parts.append(("per_page", str(filters.per_page)))
    return urlencode(parts)


# --------------------------------------------------------------------------
# Views

def public_view(record: DatasetRecord) -> dict:
    """The public detail fields; no submitter data, ever."""
    return {
        "id": record.id,
        "slug": record.slug,
        "name": record.name,
        "published_on": record.published_on.isoformat(),
        "location": location_display(record.location),
        "sensors": [t.value for t in sorted_terms(record.sensors)],
        "tasks": [t.value for t in sorted_terms(record.tasks)],
        "size_bytes": record.size_bytes,
        "size": human_size(record.size_bytes),
        "download_url": record.download_url,
        "view_count": record.view_count,
        "teaser_url": f"/api/teasers/{record.id}",
        "description": record.description,
    }


# --------------------------------------------------------------------------
# Request-side services

class SubmissionRateLimiter:
    """Sliding one-hour window of submission timestamps per source."""

    def __init__(self, per_hour: int):
        self._per_hour = per_hour
        self._seen: dict[str, deque[float]] = {}
        self._lock = threading.Lock()

    def check(self, source: str, now: float | None = None):
        now = time.monotonic() if now is None else now
        with self._lock:
            window = self._seen.setdefault(source, deque())
            while window and window[0] <= now - 3600.0:
                window.popleft()
            if len(window) >= self._per_hour:
                raise RateLimited(
                    f"submission limit of {self._per_hour}/hour reached")
            window.append(now)


def authorize_moderator(header: str | None, config: ApiConfig) -> str:
    """Bearer-token check in constant time; returns the moderator label."""
    presented = ""
    if header is not None:
        scheme, _, token = header.partition(" ")
        if scheme.lower() == "bearer":
            presented = token.strip()
    label = None
    for token, token_label in config.moderator_tokens.items():
        if hmac.compare_digest(presented.encode(), token.encode()):
            label = token_label
    if label is None:
        raise Unauthorized("missing or unknown moderator token")
    return label


def build_geocoder(cfg: GeocoderConfig) -> Geocoder:
    if cfg.mode == "http":
        if not cfg.url:
            raise ValueError("geocoder mode http requires a url")
        client = HttpGeocoder(cfg.url, cfg.api_key, timeout=cfg.timeout_s,
                              min_interval_s=cfg.min_interval_s)
    elif cfg.mode == "fixture":
        client = FixtureGazetteer(cfg.gazetteer_path or fixtures.gazetteer_path())
    else:
        raise ValueError(f"unknown geocoder mode {cfg.mode!r}")
    return Geocoder(client)


# --------------------------------------------------------------------------
# Application

def create_app(config: ApiConfig, store: Store | None = None,
               geocoder: Geocoder | None = None) -> FastAPI:
    owns_store = store is None
    store = store if store is not None else Store(config.data_dir)
    geocoder = geocoder if geocoder is not None else build_geocoder(config.geocoder)
    limiter = SubmissionRateLimiter(config.submissions_per_hour)

    @asynccontextmanager
    async def lifespan(_: FastAPI):
        yield
        if owns_store:
            store.close()

    app = FastAPI(title="eod", docs_url=None, redoc_url=None, lifespan=lifespan)

    app.state.store = store
    app.state.config = config

    app.add_middleware(
        CORSMiddleware,
        allow_origins=list(config.cors_origins),
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(EodError)
    async def _domain_error(request: Request, exc: EodError):
        body: dict = {"error": type(exc).__name__, "detail": str(exc)}
        if isinstance(exc, (BadParam, SubmissionInvalid)):
            body["errors"] = [i.as_dict() for i in exc.issues]
        return JSONResponse(body, status_code=status_for(exc))

    def moderator(request: Request) -> str:
        return authorize_moderator(request.headers.get("authorization"), config)

    # -- public reads ----------------------------------------------------

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get("/api/datasets")
    def list_datasets(request: Request):
        filters = parse_query_params(request.query_params.multi_items())
        page = execute_query(filters, store.records())
        return {"total": page.total_matches, "page": page.page,
                "per_page": page.per_page,
                "items": [public_view(r) for r in page.items]}

    @app.get("/api/datasets/recent")
    def recent(request: Request):
        n = _ranking_n(request)
        return {"items": [public_view(r)
                          for r in rank_recent(store.records(), n)]}

    @app.get("/api/datasets/popular")
    def popular(request: Request):
        n = _ranking_n(request)
        return {"items": [public_view(r)
                          for r in rank_popular(store.records(), n)]}

    @app.get("/api/datasets/{slug}")
    def dataset_detail(slug: str):
        record = store.get_by_slug(slug)
        if record.status is not Status.APPROVED:
            raise NotPublic(slug)
        store.increment_views(record.id)
        return public_view(store.get(record.id))

    @app.get("/api/markers")
    def marker_list(request: Request):
        viewport = _parse_bbox(request.query_params.get("bbox"))
        found = markers(store.records(), viewport)
        return {"markers": [{"record_id": m.record_id, "lat": m.point.lat,
                             "lon": m.point.lon, "label": m.label}
                            for m in found]}

    @app.get("/api/markers/at")
    def markers_at(request: Request):
        point = _parse_point(request.query_params)
        ids = records_near_marker(store.records(), point,
                                  config.colocation_radius_km)
        return {"ids": ids, "items": [public_view(store.get(i)) for i in ids]}

    @app.get("/api/compare")
    def compare(request: Request):
        raw = request.query_params.get("ids", "")
        ids = [part.strip() for part in raw.split(",") if part.strip()]
        table = build_comparison(ids, store.records())
        return {"columns": list(table.columns),
                "column_names": list(table.column_names),
                "rows": [{"label": row.label, "values": list(row.values)}
                         for row in table.rows]}

    @app.get("/api/teasers/{record_id}")
    def teaser(record_id: str):
        record = store.get(record_id)
        if record.status is not Status.APPROVED:
            raise NotPublic(record_id)
        media_type, data = store.get_teaser(record_id)
        return Response(content=data, media_type=media_type)

    # -- submission --------------------------------------------------------

    @app.post("/api/datasets", status_code=202)
    async def submit_dataset(request: Request):
        limiter.check(request.client.host if request.client else "unknown")
        length = request.headers.get("content-length")
        if length and length.isdigit() and int(length) > config.max_upload_bytes:
            raise OversizeUpload(
                f"request of {length} bytes exceeds {config.max_upload_bytes}")
        raw = await _form_to_raw(request)
        draft = validate_submission(raw)
        draft, flags = _resolve_location(draft, geocoder)
        record_id = store.submit(draft, flags)
        return {"id": record_id, "status": Status.PENDING.value}

    # -- moderation --------------------------------------------------------

    @app.get("/api/admin/datasets")
    def admin_list(request: Request):
        moderator(request)
        wanted = request.query_params.get("status", "pending")
        records = store.records()
        if wanted != "all":
            try:
                status = Status(wanted)
            except ValueError:
                raise BadParam([FieldIssue("status", _BAD,
                                           "expected pending, approved, rejected, or all")])
            records = tuple(r for r in records if r.status is status)
        ordered = sorted(records, key=lambda r: (r.created_at, r.id))
        return {"items": [record_to_json(r, include_private=True)
                          for r in ordered]}

    @app.post("/api/admin/datasets/{record_id}/approve")
    async def approve(record_id: str, request: Request):
        label = moderator(request)
        status = store.moderate(record_id, Decision.APPROVE, label,
                                await _reason(request))
        return {"id": record_id, "status": status.value}

    @app.post("/api/admin/datasets/{record_id}/reject")
    async def reject(record_id: str, request: Request):
        label = moderator(request)
        status = store.moderate(record_id, Decision.REJECT, label,
                                await _reason(request))
        return {"id": record_id, "status": status.value}

    @app.get("/api/admin/teasers/{record_id}")
    def admin_teaser(record_id: str, request: Request):
        moderator(request)
        media_type, data = store.get_teaser(record_id)
        return Response(content=data, media_type=media_type)

    return app


# --------------------------------------------------------------------------
# Wire helpers

def _ranking_n(request: Request) -> int:
    raw = request.query_params.get("n")
    if raw is None:
        return RANKING_DEFAULT_N
    try:
        n = int(raw)
    except ValueError:
        raise BadParam([FieldIssue("n", _BAD, "must be an integer")])
    return max(1, min(RANKING_MAX_N, n))


def _parse_bbox(raw: str | None) -> BoundingBox | None:
    if raw is None or raw == "":
        return None
    parts = raw.split(",")
    if len(parts) != 4:
        raise BadParam([FieldIssue("bbox", _BAD, "expected south,west,north,east")])
    try:
        south, west, north, east = (float(p) for p in parts)
        return BoundingBox(south=south, west=west, north=north, east=east)
    except ValueError as exc:
        raise BadParam([FieldIssue("bbox", _BAD, str(exc))])


def _parse_point(params: Mapping[str, str]) -> GeoPoint:
    issues = []
    values = {}
    for key in ("lat", "lon"):
        raw = params.get(key)
        if raw is None:
            issues.append(FieldIssue(key, _BAD, "parameter is required"))
            continue
        try:
            values[key] = float(raw)
        except ValueError:
            issues.append(FieldIssue(key, _BAD, "must be a number"))
    if not issues:
        try:
            return GeoPoint(values["lat"], values["lon"])
        except ValueError as exc:
            issues.append(FieldIssue("lat", _BAD, str(exc)))
    raise BadParam(issues)


async def _form_to_raw(request: Request) -> dict[str, object]:
    form = await request.form()
    raw: dict[str, object] = {}
    for key in form.keys():
        values = form.getlist(key)
        first = values[0]
        if hasattr(first, "read"):  # an UploadFile
            raw[key] = await first.read()
            if key == "teaser" and "teaser_media_type" not in form:
                raw["teaser_media_type"] = first.content_type or ""
        elif key in ("sensors", "tasks"):
            raw[key] = ",".join(str(v) for v in values)
        else:
            raw[key] = str(first)
    return raw


async def _reason(request: Request) -> str | None:
    body = await request.body()
    if not body:
        return None
    try:
        doc = json.loads(body)
    except ValueError:
        raise BadParam([FieldIssue("body", _BAD, "body must be JSON")])
    if doc is None:
        return None
    if not isinstance(doc, dict):
        raise BadParam([FieldIssue("body", _BAD, "body must be a JSON object")])
    reason = doc.get("reason")
    return None if reason is None else str(reason)


def _resolve_location(draft, geocoder: Geocoder):
    """Geocode an address-only submission; failures flag, never reject."""
    flags: frozenset[str] = frozenset()
    if not isinstance(draft.location, UnresolvedLocation):
        return draft, flags
    address = draft.location.address
    try:
        result = geocoder.geocode(address)
    except (NoMatch, GeocoderUnavailable):
        return draft, flags | {FLAG_NEEDS_GEOCODING}
    location = SingleLocation(address, result.point)
    if result.confidence < 0.5:
        flags = flags | {FLAG_LOW_CONFIDENCE_LOCATION}
    return dataclasses.replace(draft, location=location), flags
