"""Domain model for catalogued Earth-observation datasets.

Everything here is an immutable value: records, drafts, taxonomy terms and
locations are frozen dataclasses, and all operations are pure functions.
The canonical JSON serialization defined at the bottom is both the store's
snapshot line format and the API body format.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field, fields
from datetime import date, datetime, timezone
from decimal import Decimal, InvalidOperation, ROUND_HALF_UP
from enum import Enum
from typing import ClassVar, Iterable, Mapping
from urllib.parse import urlsplit

from .errors import FieldIssue, SubmissionInvalid

# Validation issue codes (wire values; class-style names in docs map 1:1).
MISSING_FIELD = "missing_field"
BAD_DATE = "bad_date"
BAD_EMAIL = "bad_email"
BAD_URL = "bad_url"
BAD_SIZE = "bad_size"
EMPTY_TAXONOMY = "empty_taxonomy"
OVERSIZE_TEASER = "oversize_teaser"
BAD_LAT_LON = "bad_lat_lon"
BAD_LENGTH = "bad_length"
BAD_TAXONOMY = "bad_taxonomy"
BAD_TEASER = "bad_teaser"
BAD_FLAG = "bad_flag"
CONFLICTING_LOCATION = "conflicting_location"

MAX_TEASER_BYTES = 2 * 1024 * 1024
TEASER_MEDIA_TYPES = ("image/png", "image/jpeg")
MAX_SIZE_GB = 1_000_000

_EMAIL_RE = re.compile(r"^[^@\s]+@[^@\s]+\.[^@\s]+$")
_OTHER_PREFIX = "other:"


class BadDate(ValueError):
    """Unparseable, impossible, or future publication date."""


class BadSize(ValueError):
    """Non-positive, non-numeric, or absurdly large dataset size."""


# --------------------------------------------------------------------------
# Taxonomies

@dataclass(frozen=True, order=True)
class _Term:
    """A taxonomy term: a canonical token or ``other:<label>``.

    Other labels are trimmed and casefolded at construction so equality and
    ordering are case-insensitive; labels may not contain "," (the wire
    format joins term lists with commas).
    """

    value: str

    CANONICAL: ClassVar[tuple[str, ...]] = ()

    @classmethod
    def parse(cls, token: str):
        token = token.strip()
        lowered = token.casefold()
        if lowered in cls.CANONICAL:
            return cls(lowered)
        if lowered.startswith(_OTHER_PREFIX):
            return cls.other(token[len(_OTHER_PREFIX):])
        raise ValueError(f"unknown {cls.__name__.lower()} {token!r}")

    @classmethod
    def other(cls, label: str):
        label = " ".join(label.split()).casefold()
        if not label:
            raise ValueError("empty label")
        if len(label) > 40:
            raise ValueError("label longer than 40 characters")
        if "," in label:
            raise ValueError("label may not contain a comma")
        return cls(_OTHER_PREFIX + label)

    @property
    def is_other(self) -> bool:
        return self.value.startswith(_OTHER_PREFIX)

    def display(self) -> str:
        if self.is_other:
            return "Other: " + self.value[len(_OTHER_PREFIX):]
        return _DISPLAY_NAMES.get(self.value, self.value.replace("_", " ").capitalize())


class Sensor(_Term):
    CANONICAL = ("optical", "multispectral", "hyperspectral", "sar",
                 "laser_scanning", "thermal")


class Task(_Term):
    CANONICAL = ("object_detection", "semantic_segmentation",
                 "instance_segmentation", "scene_classification",
                 "regression", "change_detection")


_DISPLAY_NAMES = {
    "optical": "Optical",
    "multispectral": "Multispectral",
    "hyperspectral": "Hyperspectral",
    "sar": "SAR",
    "laser_scanning": "Laser scanning",
    "thermal": "Thermal",
    "object_detection": "Object detection",
    "semantic_segmentation": "Semantic segmentation",
    "instance_segmentation": "Instance segmentation",
    "scene_classification": "Scene classification",
    "regression": "Regression",
    "change_detection": "Change detection",
}


def sorted_terms(terms: Iterable[_Term]) -> list[_Term]:
    return sorted(terms, key=lambda t: t.value)


# --------------------------------------------------------------------------
# Locations

@dataclass(frozen=True)
class GeoPoint:
    """A WGS84 point; lat in [-90, 90], lon normalized to [-180, 180)."""

    lat: float
    lon: float

    def __post_init__(self):
        lat = float(self.lat)
        lon = float(self.lon)
        if not -90.0 <= lat <= 90.0:
            raise ValueError(f"lat {lat} outside [-90, 90]")
        if not -180.0 <= lon <= 180.0:
            raise ValueError(f"lon {lon} outside [-180, 180]")
        if lon == 180.0:
            lon = -180.0
        object.__setattr__(self, "lat", lat)
        object.__setattr__(self, "lon", lon)


@dataclass(frozen=True)
class MultipleLocations:
    """The dataset covers many places; no single point applies."""


@dataclass(frozen=True)
class SingleLocation:
    """A geocoded place: human-readable address plus resolved point."""

    address: str
    point: GeoPoint


@dataclass(frozen=True)
class UnresolvedLocation:
    """An address whose point is not resolved yet (geocoder was down or
    did not know the place); the record carries a needs_geocoding flag."""

    address: str


LocationSpec = MultipleLocations | SingleLocation | UnresolvedLocation

MULTIPLE = MultipleLocations()


def location_display(loc: LocationSpec) -> str:
    if isinstance(loc, MultipleLocations):
        return "multiple"
    return loc.address


def location_to_json(loc: LocationSpec) -> dict:
    if isinstance(loc, MultipleLocations):
        return {"kind": "multiple"}
    if isinstance(loc, SingleLocation):
        return {"kind": "single", "address": loc.address,
                "lat": loc.point.lat, "lon": loc.point.lon}
    return {"kind": "unresolved", "address": loc.address}


def location_from_json(obj: Mapping) -> LocationSpec:
    kind = obj["kind"]
    if kind == "multiple":
        return MULTIPLE
    if kind == "single":
        return SingleLocation(str(obj["address"]),
                              GeoPoint(float(obj["lat"]), float(obj["lon"])))
    if kind == "unresolved":
        return UnresolvedLocation(str(obj["address"]))
    raise ValueError(f"unknown location kind {kind!r}")


# --------------------------------------------------------------------------
# Records

class Status(str, Enum):
    PENDING = "pending"
    APPROVED = "approved"
    REJECTED = "rejected"


@dataclass(frozen=True)
class TeaserImage:
    """Content reference for the stored teaser: media type + byte length."""

    media_type: str
    byte_length: int


# Moderation flags a submission can pick up on its way into the store.
FLAG_DUPLICATE_SUSPECT = "duplicate_suspect"
FLAG_NEEDS_GEOCODING = "needs_geocoding"
FLAG_LOW_CONFIDENCE_LOCATION = "low_confidence_location"


@dataclass(frozen=True)
class DatasetRecord:
    """One catalogued dataset; submitter fields never leave private views."""

    id: str
    slug: str
    name: str
    published_on: date
    location: LocationSpec
    sensors: frozenset[Sensor]
    tasks: frozenset[Task]
    size_bytes: int
    download_url: str
    teaser_image: TeaserImage
    description: str
    submitter_name: str
    submitter_email: str
    status: Status
    view_count: int
    created_at: datetime
    flags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.sensors or not self.tasks:
            raise ValueError("sensors and tasks must be non-empty")
        if self.view_count < 0:
            raise ValueError("view_count must be non-negative")


@dataclass(frozen=True)
class ValidatedDraft:
    """A fully validated submission, one store call away from a record."""

    name: str
    published_on: date
    location: LocationSpec
    sensors: frozenset[Sensor]
    tasks: frozenset[Task]
    size_bytes: int
    download_url: str
    teaser_media_type: str
    teaser_bytes: bytes
    description: str
    submitter_name: str
    submitter_email: str

    @property
    def teaser_image(self) -> TeaserImage:
        return TeaserImage(self.teaser_media_type, len(self.teaser_bytes))


# --------------------------------------------------------------------------
# Field parsers

def parse_publication_date(text: str, *, today: date | None = None) -> date:
    """Accept MM/DD/YYYY or ISO YYYY-MM-DD; reject impossible/future dates."""
    text = text.strip()
    today = today or date.today()
    m = re.fullmatch(r"(\d{1,2})/(\d{1,2})/(\d{4})", text)
    if m:
        month, day, year = int(m.group(1)), int(m.group(2)), int(m.group(3))
    else:
        m = re.fullmatch(r"(\d{4})-(\d{2})-(\d{2})", text)
        if not m:
            raise BadDate(f"unparseable date {text!r} (use MM/DD/YYYY or YYYY-MM-DD)")
        year, month, day = int(m.group(1)), int(m.group(2)), int(m.group(3))
    try:
        parsed = date(year, month, day)
    except ValueError as exc:
        raise BadDate(str(exc)) from exc
    if parsed > today:
        raise BadDate(f"publication date {parsed.isoformat()} is in the future")
    return parsed


def parse_size(value: str, unit: str) -> int:
    """Decimal MB/GB to bytes: 1 MB = 10^6, 1 GB = 10^9, nearest byte."""
    unit = unit.strip().upper()
    if unit not in ("MB", "GB"):
        raise BadSize(f"unit must be MB or GB, not {unit!r}")
    try:
        dec = Decimal(value.strip())
    except InvalidOperation as exc:
        raise BadSize(f"not a number: {value!r}") from exc
    if not dec.is_finite():
        raise BadSize(f"not a number: {value!r}")
    if dec <= 0:
        raise BadSize("size must be positive")
    if -dec.as_tuple().exponent > 2:
        raise BadSize("at most 2 fraction digits allowed")
    scale = 6 if unit == "MB" else 9
    size = int((dec * 10 ** scale).to_integral_value(rounding=ROUND_HALF_UP))
    if size > MAX_SIZE_GB * 10 ** 9:
        raise BadSize(f"size above {MAX_SIZE_GB} GB")
    return size


def canonical_slug(name: str, taken: Iterable[str] = ()) -> str:
    """Deterministic URL-safe slug; collisions get -2, -3, ... suffixes."""
    base = re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")
    if not base:
        base = "dataset"
    taken = set(taken)
    if base not in taken:
        return base
    n = 2
    while f"{base}-{n}" in taken:
        n += 1
    return f"{base}-{n}"


# --------------------------------------------------------------------------
# Submission validation

_TRUE_WORDS = {"true", "1", "yes", "on"}
_FALSE_WORDS = {"", "false", "0", "no", "off"}


def _as_text(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bytes, bytearray)):
        return bytes(value).decode("utf-8", errors="replace")
    return str(value)


def validate_submission(raw: Mapping[str, object], *,
                        today: date | None = None) -> ValidatedDraft:
    """Validate a flat field map into a ValidatedDraft.

    Total: any input produces either a draft or a SubmissionInvalid carrying
    one issue per offending field; validation never stops at the first error.
    """
    issues: list[FieldIssue] = []

    def problem(field_name: str, code: str, message: str):
        issues.append(FieldIssue(field_name, code, message))

    def text(field_name: str, max_len: int, *, required: bool = True) -> str | None:
        value = raw.get(field_name)
        if value is None:
            if required:
                problem(field_name, MISSING_FIELD, "field is required")
            return None
        out = _as_text(value).strip()
        if not out:
            if required:
                problem(field_name, MISSING_FIELD, "field is required")
            return None
        if len(out) > max_len:
            problem(field_name, BAD_LENGTH, f"longer than {max_len} characters")
            return None
        return out

    name = text("name", 120)
    description = text("description", 2000)
    submitter_name = text("submitter_name", 80)

    submitter_email = text("submitter_email", 254)
    if submitter_email is not None and not _EMAIL_RE.fullmatch(submitter_email):
        problem("submitter_email", BAD_EMAIL, "not a valid email address")
        submitter_email = None

    published_on = None
    date_text = text("published_on", 40)
    if date_text is not None:
        try:
            published_on = parse_publication_date(date_text, today=today)
        except BadDate as exc:
            problem("published_on", BAD_DATE, str(exc))

    download_url = text("download_url", 2000)
    if download_url is not None:
        parts = urlsplit(download_url)
        if parts.scheme not in ("http", "https") or not parts.netloc:
            problem("download_url", BAD_URL, "must be an absolute http(s) URL")
            download_url = None

    size_bytes = None
    size_value = text("size_value", 40)
    size_unit = text("size_unit", 10)
    if size_value is not None and size_unit is not None:
        try:
            size_bytes = parse_size(size_value, size_unit)
        except BadSize as exc:
            problem("size_value", BAD_SIZE, str(exc))

    def taxonomy(field_name: str, cls: type[_Term]) -> frozenset | None:
        value = raw.get(field_name)
        tokens = [t for t in _as_text(value).split(",") if t.strip()] if value is not None else []
        if not tokens:
            problem(field_name, EMPTY_TAXONOMY, "select at least one")
            return None
        terms = set()
        ok = True
        for token in tokens:
            try:
                terms.add(cls.parse(token))
            except ValueError as exc:
                problem(field_name, BAD_TAXONOMY, str(exc))
                ok = False
        return frozenset(terms) if ok else None

    sensors = taxonomy("sensors", Sensor)
    tasks = taxonomy("tasks", Task)

    location = _validate_location(raw, problem)

    teaser_bytes = None
    teaser_media_type = None
    teaser = raw.get("teaser")
    media = text("teaser_media_type", 80)
    if teaser is None:
        problem("teaser", MISSING_FIELD, "field is required")
    elif not isinstance(teaser, (bytes, bytearray)):
        problem("teaser", BAD_TEASER, "binary image data required")
    elif len(teaser) == 0:
        problem("teaser", MISSING_FIELD, "field is required")
    elif len(teaser) > MAX_TEASER_BYTES:
        problem("teaser", OVERSIZE_TEASER,
                f"teaser is {len(teaser)} bytes; limit {MAX_TEASER_BYTES}")
    else:
        teaser_bytes = bytes(teaser)
    if media is not None:
        media = "image/jpeg" if media.lower() == "image/jpg" else media.lower()
        if media not in TEASER_MEDIA_TYPES:
            problem("teaser_media_type", BAD_TEASER,
                    "media type must be image/png or image/jpeg")
        else:
            teaser_media_type = media

    if issues:
        raise SubmissionInvalid(issues)
    return ValidatedDraft(
        name=name, published_on=published_on, location=location,
        sensors=sensors, tasks=tasks, size_bytes=size_bytes,
        download_url=download_url, teaser_media_type=teaser_media_type,
        teaser_bytes=teaser_bytes, description=description,
        submitter_name=submitter_name, submitter_email=submitter_email,
    )


def _validate_location(raw: Mapping[str, object], problem) -> LocationSpec | None:
    multi_raw = raw.get("multiple_locations")
    multi = False
    if multi_raw is not None:
        word = _as_text(multi_raw).strip().casefold()
        if word in _TRUE_WORDS:
            multi = True
        elif word not in _FALSE_WORDS:
            problem("multiple_locations", BAD_FLAG, f"expected true or false, not {word!r}")
            return None

    address = _as_text(raw.get("location", "")).strip()
    lat_raw = _as_text(raw.get("lat", "")).strip()
    lon_raw = _as_text(raw.get("lon", "")).strip()

    if multi:
        if address or lat_raw or lon_raw:
            problem("location", CONFLICTING_LOCATION,
                    "multiple_locations excludes an address or coordinates")
            return None
        return MULTIPLE

    if not address:
        problem("location", MISSING_FIELD,
                "an address is required unless multiple_locations is set")
        return None
    if len(address) > 200:
        problem("location", BAD_LENGTH, "longer than 200 characters")
        return None

    if not lat_raw and not lon_raw:
        return UnresolvedLocation(address)
    if bool(lat_raw) != bool(lon_raw):
        problem("lat", BAD_LAT_LON, "lat and lon must be given together")
        return None
    try:
        point = GeoPoint(float(lat_raw), float(lon_raw))
    except ValueError as exc:
        problem("lat", BAD_LAT_LON, str(exc))
        return None
    return SingleLocation(address, point)


def draft_to_raw(draft: ValidatedDraft) -> dict[str, object]:
    """Serialize a draft back to the flat submission map (the inverse of
    validate_submission up to normalization; re-validating is idempotent)."""
    raw: dict[str, object] = {
        "name": draft.name,
        "published_on": draft.published_on.isoformat(),
        "sensors": ",".join(t.value for t in sorted_terms(draft.sensors)),
        "tasks": ",".join(t.value for t in sorted_terms(draft.tasks)),
        "size_value": _format_size_value(draft.size_bytes)[0],
        "size_unit": _format_size_value(draft.size_bytes)[1],
        "download_url": draft.download_url,
        "teaser": draft.teaser_bytes,
        "teaser_media_type": draft.teaser_media_type,
        "description": draft.description,
        "submitter_name": draft.submitter_name,
        "submitter_email": draft.submitter_email,
    }
    loc = draft.location
    if isinstance(loc, MultipleLocations):
        raw["multiple_locations"] = "true"
    elif isinstance(loc, SingleLocation):
        raw["location"] = loc.address
        raw["lat"] = repr(loc.point.lat)
        raw["lon"] = repr(loc.point.lon)
    else:
        raw["location"] = loc.address
    return raw


def _format_size_value(size_bytes: int) -> tuple[str, str]:
    if size_bytes >= 10 ** 9 and size_bytes % 10 ** 7 == 0:
        return format(Decimal(size_bytes).scaleb(-9).normalize(), "f"), "GB"
    return format(Decimal(size_bytes).scaleb(-6).normalize(), "f"), "MB"


def human_size(size_bytes: int) -> str:
    value, unit = _format_size_value(size_bytes)
    return f"{value} {unit}"


# --------------------------------------------------------------------------
# Canonical serialization

_TS_FORMAT = "%Y-%m-%dT%H:%M:%S"


def format_timestamp(dt: datetime) -> str:
    dt = dt.astimezone(timezone.utc)
    return f"{dt.strftime(_TS_FORMAT)}.{dt.microsecond:06d}Z"


def parse_timestamp(text: str) -> datetime:
    m = re.fullmatch(r"(\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2})\.(\d{6})Z", text)
    if not m:
        raise ValueError(f"bad timestamp {text!r}")
    dt = datetime.strptime(m.group(1), _TS_FORMAT)
    return dt.replace(microsecond=int(m.group(2)), tzinfo=timezone.utc)


def record_to_json(record: DatasetRecord, *, include_private: bool) -> dict:
    """Canonical dict form; private fields live under "private", which
    public serializers omit entirely."""
    doc = {
        "id": record.id,
        "slug": record.slug,
        "name": record.name,
        "published_on": record.published_on.isoformat(),
        "location": location_to_json(record.location),
        "sensors": [t.value for t in sorted_terms(record.sensors)],
        "tasks": [t.value for t in sorted_terms(record.tasks)],
        "size_bytes": record.size_bytes,
        "download_url": record.download_url,
        "teaser_image": {"media_type": record.teaser_image.media_type,
                         "byte_length": record.teaser_image.byte_length},
        "description": record.description,
        "status": record.status.value,
        "view_count": record.view_count,
        "created_at": format_timestamp(record.created_at),
    }
    if include_private:
        doc["private"] = {
            "submitter_name": record.submitter_name,
            "submitter_email": record.submitter_email,
            "flags": sorted(record.flags),
        }
    return doc


def record_from_json(doc: Mapping) -> DatasetRecord:
    private = doc.get("private") or {}
    teaser = doc["teaser_image"]
    return DatasetRecord(
        id=str(doc["id"]),
        slug=str(doc["slug"]),
        name=str(doc["name"]),
        published_on=date.fromisoformat(doc["published_on"]),
        location=location_from_json(doc["location"]),
        sensors=frozenset(Sensor.parse(t) for t in doc["sensors"]),
        tasks=frozenset(Task.parse(t) for t in doc["tasks"]),
        size_bytes=int(doc["size_bytes"]),
        download_url=str(doc["download_url"]),
        teaser_image=TeaserImage(str(teaser["media_type"]), int(teaser["byte_length"])),
        description=str(doc["description"]),
        submitter_name=str(private.get("submitter_name", "")),
        submitter_email=str(private.get("submitter_email", "")),
        status=Status(doc["status"]),
        view_count=int(doc["view_count"]),
        created_at=parse_timestamp(doc["created_at"]),
        flags=frozenset(str(f) for f in private.get("flags", [])),
    )


def canonical_json(obj) -> str:
    """Deterministic compact JSON: sorted keys, UTF-8, no padding."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
