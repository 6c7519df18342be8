"""Faceted query semantics, ranking, pagination, and record comparison.

All functions here are pure: they take an immutable corpus snapshot and
return new values. Filtering is a linear scan; at catalogue scale
(hundreds to a few thousand records) an inverted index would be an
optimization, not a requirement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import AbstractSet, Iterable, Sequence

from .errors import NotPublic, TooFewIds, UnknownId
from .geo import haversine_km
from .model import (DatasetRecord, GeoPoint, LocationSpec, MultipleLocations,
                    Sensor, SingleLocation, Status, Task, UnresolvedLocation,
                    human_size, location_display, sorted_terms)

MAX_RADIUS_KM = 20037.5  # half the equatorial circumference
MAX_PER_PAGE = 100


class FacetMode(Enum):
    """How multiple selections within one facet combine."""

    ALL = "and"
    ANY = "or"


@dataclass(frozen=True)
class MultiLocationOnly:
    """Match only records that cover multiple locations."""


@dataclass(frozen=True)
class Near:
    """Match single-location records within radius_km of center."""

    center: GeoPoint
    radius_km: float

    def __post_init__(self):
        if not 0.0 < self.radius_km <= MAX_RADIUS_KM:
            raise ValueError(f"radius_km outside (0, {MAX_RADIUS_KM}]")


@dataclass(frozen=True)
class NameContains:
    """Match records whose address contains the text, case-insensitively."""

    text: str

    def __post_init__(self):
        if not 1 <= len(self.text) <= 100:
            raise ValueError("location text must be 1..100 characters")


LocationFilter = MultiLocationOnly | Near | NameContains


@dataclass(frozen=True)
class QueryFilters:
    """A parsed query: per-facet selections with modes, plus location."""

    sensors: frozenset[Sensor] = frozenset()
    sensors_mode: FacetMode = FacetMode.ALL
    tasks: frozenset[Task] = frozenset()
    tasks_mode: FacetMode = FacetMode.ALL
    location: LocationFilter | None = None
    page: int = 1
    per_page: int = 20

    def __post_init__(self):
        if self.page < 1:
            raise ValueError("page must be >= 1")
        if not 1 <= self.per_page <= MAX_PER_PAGE:
            raise ValueError(f"per_page must be in [1, {MAX_PER_PAGE}]")


def match_facet(record_values: AbstractSet, selected: AbstractSet,
                mode: FacetMode) -> bool:
    """Empty selection is unconstrained; ALL is subset, ANY is intersection."""
    if not selected:
        return True
    if mode is FacetMode.ALL:
        return selected <= record_values
    return bool(selected & record_values)


def match_location(loc: LocationSpec, filt: LocationFilter | None) -> bool:
    if filt is None:
        return True
    if isinstance(filt, MultiLocationOnly):
        return isinstance(loc, MultipleLocations)
    if isinstance(filt, Near):
        return (isinstance(loc, SingleLocation)
                and haversine_km(loc.point, filt.center) <= filt.radius_km)
    # NameContains: any record with a known address qualifies, including
    # ones still waiting on the geocoder.
    if isinstance(loc, (SingleLocation, UnresolvedLocation)):
        return filt.text.casefold() in loc.address.casefold()
    return False


def record_matches(record: DatasetRecord, filters: QueryFilters) -> bool:
    return (match_facet(record.sensors, filters.sensors, filters.sensors_mode)
            and match_facet(record.tasks, filters.tasks, filters.tasks_mode)
            and match_location(record.location, filters.location))


def _newest_first(records: list[DatasetRecord]) -> list[DatasetRecord]:
    records.sort(key=lambda r: r.id)
    records.sort(key=lambda r: r.created_at, reverse=True)
    return records


@dataclass(frozen=True)
class ResultPage:
    items: tuple[DatasetRecord, ...]
    total_matches: int
    page: int
    per_page: int


def execute_query(filters: QueryFilters,
                  corpus: Iterable[DatasetRecord]) -> ResultPage:
    """Approved records matching every facet, newest first, one page.

    A page past the end is not an error: it comes back empty with the
    total still set. Pure; never touches counters.
    """
    matched = [r for r in corpus
               if r.status is Status.APPROVED and record_matches(r, filters)]
    _newest_first(matched)
    start = (filters.page - 1) * filters.per_page
    items = tuple(matched[start:start + filters.per_page])
    return ResultPage(items=items, total_matches=len(matched),
                      page=filters.page, per_page=filters.per_page)


def rank_recent(corpus: Iterable[DatasetRecord], n: int) -> list[DatasetRecord]:
    if n < 1:
        raise ValueError("n must be >= 1")
    approved = [r for r in corpus if r.status is Status.APPROVED]
    return _newest_first(approved)[:n]


def rank_popular(corpus: Iterable[DatasetRecord], n: int) -> list[DatasetRecord]:
    """Most viewed first; ties fall back to the recency order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    approved = [r for r in corpus if r.status is Status.APPROVED]
    _newest_first(approved)
    approved.sort(key=lambda r: r.view_count, reverse=True)
    return approved[:n]


# --------------------------------------------------------------------------
# Comparison

COMPARISON_ROW_LABELS = ("location", "sensors", "tasks", "size", "url",
                         "views", "description")


@dataclass(frozen=True)
class ComparisonRow:
    label: str
    values: tuple[str, ...]


@dataclass(frozen=True)
class ComparisonTable:
    columns: tuple[str, ...]            # record ids, in request order
    column_names: tuple[str, ...]       # dataset names, same order
    rows: tuple[ComparisonRow, ...] = field(default_factory=tuple)


def _display_fields(record: DatasetRecord) -> dict[str, str]:
    return {
        "location": location_display(record.location),
        "sensors": ", ".join(t.display() for t in sorted_terms(record.sensors)),
        "tasks": ", ".join(t.display() for t in sorted_terms(record.tasks)),
        "size": human_size(record.size_bytes),
        "url": record.download_url,
        "views": str(record.view_count),
        "description": record.description,
    }


def build_comparison(ids: Sequence[str],
                     corpus: Iterable[DatasetRecord]) -> ComparisonTable:
    """Side-by-side table over 2+ approved records, in request order."""
    if len(ids) < 2 or len(set(ids)) < len(ids):
        raise TooFewIds("compare needs at least two distinct record ids")
    by_id = {r.id: r for r in corpus}
    chosen = []
    for record_id in ids:
        record = by_id.get(record_id)
        if record is None:
            raise UnknownId(record_id)
        if record.status is not Status.APPROVED:
            raise NotPublic(record_id)
        chosen.append(record)
    per_record = [_display_fields(r) for r in chosen]
    rows = tuple(ComparisonRow(label, tuple(f[label] for f in per_record))
                 for label in COMPARISON_ROW_LABELS)
    return ComparisonTable(columns=tuple(ids),
                           column_names=tuple(r.name for r in chosen),
                           rows=rows)
