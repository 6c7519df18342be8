"""Geodesic distance, map markers, and address geocoding.

Distances are spherical (haversine, mean Earth radius 6371.0088 km), which
is well inside 0.5% of the ellipsoid at catalogue scale. Geocoding goes
through a pluggable client: an offline gazetteer fixture for tests and
air-gapped deploys, or an HTTP client with caching and rate limiting.
"""

from __future__ import annotations

import math
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Protocol

import httpx

from .errors import GeocoderUnavailable, NoMatch
from .model import (DatasetRecord, GeoPoint, SingleLocation, Status)

EARTH_RADIUS_KM = 6371.0088

DEFAULT_COLOCATION_RADIUS_KM = 25.0


def haversine_km(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in km; symmetric, 0 iff the points coincide."""
    lat1, lon1, lat2, lon2 = map(math.radians, (a.lat, a.lon, b.lat, b.lon))
    sin_dlat = math.sin((lat2 - lat1) / 2.0)
    sin_dlon = math.sin((lon2 - lon1) / 2.0)
    h = sin_dlat * sin_dlat + math.cos(lat1) * math.cos(lat2) * sin_dlon * sin_dlon
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(h)))


@dataclass(frozen=True)
class BoundingBox:
    """Map viewport; west > east means the box crosses the antimeridian."""

    south: float
    west: float
    north: float
    east: float

    def __post_init__(self):
        if not (-90.0 <= self.south <= 90.0 and -90.0 <= self.north <= 90.0):
            raise ValueError("latitudes outside [-90, 90]")
        if self.south > self.north:
            raise ValueError("south above north")
        if not (-180.0 <= self.west <= 180.0 and -180.0 <= self.east <= 180.0):
            raise ValueError("longitudes outside [-180, 180]")

    def contains(self, point: GeoPoint) -> bool:
        if not self.south <= point.lat <= self.north:
            return False
        if self.west <= self.east:
            return self.west <= point.lon <= self.east
        return point.lon >= self.west or point.lon <= self.east


@dataclass(frozen=True)
class Marker:
    record_id: str
    point: GeoPoint
    label: str


def markers(corpus: Iterable[DatasetRecord],
            viewport: BoundingBox | None = None) -> list[Marker]:
    """One marker per approved single-location record inside the viewport.

    Multi-location and unresolved records never appear; order is by id.
    """
    out = []
    for record in corpus:
        if record.status is not Status.APPROVED:
            continue
        if not isinstance(record.location, SingleLocation):
            continue
        point = record.location.point
        if viewport is not None and not viewport.contains(point):
            continue
        out.append(Marker(record.id, point, record.name))
    out.sort(key=lambda m: m.record_id)
    return out


def records_near_marker(corpus: Iterable[DatasetRecord], point: GeoPoint,
                        radius_km: float = DEFAULT_COLOCATION_RADIUS_KM) -> list[str]:
    """Ids of approved single-location records co-located with a map click,
    newest first."""
    hits = [r for r in corpus
            if r.status is Status.APPROVED
            and isinstance(r.location, SingleLocation)
            and haversine_km(r.location.point, point) <= radius_km]
    hits.sort(key=lambda r: r.id)
    hits.sort(key=lambda r: r.created_at, reverse=True)
    return [r.id for r in hits]


# --------------------------------------------------------------------------
# Geocoding

@dataclass(frozen=True)
class GeocodeResult:
    query: str
    point: GeoPoint
    confidence: float


class GeocoderClient(Protocol):
    def lookup(self, address: str) -> GeocodeResult | None:
        """Resolve an address; None when the place is unknown.

        Raises GeocoderUnavailable on transport failure."""
        ...


def _normalize_address(address: str) -> str:
    return " ".join(address.split()).casefold()


class Geocoder:
    """Caching front for a GeocoderClient.

    The cache is keyed by normalized address and supports concurrent
    readers; writes are serialized. NoMatch results are cached too, so a
    flaky form resubmission does not re-query the backend.
    """

    def __init__(self, client: GeocoderClient):
        self._client = client
        self._cache: dict[str, GeocodeResult | None] = {}
        self._lock = threading.Lock()

    def geocode(self, address: str) -> GeocodeResult:
        address = address.strip()
        if not address:
            raise ValueError("address must be non-empty")
        key = _normalize_address(address)
        with self._lock:
            if key in self._cache:
                hit = self._cache[key]
                if hit is None:
                    raise NoMatch(address)
                return hit
        result = self._client.lookup(address)
        with self._lock:
            self._cache[key] = result
        if result is None:
            raise NoMatch(address)
        return result


class FixtureGazetteer:
    """Offline gazetteer backed by a tab-separated file:
    ``name<TAB>lat<TAB>lon<TAB>confidence``, matched on normalized name."""

    def __init__(self, path: Path | str):
        self._entries: dict[str, GeocodeResult] = {}
        text = Path(path).read_text(encoding="utf-8")
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 4:
                raise ValueError(f"{path}:{lineno}: expected 4 tab-separated fields")
            name, lat, lon, confidence = parts
            self._entries[_normalize_address(name)] = GeocodeResult(
                query=name, point=GeoPoint(float(lat), float(lon)),
                confidence=float(confidence))

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, address: str) -> GeocodeResult | None:
        hit = self._entries.get(_normalize_address(address))
        if hit is None:
            return None
        return GeocodeResult(query=address, point=hit.point, confidence=hit.confidence)


class HttpGeocoder:
    """HTTP gazetteer client.

    Sends ``GET <url>?q=<address>`` (plus ``key`` when configured) and
    expects ``{"results": [{"lat": .., "lon": .., "confidence": ..}, ...]}``;
    an empty result list means no match. A minimum interval between
    requests is enforced globally, regardless of caller parallelism.
    """

    def __init__(self, url: str, api_key: str | None = None, *,
                 timeout: float = 5.0, min_interval_s: float = 1.0):
        self._url = url
        self._api_key = api_key
        self._min_interval = min_interval_s
        self._last_request = 0.0
        self._throttle = threading.Lock()
        self._http = httpx.Client(timeout=timeout)

    def lookup(self, address: str) -> GeocodeResult | None:
        params = {"q": address}
        if self._api_key:
            params["key"] = self._api_key
        with self._throttle:
            wait = self._last_request + self._min_interval - time.monotonic()
            if wait > 0:
                time.sleep(wait)
            self._last_request = time.monotonic()
        try:
            response = self._http.get(self._url, params=params)
        except httpx.HTTPError as exc:
            raise GeocoderUnavailable(str(exc)) from exc
        if response.status_code != 200:
            raise GeocoderUnavailable(f"geocoder answered HTTP {response.status_code}")
        try:
            results = response.json()["results"]
            if not results:
                return None
            first = results[0]
            return GeocodeResult(
                query=address,
                point=GeoPoint(float(first["lat"]), float(first["lon"])),
                confidence=float(first.get("confidence", 1.0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise GeocoderUnavailable(f"malformed geocoder response: {exc}") from exc
