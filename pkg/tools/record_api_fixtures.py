#!/usr/bin/env python3
"""Record real API responses into frontend/tests/fixtures/recorded.json.

The web client's contract tests replay these instead of a live server. The
query strings are produced by the server's own canonical printer, so the
client serializer is tested against exactly what the server round-trips.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from fastapi.testclient import TestClient     # noqa: E402

from eod import fixtures                      # noqa: E402
from eod.api import create_app, print_query_params  # noqa: E402
from eod.config import ApiConfig, GeocoderConfig    # noqa: E402
from eod.model import GeoPoint, Sensor, Task        # noqa: E402
from eod.query import (FacetMode, MultiLocationOnly, NameContains, Near,  # noqa: E402
                       QueryFilters)
from eod.store import Store                   # noqa: E402

OUT = ROOT / "frontend" / "tests" / "fixtures" / "recorded.json"
TOKEN = "recorded-moderator-token"

QUERY_STATES = {
    "empty_defaults": QueryFilters(),
    "worked_example": QueryFilters(
        sensors=frozenset({Sensor("sar"), Sensor("optical")}),
        sensors_mode=FacetMode.ALL,
        tasks=frozenset({Task("semantic_segmentation")}),
        tasks_mode=FacetMode.ALL),
    "or_with_location": QueryFilters(
        sensors=frozenset({Sensor("optical"), Sensor("thermal")}),
        sensors_mode=FacetMode.ANY,
        location=NameContains("berlin")),
    "multi_location_page2": QueryFilters(
        tasks=frozenset({Task("regression")}),
        tasks_mode=FacetMode.ANY,
        location=MultiLocationOnly(), page=2, per_page=5),
    "near_berlin": QueryFilters(
        location=Near(GeoPoint(52.52, 13.405), 25.5)),
}

INVALID_SUBMISSION = {
    "name": "Recorded Invalid",
    "published_on": "13/40/2022",
    "location": "Berlin, Germany",
    "sensors": "sar",
    "tasks": "regression",
    "size_value": "0",
    "size_unit": "GB",
    "description": "recorded invalid submission",
    "submitter_name": "Recorder",
    "submitter_email": "not-an-email",
}


def main():
    store = Store(None)
    fixtures.seed_store(store)
    config = ApiConfig(data_dir=None, moderator_tokens={TOKEN: "recorder"},
                       geocoder=GeocoderConfig(mode="fixture"))
    app = create_app(config, store=store)

    responses = {}
    query_strings = {}

    with TestClient(app) as client:
        def record_get(path):
            response = client.get(path)
            responses[f"GET {path}"] = {
                "status": response.status_code,
                "body": response.json(),
            }
            return response

        record_get("/api/datasets")
        for name, filters in QUERY_STATES.items():
            wire = print_query_params(filters)
            query_strings[name] = wire
            record_get(f"/api/datasets?{wire}")
        record_get("/api/datasets/recent?n=5")
        record_get("/api/datasets/popular?n=5")
        record_get("/api/markers")
        record_get("/api/markers/at?lat=52.52&lon=13.405")
        listing = responses["GET /api/datasets"]["body"]["items"]
        ids = [listing[0]["id"], listing[1]["id"], listing[2]["id"]]
        record_get(f"/api/compare?ids={','.join(ids)}")
        record_get(f"/api/datasets/{listing[0]['slug']}")

        invalid = client.post("/api/datasets", data=INVALID_SUBMISSION,
                              files={"teaser": ("t.png", b"\x89PNG r", "image/png")})
        responses["POST /api/datasets#invalid"] = {
            "status": invalid.status_code,
            "body": invalid.json(),
        }

    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(
        {"query_strings": query_strings, "responses": responses},
        indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {OUT} ({len(responses)} responses)")


if __name__ == "__main__":
    main()
