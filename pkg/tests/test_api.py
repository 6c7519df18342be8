import io
import json
import random
from datetime import date

import pytest
from fastapi.testclient import TestClient

from eod import fixtures
from eod.api import (ERROR_STATUS, create_app, parse_query_params,
                     print_query_params, public_view)
from eod.config import ApiConfig, GeocoderConfig
from eod.errors import BadParam
from eod.geo import FixtureGazetteer, Geocoder
from eod.model import Sensor, Status, Task, validate_submission
from eod.query import FacetMode, MultiLocationOnly, NameContains, Near, QueryFilters
from eod.store import Decision, Store

from generators import make_record, random_filters

TOKEN = "sesame-0123456789"
OTHER_TOKEN = "sesame-012345678X"


def make_config(**overrides) -> ApiConfig:
    base = dict(
        data_dir=None,
        moderator_tokens={TOKEN: "mod-a"},
        submissions_per_hour=1000,
        geocoder=GeocoderConfig(mode="fixture"),
    )
    base.update(overrides)
    return ApiConfig(**base)


@pytest.fixture
def seeded_client(seeded_store):
    app = create_app(make_config(), store=seeded_store)
    with TestClient(app) as client:
        yield client


@pytest.fixture
def empty_client(mem_store):
    app = create_app(make_config(), store=mem_store)
    with TestClient(app) as client:
        yield client


def submission_form(**overrides):
    data = {
        "name": "Wetland Radar Mosaics",
        "published_on": "03/01/2022",
        "location": "Berlin, Germany",
        "sensors": "sar,optical",
        "tasks": "semantic_segmentation",
        "size_value": "500",
        "size_unit": "MB",
        "download_url": "https://example.org/wetland.zip",
        "description": "Radar mosaics of seasonal wetlands.",
        "submitter_name": "Ada Example",
        "submitter_email": "ada@example.org",
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    for key, value in list(data.items()):
        if value is REMOVE:
            del data[key]
    files = {"teaser": ("teaser.png", b"\x89PNG fake", "image/png")}
    return data, files


REMOVE = object()


class TestParseQueryParams:
    def test_worked_example_string(self):
        filters = parse_query_params([
            ("sensors", "sar,optical"), ("sensors_mode", "and"),
            ("tasks", "semantic_segmentation")])
        assert filters.sensors == frozenset({Sensor("sar"), Sensor("optical")})
        assert filters.sensors_mode is FacetMode.ALL
        assert filters.tasks == frozenset({Task("semantic_segmentation")})
        assert filters.tasks_mode is FacetMode.ALL
        assert filters.location is None

    def test_empty_is_unconstrained_defaults(self):
        filters = parse_query_params([])
        assert filters == QueryFilters()
        assert (filters.page, filters.per_page) == (1, 20)

    def test_repeated_values_merge(self):
        filters = parse_query_params([("sensors", "sar"), ("sensors", "optical")])
        assert filters.sensors == frozenset({Sensor("sar"), Sensor("optical")})

    def test_case_insensitive_names_and_or_mode(self):
        filters = parse_query_params([("sensors", "SAR"), ("sensors_mode", "OR")])
        assert filters.sensors_mode is FacetMode.ANY

    def test_near_out_of_range_lat(self):
        with pytest.raises(BadParam) as err:
            parse_query_params([("near", "91,0,10")])
        assert any(i.field == "near" for i in err.value.issues)

    def test_near_happy_path(self):
        filters = parse_query_params([("near", "52.5,13.4,25")])
        assert isinstance(filters.location, Near)
        assert (filters.location.center.lat, filters.location.center.lon) == (52.5, 13.4)
        assert filters.location.radius_km == 25.0

    def test_near_malformed(self):
        for bad in ("1,2", "a,b,c", "1,2,3,4", "1,2,-5", "1,2,0"):
            with pytest.raises(BadParam):
                parse_query_params([("near", bad)])

    def test_conflicting_location_params(self):
        with pytest.raises(BadParam):
            parse_query_params([("location", "berlin"), ("near", "1,2,3")])
        with pytest.raises(BadParam):
            parse_query_params([("multi_location", "true"), ("location", "x")])

    def test_multi_location_false_is_absent(self):
        assert parse_query_params([("multi_location", "false")]).location is None
        assert isinstance(parse_query_params([("multi_location", "true")]).location,
                          MultiLocationOnly)

    def test_unknown_taxonomy_value(self):
        with pytest.raises(BadParam):
            parse_query_params([("sensors", "sar,warp_drive")])

    def test_page_bounds(self):
        with pytest.raises(BadParam):
            parse_query_params([("page", "0")])
        with pytest.raises(BadParam):
            parse_query_params([("per_page", "101")])
        with pytest.raises(BadParam):
            parse_query_params([("per_page", "abc")])

    def test_unknown_keys_ignored(self):
        assert parse_query_params([("utm_source", "x")]) == QueryFilters()

    def test_print_parse_round_trip_500_random(self):
        rng = random.Random(31415)
        from urllib.parse import parse_qsl
        for _ in range(500):
            filters = random_filters(rng)
            wire = print_query_params(filters)
            assert parse_query_params(parse_qsl(wire, keep_blank_values=True)) == filters


class TestPublicEndpoints:
    def test_healthz(self, seeded_client):
        assert seeded_client.get("/healthz").json() == {"status": "ok"}

    def test_empty_filters_list_all_14(self, seeded_client):
        body = seeded_client.get("/api/datasets").json()
        assert body["total"] == 14
        assert len(body["items"]) == 14
        assert body["page"] == 1 and body["per_page"] == 20

    def test_worked_example_query(self, seeded_client, seeded_store):
        body = seeded_client.get(
            "/api/datasets?sensors=sar,optical&sensors_mode=and"
            "&tasks=semantic_segmentation").json()
        want = {r.id for r in seeded_store.records()
                if {Sensor("sar"), Sensor("optical")} <= r.sensors
                and Task("semantic_segmentation") in r.tasks}
        assert {item["id"] for item in body["items"]} == want
        assert body["total"] == 2

    def test_pagination(self, seeded_client):
        first = seeded_client.get("/api/datasets?per_page=5").json()
        assert len(first["items"]) == 5 and first["total"] == 14
        last = seeded_client.get("/api/datasets?per_page=5&page=3").json()
        assert len(last["items"]) == 4

    def test_detail_increments_views_exactly_once_per_get(self, seeded_client):
        item = seeded_client.get("/api/datasets?per_page=1").json()["items"][0]
        before = item["view_count"]
        first = seeded_client.get(f"/api/datasets/{item['slug']}").json()
        second = seeded_client.get(f"/api/datasets/{item['slug']}").json()
        assert first["view_count"] == before + 1
        assert second["view_count"] == before + 2

    def test_detail_unknown_slug_404(self, seeded_client):
        response = seeded_client.get("/api/datasets/never-heard-of-it")
        assert response.status_code == 404
        assert response.json()["error"] == "UnknownId"

    def test_recent_and_popular(self, seeded_client, seeded_store):
        from eod.query import rank_popular, rank_recent
        recent = seeded_client.get("/api/datasets/recent?n=3").json()["items"]
        assert [r["id"] for r in recent] == \
            [r.id for r in rank_recent(seeded_store.records(), 3)]
        popular = seeded_client.get("/api/datasets/popular?n=3").json()["items"]
        assert [r["id"] for r in popular] == \
            [r.id for r in rank_popular(seeded_store.records(), 3)]

    def test_ranking_n_clamped(self, seeded_client):
        assert len(seeded_client.get("/api/datasets/recent?n=500").json()["items"]) == 14
        assert len(seeded_client.get("/api/datasets/recent?n=0").json()["items"]) == 1
        assert seeded_client.get("/api/datasets/recent?n=two").status_code == 400

    def test_markers_and_marker_click(self, seeded_client, seeded_store):
        from eod.geo import markers
        listed = seeded_client.get("/api/markers").json()["markers"]
        expected = markers(seeded_store.records())
        assert [(m["record_id"], m["lat"], m["lon"]) for m in listed] == \
            [(m.record_id, m.point.lat, m.point.lon) for m in expected]
        # click the first marker: its record must come back
        first = listed[0]
        body = seeded_client.get(
            f"/api/markers/at?lat={first['lat']}&lon={first['lon']}").json()
        assert first["record_id"] in body["ids"]
        assert [item["id"] for item in body["items"]] == body["ids"]

    def test_markers_bbox_filtering(self, seeded_client):
        # central-europe box: includes Berlin and Potsdam fixture records
        body = seeded_client.get("/api/markers?bbox=45,5,55,20").json()
        labels = {m["label"] for m in body["markers"]}
        assert "CityFusion Berlin" in labels
        assert all(45 <= m["lat"] <= 55 and 5 <= m["lon"] <= 20
                   for m in body["markers"])

    def test_markers_bad_bbox(self, seeded_client):
        assert seeded_client.get("/api/markers?bbox=1,2,3").status_code == 400
        assert seeded_client.get("/api/markers?bbox=10,0,-10,5").status_code == 400

    def test_markers_at_requires_coords(self, seeded_client):
        assert seeded_client.get("/api/markers/at?lat=5").status_code == 400
        assert seeded_client.get("/api/markers/at?lat=95&lon=0").status_code == 400

    def test_compare(self, seeded_client):
        items = seeded_client.get("/api/datasets?per_page=3").json()["items"]
        ids = [items[0]["id"], items[1]["id"], items[2]["id"]]
        body = seeded_client.get(f"/api/compare?ids={','.join(ids)}").json()
        assert body["columns"] == ids
        assert [row["label"] for row in body["rows"]] == \
            ["location", "sensors", "tasks", "size", "url", "views", "description"]
        assert all(len(row["values"]) == 3 for row in body["rows"])

    def test_compare_single_id_400(self, seeded_client):
        response = seeded_client.get("/api/compare?ids=x")
        assert response.status_code == 400
        assert response.json()["error"] == "TooFewIds"

    def test_teaser_served_with_media_type(self, seeded_client):
        item = seeded_client.get("/api/datasets?per_page=1").json()["items"][0]
        response = seeded_client.get(item["teaser_url"])
        assert response.status_code == 200
        assert response.headers["content-type"] == "image/png"
        assert response.content == fixtures.placeholder_teaser()

    def test_reads_do_not_mutate_store_except_detail(self, seeded_client, seeded_store):
        item = seeded_client.get("/api/datasets?per_page=2").json()["items"]
        urls = ["/api/datasets", "/api/datasets?sensors=sar",
                "/api/datasets/recent?n=5", "/api/datasets/popular?n=5",
                "/api/markers", "/api/markers/at?lat=52.52&lon=13.405",
                f"/api/compare?ids={item[0]['id']},{item[1]['id']}",
                "/healthz"]
        before = seeded_store.records()
        for url in urls:
            assert seeded_client.get(url).status_code == 200
            assert seeded_store.records() == before


class TestSubmissionFlow:
    def test_end_to_end_moderation_gate(self, empty_client):
        data, files = submission_form()
        response = empty_client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 202
        body = response.json()
        assert body["status"] == "pending"
        record_id = body["id"]

        # invisible while pending
        assert empty_client.get("/api/datasets").json()["total"] == 0
        assert empty_client.get("/api/datasets/wetland-radar-mosaics").status_code == 404

        # appears right after approval
        approve = empty_client.post(
            f"/api/admin/datasets/{record_id}/approve",
            headers={"Authorization": f"Bearer {TOKEN}"})
        assert approve.status_code == 200
        listing = empty_client.get("/api/datasets").json()
        assert listing["total"] == 1
        assert listing["items"][0]["id"] == record_id
        assert listing["items"][0]["location"] == "Berlin, Germany"

    def test_submission_geocodes_address(self, empty_client, mem_store):
        data, files = submission_form()
        record_id = empty_client.post("/api/datasets", data=data, files=files).json()["id"]
        record = mem_store.get(record_id)
        assert record.location.point.lat == 52.52
        assert record.flags == frozenset()

    def test_unknown_address_flagged_not_rejected(self, empty_client, mem_store):
        data, files = submission_form(location="zzzzqqq nowhere")
        response = empty_client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 202
        record = mem_store.get(response.json()["id"])
        assert "needs_geocoding" in record.flags

    def test_low_confidence_geocode_flagged_for_moderators(self, mem_store):
        from eod.geo import Geocoder, GeocodeResult
        from eod.model import GeoPoint

        class VagueClient:
            def lookup(self, address):
                return GeocodeResult(address, GeoPoint(10.0, 20.0), 0.3)

        app = create_app(make_config(), store=mem_store,
                         geocoder=Geocoder(VagueClient()))
        with TestClient(app) as client:
            data, files = submission_form(location="Ambiguous Hamlet")
            response = client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 202
        record = mem_store.get(response.json()["id"])
        assert "low_confidence_location" in record.flags
        assert record.location.point == GeoPoint(10.0, 20.0)

    def test_geocoder_outage_stores_unresolved_submission(self, mem_store):
        from eod.errors import GeocoderUnavailable
        from eod.geo import Geocoder
        from eod.model import UnresolvedLocation

        class DownClient:
            def lookup(self, address):
                raise GeocoderUnavailable("socket timeout")

        app = create_app(make_config(), store=mem_store,
                         geocoder=Geocoder(DownClient()))
        with TestClient(app) as client:
            data, files = submission_form(location="Berlin, Germany")
            response = client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 202
        record = mem_store.get(response.json()["id"])
        assert record.location == UnresolvedLocation("Berlin, Germany")
        assert "needs_geocoding" in record.flags

    def test_validation_errors_all_listed(self, empty_client):
        data, files = submission_form(download_url=REMOVE,
                                      submitter_email="not-an-email")
        response = empty_client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 400
        errors = response.json()["errors"]
        assert {(e["field"], e["code"]) for e in errors} == {
            ("download_url", "missing_field"),
            ("submitter_email", "bad_email")}

    def test_oversize_teaser_is_413(self, mem_store):
        config = make_config(max_upload_bytes=8 * 1024 * 1024)
        app = create_app(config, store=mem_store)
        with TestClient(app) as client:
            data, _ = submission_form()
            files = {"teaser": ("t.png", b"x" * (2 * 1024 * 1024 + 1), "image/png")}
            response = client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 413
        assert any(e["code"] == "oversize_teaser"
                   for e in response.json()["errors"])

    def test_oversize_body_is_413(self, mem_store):
        config = make_config(max_upload_bytes=1000)
        app = create_app(config, store=mem_store)
        with TestClient(app) as client:
            data, _ = submission_form()
            files = {"teaser": ("t.png", b"x" * 5000, "image/png")}
            response = client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 413
        assert response.json()["error"] == "OversizeUpload"

    def test_rate_limit_429(self, mem_store):
        config = make_config(submissions_per_hour=2)
        app = create_app(config, store=mem_store)
        with TestClient(app) as client:
            for i in range(2):
                data, files = submission_form(name=f"DS {i}")
                assert client.post("/api/datasets", data=data,
                                   files=files).status_code == 202
            data, files = submission_form(name="DS 2")
            response = client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 429

    def test_repeated_sensor_fields(self, empty_client, mem_store):
        data, files = submission_form()
        data["sensors"] = ["sar", "optical"]
        response = empty_client.post("/api/datasets", data=data, files=files)
        assert response.status_code == 202
        record = mem_store.get(response.json()["id"])
        assert record.sensors == frozenset({Sensor("sar"), Sensor("optical")})


class TestModerationEndpoints:
    def _pending_id(self, client) -> str:
        data, files = submission_form()
        return client.post("/api/datasets", data=data, files=files).json()["id"]

    def test_missing_token_401(self, empty_client):
        record_id = self._pending_id(empty_client)
        response = empty_client.post(f"/api/admin/datasets/{record_id}/approve")
        assert response.status_code == 401

    def test_token_differing_in_last_byte_401(self, empty_client):
        record_id = self._pending_id(empty_client)
        response = empty_client.post(
            f"/api/admin/datasets/{record_id}/approve",
            headers={"Authorization": f"Bearer {OTHER_TOKEN}"})
        assert response.status_code == 401

    def test_double_moderation_409(self, empty_client):
        record_id = self._pending_id(empty_client)
        auth = {"Authorization": f"Bearer {TOKEN}"}
        assert empty_client.post(f"/api/admin/datasets/{record_id}/approve",
                                 headers=auth).status_code == 200
        response = empty_client.post(f"/api/admin/datasets/{record_id}/reject",
                                     headers=auth, json={"reason": "nah"})
        assert response.status_code == 409

    def test_reject_with_reason_recorded(self, empty_client, mem_store):
        record_id = self._pending_id(empty_client)
        auth = {"Authorization": f"Bearer {TOKEN}"}
        response = empty_client.post(f"/api/admin/datasets/{record_id}/reject",
                                     headers=auth, json={"reason": "broken link"})
        assert response.json()["status"] == "rejected"
        assert mem_store.events()[-1].reason == "broken link"
        assert mem_store.events()[-1].moderator_id == "mod-a"

    def test_admin_pending_list_with_private_fields(self, empty_client):
        record_id = self._pending_id(empty_client)
        auth = {"Authorization": f"Bearer {TOKEN}"}
        body = empty_client.get("/api/admin/datasets", headers=auth).json()
        assert [item["id"] for item in body["items"]] == [record_id]
        assert body["items"][0]["private"]["submitter_email"] == "ada@example.org"
        assert empty_client.get("/api/admin/datasets").status_code == 401

    def test_admin_unknown_id_404(self, empty_client):
        auth = {"Authorization": f"Bearer {TOKEN}"}
        response = empty_client.post("/api/admin/datasets/NOPE/approve", headers=auth)
        assert response.status_code == 404


class TestCors:
    def test_cross_origin_reads_allowed_for_configured_origin(self, seeded_store):
        app = create_app(make_config(cors_origins=("https://ui.example.org",)),
                         store=seeded_store)
        with TestClient(app) as client:
            response = client.get("/api/datasets",
                                  headers={"Origin": "https://ui.example.org"})
            assert response.headers.get("access-control-allow-origin") == \
                "https://ui.example.org"
            preflight = client.options("/api/datasets", headers={
                "Origin": "https://ui.example.org",
                "Access-Control-Request-Method": "POST",
            })
            assert preflight.status_code == 200


class TestNoPrivateLeakage:
    def test_sentinel_submitter_never_in_public_bodies(self, empty_client):
        sentinel_name = "ZZSECRETNAMEZZ"
        sentinel_local = "zzsecretlocalzz"
        data, files = submission_form(submitter_name=sentinel_name,
                                      submitter_email=f"{sentinel_local}@example.org")
        record_id = empty_client.post("/api/datasets", data=data,
                                      files=files).json()["id"]
        empty_client.post(f"/api/admin/datasets/{record_id}/approve",
                          headers={"Authorization": f"Bearer {TOKEN}"})
        slug = empty_client.get("/api/datasets").json()["items"][0]["slug"]
        urls = ["/api/datasets", f"/api/datasets/{slug}",
                "/api/datasets/recent?n=5", "/api/datasets/popular?n=5",
                "/api/markers", "/api/markers/at?lat=52.52&lon=13.405"]
        for url in urls:
            response = empty_client.get(url)
            assert response.status_code == 200
            assert sentinel_name not in response.text
            assert sentinel_local not in response.text

    def test_randomized_records_scrub(self, mem_store):
        rng = random.Random(77)
        for i in range(100):
            body = json.dumps(public_view(make_record(rng, i)))
            assert f"PRIVATE-NAME-{i}-X" not in body
            assert f"private-{i}-x" not in body


class TestErrorMappingTotality:
    def test_every_documented_error_maps_to_its_status(self, mem_store):
        # the rate limiter counts every submission attempt, including ones
        # that later fail validation or the size cap: 3 attempts fit, #4 trips
        config = make_config(submissions_per_hour=3, max_upload_bytes=4096)
        app = create_app(config, store=mem_store)
        observed = {}
        with TestClient(app) as client:
            auth = {"Authorization": f"Bearer {TOKEN}"}
            observed["BadParam"] = client.get("/api/datasets?near=91,0,10").status_code
            observed["TooFewIds"] = client.get("/api/compare?ids=x").status_code
            data, files = submission_form(download_url=REMOVE)
            observed["SubmissionInvalid"] = client.post(
                "/api/datasets", data=data, files=files).status_code
            observed["Unauthorized"] = client.post(
                "/api/admin/datasets/X/approve").status_code
            observed["UnknownId"] = client.get("/api/datasets/none-such").status_code

            data, files = submission_form()
            record_id = client.post("/api/datasets", data=data,
                                    files=files).json()["id"]
            observed["NotPublic"] = client.get(f"/api/teasers/{record_id}").status_code
            client.post(f"/api/admin/datasets/{record_id}/approve", headers=auth)
            client.post(f"/api/admin/datasets/{record_id}/approve", headers=auth)
            observed["InvalidTransition"] = client.post(
                f"/api/admin/datasets/{record_id}/approve", headers=auth).status_code
            big = {"teaser": ("t.png", b"x" * 8192, "image/png")}
            data, _ = submission_form(name="Big One")
            observed["OversizeUpload"] = client.post(
                "/api/datasets", data=data, files=big).status_code
            data, files = submission_form(name="Limited")
            observed["RateLimited"] = client.post(
                "/api/datasets", data=data, files=files).status_code

        for exc_type, status in ERROR_STATUS.items():
            assert observed[exc_type.__name__] == status, exc_type.__name__

    def test_status_table_is_total_over_raisable_errors(self):
        # every error the handlers can raise has exactly one documented code
        from eod import errors
        raisable = {errors.BadParam, errors.TooFewIds, errors.SubmissionInvalid,
                    errors.Unauthorized, errors.UnknownId, errors.NotPublic,
                    errors.InvalidTransition, errors.OversizeUpload,
                    errors.RateLimited}
        assert set(ERROR_STATUS) == raisable
