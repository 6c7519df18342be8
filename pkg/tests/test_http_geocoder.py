import threading
import time

import pytest
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from eod.errors import GeocoderUnavailable
from eod.geo import Geocoder, HttpGeocoder

from serverutil import LiveServer


def gazetteer_stub() -> FastAPI:
    app = FastAPI()
    calls = []
    app.state.calls = calls

    @app.get("/lookup")
    def lookup(request: Request):
        calls.append((time.monotonic(), dict(request.query_params)))
        q = request.query_params.get("q", "")
        if q == "Berlin, Germany":
            return {"results": [{"lat": 52.52, "lon": 13.405, "confidence": 0.9}]}
        if q == "slow town":
            time.sleep(2.0)
            return {"results": []}
        if q == "broken":
            return PlainTextResponse("oops", status_code=500)
        if q == "mangled":
            return JSONResponse({"results": [{"lon": "nope"}]})
        return {"results": []}

    return app


@pytest.fixture(scope="module")
def stub():
    app = gazetteer_stub()
    with LiveServer(app) as base_url:
        yield base_url + "/lookup", app.state.calls


class TestHttpGeocoder:
    def test_successful_lookup(self, stub):
        url, _ = stub
        client = HttpGeocoder(url, api_key="k1", min_interval_s=0.0)
        hit = client.lookup("Berlin, Germany")
        assert (hit.point.lat, hit.point.lon) == (52.52, 13.405)
        assert hit.confidence == 0.9

    def test_api_key_sent(self, stub):
        url, calls = stub
        HttpGeocoder(url, api_key="k1", min_interval_s=0.0).lookup("Berlin, Germany")
        assert calls[-1][1] == {"q": "Berlin, Germany", "key": "k1"}

    def test_no_match_is_none(self, stub):
        url, _ = stub
        assert HttpGeocoder(url, min_interval_s=0.0).lookup("atlantis") is None

    def test_http_error_is_unavailable(self, stub):
        url, _ = stub
        with pytest.raises(GeocoderUnavailable):
            HttpGeocoder(url, min_interval_s=0.0).lookup("broken")

    def test_malformed_body_is_unavailable(self, stub):
        url, _ = stub
        with pytest.raises(GeocoderUnavailable):
            HttpGeocoder(url, min_interval_s=0.0).lookup("mangled")

    def test_connection_refused_is_unavailable(self):
        client = HttpGeocoder("http://127.0.0.1:1/lookup", min_interval_s=0.0,
                              timeout=0.5)
        with pytest.raises(GeocoderUnavailable):
            client.lookup("anywhere")

    def test_timeout_is_unavailable(self, stub):
        url, _ = stub
        client = HttpGeocoder(url, min_interval_s=0.0, timeout=0.3)
        with pytest.raises(GeocoderUnavailable):
            client.lookup("slow town")

    def test_rate_limit_holds_under_parallel_callers(self, stub):
        url, calls = stub
        client = HttpGeocoder(url, min_interval_s=0.25)
        start_index = len(calls)

        def worker(i):
            client.lookup(f"place {i}")

        threads = [threading.Thread(target=worker, args=(i,)) for i in range(4)]
        started = time.monotonic()
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        elapsed = time.monotonic() - started
        assert elapsed >= 3 * 0.25  # 4 requests, 3 enforced gaps
        stamps = [ts for ts, _ in calls[start_index:]]
        gaps = [b - a for a, b in zip(stamps, stamps[1:])]
        assert all(gap >= 0.2 for gap in gaps), gaps

    def test_geocoder_cache_spares_the_backend(self, stub):
        url, calls = stub
        geocoder = Geocoder(HttpGeocoder(url, min_interval_s=0.0))
        before = len(calls)
        for _ in range(5):
            geocoder.geocode("Berlin, Germany")
        assert len(calls) - before == 1
