from pathlib import Path

import pytest

from eod.config import ApiConfig, GeocoderConfig, load_config


class TestApiConfigInvariants:
    def test_non_dev_requires_a_moderator_token(self):
        with pytest.raises(ValueError):
            ApiConfig(moderator_tokens={})
        ApiConfig(moderator_tokens={}, dev_mode=True)  # dev mode is fine

    def test_limits_must_be_positive(self):
        with pytest.raises(ValueError):
            ApiConfig(moderator_tokens={"t": "m"}, submissions_per_hour=0)
        with pytest.raises(ValueError):
            ApiConfig(moderator_tokens={"t": "m"}, max_upload_bytes=-1)
        with pytest.raises(ValueError):
            ApiConfig(moderator_tokens={"t": "m"}, colocation_radius_km=0)

    def test_bind_splits_into_host_and_port(self):
        config = ApiConfig(moderator_tokens={"t": "m"}, bind="0.0.0.0:9999")
        assert config.host == "0.0.0.0"
        assert config.port == 9999


class TestLoadConfig:
    def test_defaults_with_empty_env(self):
        config = load_config(env={"EOD_MODERATOR_TOKENS": "ops:sesame"})
        assert config.bind == "127.0.0.1:8080"
        assert config.moderator_tokens == {"sesame": "ops"}
        assert config.geocoder.mode == "fixture"
        assert config.submissions_per_hour == 10

    def test_yaml_file(self, tmp_path):
        path = tmp_path / "eod.yaml"
        path.write_text(
            "bind: 0.0.0.0:9000\n"
            "data_dir: /srv/eod\n"
            "moderator_tokens:\n"
            "  alice: token-a\n"
            "  bob: token-b\n"
            "submissions_per_hour: 3\n"
            "colocation_radius_km: 10.5\n"
            "geocoder:\n"
            "  mode: http\n"
            "  url: https://geo.example.org/lookup\n"
            "  api_key: k1\n",
            encoding="utf-8")
        config = load_config(path, env={})
        assert config.bind == "0.0.0.0:9000"
        assert config.data_dir == Path("/srv/eod")
        assert config.moderator_tokens == {"token-a": "alice", "token-b": "bob"}
        assert config.submissions_per_hour == 3
        assert config.colocation_radius_km == 10.5
        assert config.geocoder.mode == "http"
        assert config.geocoder.url == "https://geo.example.org/lookup"
        assert config.geocoder.api_key == "k1"

    def test_env_overrides_file(self, tmp_path):
        path = tmp_path / "eod.yaml"
        path.write_text("bind: 0.0.0.0:9000\nmoderator_tokens:\n  alice: token-a\n",
                        encoding="utf-8")
        config = load_config(path, env={
            "EOD_BIND": "127.0.0.1:7777",
            "EOD_DATA_DIR": "/tmp/other",
            "EOD_MODERATOR_TOKENS": "carol:token-c,token-d",
        })
        assert config.bind == "127.0.0.1:7777"
        assert config.data_dir == Path("/tmp/other")
        assert config.moderator_tokens == {"token-c": "carol",
                                           "token-d": "moderator-2"}

    def test_geocoder_url_env_switches_to_http(self):
        config = load_config(env={
            "EOD_MODERATOR_TOKENS": "ops:sesame",
            "EOD_GEOCODER_URL": "https://geo.example.org/q",
        })
        assert config.geocoder.mode == "http"
        assert config.geocoder.url == "https://geo.example.org/q"

    def test_bad_top_level_rejected(self, tmp_path):
        path = tmp_path / "eod.yaml"
        path.write_text("- just\n- a list\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_config(path, env={})

    def test_dev_mode_allows_no_tokens(self, tmp_path):
        path = tmp_path / "eod.yaml"
        path.write_text("dev_mode: true\n", encoding="utf-8")
        assert load_config(path, env={}).moderator_tokens == {}
