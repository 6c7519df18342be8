"""Service configuration: YAML file plus environment overrides.

Environment variables win over the file: EOD_BIND, EOD_DATA_DIR,
EOD_MODERATOR_TOKENS ("label:token,label2:token2"), EOD_GEOCODER_URL.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from .geo import DEFAULT_COLOCATION_RADIUS_KM

DEFAULT_BIND = "127.0.0.1:8080"
DEFAULT_MAX_UPLOAD_BYTES = 4 * 1024 * 1024
DEFAULT_SUBMISSIONS_PER_HOUR = 10


@dataclass(frozen=True)
class GeocoderConfig:
    """mode "fixture" uses the bundled gazetteer (or gazetteer_path);
    mode "http" talks to url with the optional api_key."""

    mode: str = "fixture"
    url: str | None = None
    api_key: str | None = None
    timeout_s: float = 5.0
    min_interval_s: float = 1.0
    gazetteer_path: Path | None = None


@dataclass(frozen=True)
class ApiConfig:
    data_dir: Path = Path("./data")
    bind: str = DEFAULT_BIND
    moderator_tokens: dict[str, str] = field(default_factory=dict)  # token -> label
    dev_mode: bool = False
    submissions_per_hour: int = DEFAULT_SUBMISSIONS_PER_HOUR
    max_upload_bytes: int = DEFAULT_MAX_UPLOAD_BYTES
    colocation_radius_km: float = DEFAULT_COLOCATION_RADIUS_KM
    cors_origins: tuple[str, ...] = ("*",)
    geocoder: GeocoderConfig = field(default_factory=GeocoderConfig)

    def __post_init__(self):
        if not self.dev_mode and not self.moderator_tokens:
            raise ValueError("at least one moderator token is required "
                             "(set dev_mode: true to run without)")
        if self.submissions_per_hour <= 0 or self.max_upload_bytes <= 0:
            raise ValueError("limits must be positive")
        if self.colocation_radius_km <= 0:
            raise ValueError("colocation_radius_km must be positive")

    @property
    def host(self) -> str:
        return self.bind.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.bind.rsplit(":", 1)[1])


def _parse_tokens(raw: str) -> dict[str, str]:
    tokens: dict[str, str] = {}
    for i, entry in enumerate(p for p in raw.split(",") if p.strip()):
        label, sep, token = entry.strip().partition(":")
        if not sep:
            label, token = f"moderator-{i + 1}", entry.strip()
        tokens[token.strip()] = label.strip()
    return tokens


def load_config(path: Path | str | None = None,
                env: dict[str, str] | None = None) -> ApiConfig:
    """Build the runtime config from an optional YAML file and the environment."""
    env = os.environ if env is None else env
    doc: dict = {}
    if path is not None:
        loaded = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ValueError(f"{path}: top level must be a mapping")
        doc = loaded

    geo_doc = doc.get("geocoder") or {}
    geocoder = GeocoderConfig(
        mode=geo_doc.get("mode", "fixture"),
        url=geo_doc.get("url"),
        api_key=geo_doc.get("api_key"),
        timeout_s=float(geo_doc.get("timeout_s", 5.0)),
        min_interval_s=float(geo_doc.get("min_interval_s", 1.0)),
        gazetteer_path=(Path(geo_doc["gazetteer_path"])
                        if geo_doc.get("gazetteer_path") else None),
    )
    if env.get("EOD_GEOCODER_URL"):
        geocoder = GeocoderConfig(
            mode="http", url=env["EOD_GEOCODER_URL"], api_key=geocoder.api_key,
            timeout_s=geocoder.timeout_s, min_interval_s=geocoder.min_interval_s)

    tokens_doc = doc.get("moderator_tokens") or {}
    # YAML maps label -> token; internally we key by token.
    tokens = {str(token): str(label) for label, token in tokens_doc.items()}
    if env.get("EOD_MODERATOR_TOKENS"):
        tokens = _parse_tokens(env["EOD_MODERATOR_TOKENS"])

    return ApiConfig(
        data_dir=Path(env.get("EOD_DATA_DIR") or doc.get("data_dir", "./data")),
        bind=env.get("EOD_BIND") or doc.get("bind", DEFAULT_BIND),
        moderator_tokens=tokens,
        dev_mode=bool(doc.get("dev_mode", False)),
        submissions_per_hour=int(doc.get("submissions_per_hour",
                                         DEFAULT_SUBMISSIONS_PER_HOUR)),
        max_upload_bytes=int(doc.get("max_upload_bytes", DEFAULT_MAX_UPLOAD_BYTES)),
        colocation_radius_km=float(doc.get("colocation_radius_km",
                                           DEFAULT_COLOCATION_RADIUS_KM)),
        cors_origins=tuple(doc.get("cors_origins", ("*",))),
        geocoder=geocoder,
    )
