"""Bundled data files: the offline gazetteer, the launch catalogue
snapshot (14 synthetic records), and the placeholder teaser image."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .store import Store


def _data_path(name: str) -> Path:
    return Path(resources.files("eod.fixtures_data") / name)


def gazetteer_path() -> Path:
    return _data_path("cities.tsv")


def launch_snapshot_path() -> Path:
    return _data_path("launch.snapshot")


def placeholder_teaser() -> bytes:
    return _data_path("teaser.png").read_bytes()


def seed_store(store: Store, snapshot_path: Path | str | None = None) -> int:
    """Import a pre-approved snapshot and install the bundled teaser for
    every record that references it (snapshots carry metadata only)."""
    path = Path(snapshot_path) if snapshot_path else launch_snapshot_path()
    count = store.import_snapshot(path.read_bytes())
    teaser = placeholder_teaser()
    for record in store.records():
        if record.teaser_image.byte_length == len(teaser):
            store.put_teaser(record.id, teaser)
    return count
