#!/usr/bin/env python3
"""Regenerate the launch catalogue snapshot (14 synthetic, pre-approved
records) at src/eod/fixtures_data/launch.snapshot and fixtures/launch.snapshot.

Every entry is invented; names and descriptions say so. Records go through
the real validate -> submit -> approve pipeline with a fixed clock and
seeded id randomness, so the output is deterministic and canonical.
"""

import random
import sys
from datetime import datetime, timedelta, timezone
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from eod.geo import FixtureGazetteer          # noqa: E402
from eod.model import validate_submission     # noqa: E402
from eod.store import Decision, Store         # noqa: E402

PKG_OUT = ROOT / "src" / "eod" / "fixtures_data" / "launch.snapshot"
REPO_OUT = ROOT / "fixtures" / "launch.snapshot"
TEASER = (ROOT / "src" / "eod" / "fixtures_data" / "teaser.png").read_bytes()
GAZETTEER = FixtureGazetteer(ROOT / "src" / "eod" / "fixtures_data" / "cities.tsv")

BASE = datetime(2021, 11, 15, 9, 30, 0, tzinfo=timezone.utc)

# name, published_on, address (None = multiple locations), sensors, tasks,
# (size value, unit), views, description tail
ENTRIES = [
    ("Coastal Ship Watch", "2019-06-20", "Hamburg, Germany",
     "sar", "object_detection", ("1.2", "GB"), 42,
     "C-band radar scenes of busy shipping lanes with box labels for vessels."),
    ("DualSense Land Cover", "2020-11-05", None,
     "sar,optical", "semantic_segmentation", ("5.5", "GB"), 87,
     "Paired radar and optical patches with land-cover masks over six continents."),
    ("CityFusion Berlin", "2021-03-18", "Berlin, Germany",
     "sar,optical,multispectral", "semantic_segmentation,change_detection", ("2.5", "GB"), 63,
     "Co-registered city tiles for mapping urban classes and construction change."),
    ("SpectraFields", "2018-04-02", "Toulouse, France",
     "multispectral", "semantic_segmentation", ("800", "MB"), 29,
     "Ten-band farmland mosaics with per-pixel crop-type masks."),
    ("HyperCrop Trials", "2020-07-30", "Potsdam, Germany",
     "hyperspectral", "scene_classification,regression", ("12", "GB"), 18,
     "Narrow-band cubes over trial plots, labeled with species and yield."),
    ("Rooftop Lidar Heights", "2019-10-12", "Rotterdam, Netherlands",
     "laser_scanning", "regression", ("3.4", "GB"), 55,
     "Airborne point clouds rasterized to height maps for building regression."),
    ("ThermalCity Nights", "2021-01-25", "Madrid, Spain",
     "thermal", "scene_classification", ("650", "MB"), 12,
     "Nighttime thermal frames tagged by district heat-island intensity."),
    ("Polar Ice Motion", "2018-12-03", "Tromso, Norway",
     "sar", "change_detection", ("7.25", "GB"), 31,
     "Winter radar pairs over fjord ice with drift and break-up annotations."),
    ("GlobalScenes 50k", "2019-02-14", None,
     "optical", "scene_classification", ("4", "GB"), 120,
     "Fifty thousand RGB chips labeled with one of 30 scene categories."),
    ("Delta Rice Paddies", "2020-05-09", "Hanoi, Vietnam",
     "sar,multispectral", "semantic_segmentation", ("1.75", "GB"), 26,
     "Monsoon-season composites of the river delta with paddy extent masks."),
    ("Building Footprints ANZ", "2021-08-21", "Auckland, New Zealand",
     "optical", "instance_segmentation", ("2", "GB"), 44,
     "High-resolution tiles with one polygon per building footprint."),
    ("Oil Slick Radar Archive", "2017-09-27", None,
     "sar", "object_detection,semantic_segmentation", ("9.1", "GB"), 71,
     "A decade of slick detections with outlines, collected from open seas."),
    ("Biomass Plots Amazon", "2021-06-15", "Manaus, Brazil",
     "optical,laser_scanning", "regression", ("15.5", "GB"), 9,
     "Forest plots pairing canopy images with field-measured biomass."),
    ("Harbor Change Pairs", "2020-09-01", "Singapore",
     "optical", "change_detection", ("480", "MB"), 37,
     "Before/after harbor scenes with pixel masks of reclaimed land."),
]


def main():
    now_holder = [BASE]
    store = Store(None, clock=lambda: now_holder[0],
                  rng=random.Random(20220401))

    for i, (name, published, address, sensors, tasks, size, views, tail) in enumerate(ENTRIES):
        raw = {
            "name": name,
            "published_on": published,
            "sensors": sensors,
            "tasks": tasks,
            "size_value": size[0],
            "size_unit": size[1],
            "download_url": f"https://datasets.example.org/{name.lower().split()[0]}",
            "teaser": TEASER,
            "teaser_media_type": "image/png",
            "description": f"Synthetic launch-catalogue entry: {tail}",
            "submitter_name": "Launch Curation Team",
            "submitter_email": "curators@example.org",
        }
        if address is None:
            raw["multiple_locations"] = "true"
        else:
            hit = GAZETTEER.lookup(address)
            raw["location"] = address
            raw["lat"] = repr(hit.point.lat)
            raw["lon"] = repr(hit.point.lon)

        now_holder[0] = BASE + timedelta(days=10 * i, hours=i)
        draft = validate_submission(raw, today=BASE.date())
        record_id = store.submit(draft)
        now_holder[0] += timedelta(hours=2)
        store.moderate(record_id, Decision.APPROVE, "launch-curation",
                       "initial catalogue entry")
        for _ in range(views):
            store.increment_views(record_id)

    data = store.export_snapshot()
    for out in (PKG_OUT, REPO_OUT):
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(data)
        print(f"wrote {out} ({len(data)} bytes)")


if __name__ == "__main__":
    main()
