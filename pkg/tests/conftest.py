import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eod import fixtures
from eod.store import Store


VALID_RAW = {
    "name": "SEN12MS-like",
    "published_on": "03/01/2022",
    "multiple_locations": "true",
    "sensors": "sar,multispectral",
    "tasks": "semantic_segmentation",
    "size_value": "500",
    "size_unit": "MB",
    "download_url": "https://example.org/data.zip",
    "teaser": b"\x89PNG\r\n\x1a\n fake image bytes",
    "teaser_media_type": "image/png",
    "description": "A paired radar/multispectral corpus for land cover work.",
    "submitter_name": "Ada Example",
    "submitter_email": "ada@example.org",
}


@pytest.fixture
def valid_raw():
    return dict(VALID_RAW)


@pytest.fixture
def mem_store():
    return Store(None)


@pytest.fixture
def seeded_store():
    store = Store(None)
    fixtures.seed_store(store)
    return store
