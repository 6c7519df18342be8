"""Seeded random builders for corpora and filters, shared by the property
tests and the acceptance suite."""

import random
from datetime import datetime, timedelta, timezone

from eod.model import (DatasetRecord, GeoPoint, MultipleLocations, Sensor,
                       SingleLocation, Status, Task, TeaserImage,
                       UnresolvedLocation)
from eod.query import (FacetMode, MultiLocationOnly, NameContains, Near,
                       QueryFilters)

BASE_TIME = datetime(2022, 1, 1, tzinfo=timezone.utc)

_PLACE_WORDS = ("alpha", "beta", "gamma", "delta", "harbor", "valley",
                "ridge", "plain", "coast", "summit")

ALL_SENSORS = [Sensor(v) for v in Sensor.CANONICAL] + [Sensor.other("sonar")]
ALL_TASKS = [Task(v) for v in Task.CANONICAL] + [Task.other("tracking")]


def random_point(rng: random.Random) -> GeoPoint:
    return GeoPoint(rng.uniform(-90, 90), rng.uniform(-180, 179.9999))


def random_address(rng: random.Random) -> str:
    return f"{rng.choice(_PLACE_WORDS).title()} {rng.choice(_PLACE_WORDS).title()}"


def random_location(rng: random.Random):
    roll = rng.random()
    if roll < 0.2:
        return MultipleLocations()
    if roll < 0.3:
        return UnresolvedLocation(random_address(rng))
    return SingleLocation(random_address(rng), random_point(rng))


def make_record(rng: random.Random, i: int, *, status=None) -> DatasetRecord:
    status = status or rng.choice(
        [Status.APPROVED, Status.APPROVED, Status.PENDING, Status.REJECTED])
    sensors = frozenset(rng.sample(ALL_SENSORS, rng.randint(1, 3)))
    tasks = frozenset(rng.sample(ALL_TASKS, rng.randint(1, 3)))
    return DatasetRecord(
        id=f"R{i:06d}",
        slug=f"record-{i}",
        name=f"Record {i}",
        published_on=(BASE_TIME - timedelta(days=rng.randint(30, 2000))).date(),
        location=random_location(rng),
        sensors=sensors,
        tasks=tasks,
        size_bytes=rng.randint(1, 100_000) * 10_000,
        download_url=f"https://data.example.org/{i}",
        teaser_image=TeaserImage("image/png", 81),
        description=f"record number {i}",
        submitter_name=f"PRIVATE-NAME-{i}-X",
        submitter_email=f"private-{i}-x@example.org",
        status=status,
        view_count=rng.randint(0, 500),
        created_at=BASE_TIME + timedelta(minutes=rng.randint(0, 500_000)),
        flags=frozenset(),
    )


def random_corpus(rng: random.Random, n: int) -> tuple[DatasetRecord, ...]:
    return tuple(make_record(rng, i) for i in range(n))


def random_filters(rng: random.Random, *, mode: FacetMode | None = None) -> QueryFilters:
    sensors = frozenset(rng.sample(ALL_SENSORS, rng.randint(0, 3)))
    tasks = frozenset(rng.sample(ALL_TASKS, rng.randint(0, 3)))
    roll = rng.random()
    if roll < 0.4:
        location = None
    elif roll < 0.55:
        location = MultiLocationOnly()
    elif roll < 0.8:
        location = Near(random_point(rng), rng.uniform(1.0, 9000.0))
    else:
        location = NameContains(rng.choice(_PLACE_WORDS + ("zzz", "q"))
                                if rng.random() < 0.9 else random_address(rng))
    return QueryFilters(
        sensors=sensors,
        sensors_mode=mode or rng.choice(list(FacetMode)),
        tasks=tasks,
        tasks_mode=mode or rng.choice(list(FacetMode)),
        location=location,
        page=rng.randint(1, 4),
        per_page=rng.randint(1, 100),
    )
