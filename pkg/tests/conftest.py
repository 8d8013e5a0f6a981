"""Shared fixtures: exhaustive class measurements reused by several tests."""

from __future__ import annotations

from typing import NamedTuple

import pytest

import qsimplex as qs


class ClassRecord(NamedTuple):
    complex: qs.Complex
    wheel_free: bool
    radius: qs.SpectralResult | None
    exact: int | None
    connected: bool


def measure_classes(n: int, r: int) -> list[ClassRecord]:
    records = []
    for k in qs.enumerate_pure(n, r):
        wheel_free = qs.contains_wheel(k) is None
        res = qs.q_signless(k) if wheel_free else None
        exact = qs.exact_radius_if_uniform(k)
        connected = k.is_r_path_connected()
        records.append(ClassRecord(k, wheel_free, res, exact, connected))
    return records


@pytest.fixture(scope="session")
def classes_5_2() -> list[ClassRecord]:
    return measure_classes(5, 2)


@pytest.fixture(scope="session")
def classes_6_3() -> list[ClassRecord]:
    return measure_classes(6, 3)
