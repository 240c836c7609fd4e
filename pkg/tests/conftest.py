from __future__ import annotations

import functools

import numpy as np
import pytest

from twodist.graphs import Graph, nonisomorphic_graphs


@functools.lru_cache(maxsize=None)
def classes(n: int) -> tuple[Graph, ...]:
    return tuple(nonisomorphic_graphs(n))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)


@pytest.fixture
def two_k2() -> Graph:
    return Graph.from_edges(4, [(0, 1), (2, 3)])


@pytest.fixture
def petersen() -> Graph:
    return Graph.petersen()
