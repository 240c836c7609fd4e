from __future__ import annotations

import json
import math
from itertools import combinations

import numpy as np
import pytest

from conftest import classes
from twodist.graphs import Graph
from twodist.realize import (
    Embedding,
    RealizationError,
    bprime_rank,
    build_Bprime,
    circumcenter,
    embed,
    realize,
    verify_embedding,
)
from twodist.spherical import NotSphericalError, test_spherical

PHI = (1 + math.sqrt(5)) / 2


def _distinct_distances(e: Embedding) -> list[float]:
    d = e.pairwise_distances()
    return [d[i, j] for i, j in combinations(range(len(e.points)), 2)]


def test_square(two_k2):
    e = realize(two_k2)
    assert e.dim == 2
    assert e.ratio == pytest.approx(math.sqrt(2))
    d = e.pairwise_distances()
    assert d[0, 1] == pytest.approx(math.sqrt(2)) and d[0, 2] == pytest.approx(1.0)
    assert e.circumradius == pytest.approx(math.sqrt(2) / 2)
    assert np.allclose(e.circumcenter, e.points.mean(axis=0))


def test_square_bprime(two_k2):
    b = build_Bprime(two_k2, math.sqrt(2))
    # point 0 at the origin, partner at the diagonal, the others at unit distance
    assert np.allclose(np.diag(b), [0, 4, 2, 2])
    assert bprime_rank(two_k2, math.sqrt(2)) == 2


def test_edgeless_bprime():
    b = build_Bprime(Graph.empty(3), 1.5)
    gram = b[1:, 1:] / 2
    assert np.allclose(gram, [[1, 0.5], [0.5, 1]])


def test_pentagon(c5):
    e = realize(c5)
    assert e.dim == 2
    assert e.ratio == pytest.approx(PHI)
    assert bprime_rank(c5, PHI) == 2
    assert e.circumradius == pytest.approx(1 / (2 * math.sin(math.pi / 5)))
    assert np.allclose(e.circumcenter, e.points.mean(axis=0))


def test_petersen(petersen):
    e = realize(petersen)
    assert e.dim == 4
    assert e.ratio == pytest.approx(math.sqrt(2))
    assert e.circumcenter is not None


def test_non_spherical_witness_has_no_circumcenter():
    g = Graph.complete(3).disjoint_union(Graph.empty(1))
    assert not test_spherical(g).spherical
    e = embed(g, math.sqrt(3))
    verify_embedding(e, g)
    assert circumcenter(e) is None


def test_realize_rejects():
    with pytest.raises(NotSphericalError):
        realize(Graph.cycle(4))
    with pytest.raises(NotSphericalError):
        realize(Graph.complete(3).disjoint_union(Graph.empty(1)))


def test_embed_rejects_non_euclidean():
    # sides 1, 1, 10 break the triangle inequality
    g = Graph.from_edges(3, [(0, 2)])
    with pytest.raises(RealizationError):
        embed(g, 10.0)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_every_spherical_class(n):
    for g in classes(n):
        rep = test_spherical(g)
        if not rep.spherical:
            continue
        e = realize(g)
        assert e.dim == rep.min_dimension
        assert e.ratio == pytest.approx(math.sqrt(1 / rep.lambda2 + 1), rel=1e-6)
        assert e.circumcenter is not None


def test_serialisation(c5):
    e = realize(c5)
    data = json.loads(e.to_json())
    assert data["dim"] == 2 and len(data["points"]) == 5
    assert e.to_text().startswith("dim=2")
    svg = e.to_svg()
    assert svg.startswith("<svg") and svg.count("<circle") == 5 and svg.count("<line") == 5
