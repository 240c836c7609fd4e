from __future__ import annotations

import math

import numpy as np
import pytest

from twodist.eigen import (
    Spectrum,
    centering_projector,
    eigendecompose,
    group_multiplicity,
    jacobi_eigh,
    jacobi_eigvals,
    project_center,
    psd_on_complement,
    rank_with_tol,
)
from twodist.graphs import Graph, random_adjacency
from twodist.realize import build_Bprime
from twodist.spherical import adjacency_spectra

PHI = (1 + math.sqrt(5)) / 2


def test_identity():
    assert np.allclose(jacobi_eigvals(np.eye(3)), [1, 1, 1])


def test_c5_spectrum(c5):
    vals = jacobi_eigvals(c5.adjacency())
    assert np.allclose(vals, [2, 1 / PHI, 1 / PHI, -PHI, -PHI], atol=1e-12)
    assert vals[1] == pytest.approx(2 * math.cos(2 * math.pi / 5), abs=1e-12)


def test_petersen_spectrum(petersen):
    vals = jacobi_eigvals(petersen.adjacency())
    assert np.allclose(vals, [3] + [1] * 5 + [-2] * 4, atol=1e-12)


def test_descending_and_trace(rng):
    for _ in range(50):
        m = rng.normal(size=(7, 7))
        m = m + m.T
        vals = jacobi_eigvals(m)
        assert np.all(np.diff(vals) <= 0)
        assert vals.sum() == pytest.approx(np.trace(m), abs=1e-10)


def test_residual_and_orthogonality(rng):
    for n in (2, 5, 9, 15):
        m = rng.normal(size=(n, n))
        m = m + m.T
        vals, vecs = jacobi_eigh(m)
        assert np.max(np.abs(m @ vecs - vecs * vals)) <= 1e-10
        assert np.allclose(vecs.T @ vecs, np.eye(n), atol=1e-12)


def test_matches_lapack(rng):
    a = random_adjacency(9, 0.5, 500, rng).astype(float)
    ours = jacobi_eigvals(a)
    ref = np.linalg.eigvalsh(a)[:, ::-1]
    assert np.max(np.abs(ours - ref)) < 1e-12


def test_batch_equals_single(rng):
    a = random_adjacency(8, 0.5, 20, rng).astype(float)
    batch = jacobi_eigvals(a)
    for i in range(20):
        assert np.array_equal(batch[i], jacobi_eigvals(a[i]))


def test_deterministic(rng):
    a = random_adjacency(9, 0.5, 100, rng).astype(float)
    assert np.array_equal(jacobi_eigvals(a).view(np.uint64), jacobi_eigvals(a.copy()).view(np.uint64))


def test_project_center():
    n = 5
    p = centering_projector(n)
    assert np.allclose(project_center(np.ones((n, n))), 0)
    assert np.allclose(project_center(np.eye(n)), p)
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    vals = jacobi_eigvals(project_center(two_k2.adjacency()))
    nonzero = sorted(v for v in vals if abs(v) > 1e-10)
    assert np.allclose(nonzero, [-1, -1, 1])


def test_group_multiplicity(c5, petersen):
    s = Spectrum.from_values(jacobi_eigvals(c5.adjacency()))
    assert group_multiplicity(s, 2 * math.cos(2 * math.pi / 5)) == 2
    assert group_multiplicity(s, 0.0) == 0
    s = Spectrum.from_values(jacobi_eigvals(petersen.adjacency()))
    assert group_multiplicity(s, 1.0) == 5
    assert sum(m for _, m in s.groups) == 10


def test_spectrum_invariants(rng):
    for a in random_adjacency(8, 0.5, 100, rng).astype(float):
        s, _ = eigendecompose(a)
        assert sum(m for _, m in s.groups) == 8
        reps = [v for v, _ in s.groups]
        assert all(x - y > s.tol for x, y in zip(reps, reps[1:]))


def test_psd_on_complement(c5):
    assert psd_on_complement(np.eye(4))
    assert not psd_on_complement(-np.eye(4))
    lam2 = jacobi_eigvals(c5.adjacency())[1]
    assert psd_on_complement(lam2 * np.eye(5) - c5.adjacency())


def test_rank():
    assert rank_with_tol(np.ones((4, 4))) == 1
    assert rank_with_tol(np.zeros((4, 4))) == 0
    square = Graph.from_edges(4, [(0, 2), (1, 3)])
    assert rank_with_tol(build_Bprime(square, math.sqrt(2))) == 2


def test_interlacing_random(rng):
    a = random_adjacency(10, 0.5, 1000, rng).astype(float)
    lam, mu = adjacency_spectra(a)
    assert np.all(lam[:, :-1] >= mu - 1e-8)
    assert np.all(mu >= lam[:, 1:] - 1e-8)
