from __future__ import annotations

import csv
import io

import numpy as np
import pytest

from twodist.montecarlo import block_rng, estimate_fraction, export_samples, samples_csv


def test_same_seed_same_hits():
    a = estimate_fraction(8, 6000, seed=7)
    b = estimate_fraction(8, 6000, seed=7)
    c = estimate_fraction(8, 6000, seed=7, jobs=2)
    assert a.hits == b.hits == c.hits


def test_different_seed_differs():
    assert estimate_fraction(8, 6000, seed=1).hits != estimate_fraction(8, 6000, seed=2).hits


def test_block_streams_independent():
    x = block_rng(3, 8, 0).random(4)
    y = block_rng(3, 8, 1).random(4)
    assert not np.array_equal(x, y)
    assert np.array_equal(x, block_rng(3, 8, 0).random(4))


def test_degenerate_probabilities():
    assert estimate_fraction(6, 100, p=0.0).hits == 0
    assert estimate_fraction(6, 100, p=1.0).hits == 0


def test_small_n_fraction():
    # coarse sanity bound; the tight checks live in the acceptance suite
    r = estimate_fraction(6, 20000, seed=3)
    assert 0.2 < r.fraction < 0.45
    assert r.stderr == pytest.approx(np.sqrt(r.fraction * (1 - r.fraction) / 20000))


def test_rejects_zero_trials():
    with pytest.raises(ValueError):
        estimate_fraction(8, 0)


def test_export(tmp_path):
    r = estimate_fraction(8, 1000, seed=5)
    path = export_samples([r], tmp_path / "mc.csv")
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    assert list(rows[0]) == ["n", "trials", "hits", "fraction", "stderr", "seed", "edge_prob"]
    assert int(rows[0]["hits"]) == r.hits
    assert samples_csv([]).strip() == "n,trials,hits,fraction,stderr,seed,edge_prob"
