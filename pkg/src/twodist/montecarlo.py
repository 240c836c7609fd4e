"""Monte Carlo estimate of the fraction of random graphs that are spherical."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .eigen import DEFAULT_REL_TOL
from .exact import MAX_EXACT, exact_test_spherical
from .graphs import Graph, random_adjacency
from .spherical import decide_batch

BLOCK = 4096
COLUMNS = ["n", "trials", "hits", "fraction", "stderr", "seed", "edge_prob"]


@dataclass(frozen=True)
class SampleResult:
    n: int
    trials: int
    hits: int
    seed: int
    edge_prob: float = 0.5
    borderline: int = 0

    @property
    def fraction(self) -> float:
        return self.hits / self.trials

    @property
    def stderr(self) -> float:
        f = self.fraction
        return math.sqrt(f * (1.0 - f) / self.trials)

    def as_row(self) -> list:
        return [self.n, self.trials, self.hits, f"{self.fraction:.8f}", f"{self.stderr:.8f}", self.seed, self.edge_prob]


def block_rng(seed: int, n: int, block: int) -> np.random.Generator:
    """Counter-based stream owned by one block of trials."""
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(n, block))
    return np.random.Generator(np.random.Philox(ss))


def _run_block(args) -> tuple[int, int]:
    n, p, seed, block, size, rel_tol, certify = args
    a = random_adjacency(n, p, size, block_rng(seed, n, block))
    res = decide_batch(a, rel_tol)
    verdict = res["spherical"].copy()
    flagged = np.flatnonzero(res["borderline"])
    if certify and n <= MAX_EXACT:
        for i in flagged:
            verdict[i] = exact_test_spherical(Graph.from_adjacency(a[i]))
    return int(verdict.sum()), len(flagged)


def estimate_fraction(
    n: int,
    trials: int,
    p: float = 0.5,
    seed: int = 0,
    jobs: int = 1,
    rel_tol: float = DEFAULT_REL_TOL,
    certify: bool = True,
) -> SampleResult:
    """Draw ``trials`` labelled G(n, p) graphs and count spherical ones.

    Trials are cut into fixed blocks, each with its own stream keyed by
    ``(seed, n, block)``; the hit count is therefore the same for any ``jobs``.
    Borderline float verdicts are re-decided exactly when ``certify`` is set.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    tasks = []
    for block, start in enumerate(range(0, trials, BLOCK)):
        tasks.append((n, p, seed, block, min(BLOCK, trials - start), rel_tol, certify))
    if jobs <= 1:
        parts = [_run_block(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_block, tasks))
    hits = sum(h for h, _ in parts)
    borderline = sum(b for _, b in parts)
    return SampleResult(n, trials, hits, seed, p, borderline)


def samples_csv(results: Sequence[SampleResult]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in results:
        w.writerow(r.as_row())
    return buf.getvalue()


def export_samples(results: Iterable[SampleResult], path: str | Path) -> Path:
    path = Path(path)
    path.write_text(samples_csv(list(results)), encoding="utf-8")
    return path
