"""Count spherical graphs on n vertices by their lowest embedding dimension."""

from __future__ import annotations

import csv
import io
import json
import zlib
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .eigen import DEFAULT_REL_TOL
from .exact import MAX_EXACT, exact_decide
from .graphs import Graph, nonisomorphic_graphs, read_graph6_file, serialize_graph6
from .spherical import decide_batch

CHUNK = 8192


@dataclass
class CensusRow:
    n: int
    counts: dict[int, int] = field(default_factory=dict)
    total_classes: int = 0
    certified: bool = False
    borderline: int = 0

    @property
    def spherical(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "counts": {str(d): c for d, c in sorted(self.counts.items())},
            "spherical": self.spherical,
            "total_classes": self.total_classes,
            "borderline": self.borderline,
            "certified": self.certified,
        }


def _load(n: int, source) -> list[Graph]:
    if source is None or source == "builtin":
        if not 4 <= n <= 9:
            raise ValueError("builtin census supports 4 <= n <= 9")
        return nonisomorphic_graphs(n)
    graphs = list(read_graph6_file(source))
    wrong = [i for i, g in enumerate(graphs) if g.n != n]
    if wrong:
        raise ValueError(f"{source}: record {wrong[0] + 1} has {graphs[wrong[0]].n} vertices, expected {n}")
    if n > MAX_EXACT:
        raise ValueError(f"file census supports n <= {MAX_EXACT}")
    return graphs


def _evaluate(graphs: Sequence[Graph], rel_tol: float, certify: bool) -> tuple[Counter, int]:
    counts: Counter = Counter()
    borderline = 0
    for start in range(0, len(graphs), CHUNK):
        part = graphs[start:start + CHUNK]
        a = np.stack([g.adjacency() for g in part])
        res = decide_batch(a, rel_tol)
        for i, g in enumerate(part):
            dim = int(res["min_dimension"][i])
            if res["borderline"][i]:
                borderline += 1
                if certify:
                    dim = exact_decide(g).min_dimension or -1
            if dim >= 0:
                counts[dim] += 1
    return counts, borderline


def _shard_worker(args) -> tuple[dict, int]:
    records, rel_tol, certify = args
    from .graphs import parse_graph6

    counts, borderline = _evaluate([parse_graph6(r) for r in records], rel_tol, certify)
    return dict(counts), borderline


def run_census(
    n: int,
    source: str | Path | None = None,
    certify: bool = False,
    jobs: int = 1,
    rel_tol: float = DEFAULT_REL_TOL,
) -> CensusRow:
    """Census of one vertex count.

    ``source`` is ``None``/``"builtin"`` for the internal enumerator or a path
    to a graph6 file with one record per isomorphism class. Work is sharded
    by a hash of each record, and shard results are added, so the row does
    not depend on ``jobs`` or on the order of the input.
    """
    graphs = _load(n, source)
    row = CensusRow(n=n, total_classes=len(graphs), certified=certify)
    if jobs <= 1:
        counts, row.borderline = _evaluate(graphs, rel_tol, certify)
    else:
        shards: list[list[str]] = [[] for _ in range(jobs)]
        for g in graphs:
            s = serialize_graph6(g)
            shards[zlib.crc32(s.encode()) % jobs].append(s)
        counts = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part, bl in pool.map(_shard_worker, [(s, rel_tol, certify) for s in shards]):
                counts.update({int(k): v for k, v in part.items()})
                row.borderline += bl
    row.counts = dict(sorted(counts.items()))
    return row


# export -----------------------------------------------------------------


def _dimension_columns(rows: Sequence[CensusRow]) -> list[int]:
    dims: set[int] = set()
    for r in rows:
        dims.update(r.counts)
    return sorted(dims)


def census_csv(rows: Sequence[CensusRow]) -> str:
    dims = _dimension_columns(rows)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [f"d{d}" for d in dims] + ["spherical", "total_classes", "borderline", "certified"])
    for r in sorted(rows, key=lambda r: r.n):
        w.writerow([r.n] + [r.counts.get(d, 0) for d in dims]
                   + [r.spherical, r.total_classes, r.borderline, int(r.certified)])
    return buf.getvalue()


def census_json(rows: Sequence[CensusRow]) -> str:
    return json.dumps([r.to_dict() for r in sorted(rows, key=lambda r: r.n)], indent=2, sort_keys=True) + "\n"


def export_census(rows: Iterable[CensusRow], prefix: str | Path) -> tuple[Path, Path]:
    """Write ``PREFIX.csv`` and ``PREFIX.json``; returns both paths."""
    rows = list(rows)
    prefix = Path(prefix)
    csv_path = prefix.with_name(prefix.name + ".csv")
    json_path = prefix.with_name(prefix.name + ".json")
    csv_path.write_text(census_csv(rows), encoding="utf-8")
    json_path.write_text(census_json(rows), encoding="utf-8")
    return csv_path, json_path
