"""Small simple graphs stored as row bitsets.

Covers graph6 I/O, the structural predicates needed by the spherical test,
canonical forms for isomorphism-class counting, isomorph-free enumeration
and seeded random sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 64
MAX_CANONICAL = 12
MAX_ENUMERATE = 9

GRAPH6_HEADER = ">>graph6<<"


class GraphFormatError(ValueError):
    """Raised for malformed graph6 records."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on ``n`` vertices.

    ``rows[i]`` is an integer bitset; bit ``j`` set means ``{i, j}`` is an edge.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full or (row >> i) & 1:
                raise ValueError(f"row {i} has bits outside the vertex set or a loop")
            for j in _bits(row):
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    # constructors -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError("loops are not allowed")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_adjacency(cls, a) -> Graph:
        a = np.asarray(a)
        n = a.shape[0]
        rows = []
        for i in range(n):
            row = 0
            for j in np.flatnonzero(a[i]):
                row |= 1 << int(j)
            rows.append(row)
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete_multipartite(cls, parts: Sequence[int]) -> Graph:
        labels = [p for p, size in enumerate(parts) for _ in range(size)]
        n = len(labels)
        edges = [(i, j) for i, j in combinations(range(n), 2) if labels[i] != labels[j]]
        return cls.from_edges(n, edges)

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # views ------------------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if i < j]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def adjacency(self, dtype=np.float64) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``i`` becomes ``perm[i]``."""
        rows = [0] * self.n
        for i, j in self.edges():
            a, b = perm[i], perm[j]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))

    def disjoint_union(self, other: Graph) -> Graph:
        shifted = [(i + self.n, j + self.n) for i, j in other.edges()]
        return Graph.from_edges(self.n + other.n, self.edges() + shifted)

    def __str__(self) -> str:
        return serialize_graph6(self)


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# graph6 -----------------------------------------------------------------


def _upper_pairs(n: int) -> Iterator[tuple[int, int]]:
    # graph6 column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (an optional ``>>graph6<<`` header is stripped)."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 record")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= v <= 63 for v in data):
        bad = next(c for c in s if not 63 <= ord(c) <= 126)
        raise GraphFormatError(f"character {bad!r} outside the graph6 range")
    if data[0] < 63:
        n, payload = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        payload = data[4:]
    else:
        raise GraphFormatError("unsupported or malformed size prefix")
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(payload) != need:
        raise GraphFormatError(f"payload has {len(payload)} characters, expected {need}")
    rows = [0] * n
    for k, (i, j) in enumerate(_upper_pairs(n)):
        if (payload[k // 6] >> (5 - k % 6)) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def serialize_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(chr(((g.n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = [g.has_edge(i, j) for i, j in _upper_pairs(g.n)]
    bits += [False] * (-len(bits) % 6)
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return head + "".join(chars)


def read_graph6_file(path) -> Iterator[Graph]:
    """Yield graphs from a graph6 file; errors carry the 1-based line number."""
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line == GRAPH6_HEADER:
                continue
            try:
                yield parse_graph6(line)
            except GraphFormatError as exc:
                raise GraphFormatError(f"{path}:{lineno}: {exc}") from None


def write_graph6_file(path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(serialize_graph6(g) + "\n")
            count += 1
    return count


# predicates -------------------------------------------------------------


def is_complete_multipartite(g: Graph) -> bool:
    """True iff non-adjacency is an equivalence relation.

    Equivalently the complement is a disjoint union of cliques. The edgeless
    graph (one part) and the complete graph (singleton parts) both qualify.
    """
    comp = g.complement()
    for i in range(g.n):
        closed = comp.rows[i] | (1 << i)
        for j in _bits(comp.rows[i]):
            if comp.rows[j] | (1 << j) != closed:
                return False
    return True


def is_regular(g: Graph) -> bool:
    degs = g.degrees()
    return all(d == degs[0] for d in degs)


# canonical form ---------------------------------------------------------


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Cells are split by neighbour counts into each splitter cell; the
    fragments are ordered by count, which keeps the result invariant under
    relabelling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            mask = 0
            for v in cells[s]:
                mask |= 1 << v
            out: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                buckets: dict[int, list[int]] = {}
                for v in cell:
                    buckets.setdefault((g.rows[v] & mask).bit_count(), []).append(v)
                if len(buckets) > 1:
                    changed = True
                    out.extend(buckets[k] for k in sorted(buckets))
                else:
                    out.append(cell)
            if changed:
                cells = out
                break
    return cells


def _leaf_code(g: Graph, order: Sequence[int]) -> int:
    code = 0
    for j in range(1, g.n):
        row = g.rows[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


def _twin_classes(g: Graph, cell: list[int]) -> list[int]:
    # one representative per twin class; swapping twins is an automorphism
    reps: list[int] = []
    for v in cell:
        for u in reps:
            bu, bv = 1 << u, 1 << v
            if g.rows[u] & ~bv == g.rows[v] & ~bu:
                break
        else:
            reps.append(v)
    return reps


def _canonical_search(g: Graph) -> tuple[int, list[int]]:
    best_code = -1
    best_order: list[int] = []
    stack = [_refine(g, [list(range(g.n))])]
    while stack:
        cells = stack.pop()
        if len(cells) == g.n:
            order = [c[0] for c in cells]
            code = _leaf_code(g, order)
            if code > best_code:
                best_code, best_order = code, order
            continue
        t = next(k for k, c in enumerate(cells) if len(c) > 1)
        for v in _twin_classes(g, cells[t]):
            rest = [u for u in cells[t] if u != v]
            stack.append(_refine(g, cells[:t] + [[v], rest] + cells[t + 1:]))
    return best_code, best_order


def canonical_form(g: Graph) -> bytes:
    """Packed lexicographically greatest upper-triangle bitstring.

    The maximum is taken over the leaves of an individualisation-refinement
    search, which is an isomorphism-invariant set of orderings, so the result
    is a complete invariant.
    """
    if g.n > MAX_CANONICAL:
        raise ValueError(f"canonical_form supports n <= {MAX_CANONICAL}, got {g.n}")
    code, _ = _canonical_search(g)
    nbytes = -(-(g.n * (g.n - 1) // 2) // 8)
    return bytes([g.n]) + code.to_bytes(nbytes, "big")


def canonical_graph(g: Graph) -> Graph:
    """Relabelled copy of ``g`` whose upper triangle realises the canonical form."""
    if g.n > MAX_CANONICAL:
        raise ValueError(f"canonical_graph supports n <= {MAX_CANONICAL}, got {g.n}")
    _, order = _canonical_search(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


# enumeration ------------------------------------------------------------


def _extend_level(parents: Iterable[Graph]) -> list[Graph]:
    """Add one vertex to every parent; keep one canonical graph per class.

    Only children in which the new vertex has maximum degree are formed.
    Every graph arises this way (delete one of its max-degree vertices), so
    no class is lost.
    """
    seen: set[bytes] = set()
    out: list[Graph] = []
    for parent in parents:
        m = parent.n
        degs = parent.degrees()
        for mask in range(1 << m):
            d = mask.bit_count()
            if any(degs[i] + ((mask >> i) & 1) > d for i in range(m)):
                continue
            rows = list(parent.rows)
            for i in range(m):
                if (mask >> i) & 1:
                    rows[i] |= 1 << m
            rows.append(mask)
            child = Graph(m + 1, tuple(rows))
            canon = canonical_graph(child)
            key = canon.rows
            if key not in seen:
                seen.add(key)
                out.append(canon)
    out.sort(key=lambda g: _leaf_code(g, range(g.n)), reverse=True)
    return out


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUMERATE:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUMERATE}, got {n}")
    level = [Graph.empty(1)]
    for _ in range(n - 1):
        level = _extend_level(level)
    return level


def enumerate_nonisomorphic(n: int, sink: Callable[[Graph], object] | None = None) -> int:
    """Call ``sink`` once per isomorphism class on ``n`` vertices; return the count."""
    if not 2 <= n <= MAX_ENUMERATE:
        raise ValueError(f"enumeration supports 2 <= n <= {MAX_ENUMERATE}, got {n}")
    graphs = nonisomorphic_graphs(n)
    if sink is not None:
        for g in graphs:
            sink(g)
    return len(graphs)


def brute_force_classes(n: int) -> set[bytes]:
    """Canonical forms of all labelled graphs on ``n`` vertices (small n only)."""
    pairs = list(combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if (mask >> k) & 1])
        forms.add(canonical_form(g))
    return forms


# random graphs ----------------------------------------------------------


def random_adjacency(n: int, p: float, count: int, rng: np.random.Generator) -> np.ndarray:
    """Stack of ``count`` adjacency matrices of G(n, p), shape (count, n, n)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    iu = np.triu_indices(n, 1)
    bits = rng.random((count, len(iu[0]))) < p
    a = np.zeros((count, n, n), dtype=np.int8)
    a[:, iu[0], iu[1]] = bits
    return a + a.transpose(0, 2, 1)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Labelled G(n, p) sample drawn from ``rng``."""
    return Graph.from_adjacency(random_adjacency(n, p, 1, rng)[0])
