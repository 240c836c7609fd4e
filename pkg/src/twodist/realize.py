"""Explicit coordinates for the 2-distance set of a spherical graph.

Short distance is normalised to 1 and edges sit at the long distance ``k``.
Point 0 is placed at the origin and the remaining points come from the Gram
matrix of ``p_i - p_0``, which is half of the reduced squared-distance matrix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .eigen import DEFAULT_REL_TOL, jacobi_eigh, rank_with_tol
from .graphs import Graph
from .spherical import NotSphericalError, build_BG, is_representable, test_spherical

VERIFY_TOL = 1e-6


class RealizationError(RuntimeError):
    pass


@dataclass
class Embedding:
    dim: int
    points: np.ndarray
    short_dist: float
    long_dist: float
    circumcenter: np.ndarray | None = None
    circumradius: float | None = None

    @property
    def ratio(self) -> float:
        return self.long_dist / self.short_dist

    def pairwise_distances(self) -> np.ndarray:
        diff = self.points[:, None, :] - self.points[None, :, :]
        return np.sqrt(np.sum(diff * diff, axis=-1))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "k": self.ratio,
            "short_dist": self.short_dist,
            "long_dist": self.long_dist,
            "points": self.points.tolist(),
            "circumcenter": None if self.circumcenter is None else self.circumcenter.tolist(),
            "circumradius": self.circumradius,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lines = [f"dim={self.dim} k={self.ratio:.12g}"]
        for i, p in enumerate(self.points):
            lines.append(f"{i:3d}  " + "  ".join(f"{x: .10f}" for x in p))
        if self.circumcenter is not None:
            lines.append("center " + "  ".join(f"{x: .10f}" for x in self.circumcenter))
            lines.append(f"radius {self.circumradius:.12g}")
        return "\n".join(lines)

    def to_svg(self, size: int = 320) -> str:
        """Scatter of the first two coordinates (a projection when dim > 2)."""
        pts = np.zeros((len(self.points), 2))
        take = min(2, self.dim)
        pts[:, :take] = self.points[:, :take]
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        span = float(np.max(hi - lo)) or 1.0
        pad = 20
        xy = (pts - lo) / span * (size - 2 * pad) + pad
        out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}">']
        d = self.pairwise_distances()
        for i, j in combinations(range(len(xy)), 2):
            if abs(d[i, j] - self.long_dist) < abs(d[i, j] - self.short_dist):
                out.append(
                    f'<line x1="{xy[i, 0]:.2f}" y1="{xy[i, 1]:.2f}" x2="{xy[j, 0]:.2f}" '
                    f'y2="{xy[j, 1]:.2f}" stroke="#999" stroke-width="1"/>'
                )
        for i, (x, y) in enumerate(xy):
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="#c33"/>')
            out.append(f'<text x="{x + 6:.2f}" y="{y - 6:.2f}" font-size="10">{i}</text>')
        out.append("</svg>")
        return "\n".join(out)


def build_Bprime(g: Graph, k: float) -> np.ndarray:
    """``(I - 1 e1^T) B (I - e1 1^T)``; row and column 0 vanish, the rest is twice the Gram matrix."""
    b = build_BG(g, k)
    n = g.n
    left = np.eye(n)
    left[:, 0] -= 1.0
    return left @ b @ left.T


def embed(g: Graph, k: float, rel_tol: float = DEFAULT_REL_TOL) -> Embedding:
    """Coordinates for short distance 1 and long distance ``k``.

    Raises ``RealizationError`` if the distances are not Euclidean. No
    check is made that ``k`` is the right ratio for ``g``; ``realize`` does
    that.
    """
    gram = build_Bprime(g, k)[1:, 1:] / 2.0
    vals, vecs = jacobi_eigh(gram)
    radius = float(np.max(np.abs(vals))) if vals.size else 0.0
    cut = rel_tol * max(1.0, radius)
    if vals.size and vals[-1] < -cut:
        raise RealizationError(f"Gram matrix has negative eigenvalue {vals[-1]:.3g}")
    keep = vals > cut
    coords = vecs[:, keep] * np.sqrt(vals[keep])
    # sign convention: first clearly nonzero coordinate of each axis is positive
    for axis in range(coords.shape[1]):
        col = coords[:, axis]
        nz = np.flatnonzero(np.abs(col) > 1e-9)
        if nz.size and col[nz[0]] < 0:
            coords[:, axis] = -col
    points = np.vstack([np.zeros((1, coords.shape[1])), coords])
    emb = Embedding(dim=int(keep.sum()), points=points, short_dist=1.0, long_dist=float(k))
    found = circumcenter(emb)
    if found is not None:
        emb.circumcenter, emb.circumradius = found
    return emb


def circumcenter(e: Embedding, tol: float = VERIFY_TOL):
    """``(center, radius)`` of a sphere through all points, or ``None``."""
    pts = e.points
    if len(pts) < 2 or e.dim == 0:
        return None
    base = pts[0]
    rel = pts[1:] - base
    rhs = 0.5 * np.sum(rel * rel, axis=1)
    sol, *_ = np.linalg.lstsq(rel, rhs, rcond=None)
    center = base + sol
    dist = np.linalg.norm(pts - center, axis=1)
    radius = float(dist.mean())
    if np.max(np.abs(dist - radius)) > tol * max(radius, 1e-300):
        return None
    return center, radius


def verify_embedding(e: Embedding, g: Graph, tol: float = VERIFY_TOL) -> None:
    """Raise ``RealizationError`` unless distances are exactly {1, k} matching the edges."""
    d = e.pairwise_distances()
    for i, j in combinations(range(g.n), 2):
        want = e.long_dist if g.has_edge(i, j) else e.short_dist
        if abs(d[i, j] - want) > tol * want:
            raise RealizationError(f"pair ({i}, {j}) at distance {d[i, j]:.9g}, expected {want:.9g}")


def realize(g: Graph, rel_tol: float = DEFAULT_REL_TOL) -> Embedding:
    if not is_representable(g):
        raise NotSphericalError("complete multipartite graphs have no 2-distance representation")
    rep = test_spherical(g, rel_tol)
    if not rep.spherical:
        raise NotSphericalError("only spherical graphs can be realised (their ratio is known)")
    emb = embed(g, rep.ratio_k, rel_tol)
    verify_embedding(emb, g)
    return emb


def bprime_rank(g: Graph, k: float, rel_tol: float = DEFAULT_REL_TOL) -> int:
    return rank_with_tol(build_Bprime(g, k), rel_tol)
