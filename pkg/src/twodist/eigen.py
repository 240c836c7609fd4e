"""Dense symmetric eigensolver and the spectral helpers built on it.

The solver is a cyclic Jacobi iteration compiled with numba and looped over
a leading batch axis. The sweep order is fixed, so identical input bits
give identical output bits.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numba import njit

DEFAULT_REL_TOL = 1e-8
MAX_SWEEPS = 60


def symmetrize(m) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    upper = np.triu(m)
    return upper + np.swapaxes(np.triu(m, 1), -1, -2)


@njit(cache=True)
def _jacobi_kernel(a, v, want_vectors):
    batch, n, _ = a.shape
    for b in range(batch):
        scale = 0.0
        for i in range(n):
            for j in range(n):
                scale += a[b, i, j] * a[b, i, j]
        scale = np.sqrt(scale)
        for _sweep in range(MAX_SWEEPS):
            off = 0.0
            for i in range(n - 1):
                for j in range(i + 1, n):
                    off += a[b, i, j] * a[b, i, j]
            if np.sqrt(off) <= 1e-15 * scale:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[b, p, q]
                    if abs(apq) <= 1e-300:
                        continue
                    app = a[b, p, p]
                    aqq = a[b, q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    t = 1.0 / (abs(theta) + np.hypot(theta, 1.0))
                    if theta < 0:
                        t = -t
                    c = 1.0 / np.sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        if k != p and k != q:
                            akp = a[b, k, p]
                            akq = a[b, k, q]
                            nkp = c * akp - s * akq
                            nkq = s * akp + c * akq
                            a[b, k, p] = nkp
                            a[b, p, k] = nkp
                            a[b, k, q] = nkq
                            a[b, q, k] = nkq
                    a[b, p, p] = app - t * apq
                    a[b, q, q] = aqq + t * apq
                    a[b, p, q] = 0.0
                    a[b, q, p] = 0.0
                    if want_vectors:
                        for k in range(n):
                            vkp = v[b, k, p]
                            vkq = v[b, k, q]
                            v[b, k, p] = c * vkp - s * vkq
                            v[b, k, q] = s * vkp + c * vkq


def jacobi_eigh(m, *, vectors: bool = True):
    """Eigen-decompose a symmetric matrix or a stack of them.

    Cyclic Jacobi with the fixed row-by-row (p, q) sweep order. Returns
    ``(values, V)`` with values sorted descending along the last axis and
    eigenvectors in the columns of ``V``. Only the upper triangle of the
    input is read. With ``vectors=False`` ``V`` is ``None``.
    """
    a = symmetrize(m)
    squeeze = a.ndim == 2
    if squeeze:
        a = a[None]
    a = np.ascontiguousarray(a)
    batch, n, _ = a.shape
    v = np.repeat(np.eye(n)[None], batch, axis=0)
    _jacobi_kernel(a, v, vectors)

    values = np.diagonal(a, axis1=1, axis2=2).copy()
    order = np.argsort(-values, axis=1, kind="stable")
    values = np.take_along_axis(values, order, axis=1)
    vecs = np.take_along_axis(v, order[:, None, :], axis=2) if vectors else None
    if squeeze:
        return values[0], (vecs[0] if vectors else None)
    return values, vecs


def jacobi_eigvals(m) -> np.ndarray:
    return jacobi_eigh(m, vectors=False)[0]


def default_tol(values, rel_tol: float = DEFAULT_REL_TOL) -> float:
    radius = float(np.max(np.abs(values))) if np.size(values) else 0.0
    return rel_tol * max(1.0, radius)


@dataclass
class Spectrum:
    """Descending eigenvalues with tolerance-clustered multiplicities."""

    values: np.ndarray
    tol: float
    groups: list[tuple[float, int]] = field(default_factory=list)

    @classmethod
    def from_values(cls, values, tol: float | None = None, rel_tol: float = DEFAULT_REL_TOL) -> Spectrum:
        values = np.sort(np.asarray(values, dtype=np.float64))[::-1]
        if tol is None:
            tol = default_tol(values, rel_tol)
        groups: list[tuple[float, int]] = []
        start = 0
        for i in range(1, len(values) + 1):
            if i == len(values) or values[i - 1] - values[i] > tol:
                chunk = values[start:i]
                groups.append((float(chunk.mean()), i - start))
                start = i
        return cls(values, tol, groups)

    def multiplicity(self, target: float) -> int:
        return group_multiplicity(self, target)

    def __len__(self) -> int:
        return len(self.values)


def eigendecompose(m, tol: float | None = None, rel_tol: float = DEFAULT_REL_TOL):
    """Return ``(Spectrum, V)`` for a single symmetric matrix."""
    values, vecs = jacobi_eigh(m)
    return Spectrum.from_values(values, tol, rel_tol), vecs


def group_multiplicity(s: Spectrum, target: float) -> int:
    """Multiplicity of the cluster nearest ``target``; 0 if none lies within tol."""
    best, best_dist = 0, np.inf
    for rep, mult in s.groups:
        dist = abs(rep - target)
        if dist < best_dist:
            best, best_dist = mult, dist
    return best if best_dist <= s.tol else 0


def centering_projector(n: int) -> np.ndarray:
    return np.eye(n) - np.full((n, n), 1.0 / n)


def project_center(a) -> np.ndarray:
    """``P a P`` with ``P = I - J/n``; works on stacks as well."""
    a = symmetrize(a)
    row = a.mean(axis=-1, keepdims=True)
    col = a.mean(axis=-2, keepdims=True)
    total = a.mean(axis=(-1, -2), keepdims=True)
    return symmetrize(a - row - col + total)


def psd_on_complement(m, tol: float | None = None, rel_tol: float = DEFAULT_REL_TOL) -> bool:
    """Whether ``w^T m w >= 0`` for every ``w`` orthogonal to the all-ones vector."""
    vals = jacobi_eigvals(project_center(m))
    if tol is None:
        tol = default_tol(vals, rel_tol)
    return bool(vals[-1] >= -tol)


def rank_with_tol(m, rel_tol: float = DEFAULT_REL_TOL) -> int:
    vals = jacobi_eigvals(m)
    radius = float(np.max(np.abs(vals))) if vals.size else 0.0
    return int(np.sum(np.abs(vals) > rel_tol * max(1.0, radius)))
