"""Decide whether a graph on n vertices is the graph of a spherical
2-distance set in dimension n - 2, and report the data behind the verdict.

The decision compares the spectrum of the adjacency matrix ``A`` with that
of its centred compression ``P A P`` (``P = I - J/n``): the top eigenvalue of
``P A P`` must equal the second eigenvalue of ``A`` and the two matrices
must carry that eigenvalue with equal multiplicity, one copy being dropped
from ``A`` when it coincides with the top eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .eigen import (
    DEFAULT_REL_TOL,
    jacobi_eigh,
    jacobi_eigvals,
    project_center,
)
from .exact import MAX_EXACT, exact_decide
from .graphs import Graph, is_complete_multipartite, is_regular

BORDERLINE_FACTOR = 10.0
# gaps below this (relative to the spectral radius) are rounding noise on a true tie
ROUNDOFF_REL = 1e-12


class NotSphericalError(ValueError):
    pass


@dataclass
class SphericalReport:
    n: int
    d: int
    representable: bool
    spherical: bool
    lambda1: float
    lambda2: float
    mu1: float
    mult_lambda2_A: int
    mult_lambda2_PAP: int
    ratio_k: float | None
    min_dimension: int | None
    borderline: bool = False
    decided_by: str = "float"

    def to_dict(self) -> dict:
        return asdict(self)


# spectra ------------------------------------------------------------------


def adjacency_spectra(a):
    """Descending eigenvalues of ``A`` and of ``PAP`` with one zero removed.

    Works on one matrix or a stack. The removed zero is the one closest to 0,
    standing in for the eigenvector ``1``; any further zeros are genuine.
    """
    a = np.asarray(a, dtype=np.float64)
    lam = jacobi_eigvals(a)
    pap = jacobi_eigvals(project_center(a))
    drop = np.argmin(np.abs(pap), axis=-1)
    keep = np.ones(pap.shape, dtype=bool)
    np.put_along_axis(keep, np.expand_dims(drop, -1), False, axis=-1)
    mu = pap[keep].reshape(pap.shape[:-1] + (pap.shape[-1] - 1,))
    return lam, mu


def _abs_tol(lam: np.ndarray, rel_tol: float) -> np.ndarray:
    return rel_tol * np.maximum(1.0, np.max(np.abs(lam), axis=-1))


def complete_multipartite_mask(a) -> np.ndarray:
    """Vectorised complete-multipartite test over a stack of adjacency matrices."""
    a = np.asarray(a).astype(np.int64) != 0
    n = a.shape[-1]
    same = ~a  # non-adjacency including the diagonal
    same = same | np.eye(n, dtype=bool)
    # transitivity: same[i,j] and same[j,k] => same[i,k]
    reach = np.einsum("bij,bjk->bik", same.astype(np.int64), same.astype(np.int64)) > 0
    return ~np.any(reach & ~same, axis=(-1, -2))


def decide_batch(a, rel_tol: float = DEFAULT_REL_TOL) -> dict[str, np.ndarray]:
    """Float decision for a stack of adjacency matrices, shape (B, n, n).

    Returns arrays ``spherical``, ``representable``, ``min_dimension`` (-1
    when not spherical), ``mult_A``, ``mult_PAP``, ``lambda2``, ``mu1`` and
    ``borderline``.
    """
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 2:
        a = a[None]
    n = a.shape[-1]
    lam, mu = adjacency_spectra(a)
    tol = _abs_tol(lam, rel_tol)[:, None]
    lam2 = lam[:, 1]
    representable = ~complete_multipartite_mask(a)

    in_a = np.abs(lam - lam2[:, None]) <= tol
    top_merged = in_a[:, 0]
    mult_a = in_a.sum(axis=1) - top_merged
    mult_pap = (np.abs(mu - lam2[:, None]) <= tol).sum(axis=1)
    mu1_ok = np.abs(mu[:, 0] - lam2) <= tol[:, 0]
    positive = lam2 > tol[:, 0]
    spherical = representable & positive & mu1_ok & (mult_a == mult_pap)

    gaps = [np.abs(mu[:, 0] - lam2)[:, None], lam2[:, None].__abs__(),
            lam[:, :-1] - lam[:, 1:], mu[:, :-1] - mu[:, 1:],
            np.abs(mu - lam2[:, None])]
    lo, hi = tol * (ROUNDOFF_REL / rel_tol), tol * BORDERLINE_FACTOR
    borderline = np.zeros(len(a), dtype=bool)
    for gap in gaps:
        borderline |= np.any((gap > lo) & (gap <= hi), axis=1)

    min_dim = np.where(spherical, (n - 1) - mult_a, -1)
    return {
        "spherical": spherical,
        "representable": representable,
        "min_dimension": min_dim,
        "mult_A": mult_a,
        "mult_PAP": mult_pap,
        "lambda2": lam2,
        "mu1": mu[:, 0],
        "borderline": borderline,
    }


# single-graph API -----------------------------------------------------------


def is_representable(g: Graph) -> bool:
    return not is_complete_multipartite(g)


def test_spherical(g: Graph, rel_tol: float = DEFAULT_REL_TOL, exact_fallback: bool = True) -> SphericalReport:
    """Full spectral verdict for one graph.

    Borderline float decisions are re-decided with exact integer arithmetic
    when ``exact_fallback`` is set and the graph is small enough.
    """
    if g.n < 3:
        raise ValueError("need at least 3 vertices")
    a = g.adjacency()
    res = decide_batch(a[None], rel_tol)
    lam, mu = adjacency_spectra(a)
    spherical = bool(res["spherical"][0])
    mult_a = int(res["mult_A"][0])
    mult_pap = int(res["mult_PAP"][0])
    borderline = bool(res["borderline"][0])
    decided_by = "float"
    if borderline and exact_fallback and g.n <= MAX_EXACT:
        verdict = exact_decide(g)
        spherical = verdict.spherical
        if verdict.mult_lambda2_A is not None:
            mult_a = verdict.mult_lambda2_A
        if verdict.mult_lambda2_PAP is not None:
            mult_pap = verdict.mult_lambda2_PAP
        decided_by = "exact"
    lam2 = float(lam[1])
    ratio = math.sqrt(1.0 / lam2 + 1.0) if spherical else None
    return SphericalReport(
        n=g.n,
        d=g.n - 2,
        representable=bool(res["representable"][0]),
        spherical=spherical,
        lambda1=float(lam[0]),
        lambda2=lam2,
        mu1=float(mu[0]),
        mult_lambda2_A=mult_a,
        mult_lambda2_PAP=mult_pap,
        ratio_k=ratio,
        min_dimension=(g.n - 1 - mult_a) if spherical else None,
        borderline=borderline,
        decided_by=decided_by,
    )


test_spherical.__test__ = False  # keep pytest from collecting the imported name


def distance_ratio(g: Graph, rel_tol: float = DEFAULT_REL_TOL) -> float:
    """Long-to-short distance ratio ``sqrt(1/lambda2 + 1)`` of a spherical graph."""
    rep = test_spherical(g, rel_tol)
    if not rep.spherical:
        raise NotSphericalError("graph has no spherical representation")
    return rep.ratio_k  # type: ignore[return-value]


def min_dimension(g: Graph, rel_tol: float = DEFAULT_REL_TOL) -> int:
    rep = test_spherical(g, rel_tol)
    if not rep.spherical:
        raise NotSphericalError("graph has no spherical representation")
    return rep.min_dimension  # type: ignore[return-value]


def interlacing_test(g: Graph, rel_tol: float = DEFAULT_REL_TOL, exact_fallback: bool = True) -> bool:
    """Interlacing form of the criterion.

    With ``k`` the last index carrying ``lambda2`` (1-based), the graph is
    spherical iff ``mu_1 = lambda_2`` and ``mu_k < lambda_k``. Borderline
    spectra go to the exact oracle as in ``test_spherical``.
    """
    if not is_representable(g):
        return False
    a = g.adjacency()
    if exact_fallback and g.n <= MAX_EXACT and decide_batch(a[None], rel_tol)["borderline"][0]:
        return exact_decide(g).spherical
    lam, mu = adjacency_spectra(a)
    tol = float(_abs_tol(lam, rel_tol))
    lam2 = lam[1]
    if lam2 <= tol:
        return False
    if abs(mu[0] - lam2) > tol:
        return False
    k = 2
    while k < g.n and abs(lam[k] - lam2) <= tol:
        k += 1
    # lam[k - 1] is lambda_k in 1-based terms; mu has n - 1 entries
    if k - 1 >= len(mu):
        return True
    return bool(lam[k - 1] - mu[k - 1] > tol)


def check_regular_corollary(g: Graph) -> bool:
    """Regular and not complete multipartite must imply spherical."""
    if not is_regular(g) or is_complete_multipartite(g):
        return True
    return test_spherical(g).spherical


# matrices ---------------------------------------------------------------


def build_BG(g: Graph, k: float) -> np.ndarray:
    """Signed squared-distance matrix: 0 diagonal, -1 non-edges, -k^2 edges."""
    if k <= 1:
        raise ValueError("distance ratio must exceed 1")
    a = g.adjacency()
    b = -(np.ones((g.n, g.n)) - np.eye(g.n))
    b[a > 0] = -k * k
    return b


def build_BG_bar(g: Graph) -> np.ndarray:
    """``lambda2 I - A``."""
    a = g.adjacency()
    lam2 = jacobi_eigvals(a)[1]
    return lam2 * np.eye(g.n) - a


# condition oracle -----------------------------------------------------------


@dataclass
class ConditionTrace:
    """Each condition on ``Bbar = lambda2 I - A`` evaluated on its own route.

    ``psd`` is positivity on the complement of ``1``; ``gamma_vector`` is
    the existence of ``w`` orthogonal to ``1`` with ``Bbar w`` parallel to ``1``;
    ``singular`` is ``det(Bbar) = 0``; ``eventually_psd`` is ``r J + Bbar >= 0``
    for large ``r``; ``balanced_null`` is ``1^T A w = 0`` on the equality set of
    ``psd``; ``null_equivalence`` is ``Bbar w = 0`` on that same set.
    """

    representable: bool
    lambda2: float
    psd: bool = False
    gamma_vector: bool = False
    singular: bool = False
    eventually_psd: bool = False
    balanced_null: bool = False
    null_equivalence: bool = False
    witness: np.ndarray | None = None
    null_vectors: np.ndarray | None = None
    reason: str = ""
    tol: float = 0.0
    extra: dict = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return self.representable and self.psd and self.null_equivalence

    def to_dict(self) -> dict:
        out = {k: v for k, v in asdict(self).items() if k not in ("witness", "null_vectors", "extra")}
        out["verdict"] = self.verdict
        out["witness"] = None if self.witness is None else self.witness.tolist()
        out["null_vectors"] = None if self.null_vectors is None else self.null_vectors.tolist()
        return out


def condition_oracle(g: Graph, rel_tol: float = DEFAULT_REL_TOL) -> ConditionTrace:
    a = g.adjacency()
    n = g.n
    lam = jacobi_eigvals(a)
    tol = float(_abs_tol(lam, rel_tol))
    lam2 = float(lam[1])
    trace = ConditionTrace(representable=is_representable(g), lambda2=lam2, tol=tol)
    if not trace.representable:
        trace.reason = "complete multipartite"
        return trace
    if lam2 <= tol:
        trace.reason = "lambda2 <= 0"
        return trace

    bbar = lam2 * np.eye(n) - a
    ones = np.ones(n)
    p = np.eye(n) - np.full((n, n), 1.0 / n)
    comp_vals, comp_vecs = jacobi_eigh(project_center(bbar))

    # psd on the complement of 1
    trace.psd = bool(comp_vals[-1] >= -tol)

    # gamma vector: null space of (P Bbar)^T (P Bbar) + J is exactly {w : w.1 = 0, P Bbar w = 0}
    pb = p @ bbar
    gram = pb.T @ pb + np.outer(ones, ones)
    g_vals, g_vecs = jacobi_eigh(gram)
    gram_tol = tol * max(1.0, float(g_vals[0]))
    null_idx = np.flatnonzero(np.abs(g_vals) <= gram_tol)
    trace.gamma_vector = null_idx.size > 0
    if trace.gamma_vector:
        trace.witness = g_vecs[:, null_idx[0]]

    # det(Bbar) = 0 read off the smallest |eigenvalue| of Bbar
    b_vals = jacobi_eigvals(bbar)
    trace.singular = bool(np.min(np.abs(b_vals)) <= tol)

    # eventual psd of r J + Bbar: Schur-complement range test, b must lie in range(C)
    on_comp = np.abs(comp_vals) > tol
    c_range = comp_vecs[:, on_comp]
    coupling = p @ bbar @ ones
    residual = coupling - c_range @ (c_range.T @ coupling)
    trace.eventually_psd = trace.psd and bool(np.linalg.norm(residual) <= tol * max(1.0, n))

    # equality set of psd: eigenvectors of P Bbar P at ~0 other than 1
    zero_idx = np.flatnonzero(np.abs(comp_vals) <= tol)
    null_basis = comp_vecs[:, zero_idx]
    if null_basis.size:
        # strip the all-ones direction and re-orthonormalise
        null_basis = null_basis - np.outer(ones / n, ones @ null_basis)
        u, s, _ = np.linalg.svd(null_basis, full_matrices=False)
        null_basis = u[:, s > 1e-6]
    trace.null_vectors = null_basis
    if null_basis.size:
        trace.balanced_null = bool(np.all(np.abs(ones @ a @ null_basis) <= tol * n))
        trace.null_equivalence = bool(np.all(np.linalg.norm(bbar @ null_basis, axis=0) <= tol * n))
    else:
        trace.balanced_null = True
        trace.null_equivalence = True
    if not trace.verdict:
        trace.reason = "psd fails" if not trace.psd else "equality set not in null space"
    return trace
