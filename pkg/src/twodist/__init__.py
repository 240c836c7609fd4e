"""Spherical two-distance sets from graph spectra."""

from __future__ import annotations

from .census import CensusRow, export_census, run_census
from .eigen import DEFAULT_REL_TOL, Spectrum, eigendecompose, jacobi_eigh, jacobi_eigvals
from .exact import ExactVerdict, exact_decide, exact_test_spherical
from .graphs import (
    Graph,
    GraphFormatError,
    canonical_form,
    is_complete_multipartite,
    nonisomorphic_graphs,
    parse_graph6,
    serialize_graph6,
)
from .montecarlo import SampleResult, estimate_fraction, export_samples
from .realize import Embedding, RealizationError, realize
from .spherical import (
    ConditionTrace,
    NotSphericalError,
    SphericalReport,
    condition_oracle,
    distance_ratio,
    interlacing_test,
    min_dimension,
    test_spherical,
)

__all__ = [
    "CensusRow", "ConditionTrace", "DEFAULT_REL_TOL", "Embedding", "ExactVerdict", "Graph",
    "GraphFormatError", "NotSphericalError", "RealizationError", "SampleResult", "Spectrum",
    "SphericalReport", "canonical_form", "condition_oracle", "distance_ratio", "eigendecompose",
    "estimate_fraction", "exact_decide", "exact_test_spherical", "export_census", "export_samples",
    "interlacing_test", "is_complete_multipartite", "jacobi_eigh", "jacobi_eigvals", "min_dimension",
    "nonisomorphic_graphs", "parse_graph6", "realize", "run_census", "serialize_graph6", "test_spherical",
]
