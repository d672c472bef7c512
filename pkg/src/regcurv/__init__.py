"""Exact discrete Ricci curvature on regular graphs."""

from .census import CensusRequest, census_with_classification, enumerate_regular
from .curvature import (
    CurvatureReport,
    GraphClass,
    IdlenessProfile,
    check_positivity_bound,
    classify_graph,
    edge_report,
    idleness_profile,
    kappa_alpha_formula,
    kappa_lly_formula,
    kappa_lly_modified,
    kappa_zero_formula,
    kappa_zero_via_relation,
)
from .graphcore import EdgeContext, Graph, edge_context
from .io import emit_graph6, parse_edge_list, parse_graph6
from .transport import kappa_alpha_direct, kappa_lly_direct, wasserstein1

__all__ = [
    "CensusRequest",
    "CurvatureReport",
    "EdgeContext",
    "Graph",
    "GraphClass",
    "IdlenessProfile",
    "census_with_classification",
    "check_positivity_bound",
    "classify_graph",
    "edge_context",
    "edge_report",
    "emit_graph6",
    "enumerate_regular",
    "idleness_profile",
    "kappa_alpha_direct",
    "kappa_alpha_formula",
    "kappa_lly_direct",
    "kappa_lly_formula",
    "kappa_lly_modified",
    "kappa_zero_formula",
    "kappa_zero_via_relation",
    "parse_edge_list",
    "parse_graph6",
    "wasserstein1",
]
