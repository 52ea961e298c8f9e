"""Mixed cages: regular mixed graphs of given undirected degree, out-degree
and girth. Exact girth, canonical forms, order bounds, explicit
constructions and exhaustive searches."""

from __future__ import annotations

from .bounds import ahm_bound, bcw_order, bound_report, f21, lower_bound, moore_bound
from .canonical import canonical_form, is_isomorphic
from .constructions import CATALOG, LiftNode, LiftSpec, construct, lift
from .core import (
    ARC,
    EDGE,
    GraphError,
    MixedGraph,
    arc,
    brute_force_girth,
    check_regular,
    check_totally_regular,
    degree_profile,
    edge,
    girth,
    girth_through_element,
    mixed_distance,
    verify,
)
from .search import SearchConfig, SearchResult, enumerate_partitions, search

__all__ = [
    "ARC",
    "CATALOG",
    "EDGE",
    "GraphError",
    "LiftNode",
    "LiftSpec",
    "MixedGraph",
    "SearchConfig",
    "SearchResult",
    "ahm_bound",
    "arc",
    "bcw_order",
    "bound_report",
    "brute_force_girth",
    "canonical_form",
    "check_regular",
    "check_totally_regular",
    "construct",
    "degree_profile",
    "edge",
    "enumerate_partitions",
    "f21",
    "girth",
    "girth_through_element",
    "is_isomorphic",
    "lift",
    "lower_bound",
    "mixed_distance",
    "moore_bound",
    "search",
    "verify",
]
