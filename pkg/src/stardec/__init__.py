"""Constructive 3-decompositions of 3-connected star-like cubic graphs."""

from .assembly import NotApplicable, NotCubic, NotStarLike, NotThreeConnected, three_decompose
from .graph_core import CyclePath, Graph, GraphError, ThreeDecomposition, build_graph
from .matching_star import BudgetExceeded, CycleCover, find_star_matching
from .verify import verify_three_decomposition

__all__ = [
    "BudgetExceeded",
    "CycleCover",
    "CyclePath",
    "Graph",
    "GraphError",
    "NotApplicable",
    "NotCubic",
    "NotStarLike",
    "NotThreeConnected",
    "ThreeDecomposition",
    "build_graph",
    "find_star_matching",
    "three_decompose",
    "verify_three_decomposition",
]
