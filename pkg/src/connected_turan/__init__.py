"""Connected extremal numbers of trees and brooms: constructions, searches, oracles."""

from .errors import BudgetExceeded, CapExceeded, Graph6ParseError, GraphError, ParameterError
from .graph import Graph, edge_count
from .graph6 import graph6_decode, graph6_encode
from .trees import Tree, barycenter, broom

__all__ = [
    "BudgetExceeded",
    "CapExceeded",
    "Graph",
    "Graph6ParseError",
    "GraphError",
    "ParameterError",
    "Tree",
    "barycenter",
    "broom",
    "edge_count",
    "graph6_decode",
    "graph6_encode",
]
