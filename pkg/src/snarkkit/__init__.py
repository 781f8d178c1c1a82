"""Constructions of snarks from Petersen-graph multipoles and exact,
certificate-producing solvers for their uncolorability measures."""

from .multipole import (EdgeCut, Graph6Error, GraphError, Multipole, ValidationReport,
                        emit_graph6, join_semiedges, parse_graph6, read_graph, validate,
                        write_graph)

__version__ = "0.1.0"

__all__ = [
    "EdgeCut", "Graph6Error", "GraphError", "Multipole", "ValidationReport",
    "emit_graph6", "join_semiedges", "parse_graph6", "read_graph", "validate", "write_graph",
]
