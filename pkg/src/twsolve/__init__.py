"""Exact treewidth solving over oriented minimal separators and potential
maximal cliques, with safe-separator preprocessing and PACE-format I/O."""

from .graph import Graph, bit_list, bits, min_vertex, precedes, vset
from .pipeline import solve
from .solver import DecideResult, SolverStats, Witness, decide, lower_bound, treewidth
from .tdbuild import TreeDecomposition, extract, validate

__version__ = "0.1.0"

__all__ = [
    "DecideResult",
    "Graph",
    "SolverStats",
    "TreeDecomposition",
    "Witness",
    "bit_list",
    "bits",
    "decide",
    "extract",
    "lower_bound",
    "min_vertex",
    "precedes",
    "solve",
    "treewidth",
    "validate",
    "vset",
]
