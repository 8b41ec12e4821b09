"""Strong edge-coloring of (3, delta)-bipartite graphs with at most 3*delta colors."""

from .coloring import StrongColoring, strong_color
from .decomposition import Decomposition, EdgeKind, VertexType, initial_decomposition
from .errors import BsecError, InputError, InvariantBreach
from .graph import BipartiteGraph, GeneratorSpec, generate, pad_to_cubic, parse_graph, sees
from .repair import potential, scan_violations, stabilize
from .verify import conflict_pairs, exact_chi_s, verify

__all__ = [
    "BipartiteGraph",
    "BsecError",
    "Decomposition",
    "EdgeKind",
    "GeneratorSpec",
    "InputError",
    "InvariantBreach",
    "StrongColoring",
    "VertexType",
    "conflict_pairs",
    "exact_chi_s",
    "generate",
    "initial_decomposition",
    "pad_to_cubic",
    "parse_graph",
    "potential",
    "scan_violations",
    "sees",
    "stabilize",
    "strong_color",
    "verify",
]
