"""Certified tools relating bandwidth, treewidth, separators and expansion of sparse graphs."""

from .graph import Graph, Labelling, bandwidth_of_labelling, generate
from .tdecomp import TreeDecomposition, validate_tree_decomposition
from .separators import Separator, provider, validate_separator
from .ordering import decomposition_ordering, recursive_band_ordering
from .treewidth import td_from_separators

__all__ = [
    "Graph",
    "Labelling",
    "Separator",
    "TreeDecomposition",
    "bandwidth_of_labelling",
    "decomposition_ordering",
    "generate",
    "provider",
    "recursive_band_ordering",
    "td_from_separators",
    "validate_separator",
    "validate_tree_decomposition",
]
__version__ = "0.1.0"
