"""Generalized Cayley graphs of finite permutation groups.

Permutations, group closure, automorphisms (including the outer family of S6),
admissible subsets, GCI isomorphism search and the symmetric-group
classification checks.
"""

from .aut import Automorphism, automorphisms, inner, parse_alpha
from .gencayley import GenCayleyPair, UGraph, build_graph, enumerate_subsets, partition, validate_subset
from .group import FiniteGroup, named_group, parse_group_spec, symmetric
from .iso import gci_isomorphic, graph_isomorphic
from .perm import Permutation, compose, format_cycles, parse_cycles

__all__ = [
    "Automorphism", "FiniteGroup", "GenCayleyPair", "Permutation", "UGraph",
    "automorphisms", "build_graph", "compose", "enumerate_subsets", "format_cycles",
    "gci_isomorphic", "graph_isomorphic", "inner", "named_group", "parse_alpha",
    "parse_cycles", "parse_group_spec", "partition", "symmetric", "validate_subset",
]
__version__ = "0.1.0"
