"""Graph serialisation: DOT, flat edge list and JSON.

DOT graphs are named ``GC(<group>,<subset>,<alpha>)`` and label vertices by
cycle strings. Edge lists are 0-based ``i j`` lines with i < j, sorted.
"""

from __future__ import annotations

import json

from .aut import Automorphism
from .gencayley import UGraph
from .group import FiniteGroup


def subset_label(G: FiniteGroup, S) -> str:
    return "{" + ",".join(G.labels(S)) + "}"


def graph_name(G: FiniteGroup, S, alpha: Automorphism) -> str:
    return f"GC({G.label},{subset_label(G, S)},{alpha.describe(G)})"


def to_dot(G: FiniteGroup, graph: UGraph, S, alpha: Automorphism) -> str:
    lines = [f'graph "{graph_name(G, S, alpha)}" {{']
    for v in range(graph.n):
        lines.append(f'  {v} [label="{G.label_of(v)}"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(graph: UGraph) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(graph.edges()))


def graph_json(G: FiniteGroup, graph: UGraph, S, alpha: Automorphism) -> dict:
    return {
        "group": G.label,
        "alpha": alpha.describe(G),
        "subset": G.labels(S),
        "vertices": [G.label_of(v) for v in range(graph.n)],
        "edges": [[G.label_of(u), G.label_of(v)] for u, v in graph.edges()],
    }


def to_json(G: FiniteGroup, graph: UGraph, S, alpha: Automorphism) -> str:
    return json.dumps(graph_json(G, graph, S, alpha), indent=2)


def parse_dot_counts(text: str) -> tuple[int, int]:
    """(vertex count, edge count) of a DOT document written by :func:`to_dot`."""
    vertices = sum(1 for line in text.splitlines() if "[label=" in line)
    edges = sum(1 for line in text.splitlines() if " -- " in line)
    return vertices, edges
