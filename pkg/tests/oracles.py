"""Independent reference implementations used only by the tests.

Everything here works on Permutation objects and plain Python sets, never on the
group's multiplication table, so agreement with the package is a real check.
"""

from __future__ import annotations

import itertools

import networkx as nx

from gcgraph.gencayley import validate_subset
from gcgraph.perm import Permutation, compose


def elements(G) -> list[Permutation]:
    return list(G.elements)


def conj(g: Permutation, h: Permutation) -> Permutation:
    return compose(compose(g, h), g.inverse())


def alpha_dict(G, alpha) -> dict[Permutation, Permutation]:
    """alpha as a dict of permutations; the only place an index table is read."""
    return {G.elements[i]: G.elements[int(alpha.table[i])] for i in range(len(G))}


def inner_dict(G, g: Permutation) -> dict[Permutation, Permutation]:
    return {h: conj(g, h) for h in G.elements}


def partition_oracle(G, amap):
    els = elements(G)
    omega = {compose(amap[h.inverse()], h) for h in els}
    inverted = {h for h in els if amap[h] == h.inverse()}
    big = inverted - omega
    return omega, big, set(els) - omega - big


def admissible_literal(G, amap, S: set[Permutation]) -> bool:
    """Conditions (a), (b), (c) of the definition, quantifier by quantifier."""
    els = elements(G)
    e = Permutation.identity(G.degree)
    if any(amap[amap[h]] != h for h in els):
        return False
    if any(compose(amap[g.inverse()], g) in S for g in els):
        return False
    for g in els:
        for h in els:
            if compose(amap[h.inverse()], g) in S and compose(amap[g.inverse()], h) not in S:
                return False
    del e
    return True


def gc_networkx(G, amap, S: set[Permutation]) -> nx.Graph:
    els = elements(G)
    gr = nx.Graph()
    gr.add_nodes_from(range(len(els)))
    for i, g in enumerate(els):
        for j, h in enumerate(els):
            if i < j and compose(amap[g.inverse()], h) in S:
                gr.add_edge(i, j)
    return gr


def ugraph_networkx(graph) -> nx.Graph:
    gr = nx.Graph()
    gr.add_nodes_from(range(graph.n))
    gr.add_edges_from(graph.edges())
    return gr


def all_subsets_bruteforce(G, alpha, max_size: int) -> list[frozenset[int]]:
    """Every subset of size <= max_size that passes validate_subset."""
    out = []
    for k in range(max_size + 1):
        for c in itertools.combinations(range(len(G)), k):
            if validate_subset(G, alpha, c):
                out.append(frozenset(c))
    return out


def automorphisms_bruteforce_perm(G) -> set[tuple[int, ...]]:
    """All bijections of a tiny group that respect products (|G| <= 6 only)."""
    els = elements(G)
    pos = {p: i for i, p in enumerate(els)}
    n = len(els)
    if n > 6:
        raise ValueError("too large for the bijection oracle")
    out = set()
    for img in itertools.permutations(range(n)):
        ok = all(
            img[pos[compose(els[a], els[b])]] == pos[compose(els[img[a]], els[img[b]])]
            for a in range(n)
            for b in range(n)
        )
        if ok:
            out.add(img)
    return out


def commutator_set_oracle(G, g: Permutation) -> set[Permutation]:
    return {compose(compose(g.inverse(), h.inverse()), compose(g, h)) for h in G.elements}
