"""Graph isomorphism and CI / GCI isomorphism between generalized Cayley graphs.

General isomorphism uses colour refinement with individualisation and
backtracking. Graphs above ``VERTEX_CAP`` only get the structured paths
(edgeless, perfect matchings, disjoint cycle covers) and invariant refutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .aut import Automorphism, compose, conjugators, inner, inner_witness
from .gencayley import GenCayleyPair, UGraph, build_graph, partition, validate_subset
from .group import FiniteGroup, are_conjugate, class_of, commutator, subset_normalizer

VERTEX_CAP = 160


class IsomorphismCapExceeded(RuntimeError):
    pass


class TransferError(ValueError):
    pass


# ------------------------------------------------------------ graph isomorphism


def is_isomorphism(A: UGraph, B: UGraph, mapping: Sequence[int]) -> bool:
    """Whether ``mapping`` (A-vertex -> B-vertex) is a bijection carrying edges onto edges."""
    if A.n != B.n or len(mapping) != A.n or sorted(mapping) != list(range(B.n)):
        return False
    if A.edge_count != B.edge_count:
        return False
    # equal edge counts plus injectivity: edges onto edges and non-edges onto non-edges
    return all(B.has_edge(mapping[u], mapping[v]) for u, v in A.edges())


def is_perfect_matching(A: UGraph) -> tuple[bool, int]:
    """(1-regular?, number of components)."""
    comps = len(A.components())
    return A.n > 0 and A.regular_degree() == 1, comps


def _cycles(A: UGraph) -> list[list[int]] | None:
    """Vertices of each cycle in traversal order, if A is 2-regular."""
    if A.regular_degree() != 2:
        return None
    seen = [False] * A.n
    out = []
    for s in range(A.n):
        if seen[s]:
            continue
        cyc, prev, cur = [s], -1, s
        seen[s] = True
        while True:
            a, b = A.adjacency[cur]
            nxt = a if a != prev else b
            if nxt == s:
                break
            seen[nxt] = True
            cyc.append(nxt)
            prev, cur = cur, nxt
        out.append(cyc)
    return out


def _structured(A: UGraph, B: UGraph) -> list[int] | None | bool:
    """Fast paths; returns a mapping, None (not isomorphic) or False (no path applies)."""
    if A.edge_count == 0:
        return list(range(A.n))
    if A.regular_degree() == 1:
        mapping = [0] * A.n
        for (u, v), (x, y) in zip(A.edges(), B.edges()):
            mapping[u], mapping[v] = x, y
        return mapping
    ca, cb = _cycles(A), _cycles(B)
    if ca is not None and cb is not None:
        ca.sort(key=len)
        cb.sort(key=len)
        if [len(c) for c in ca] != [len(c) for c in cb]:
            return None
        mapping = [0] * A.n
        for c1, c2 in zip(ca, cb):
            for u, v in zip(c1, c2):
                mapping[u] = v
        return mapping
    return False


def _refine(adj: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition; colour ids are canonical."""
    n = len(adj)
    k = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ids = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ids[s] for s in sigs]
        if len(ids) == k:
            return new
        colors, k = new, len(ids)


def graph_isomorphic(A: UGraph, B: UGraph, cap: int = VERTEX_CAP) -> list[int] | None:
    """An isomorphism A -> B as a list ``mapping[a] = b``, or None."""
    if A.n != B.n or A.edge_count != B.edge_count or sorted(A.degrees()) != sorted(B.degrees()):
        return None
    fast = _structured(A, B)
    if fast is not False:
        return fast if fast is None or is_isomorphism(A, B, fast) else None
    if A.n > cap:
        raise IsomorphismCapExceeded(f"{A.n} vertices exceeds the general-search cap {cap}")

    n = A.n
    # disjoint union: A on 0..n-1, B on n..2n-1, so colours are comparable
    adj = list(A.adjacency) + [tuple(u + n for u in row) for row in B.adjacency]
    start = _refine(adj, [0] * (2 * n))

    def balanced(colors: list[int]) -> bool:
        return sorted(colors[:n]) == sorted(colors[n:])

    def search(colors: list[int]) -> list[int] | None:
        if not balanced(colors):
            return None
        classes: dict[int, list[int]] = {}
        for v in range(n):
            classes.setdefault(colors[v], []).append(v)
        if all(len(c) == 1 for c in classes.values()):
            where = {colors[n + w]: w for w in range(n)}
            mapping = [where[colors[v]] for v in range(n)]
            return mapping if is_isomorphism(A, B, mapping) else None
        target = min((c for c in classes.values() if len(c) > 1), key=lambda c: (len(c), c[0]))
        v = target[0]
        fresh = max(colors) + 1
        for w in range(n, 2 * n):
            if colors[w] != colors[v]:
                continue
            trial = list(colors)
            trial[v] = trial[w] = fresh
            found = search(_refine(adj, trial))
            if found is not None:
                return found
        return None

    return search(start)


# ------------------------------------------------------------- certificates


@dataclass
class IsoCertificate:
    kind: str  # graph_iso | ci | gci | none
    gamma: Automorphism | None = None
    g: int | None = None
    vertex_map: list[int] | None = None
    verified: bool = False
    extra: dict = field(default_factory=dict)

    def to_json(self, G: FiniteGroup) -> dict:
        out: dict = {"kind": self.kind, "verified": self.verified}
        if self.gamma is not None:
            out["gamma"] = self.gamma.to_json(G)
        if self.g is not None:
            out["g"] = G.label_of(self.g)
        if self.vertex_map is not None:
            out["vertex_map"] = list(self.vertex_map)
        return out


def gci_image(G: FiniteGroup, S: Iterable[int], gamma: Automorphism, alpha2: Automorphism, g: int) -> frozenset[int]:
    """{alpha2(g) gamma(s) g^-1 : s in S}."""
    left = int(alpha2.table[g])
    ginv = G.inverse(g)
    return frozenset(G.mul(G.mul(left, int(gamma.table[s])), ginv) for s in S)


def gci_vertex_map(G: FiniteGroup, gamma: Automorphism, g: int) -> list[int]:
    """v -> gamma(v) g^-1, the graph isomorphism induced by a GCI certificate."""
    return G.mul_many(gamma.table, G.inverse(g)).tolist()


def verify_gci_certificate(
    G: FiniteGroup, pair1: GenCayleyPair, pair2: GenCayleyPair, gamma: Automorphism, g: int
) -> bool:
    a1, a2 = pair1.alpha, pair2.alpha
    if compose(gamma, a1) != compose(a2, gamma):
        return False
    if gci_image(G, pair1.subset, gamma, a2, g) != pair2.subset:
        return False
    vmap = gci_vertex_map(G, gamma, g)
    return is_isomorphism(build_graph(G, pair1), build_graph(G, pair2), vmap)


def gci_isomorphic(
    G: FiniteGroup, pair1: GenCayleyPair, pair2: GenCayleyPair, aut_list: Sequence[Automorphism]
) -> IsoCertificate | None:
    """First (gamma, g) in search order with alpha2 = gamma alpha1 gamma^-1 and
    S2 = alpha2(g) gamma(S1) g^-1."""
    if len(pair1.subset) != len(pair2.subset):
        return None
    gammas = [aut_list[int(i)] for i in conjugators(pair1.alpha, pair2.alpha, aut_list)]
    return gci_search(G, pair1, pair2, gammas)


def gci_search(
    G: FiniteGroup, pair1: GenCayleyPair, pair2: GenCayleyPair, gammas: Sequence[Automorphism]
) -> IsoCertificate | None:
    """Translation search over the given conjugators gamma of alpha1 onto alpha2."""
    if len(pair1.subset) != len(pair2.subset):
        return None
    S1 = np.array(sorted(pair1.subset), dtype=np.int64)
    target = np.array(sorted(pair2.subset), dtype=np.int64)
    a2 = pair2.alpha.table
    for gamma in gammas:
        if S1.size == 0:
            return _gci_cert(G, pair1, pair2, gamma, 0)
        img = gamma.table[S1]
        cand = G.mul_many(G.mul_many(a2[:, None], img[None, :]), G.inv[:, None])
        cand.sort(axis=1)
        hits = np.flatnonzero((cand == target[None, :]).all(axis=1))
        if hits.size:
            return _gci_cert(G, pair1, pair2, gamma, int(hits[0]))
    return None


def _gci_cert(G, pair1, pair2, gamma, g) -> IsoCertificate:
    ok = verify_gci_certificate(G, pair1, pair2, gamma, g)
    return IsoCertificate("gci", gamma, g, gci_vertex_map(G, gamma, g), ok)


def ci_isomorphic(
    G: FiniteGroup, S1: Iterable[int], S2: Iterable[int], aut_list: Sequence[Automorphism]
) -> Automorphism | None:
    """First gamma in ``aut_list`` with gamma(S1) = S2."""
    S1 = np.array(sorted(set(S1)), dtype=np.int64)
    S2 = np.array(sorted(set(S2)), dtype=np.int64)
    if S1.size != S2.size:
        return None
    if S1.size == 0:
        return aut_list[0]
    A = np.stack([a.table for a in aut_list])
    img = np.sort(A[:, S1], axis=1)
    hits = np.flatnonzero((img == S2[None, :]).all(axis=1))
    return aut_list[int(hits[0])] if hits.size else None


def is_cayley_subset(G: FiniteGroup, S: Iterable[int]) -> bool:
    S = frozenset(S)
    return 0 not in S and frozenset(G.inverse(s) for s in S) == S


# ---------------------------------------------------- explicit isomorphisms


def _involution_of(G: FiniteGroup, pair: GenCayleyPair) -> int:
    g = inner_witness(G, pair.alpha)
    if g is None or g == 0:
        raise ValueError("pair must come from an inner involutory automorphism sigma(g)")
    return g


def right_translation(G: FiniteGroup, x: int) -> list[int]:
    """y -> y x."""
    return G.mul_many(np.arange(len(G)), x).tolist()


def conjugation_shift_theorem_check(G: FiniteGroup, pair: GenCayleyPair, x: int) -> bool:
    """xSx is admissible for sigma(g) and y -> y x maps GC(G, S) onto GC(G, xSx)."""
    _involution_of(G, pair)
    if x not in partition(G, pair.alpha).big_omega:
        raise ValueError(f"{G.label_of(x)} is not in big_omega")
    shifted = frozenset(G.product(x, s, x) for s in pair.subset)
    if not validate_subset(G, pair.alpha, shifted):
        return False
    A = build_graph(G, pair)
    B = build_graph(G, GenCayleyPair(pair.alpha, shifted))
    return is_isomorphism(A, B, right_translation(G, x))


def normalizer_shift_theorem_check(G: FiniteGroup, pair: GenCayleyPair, x: int) -> bool:
    """[g,x]S is admissible for sigma(g) and h -> h x maps GC(G, S) onto GC(G, [g,x]S)."""
    g = _involution_of(G, pair)
    S = pair.subset
    if S and x not in subset_normalizer(G, S):
        raise ValueError(f"{G.label_of(x)} does not normalise S")
    c = commutator(G, g, x)
    shifted = frozenset(G.mul(c, s) for s in S)
    if not validate_subset(G, pair.alpha, shifted):
        return False
    A = build_graph(G, pair)
    B = build_graph(G, GenCayleyPair(pair.alpha, shifted))
    return is_isomorphism(A, B, right_translation(G, x))


def twist(G: FiniteGroup, pair: GenCayleyPair, beta: Automorphism) -> GenCayleyPair:
    """(beta(S), beta alpha beta^-1)."""
    alpha = compose(compose(beta, pair.alpha), beta.inverse())
    return GenCayleyPair(alpha, beta.image(pair.subset))


def beta_twist_check(G: FiniteGroup, pair: GenCayleyPair, beta: Automorphism) -> bool:
    """The twisted pair is admissible and h -> beta(h) is an isomorphism onto its graph."""
    twisted = twist(G, pair, beta)
    if not validate_subset(G, twisted.alpha, twisted.subset):
        return False
    A = build_graph(G, pair)
    B = build_graph(G, twisted)
    return is_isomorphism(A, B, beta.table.tolist())


# ---------------------------------------------------- CI <-> GCI transfers


def left_multiply(G: FiniteGroup, g: int, S: Iterable[int]) -> frozenset[int]:
    return frozenset(G.mul(g, s) for s in S)


def gci_to_ci_transfer(
    G: FiniteGroup, pair1: GenCayleyPair, pair2: GenCayleyPair, cert: IsoCertificate
) -> Automorphism:
    """sigma(x h) carrying g1 S1 onto g2 S2, from a GCI certificate (sigma(h), x)."""
    g1, g2 = _involution_of(G, pair1), _involution_of(G, pair2)
    if g1 in pair1.subset or g2 in pair2.subset:
        raise TransferError("requires g_i not in S_i")
    if cert.gamma is None or cert.g is None or not verify_gci_certificate(G, pair1, pair2, cert.gamma, cert.g):
        raise TransferError("GCI certificate does not verify")
    h = inner_witness(G, cert.gamma)
    if h is None:
        raise TransferError("certificate automorphism is not inner")
    T1, T2 = left_multiply(G, g1, pair1.subset), left_multiply(G, g2, pair2.subset)
    if not (is_cayley_subset(G, T1) and is_cayley_subset(G, T2)):
        raise TransferError("g_i S_i is not a Cayley subset")
    witness = inner(G, G.mul(cert.g, h))
    if witness.image(T1) != T2:
        raise TransferError("sigma(x h) does not carry g1 S1 onto g2 S2")
    return witness


def ci_to_gci_transfer(
    G: FiniteGroup,
    g1: int,
    g2: int,
    S1: Iterable[int],
    S2: Iterable[int],
    ci_witness: Automorphism,
) -> IsoCertificate:
    """GCI certificate (sigma(g), x = h g1 g^-1 g2) between GC(G, g1 S1, sigma(g1))
    and GC(G, g2 S2, sigma(g2)), where g2 = g g1 g^-1 and S2 = sigma(h)(S1)."""
    S1, S2 = frozenset(S1), frozenset(S2)
    for gi in (g1, g2):
        if G.element_orders[gi] != 2:
            raise TransferError(f"{G.label_of(gi)} is not an involution")
    if not are_conjugate(G, g1, g2):
        raise TransferError("g1 and g2 are not conjugate")
    if not (is_cayley_subset(G, S1) and is_cayley_subset(G, S2)):
        raise TransferError("S1 and S2 must be Cayley subsets")
    if S1 & class_of(G, g1) or S2 & class_of(G, g2):
        raise TransferError("S_i meets the conjugacy class of g_i, so g_i S_i violates (b)")
    h = inner_witness(G, ci_witness)
    if h is None or ci_witness.image(S1) != S2:
        raise TransferError("CI witness must be an inner automorphism carrying S1 onto S2")
    g = next(y for y in range(len(G)) if G.conjugate(y, g1) == g2)
    x = G.product(h, g1, G.inverse(g), g2)
    pair1 = GenCayleyPair(inner(G, g1), left_multiply(G, g1, S1))
    pair2 = GenCayleyPair(inner(G, g2), left_multiply(G, g2, S2))
    for p in (pair1, pair2):
        if not validate_subset(G, p.alpha, p.subset):
            raise TransferError("translated subset is not a generalized Cayley subset")
    gamma = inner(G, g)
    ok = verify_gci_certificate(G, pair1, pair2, gamma, x)
    return IsoCertificate("gci", gamma, x, gci_vertex_map(G, gamma, x), ok, {"pair1": pair1, "pair2": pair2})
