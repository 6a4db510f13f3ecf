"""Generalized Cayley subsets and graphs GC(G, S, alpha).

For an automorphism alpha with alpha^2 = id the group splits into

* ``omega``     = {alpha(h^-1) h : h in G}
* ``big_omega`` = {h : alpha(h) = h^-1} minus omega
* ``mho``       = everything else,

and S is admissible iff it avoids omega and alpha(S) = S^-1. Vertices g, h
are adjacent iff alpha(g^-1) h lies in S.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .aut import Automorphism, fix_subgroup, identity_aut, inner_witness, is_identity_or_involutory
from .group import FiniteGroup


class NotInvolutory(ValueError):
    pass


class InvalidSubset(ValueError):
    pass


@dataclass(frozen=True)
class PartitionTriple:
    omega: frozenset[int]
    big_omega: frozenset[int]
    mho: frozenset[int]

    @property
    def k_set(self) -> frozenset[int]:
        return self.omega | self.big_omega

    def to_json(self, G: FiniteGroup) -> dict:
        return {
            "omega": G.labels(self.omega),
            "big_omega": G.labels(self.big_omega),
            "mho": G.labels(self.mho),
        }


@dataclass(frozen=True)
class GenCayleyPair:
    alpha: Automorphism
    subset: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "subset", frozenset(int(s) for s in self.subset))

    def __len__(self) -> int:
        return len(self.subset)


class Validation(NamedTuple):
    valid: bool
    condition: str | None = None
    witness: int | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.valid


def _require_order_le_2(alpha: Automorphism) -> None:
    if not is_identity_or_involutory(alpha):
        raise NotInvolutory("alpha must satisfy alpha^2 = id (condition (a))")


def twisted_inverse_map(G: FiniteGroup, alpha: Automorphism) -> np.ndarray:
    """Array whose entry h is alpha(h^-1) h."""
    return G.mul_many(alpha.table[G.inv], np.arange(len(G)))


def partition(G: FiniteGroup, alpha: Automorphism) -> PartitionTriple:
    _require_order_le_2(alpha)
    omega = frozenset(twisted_inverse_map(G, alpha).tolist())
    inverted = np.flatnonzero(alpha.table == G.inv)
    big_omega = frozenset(inverted.tolist()) - omega
    mho = frozenset(range(len(G))) - omega - big_omega
    return PartitionTriple(omega, big_omega, mho)


def validate_subset(G: FiniteGroup, alpha: Automorphism, S: Iterable[int]) -> Validation:
    """Check condition (b) (S misses omega) and condition (c) (alpha(S) = S^-1)."""
    _require_order_le_2(alpha)
    S = frozenset(S)
    omega = frozenset(twisted_inverse_map(G, alpha).tolist())
    for s in sorted(S):
        if s in omega:
            return Validation(
                False, "b", s, f"violates (b): {G.label_of(s)} = alpha(h^-1) h for some h"
            )
    for s in sorted(S):
        partner = int(alpha.table[G.inverse(s)])
        if partner not in S:
            return Validation(
                False,
                "c",
                s,
                f"violates (c): alpha({G.label_of(s)}^-1) = {G.label_of(partner)} is not in S",
            )
    return Validation(True)


def blocks(G: FiniteGroup, alpha: Automorphism, part: PartitionTriple | None = None) -> list[tuple[int, ...]]:
    """Atomic pieces of admissible subsets: {s} for s in big_omega, {s, alpha(s^-1)} for s in mho."""
    part = part or partition(G, alpha)
    out = [(s,) for s in sorted(part.big_omega)]
    done: set[int] = set()
    for s in sorted(part.mho):
        if s in done:
            continue
        t = int(alpha.table[G.inverse(s)])
        done.update((s, t))
        out.append((s, t))
    return out


def enumerate_subsets(G: FiniteGroup, alpha: Automorphism, max_size: int) -> Iterator[GenCayleyPair]:
    """Every admissible S with |S| <= max_size, once each.

    Ordered by size, then by the sorted tuple of element indices.
    """
    if max_size < 0:
        raise ValueError("max_size must be non-negative")
    found: list[tuple[int, ...]] = []
    blks = blocks(G, alpha)

    def extend(start: int, chosen: tuple[int, ...], size: int) -> None:
        found.append(tuple(sorted(chosen)))
        for i in range(start, len(blks)):
            b = blks[i]
            if size + len(b) <= max_size:
                extend(i + 1, chosen + b, size + len(b))

    extend(0, (), 0)
    found.sort(key=lambda t: (len(t), t))
    for S in found:
        yield GenCayleyPair(alpha, frozenset(S))


def count_subsets(G: FiniteGroup, alpha: Automorphism, max_size: int) -> int:
    """Number of admissible subsets of size <= max_size, by counting block choices."""
    part = partition(G, alpha)
    singles = len(part.big_omega)
    pairs = len(part.mho) // 2
    return sum(comb(singles, a) * comb(pairs, b) for a in range(singles + 1) for b in range(pairs + 1) if a + 2 * b <= max_size)


@dataclass(frozen=True)
class UGraph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> UGraph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adjacency[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def regular_degree(self) -> int | None:
        degs = set(self.degrees())
        return degs.pop() if len(degs) == 1 else None

    def is_symmetric(self) -> bool:
        return all(self.has_edge(v, u) and u != v for u in range(self.n) for v in self.adjacency[u])

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps


def build_graph(G: FiniteGroup, pair: GenCayleyPair, check: bool = True) -> UGraph:
    """GC(G, S, alpha): N(g) = {alpha(g) s : s in S}."""
    if check:
        v = validate_subset(G, pair.alpha, pair.subset)
        if not v:
            raise InvalidSubset(v.message)
    n = len(G)
    S = np.array(sorted(pair.subset), dtype=np.int64)
    if S.size == 0:
        return UGraph(n, tuple(() for _ in range(n)))
    nbrs = G.mul_many(pair.alpha.table[:, None], S[None, :])
    nbrs.sort(axis=1)
    return UGraph(n, tuple(tuple(row) for row in nbrs.tolist()))


def cayley_graph(G: FiniteGroup, S: Iterable[int]) -> UGraph:
    return build_graph(G, GenCayleyPair(identity_aut(G), frozenset(S)))


def left_translation_is_graph_automorphism(G: FiniteGroup, pair: GenCayleyPair, x: int, graph: UGraph | None = None) -> bool:
    """Whether h -> x h preserves adjacency of GC(G, S, alpha)."""
    graph = graph or build_graph(G, pair)
    shift = G.mul_many(x, np.arange(len(G)))
    return all(
        graph.has_edge(int(shift[u]), int(shift[v])) for u, v in graph.edges()
    )


def never_complete_check(G: FiniteGroup, alpha: Automorphism) -> bool:
    """|omega| >= 2, so every admissible S has |S| <= |G| - 2."""
    return len(partition(G, alpha).omega) >= 2


def inner_involution(G: FiniteGroup, alpha: Automorphism) -> int:
    """The g with alpha = sigma(g)."""
    g = inner_witness(G, alpha)
    if g is None:
        raise ValueError("automorphism is not inner")
    return g


def omega_fibers(G: FiniteGroup, alpha: Automorphism) -> dict[int, frozenset[int]]:
    """Preimages of h -> alpha(h^-1) h, keyed by image."""
    img = twisted_inverse_map(G, alpha)
    fib: dict[int, set[int]] = {}
    for h, w in enumerate(img.tolist()):
        fib.setdefault(w, set()).add(h)
    return {w: frozenset(s) for w, s in fib.items()}


def fibers_are_fix_cosets(G: FiniteGroup, alpha: Automorphism) -> bool:
    """Each fiber of h -> alpha(h^-1) h equals the right coset Fix(alpha) h."""
    fix = sorted(fix_subgroup(G, alpha))
    for members in omega_fibers(G, alpha).values():
        h = min(members)
        if frozenset(G.mul(f, h) for f in fix) != members:
            return False
    return True


def counting_lemma_holds(G: FiniteGroup, alpha: Automorphism) -> bool:
    return len(partition(G, alpha).omega) * len(fix_subgroup(G, alpha)) == len(G)
