"""Automorphisms of finite groups as index tables.

An automorphism is stored as the full array ``table[i] = index(alpha(elements[i]))``.
Composition is function composition: ``(a @ b)(h) = a(b(h))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .group import FiniteGroup, class_signature, conjugacy_classes, symmetric_degree

BRUTEFORCE_CAP = 720

# Images of the transpositions (1 k), k = 2..6, under the outer automorphism phi.
S6_PHI_IMAGES = {
    "(12)": "(12)(36)(45)",
    "(13)": "(16)(24)(35)",
    "(14)": "(13)(25)(46)",
    "(15)": "(15)(26)(34)",
    "(16)": "(14)(23)(56)",
}
S6_DELTA_TWIST = "(12345)"


class NotAnAutomorphism(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Automorphism:
    table: np.ndarray
    kind: str = "raw"  # identity | inner | s6_outer | raw
    witness: int | None = None

    def __post_init__(self) -> None:
        self.table.setflags(write=False)

    @property
    def key(self) -> bytes:
        return self.table.astype(np.int32).tobytes()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Automorphism) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.key)

    def __call__(self, h):
        if isinstance(h, (int, np.integer)):
            return int(self.table[h])
        return self.table[np.asarray(h)]

    def __matmul__(self, other: Automorphism) -> Automorphism:
        return compose(self, other)

    def image(self, S: Iterable[int]) -> frozenset[int]:
        return frozenset(int(self.table[s]) for s in S)

    def inverse(self) -> Automorphism:
        inv = np.empty_like(self.table)
        inv[self.table] = np.arange(len(self.table), dtype=self.table.dtype)
        return Automorphism(inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.table, np.arange(len(self.table))))

    def order(self) -> int:
        k, cur = 1, self.table
        while not np.array_equal(cur, np.arange(len(cur))):
            cur = self.table[cur]
            k += 1
        return k

    def describe(self, G: FiniteGroup) -> str:
        if self.kind == "identity":
            return "id"
        if self.kind == "inner":
            return f"inner:{G.label_of(self.witness)}"
        if self.kind == "s6_outer":
            return f"s6-delta:{G.label_of(self.witness)}"
        return "raw"

    def to_json(self, G: FiniteGroup) -> dict:
        images = {G.label_of(i): G.label_of(int(self.table[i])) for i in G.generator_indices}
        return {"provenance": self.describe(G), "images": images}


def compose(a: Automorphism, b: Automorphism) -> Automorphism:
    """a after b."""
    return Automorphism(a.table[b.table])


def identity_aut(G: FiniteGroup) -> Automorphism:
    return Automorphism(np.arange(len(G), dtype=np.int32), "identity")


def inner(G: FiniteGroup, g: int) -> Automorphism:
    """sigma(g): h -> g h g^-1."""
    if g == 0:
        return identity_aut(G)
    xs = np.arange(len(G))
    return Automorphism(G.mul_many(G.mul_many(g, xs), G.inverse(g)).astype(np.int32), "inner", g)


def inner_witness(G: FiniteGroup, a: Automorphism) -> int | None:
    """Some g with a = sigma(g), read off from the generators, or None."""
    if a.kind == "inner":
        return a.witness
    if a.kind == "identity" or a.is_identity():
        return 0
    gens = G.generator_indices
    for g in range(len(G)):
        if all(G.conjugate(g, s) == a(s) for s in gens):
            return g
    return None


def is_involutory(a: Automorphism) -> bool:
    """Order exactly two; the identity does not qualify."""
    if a.is_identity():
        return False
    return bool(np.array_equal(a.table[a.table], np.arange(len(a.table))))


def is_identity_or_involutory(a: Automorphism) -> bool:
    return bool(np.array_equal(a.table[a.table], np.arange(len(a.table))))


def fix_subgroup(G: FiniteGroup, a: Automorphism) -> frozenset[int]:
    return frozenset(np.flatnonzero(a.table == np.arange(len(G))).tolist())


def is_homomorphism(G: FiniteGroup, table: np.ndarray, exhaustive: bool | None = None) -> bool:
    """Bijectivity plus the product rule; exhaustive for small groups, else on generators.

    Checking ``f(s h) = f(s) f(h)`` for every generator ``s`` and every ``h``
    already forces ``f`` to be a homomorphism, so the generator check is exact too.
    """
    n = len(G)
    if len(table) != n or len(set(table.tolist())) != n or table[0] != 0:
        return False
    xs = np.arange(n)
    if exhaustive is None:
        exhaustive = n <= 120
    lefts = range(n) if exhaustive else G.generator_indices
    for s in lefts:
        if not np.array_equal(table[G.mul_many(s, xs)], G.mul_many(table[s], table)):
            return False
    return True


def from_generator_images(G: FiniteGroup, gens: Sequence[int], images: Sequence[int]) -> Automorphism | None:
    """Extend generator images to a table, or None if they do not define an automorphism."""
    plan = _SpanningPlan(G, gens)
    table = plan.extend(np.asarray(images))
    return None if table is None else Automorphism(table)


class _SpanningPlan:
    """Breadth-first spanning tree of the Cayley digraph for a generating tuple."""

    def __init__(self, G: FiniteGroup, gens: Sequence[int]):
        self.G = G
        self.gens = list(gens)
        n = len(G)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        layers = []
        frontier = np.array([0])
        while frontier.size:
            vs, us, ks = [], [], []
            for k, g in enumerate(self.gens):
                nxt = G.mul_many(g, frontier)
                fresh = ~seen[nxt]
                cand, src = nxt[fresh], frontier[fresh]
                # a vertex may be reached by several generators in one layer
                cand, first = np.unique(cand, return_index=True)
                seen[cand] = True
                vs.append(cand)
                us.append(src[first])
                ks.append(np.full(cand.size, k))
            v = np.concatenate(vs)
            layers.append((v, np.concatenate(us), np.concatenate(ks)))
            frontier = v
        if not seen.all():
            raise ValueError("elements do not generate the group")
        self.layers = layers
        self.edge_targets = [G.mul_many(g, np.arange(n)) for g in self.gens]

    def extend(self, images: np.ndarray) -> np.ndarray | None:
        G = self.G
        n = len(G)
        table = np.full(n, -1, dtype=np.int32)
        table[0] = 0
        for v, u, k in self.layers:
            table[v] = G.mul_many(images[k], table[u])
        for k in range(len(self.gens)):
            if not np.array_equal(table[self.edge_targets[k]], G.mul_many(images[k], table)):
                return None
        if np.unique(table).size != n:
            return None
        return table


def small_generating_tuple(G: FiniteGroup) -> list[int]:
    """A generating tuple of size <= 2 minimising the image-search space, if one exists."""
    n = len(G)
    if n == 1:
        return []
    sig = {g: class_signature(G, g) for g in range(n)}
    count: dict[tuple[int, int], int] = {}
    for s in sig.values():
        count[s] = count.get(s, 0) + 1
    cost = {g: count[sig[g]] for g in range(n)}

    singles = sorted(range(1, n), key=lambda g: (cost[g], g))
    for g in singles:
        if len(G.subgroup_closure([g])) == n:
            return [g]
    reps = [c.representative for c in conjugacy_classes(G)[1:]]
    pairs = sorted(
        ((x, y) for x in reps for y in range(1, n) if y != x),
        key=lambda p: (cost[p[0]] * cost[p[1]], p),
    )
    for x, y in pairs:
        if len(G.subgroup_closure([x, y])) == n:
            return [x, y]
    return list(G.generator_indices)


def aut_group_bruteforce(G: FiniteGroup, cap: int = BRUTEFORCE_CAP) -> list[Automorphism]:
    """All automorphisms, by searching images of a small generating tuple.

    Candidate images must share element order and conjugacy-class size with
    the generator they replace; for pairs the order of the product must match
    too. Automorphisms equal to an inner one are tagged with their witness.
    """
    n = len(G)
    if n > cap:
        raise ValueError(f"group order {n} exceeds brute-force cap {cap}")
    gens = small_generating_tuple(G)
    if not gens:
        return [identity_aut(G)]
    plan = _SpanningPlan(G, gens)
    sig = [class_signature(G, g) for g in range(n)]
    cands = [[h for h in range(n) if sig[h] == sig[g]] for g in gens]
    orders = G.element_orders
    prod_order = int(orders[G.mul(gens[0], gens[1])]) if len(gens) == 2 else None

    inner_by_key = {}
    for g in range(n):
        a = inner(G, g)
        inner_by_key.setdefault(a.key, a)

    found: list[Automorphism] = []
    seen: set[bytes] = set()
    for images in product(*cands):
        if prod_order is not None and orders[G.mul(images[0], images[1])] != prod_order:
            continue
        table = plan.extend(np.array(images))
        if table is None:
            continue
        a = Automorphism(table)
        if a.key in seen:
            continue
        seen.add(a.key)
        found.append(inner_by_key.get(a.key, a))
    return found


def is_closed(G: FiniteGroup, auts: Sequence[Automorphism]) -> bool:
    """Whether every member is an automorphism, the identity is present and the
    set is closed under composition (hence a group).

    Automorphisms are determined by the images of a generating tuple, so
    closure is checked on those images only.
    """
    if not auts:
        return False
    if not all(is_homomorphism(G, a.table, exhaustive=False) for a in auts):
        return False
    gens = small_generating_tuple(G) or [0]
    A = np.stack([a.table for a in auts]).astype(np.int64)
    n = len(G)
    weights = n ** np.arange(len(gens), dtype=np.int64)
    codes = A[:, gens] @ weights
    known = set(codes.tolist())
    if len(known) != len(auts) or int(np.arange(n)[gens] @ weights) not in known:
        return False
    for b in A:
        # (a after b)(s) = a(b(s))
        if not set((A[:, b[gens]] @ weights).tolist()) <= known:
            return False
    return True


def identity_aut_key(n: int) -> bytes:
    return np.arange(n, dtype=np.int32).tobytes()


def check_closed_sample(auts: Sequence[Automorphism], samples: int = 64, seed: int = 0) -> bool:
    """Cheap sanity check: identity present and random products stay in the set."""
    keys = {a.key for a in auts}
    n = len(auts[0].table)
    if identity_aut_key(n) not in keys:
        return False
    rng = np.random.default_rng(seed)
    for i, j in rng.integers(0, len(auts), size=(samples, 2)):
        if (auts[i] @ auts[j]).key not in keys:
            return False
    return True


class IncompleteAutList(ValueError):
    pass


def conjugate_in_aut(
    G: FiniteGroup,
    alpha: Automorphism,
    beta: Automorphism,
    aut_list: Sequence[Automorphism],
    check: bool = True,
) -> Automorphism | None:
    """First gamma in ``aut_list`` with beta = gamma alpha gamma^-1, else None."""
    if check and not check_closed_sample(aut_list):
        raise IncompleteAutList("automorphism list is not closed under composition")
    hits = conjugators(alpha, beta, aut_list)
    return aut_list[int(hits[0])] if hits.size else None


def conjugators(alpha: Automorphism, beta: Automorphism, aut_list: Sequence[Automorphism]) -> np.ndarray:
    """Indices of every gamma in ``aut_list`` with gamma alpha = beta gamma."""
    A = np.stack([a.table for a in aut_list])
    ok = (A[:, alpha.table] == beta.table[A]).all(axis=1)
    return np.flatnonzero(ok)


# ----------------------------------------------------------------- Aut(S6)


def _require_s6(G: FiniteGroup) -> None:
    if symmetric_degree(G) != 6 or G.degree != 6:
        raise ValueError(f"{G.label} is not the symmetric group S6")


def s6_phi(G: FiniteGroup) -> Automorphism:
    """The outer automorphism of S6 fixed by its images of (12), ..., (16).

    The table is rebuilt from the generator images and validated; a failure
    here means the image data is wrong.
    """
    _require_s6(G)
    gens = [G.element(t) for t in S6_PHI_IMAGES]
    images = [G.element(t) for t in S6_PHI_IMAGES.values()]
    a = from_generator_images(G, gens, images)
    if a is None or not is_homomorphism(G, a.table, exhaustive=False):
        raise NotAnAutomorphism("phi images do not extend to an automorphism of S6")
    return Automorphism(a.table, "raw")


def s6_delta(G: FiniteGroup, g: int = 0) -> Automorphism:
    """delta_g = sigma(g) after delta, where delta = sigma((12345)) after phi."""
    _require_s6(G)
    x = G.element(S6_DELTA_TWIST)
    delta = inner(G, x) @ s6_phi(G)
    table = inner(G, g).table[delta.table] if g else delta.table
    return Automorphism(table, "s6_outer", g)


def s6_automorphisms(G: FiniteGroup) -> list[Automorphism]:
    """sigma(g) for all g, followed by delta_g for all g (1440 maps)."""
    _require_s6(G)
    delta = s6_delta(G)
    inners = [inner(G, g) for g in range(len(G))]
    outers = [Automorphism(a.table[delta.table], "s6_outer", a.witness or 0) for a in inners]
    return inners + outers


def automorphisms(G: FiniteGroup) -> list[Automorphism]:
    """Aut(G): explicit for S6, brute force for small groups, Inn(G) for other S_n."""
    n = symmetric_degree(G)
    if n == 6:
        return s6_automorphisms(G)
    if len(G) <= BRUTEFORCE_CAP:
        return aut_group_bruteforce(G)
    if n is not None:
        return [inner(G, g) for g in range(len(G))]
    raise ValueError(f"Aut({G.label}) is beyond the brute-force cap")


def involutory_automorphisms(auts: Iterable[Automorphism]) -> list[Automorphism]:
    return [a for a in auts if is_involutory(a)]


def parse_alpha(G: FiniteGroup, text: str) -> Automorphism:
    """``id``, ``inner:(12)`` or ``s6-delta:(g)``."""
    text = text.strip()
    if text in ("id", "identity", "e"):
        return identity_aut(G)
    kind, _, arg = text.partition(":")
    if kind == "inner":
        return inner(G, G.element(arg))
    if kind == "s6-delta":
        return s6_delta(G, G.element(arg) if arg.strip() else 0)
    raise ValueError(f"unrecognised automorphism {text!r}")
