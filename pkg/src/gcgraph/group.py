"""Finite permutation groups with an indexed element table.

Elements are numbered in breadth-first order from the identity (index 0),
expanding by the generators in the order given, so indices are stable and
reproducible across runs.
"""

from __future__ import annotations

import os
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .perm import Permutation, cycle_type, parse_cycles

DEFAULT_ORDER_CAP = 10080
TABLE_LIMIT = 1024


class GroupOrderCapExceeded(RuntimeError):
    pass


def order_cap() -> int:
    return int(os.environ.get("GENCAYLEY_CAP", DEFAULT_ORDER_CAP))


@dataclass(eq=False)
class FiniteGroup:
    elements: list[Permutation]
    generator_indices: list[int]
    name: str | None = None
    _index: dict[Permutation, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._index = {p: i for i, p in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate group elements")
        if not self.elements[0].is_identity():
            raise ValueError("element 0 must be the identity")

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.elements[0].degree

    @property
    def identity(self) -> int:
        return 0

    @property
    def label(self) -> str:
        return self.name or f"<{', '.join(self.label_of(i) for i in self.generator_indices)}>"

    def index(self, p: Permutation) -> int:
        try:
            return self._index[p]
        except KeyError:
            raise ValueError(f"{p} is not an element of {self.label}") from None

    def element(self, text: str) -> int:
        """Index of the element written in cycle notation."""
        return self.index(parse_cycles(text, self.degree))

    def elements_from(self, texts: Iterable[str]) -> frozenset[int]:
        return frozenset(self.element(t) for t in texts)

    def label_of(self, i: int) -> str:
        return str(self.elements[i])

    def labels(self, idx: Iterable[int]) -> list[str]:
        return [self.label_of(i) for i in sorted(idx)]

    @cached_property
    def table(self) -> np.ndarray | None:
        """Multiplication table ``table[i, j] = index(elements[i] * elements[j])``."""
        n = len(self)
        if n > TABLE_LIMIT:
            return None
        imgs = np.array([p.images for p in self.elements], dtype=np.int64)
        # encode each permutation as an integer in base `degree`
        weights = self.degree ** np.arange(self.degree, dtype=np.int64)
        codes = imgs @ weights
        order = np.argsort(codes)
        sorted_codes = codes[order]
        tab = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            # images of p_i * p_j are p_i[p_j]
            prod_codes = imgs[i][imgs] @ weights
            tab[i] = order[np.searchsorted(sorted_codes, prod_codes)]
        return tab

    @cached_property
    def inv(self) -> np.ndarray:
        return np.array([self._index[p.inverse()] for p in self.elements], dtype=np.int32)

    def mul(self, i: int, j: int) -> int:
        tab = self.table
        if tab is not None:
            return int(tab[i, j])
        return self._index[self.elements[i] * self.elements[j]]

    def mul_many(self, left, right) -> np.ndarray:
        """Vectorised product of index arrays (broadcasting)."""
        tab = self.table
        left, right = np.broadcast_arrays(np.asarray(left), np.asarray(right))
        if tab is not None:
            return tab[left, right]
        out = np.empty(left.shape, dtype=np.int32)
        for pos in np.ndindex(left.shape):
            out[pos] = self.mul(int(left[pos]), int(right[pos]))
        return out

    def product(self, *idx: int) -> int:
        acc = 0
        for i in idx:
            acc = self.mul(acc, i)
        return acc

    def inverse(self, i: int) -> int:
        return int(self.inv[i])

    @cached_property
    def element_orders(self) -> np.ndarray:
        return np.array([p.order() for p in self.elements], dtype=np.int32)

    def is_abelian(self) -> bool:
        gens = self.generator_indices
        return all(self.mul(a, b) == self.mul(b, a) for a in gens for b in gens)

    def conjugate(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.mul(self.mul(x, g), self.inverse(x))

    def conjugates_of(self, g: int) -> np.ndarray:
        """Array whose entry x is x g x^-1."""
        xs = np.arange(len(self))
        return self.mul_many(self.mul_many(xs, g), self.inv)

    def subgroup_closure(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(gens)
        seen = {0}
        queue = deque([0])
        while queue:
            u = queue.popleft()
            for g in gens:
                v = self.mul(g, u)
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return frozenset(seen)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={len(self)})"


def close_generators(
    gens: Sequence[Permutation],
    name: str | None = None,
    degree: int | None = None,
    cap: int | None = None,
) -> FiniteGroup:
    """Group generated by ``gens``, enumerated breadth-first from the identity."""
    cap = order_cap() if cap is None else cap
    if gens:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators must share a degree")
    elif degree is None:
        degree = 1
    ident = Permutation.identity(degree)
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        u = queue.popleft()
        for g in gens:
            v = g * u
            if v not in index:
                index[v] = len(elements)
                elements.append(v)
                if len(elements) > cap:
                    raise GroupOrderCapExceeded(f"group order exceeds cap {cap}")
                queue.append(v)
    return FiniteGroup(elements, [index[g] for g in gens], name)


# ---------------------------------------------------------------- named groups


def symmetric(n: int) -> FiniteGroup:
    """S_n generated by the transpositions (1 k), k = 2..n."""
    if n < 1:
        raise ValueError("n must be positive")
    gens = [Permutation.from_cycles([(1, k)], n) for k in range(2, n + 1)]
    return close_generators(gens, name=f"S{n}", degree=n)


def alternating(n: int) -> FiniteGroup:
    gens = [Permutation.from_cycles([(1, 2, k)], n) for k in range(3, n + 1)]
    return close_generators(gens, name=f"A{n}", degree=n)


def cyclic(n: int) -> FiniteGroup:
    gens = [Permutation.from_cycles([tuple(range(1, n + 1))], n)] if n > 1 else []
    return close_generators(gens, name=f"C{n}", degree=n)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given order 2m acting on m points."""
    if order % 2 or order < 6:
        raise ValueError("dihedral order must be even and at least 6")
    m = order // 2
    rot = Permutation.from_cycles([tuple(range(1, m + 1))], m)
    refl = Permutation(tuple((-i) % m for i in range(m)))
    return close_generators([rot, refl], name=f"D{order}", degree=m)


_NAMED = {"S": symmetric, "A": alternating, "C": cyclic, "D": dihedral}
_NAME_RE = re.compile(r"^([SACD])(\d+)$")


def named_group(name: str) -> FiniteGroup:
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"unknown group name {name!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "S" and n > 7:
        raise GroupOrderCapExceeded("named symmetric groups are limited to n <= 7")
    return _NAMED[kind](n)


def parse_group_spec(text: str) -> FiniteGroup:
    """Parse ``S4``, ``name:S4`` or ``gens: (12),(123) degree:4``."""
    text = text.strip()
    if text.startswith("name:"):
        return named_group(text[5:])
    if text.startswith("gens:"):
        m = re.match(r"^gens:\s*(.*?)\s+degree:\s*(\d+)\s*$", text)
        if not m:
            raise ValueError(f"malformed group spec {text!r}")
        degree = int(m.group(2))
        body = m.group(1).strip()
        gens = [parse_cycles(tok, degree) for tok in _split_elements(body)] if body else []
        return close_generators(gens, degree=degree)
    return named_group(text)


def _split_elements(text: str) -> list[str]:
    """Split a comma-separated list of cycle strings, ignoring commas inside cycles."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if "".join(cur).strip():
        out.append("".join(cur).strip())
    return out


split_elements = _split_elements


# ------------------------------------------------------------ structure queries


class ConjugacyClass(NamedTuple):
    representative: int
    members: frozenset[int]


def center(G: FiniteGroup) -> frozenset[int]:
    out = [h for h in range(len(G)) if all(G.mul(h, g) == G.mul(g, h) for g in G.generator_indices)]
    return frozenset(out)


def centralizer(G: FiniteGroup, g: int) -> frozenset[int]:
    xs = np.arange(len(G))
    return frozenset(np.flatnonzero(G.mul_many(xs, g) == G.mul_many(g, xs)).tolist())


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Classes ordered by smallest member index; the first is {e}."""
    cached = getattr(G, "_classes", None)
    if cached is not None:
        return cached
    assigned = np.full(len(G), -1)
    classes = []
    for g in range(len(G)):
        if assigned[g] >= 0:
            continue
        members = frozenset(G.conjugates_of(g).tolist())
        assigned[list(members)] = len(classes)
        classes.append(ConjugacyClass(g, members))
    G._classes = classes
    return classes


def class_of(G: FiniteGroup, g: int) -> frozenset[int]:
    for cls in conjugacy_classes(G):
        if g in cls.members:
            return cls.members
    raise ValueError(f"bad element index {g}")


def are_conjugate(G: FiniteGroup, g: int, h: int) -> bool:
    return h in class_of(G, g)


def commutator(G: FiniteGroup, g: int, h: int) -> int:
    """[g, h] = g^-1 h^-1 g h."""
    return G.product(G.inverse(g), G.inverse(h), g, h)


def commutator_set(G: FiniteGroup, g: int) -> frozenset[int]:
    hs = np.arange(len(G))
    left = G.mul_many(G.mul_many(G.inverse(g), G.inv), g)
    return frozenset(G.mul_many(left, hs).tolist())


def subset_normalizer(G: FiniteGroup, S: Iterable[int]) -> frozenset[int]:
    """All x with xS = Sx."""
    S = sorted(set(S))
    if not S:
        raise ValueError("subset must be nonempty")
    target = frozenset(S)
    out = []
    for x in range(len(G)):
        if frozenset(G.conjugate(x, s) for s in S) == target:
            out.append(x)
    return frozenset(out)


def involutions(G: FiniteGroup) -> frozenset[int]:
    return frozenset(np.flatnonzero(G.element_orders == 2).tolist())


def symmetric_degree(G: FiniteGroup) -> int | None:
    """n if G is the full symmetric group on its points."""
    from math import factorial

    if len(G) == factorial(G.degree):
        return G.degree
    return None


class Completeness(NamedTuple):
    complete: bool
    reason: str
    witness: object = None


def is_complete_group(G: FiniteGroup, aut_list=None) -> Completeness:
    """Whether Z(G) = e and every automorphism is inner.

    Full symmetric groups use the known answer (complete unless n in {1, 2, 6};
    for S6 the witness is the outer automorphism phi). Other groups fall back
    on the brute-force automorphism search, or on ``aut_list`` when given.
    """
    from . import aut

    z = center(G)
    if len(z) > 1:
        nontrivial = min(z - {0})
        return Completeness(False, "nontrivial center", G.label_of(nontrivial))
    n = symmetric_degree(G)
    if n is not None and aut_list is None:
        if n == 6:
            phi = aut.s6_phi(G)
            return Completeness(False, "outer automorphism", phi)
        return Completeness(True, "symmetric group S_n with n != 2, 6", None)
    if aut_list is None:
        aut_list = aut.aut_group_bruteforce(G)
    inner_tables = {aut.inner(G, g).key for g in range(len(G))}
    for a in aut_list:
        if a.key not in inner_tables:
            return Completeness(False, "outer automorphism", a)
    return Completeness(True, "trivial center and all automorphisms inner", None)


def class_signature(G: FiniteGroup, g: int) -> tuple[int, int]:
    """(element order, conjugacy class size): preserved by every automorphism."""
    return int(G.element_orders[g]), len(class_of(G, g))


def cycle_type_of(G: FiniteGroup, g: int) -> tuple[int, ...]:
    return cycle_type(G.elements[g])


def associativity_holds(G: FiniteGroup, sample: int | None = None, seed: int = 0) -> bool:
    """Exhaustive on the table for small groups, sampled otherwise."""
    n = len(G)
    if sample is None and n <= 120:
        xs = np.arange(n)
        for a in range(n):
            ab = G.mul_many(a, xs)
            if not np.array_equal(G.mul_many(ab[:, None], xs[None, :]), G.mul_many(a, G.mul_many(xs[:, None], xs[None, :]))):
                return False
        return True
    rng = np.random.default_rng(seed)
    trip = rng.integers(0, n, size=(sample or 5000, 3))
    for a, b, c in trip:
        if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
            return False
    return True
