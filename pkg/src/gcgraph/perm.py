"""Permutations on the points 1..n with cycle-notation I/O.

Products follow function composition: ``p * q`` applies ``q`` first.
Points are stored 0-based; all text is 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_IDENTITY_TOKENS = {"e", "()", "(1)", "id", "1"}


class CycleSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Product of 1-based cycles, rightmost cycle applied first."""
        result = cls.identity(degree)
        for cycle in cycles:
            img = list(range(degree))
            for i, a in enumerate(cycle):
                img[a - 1] = cycle[(i + 1) % len(cycle)] - 1
            result = result * cls(tuple(img))
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (1-based) of length >= 2, canonically ordered."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self.images[i]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return cycle_type(self)

    def order(self) -> int:
        return lcm(*self.cycle_type())

    def is_involution(self) -> bool:
        return is_involution(self)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation i -> p(q(i))."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    pi = p.images
    return Permutation(tuple(pi[j] for j in q.images))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points counted as 1-cycles."""
    lengths = [len(c) for c in p.cycles()]
    moved = sum(lengths)
    return tuple(sorted(lengths, reverse=True)) + (1,) * (p.degree - moved)


def is_involution(p: Permutation) -> bool:
    ct = cycle_type(p)
    return bool(ct) and ct[0] == 2


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "e"
    if p.degree > 9:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)
    return "".join("(" + "".join(map(str, c)) + ")" for c in cycles)


def _cycle_points(body: str, degree: int) -> list[int]:
    body = body.strip()
    if not body:
        return []
    if re.search(r"[\s,]", body):
        tokens = [t for t in re.split(r"[\s,]+", body) if t]
    elif degree <= 9:
        tokens = list(body)
    else:
        raise CycleSyntaxError(
            f"cycle {body!r} is ambiguous for degree {degree}; separate points with spaces"
        )
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise CycleSyntaxError(f"non-integer point in cycle ({body})") from None


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as ``(12)(36)(45)`` into a permutation.

    ``e``, ``()`` and ``(1)`` denote the identity. Cycles are multiplied
    right-to-left and a point may appear at most once in the expression.
    """
    if degree < 1:
        raise ValueError("degree must be positive")
    stripped = re.sub(r"\s+", "", text)
    if stripped in _IDENTITY_TOKENS:
        return Permutation.identity(degree)
    if not stripped or _CYCLE_RE.sub("", text).strip():
        raise CycleSyntaxError(f"malformed cycle notation: {text!r}")

    cycles = []
    seen: set[int] = set()
    for body in _CYCLE_RE.findall(text):
        pts = _cycle_points(body, degree)
        for a in pts:
            if not 1 <= a <= degree:
                raise CycleSyntaxError(f"point {a} out of range 1..{degree}")
            if a in seen:
                raise CycleSyntaxError(f"point {a} repeated in {text!r}")
            seen.add(a)
        if len(pts) > 1:
            cycles.append(pts)
    return Permutation.from_cycles(cycles, degree)
