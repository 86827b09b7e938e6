"""Markov triples a^2 + b^2 + c^2 = 3abc, mutations and the mutation tree."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import gcd
from typing import NamedTuple

from .exactmath import DomainError


def is_markov(a: int, b: int, c: int) -> bool:
    return a > 0 and b > 0 and c > 0 and a * a + b * b + c * c == 3 * a * b * c


@dataclass(frozen=True, order=True)
class MarkovTriple:
    """A solution of the Markov equation, entries sorted ascending."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = sorted((self.a, self.b, self.c))
        if not is_markov(a, b, c):
            raise DomainError(f"({a}, {b}, {c}) does not solve a^2+b^2+c^2 = 3abc")
        # consequences of the equation, checked defensively
        if gcd(a, b) != 1 or gcd(b, c) != 1 or gcd(a, c) != 1:
            raise DomainError(f"({a}, {b}, {c}) is not pairwise coprime")
        if a % 3 == 0 or b % 3 == 0 or c % 3 == 0:
            raise DomainError(f"({a}, {b}, {c}) has an entry divisible by 3")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __str__(self):
        return f"({self.a}, {self.b}, {self.c})"


ROOT = MarkovTriple(1, 1, 1)


def mutate(t: MarkovTriple, position: int) -> MarkovTriple:
    """Replace the entry in sorted slot ``position`` (1, 2 or 3) by the other root."""
    if position not in (1, 2, 3):
        raise DomainError(f"position must be 1, 2 or 3, got {position}")
    entries = list(t.as_tuple())
    i = position - 1
    others = entries[:i] + entries[i + 1:]
    entries[i] = 3 * others[0] * others[1] - entries[i]
    return MarkovTriple(*entries)


def mutation_position(t: MarkovTriple, value: int) -> int:
    """Slot (1-based) holding ``value``; the last one when it is repeated."""
    entries = t.as_tuple()
    for i in (2, 1, 0):
        if entries[i] == value:
            return i + 1
    raise DomainError(f"{value} is not an entry of {t}")


class Edge(NamedTuple):
    parent: int
    child: int
    position: int  # slot of the parent that was mutated


@dataclass
class MarkovTree:
    triples: list[MarkovTriple]
    edges: list[Edge]

    def to_json(self) -> dict:
        return {
            "triples": [list(t.as_tuple()) for t in self.triples],
            "edges": [[e.parent, e.child] for e in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MarkovTree":
        triples = [MarkovTriple(*map(int, t)) for t in data["triples"]]
        edges = []
        for i, j in data["edges"]:
            i, j = int(i), int(j)
            parent, child = triples[i], triples[j]
            position = next(
                (p for p in (1, 2, 3) if mutate(parent, p) == child), None
            )
            if position is None:
                raise DomainError(f"{parent} and {child} are not related by a mutation")
            edges.append(Edge(i, j, position))
        return cls(triples, edges)


def enumerate_tree(max_entry: int) -> MarkovTree:
    """All Markov triples with entries <= max_entry, and the mutations joining them.

    Breadth-first closure of (1,1,1) under the three mutations, pruned as soon
    as the largest entry exceeds ``max_entry``.  Every triple other than the
    root has exactly one mutation lowering its largest entry, so pruning by
    the maximum loses nothing.  Triples are returned sorted and edges are
    unordered pairs of indices (i < j), deduplicated and sorted.
    """
    if max_entry < 1:
        raise DomainError(f"max_entry must be >= 1, got {max_entry}")
    seen = {ROOT}
    queue = deque([ROOT])
    links: dict[tuple[MarkovTriple, MarkovTriple], int] = {}
    while queue:
        t = queue.popleft()
        for position in (1, 2, 3):
            u = mutate(t, position)
            if u.c > max_entry:
                continue
            key = (t, u) if t < u else (u, t)
            if key not in links:
                links[key] = position if key[0] == t else _position_from(u, t)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    triples = sorted(seen)
    index = {t: i for i, t in enumerate(triples)}
    edges = sorted(Edge(index[s], index[t], p) for (s, t), p in links.items())
    return MarkovTree(triples, edges)


def _position_from(source: MarkovTriple, target: MarkovTriple) -> int:
    for p in (1, 2, 3):
        if mutate(source, p) == target:
            return p
    raise AssertionError("not adjacent")


def manetti_weights(t: MarkovTriple) -> tuple[int, int, int]:
    """Weights (a^2, b^2, c^2) of the Manetti surface P(a^2, b^2, c^2)."""
    return (t.a * t.a, t.b * t.b, t.c * t.c)


def manetti_wps(t: MarkovTriple):
    from .surfcat.geometry import WPS2

    return WPS2(manetti_weights(t))
