"""Rook-Brauer diagrams: products, generators, families, counting and factorization.

Vertices are stored as integer ids: top row ``t1..tk`` is ``0..k-1`` and the
bottom row ``b1..bk`` is ``k..2k-1``.  This ordering is also the canonical
vertex order used for serialization and enumeration.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Iterator, Sequence

ISOLATED = -1
DEFAULT_ENUMERATION_BOUND = int(os.environ.get("RBKIT_MAX_ENUM_K", "6"))


class DiagramError(ValueError):
    pass


def vertex_name(v: int, k: int) -> str:
    return f"t{v + 1}" if v < k else f"b{v - k + 1}"


def parse_vertex(name: str, k: int) -> int:
    row, idx = name[0], int(name[1:])
    if row not in "tb" or not 1 <= idx <= k:
        raise DiagramError(f"bad vertex {name!r} for k={k}")
    return idx - 1 if row == "t" else k + idx - 1


@dataclass(frozen=True)
class Diagram:
    """A partial matching on the ``2k`` vertices of a two-row diagram.

    ``match[v]`` is the partner of vertex ``v`` or ``ISOLATED``.
    """

    k: int
    match: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0 or len(self.match) != 2 * self.k:
            raise DiagramError("match must have length 2k")
        for v, w in enumerate(self.match):
            if w == ISOLATED:
                continue
            if not 0 <= w < 2 * self.k or w == v or self.match[w] != v:
                raise DiagramError(f"match is not a partial involution at {v}")

    @classmethod
    def from_edges(cls, k: int, edges: Iterable[tuple[int, int]]) -> Diagram:
        match = [ISOLATED] * (2 * k)
        for a, b in edges:
            if match[a] != ISOLATED or match[b] != ISOLATED or a == b:
                raise DiagramError(f"vertex reused in edge ({a}, {b})")
            match[a], match[b] = b, a
        return cls(k, tuple(match))

    @classmethod
    def from_named_edges(cls, k: int, edges: Iterable[Sequence[str]]) -> Diagram:
        return cls.from_edges(k, [(parse_vertex(a, k), parse_vertex(b, k)) for a, b in edges])

    @classmethod
    def identity(cls, k: int) -> Diagram:
        return cls.from_edges(k, [(i, k + i) for i in range(k)])

    @classmethod
    def empty(cls, k: int) -> Diagram:
        return cls(k, (ISOLATED,) * (2 * k))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(low, high)`` pairs, in canonical order."""
        return tuple((v, w) for v, w in enumerate(self.match) if w > v)

    @cached_property
    def rank(self) -> int:
        return sum(1 for a, b in self.edges if a < self.k <= b)

    def is_top(self, v: int) -> bool:
        return v < self.k

    def vertical_edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.edges if a < self.k <= b]

    def top_horizontals(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.edges if b < self.k]

    def bottom_horizontals(self) -> list[tuple[int, int]]:
        return [(a, b) for a, b in self.edges if a >= self.k]

    def isolated(self) -> list[int]:
        return [v for v, w in enumerate(self.match) if w == ISOLATED]

    def named_edges(self) -> list[list[str]]:
        return [[vertex_name(a, self.k), vertex_name(b, self.k)] for a, b in self.edges]

    def to_json(self) -> dict:
        return {"k": self.k, "edges": self.named_edges()}

    @classmethod
    def from_json(cls, data: dict | str) -> Diagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_named_edges(int(data["k"]), data.get("edges", []))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        return self.edges

    def __mul__(self, other: Diagram) -> ProductResult:
        return concatenate(self, other)

    def __repr__(self) -> str:
        body = " ".join(f"{a}-{b}" for a, b in self.named_edges())
        return f"Diagram(k={self.k}, [{body}])"


@dataclass(frozen=True)
class ProductResult:
    diagram: Diagram
    loops: int
    isolated: int


def _find(parent: list[int], v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def concatenate(d1: Diagram, d2: Diagram) -> ProductResult:
    """Stack ``d1`` above ``d2`` and contract the middle row.

    Returns the resulting diagram with the number of closed middle loops and
    the number of middle components that touch neither outer row.
    """
    if d1.k != d2.k:
        raise DiagramError(f"size mismatch: {d1.k} != {d2.k}")
    k = d1.k
    # Layer ids: 0..k-1 top of d1, k..2k-1 middle, 2k..3k-1 bottom of d2.
    parent = list(range(3 * k))
    degree = [0] * (3 * k)
    for a, b in d1.edges:
        parent[_find(parent, a)] = _find(parent, b)
        degree[a] += 1
        degree[b] += 1
    for a, b in d2.edges:
        a, b = a + k, b + k
        parent[_find(parent, a)] = _find(parent, b)
        degree[a] += 1
        degree[b] += 1

    components: dict[int, list[int]] = {}
    for v in range(3 * k):
        components.setdefault(_find(parent, v), []).append(v)

    match = [ISOLATED] * (2 * k)
    loops = isolated = 0
    for members in components.values():
        ends = [v if v < k else v - k for v in members if v < k or v >= 2 * k]
        if len(ends) == 2:
            a, b = ends
            match[a], match[b] = b, a
        elif not ends:
            if all(degree[v] == 2 for v in members):
                loops += 1
            else:
                isolated += 1
    return ProductResult(Diagram(k, tuple(match)), loops, isolated)


def rank(d: Diagram) -> int:
    return d.rank


def generator(kind: str, i: int, k: int) -> Diagram:
    """The generator ``s_i``, ``t_i`` (``1 <= i < k``) or ``p_i`` (``1 <= i <= k``)."""
    kind = kind.lower()
    limit = k if kind == "p" else k - 1
    if kind not in ("s", "t", "p"):
        raise DiagramError(f"unknown generator kind {kind!r}")
    if not 1 <= i <= limit:
        raise DiagramError(f"index {i} out of range for {kind} with k={k}")
    a = i - 1
    edges = [(j, k + j) for j in range(k) if j not in (a, a + 1)]
    if kind == "s":
        edges += [(a, k + a + 1), (a + 1, k + a)]
    elif kind == "t":
        edges += [(a, a + 1), (k + a, k + a + 1)]
    else:
        edges += [(a + 1, k + a + 1)] if a + 1 < k else []
    return Diagram.from_edges(k, edges)


def count(k: int) -> int:
    """Number of rook-Brauer k-diagrams: sum over edge counts e of C(2k, 2e)(2e-1)!!."""
    total = 0
    for e in range(k + 1):
        double_fact = 1
        for j in range(2 * e - 1, 0, -2):
            double_fact *= j
        total += comb(2 * k, 2 * e) * double_fact
    return total


def _partial_matchings(vertices: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    yield from _partial_matchings(rest)
    for j, partner in enumerate(rest):
        remaining = rest[:j] + rest[j + 1:]
        for m in _partial_matchings(remaining):
            yield [(first, partner)] + m


def enumerate_diagrams(k: int, bound: int | None = None) -> list[Diagram]:
    """All rook-Brauer k-diagrams, sorted lexicographically by canonical edge list."""
    bound = DEFAULT_ENUMERATION_BOUND if bound is None else bound
    if k > bound:
        raise DiagramError(f"k={k} exceeds enumeration bound {bound}")
    diagrams = [Diagram.from_edges(k, m) for m in _partial_matchings(list(range(2 * k)))]
    diagrams.sort(key=Diagram.sort_key)
    return diagrams


# -- families ---------------------------------------------------------------

FAMILIES = ("brauer", "symmetric", "rook_monoid", "temperley_lieb", "motzkin", "planar_rook")


def is_planar(d: Diagram) -> bool:
    """No two edges interleave once the diagram is unfolded to ``t1..tk, bk..b1``."""
    k = d.k

    def pos(v: int) -> int:
        return v if v < k else 2 * k - 1 - (v - k)

    arcs = sorted(tuple(sorted((pos(a), pos(b)))) for a, b in d.edges)
    for i, (a, b) in enumerate(arcs):
        for c, e in arcs[i + 1:]:
            if a < c < b < e:
                return False
    return True


def classify(d: Diagram) -> set[str]:
    tags = set()
    brauer = len(d.edges) == d.k
    rook = not d.top_horizontals() and not d.bottom_horizontals()
    planar = is_planar(d)
    if brauer:
        tags.add("brauer")
    if d.rank == d.k:
        tags.add("symmetric")
    if rook:
        tags.add("rook_monoid")
    if planar:
        tags.add("motzkin")
        if brauer:
            tags.add("temperley_lieb")
        if rook:
            tags.add("planar_rook")
    return tags


# -- generator words ----------------------------------------------------------

@dataclass(frozen=True)
class Letter:
    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind.upper()}({self.index})"


@dataclass(frozen=True)
class GeneratorWord:
    """A product of generators, read left to right, equal to ``x**loop_power * d``."""

    k: int
    letters: tuple[Letter, ...] = ()
    loop_power: int = 0

    def __post_init__(self) -> None:
        for letter in self.letters:
            generator(letter.kind, letter.index, self.k)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters)) or "1"


@dataclass
class WordValue:
    diagram: Diagram
    loops: int = 0
    isolated: int = 0


def evaluate_word(word: GeneratorWord) -> WordValue:
    """Multiply out a word by concatenation, accumulating loop and strand counts."""
    acc = WordValue(Diagram.identity(word.k))
    for letter in word.letters:
        res = concatenate(acc.diagram, generator(letter.kind, letter.index, word.k))
        acc = WordValue(res.diagram, acc.loops + res.loops, acc.isolated + res.isolated)
    return acc


def _permutation_word(images: Sequence[int]) -> list[Letter]:
    """Adjacent transpositions whose product is the permutation diagram t_j -> b_images[j]."""
    w = list(images)
    letters = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                letters.append(Letter("s", i + 1))
                break
        else:
            return letters


def factor(d: Diagram) -> GeneratorWord:
    """Write ``d`` as a word in ``s_i, t_i, p_i``.

    The word is ``(top permutation) (cups) (projections) (caps) (bottom permutation)``
    around a standard core whose verticals are the identity on the first ``rank``
    columns.  No loops are produced, so ``loop_power`` is always zero.
    """
    k, r = d.k, d.rank
    verticals = sorted(d.vertical_edges(), key=lambda e: e[1])
    bottom_pairs = sorted(d.bottom_horizontals())
    top_pairs = sorted(d.top_horizontals())

    # bottom vertex (column) -> core column
    bottom_role: dict[int, int] = {}
    for m, (_, b) in enumerate(verticals):
        bottom_role[b - k] = m
    col = r
    for a, b in bottom_pairs:
        bottom_role[a - k], bottom_role[b - k] = col, col + 1
        col += 2
    free = iter(range(col, k))
    for c in range(k):
        if c not in bottom_role:
            bottom_role[c] = next(free)

    top_role: dict[int, int] = {}
    for a, b in verticals:
        top_role[a] = bottom_role[b - k]
    col = r
    for a, b in top_pairs:
        top_role[a], top_role[b] = col, col + 1
        col += 2
    free = iter(range(col, k))
    for c in range(k):
        if c not in top_role:
            top_role[c] = next(free)

    letters: list[Letter] = []
    letters += _permutation_word([top_role[c] for c in range(k)])
    letters += [Letter("t", r + 1 + 2 * j) for j in range(len(top_pairs))]
    letters += [Letter("p", c + 1) for c in range(r, k)]
    letters += [Letter("t", r + 1 + 2 * j) for j in range(len(bottom_pairs))]
    inverse = [0] * k
    for c, role in bottom_role.items():
        inverse[role] = c
    letters += _permutation_word(inverse)
    return GeneratorWord(k, tuple(letters), 0)
