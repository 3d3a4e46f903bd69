"""Partitions, the Bratteli diagram of paths, tableaux and the RSK map on diagrams."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .diagrams import Diagram

MAX_LEVEL = 12


class Partition(tuple):
    """Weakly decreasing tuple of positive parts; ``Partition()`` is the empty partition."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def row(self, i: int) -> int:
        """Length of row ``i`` (1-based), zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def col(self, j: int) -> int:
        """Length of column ``j`` (1-based)."""
        return sum(1 for p in self if p >= j)

    def conjugate(self) -> Partition:
        return Partition(self.col(j) for j in range(1, (self[0] if self else 0) + 1))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self, start=1):
            for j in range(1, p + 1):
                yield i, j

    def addable(self) -> list[tuple[int, int]]:
        out = []
        for i in range(1, len(self) + 2):
            j = self.row(i) + 1
            if i == 1 or self.row(i - 1) >= j:
                out.append((i, j))
        return out

    def removable(self) -> list[tuple[int, int]]:
        return [(i, self[i - 1]) for i in range(1, len(self) + 1) if self.row(i + 1) < self[i - 1]]

    def add_cell(self, i: int) -> Partition:
        parts = list(self) + [0]
        parts[i - 1] += 1
        return Partition(parts)

    def remove_cell(self, i: int) -> Partition:
        parts = list(self)
        parts[i - 1] -= 1
        return Partition(parts)

    def neighbours(self) -> list[Partition]:
        """``self`` together with every partition one box larger or smaller."""
        out = [self]
        out += [self.remove_cell(i) for i, _ in self.removable()]
        out += [self.add_cell(i) for i, _ in self.addable()]
        return out

    def key(self) -> tuple:
        return (self.size, tuple(self))

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")" if self else "∅"

    __str__ = __repr__


EMPTY = Partition()


def content(cell: tuple[int, int]) -> int:
    i, j = cell
    return j - i


def box_difference(small: Partition, big: Partition) -> tuple[int, int]:
    """The unique cell of ``big`` not in ``small`` (sizes must differ by one)."""
    for i in range(1, len(big) + 1):
        if big.row(i) != small.row(i):
            return (i, big.row(i))
    raise ValueError(f"{big} does not cover {small}")


def partitions_of(n: int) -> list[Partition]:
    def gen(n: int, largest: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        for p in range(min(n, largest), 0, -1):
            for rest in gen(n - p, p):
                yield (p,) + rest

    return sorted((Partition(p) for p in gen(n, n)), key=Partition.key)


def level_shapes(k: int) -> list[Partition]:
    """All partitions of size at most ``k``, in canonical order."""
    return [lam for r in range(k + 1) for lam in partitions_of(r)]


# -- Bratteli diagram ------------------------------------------------------------

@dataclass(frozen=True)
class BratteliLevel:
    level: int
    multiplicities: dict[Partition, int]

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "multiplicities": [[list(lam), m] for lam, m in
                               sorted(self.multiplicities.items(), key=lambda kv: kv[0].key())],
        }


def bratteli(levels: int, bound: int = MAX_LEVEL) -> list[BratteliLevel]:
    """Path counts ``m_k^lambda`` for ``k = 0..levels``."""
    if levels > bound:
        raise ValueError(f"levels={levels} exceeds bound {bound}")
    out = [BratteliLevel(0, {EMPTY: 1})]
    for k in range(1, levels + 1):
        prev = out[-1].multiplicities
        cur: dict[Partition, int] = {}
        for mu, m in prev.items():
            for lam in mu.neighbours():
                cur[lam] = cur.get(lam, 0) + m
        out.append(BratteliLevel(k, dict(sorted(cur.items(), key=lambda kv: kv[0].key()))))
    return out


@dataclass(frozen=True)
class Path:
    shapes: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if not self.shapes or self.shapes[0] != EMPTY:
            raise ValueError("a path starts at the empty partition")
        for a, b in zip(self.shapes, self.shapes[1:]):
            if b not in a.neighbours():
                raise ValueError(f"illegal step {a} -> {b}")

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    @property
    def shape(self) -> Partition:
        return self.shapes[-1]

    def key(self) -> tuple:
        return tuple(s.key() for s in self.shapes)

    def to_json(self) -> dict:
        return {"shapes": [list(s) for s in self.shapes]}

    @classmethod
    def from_json(cls, data: dict | str) -> Path:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(Partition(s) for s in data["shapes"]))

    def __repr__(self) -> str:
        return "Path(" + ", ".join(map(str, self.shapes)) + ")"


@lru_cache(maxsize=None)
def _paths(k: int, lam: Partition) -> tuple[tuple[Partition, ...], ...]:
    if k == 0:
        return ((EMPTY,),) if lam == EMPTY else ()
    out = []
    for mu in lam.neighbours():
        if mu.size <= k - 1:
            out.extend(p + (lam,) for p in _paths(k - 1, mu))
    return tuple(out)


def enumerate_paths(k: int, lam: Sequence[int] | Partition, bound: int = MAX_LEVEL) -> list[Path]:
    """All length-``k`` paths from the empty partition to ``lam``, lexicographically by shape."""
    if k > bound:
        raise ValueError(f"k={k} exceeds bound {bound}")
    lam = Partition(lam)
    paths = [Path(p) for p in _paths(k, lam)]
    paths.sort(key=Path.key)
    return paths


# -- tableaux ---------------------------------------------------------------------

class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = self.rows
        if any(not r for r in rows):
            raise TableauError("empty row")
        if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
            raise TableauError("row lengths must weakly decrease")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise TableauError("rows must strictly increase")
        for upper, lower in zip(rows, rows[1:]):
            if any(upper[j] >= lower[j] for j in range(len(lower))):
                raise TableauError("columns must strictly increase")
        entries = [a for r in rows for a in r]
        if len(set(entries)) != len(entries):
            raise TableauError("duplicate entries")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> StandardTableau:
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def entries(self) -> set[int]:
        return {a for r in self.rows for a in r}

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}


def row_insert(t: StandardTableau, a: int) -> StandardTableau:
    """Schensted row insertion: bump the leftmost entry larger than the incoming value."""
    if a in t.entries():
        raise TableauError(f"{a} already in tableau")
    rows = [list(r) for r in t.rows]
    for r in rows:
        pos = next((j for j, b in enumerate(r) if b > a), None)
        if pos is None:
            r.append(a)
            return StandardTableau.of(rows)
        r[pos], a = a, r[pos]
    rows.append([a])
    return StandardTableau.of(rows)


def jdt_delete(t: StandardTableau, a: int) -> StandardTableau:
    """Remove ``a`` and slide the hole outward, always pulling the smaller of right/below."""
    rows = [list(r) for r in t.rows]
    loc = next(((i, j) for i, r in enumerate(rows) for j, b in enumerate(r) if b == a), None)
    if loc is None:
        raise TableauError(f"{a} not in tableau")
    i, j = loc
    while True:
        right = rows[i][j + 1] if j + 1 < len(rows[i]) else None
        below = rows[i + 1][j] if i + 1 < len(rows) and j < len(rows[i + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[i][j] = right
            j += 1
        else:
            rows[i][j] = below
            i += 1
    del rows[i][j]
    return StandardTableau.of(r for r in rows if r)


# -- RSK ----------------------------------------------------------------------------

@dataclass(frozen=True)
class InsertionStep:
    label: int | None
    side: str  # "L" insert, "R" delete, "" no-op


def insertion_sequence(d: Diagram) -> list[InsertionStep]:
    """Unfold ``d`` to one row (top ``1..k``, bottom ``2k..k+1``) and read off ``a_L``/``a_R``."""
    k = d.k

    def position(v: int) -> int:
        # b1 sits at position 2k, bk at position k+1
        return v + 1 if v < k else 2 * k - (v - k)

    steps = [InsertionStep(None, "")] * (2 * k)
    for a, b in d.edges:
        left, right = sorted((position(a), position(b)))
        label = 2 * k - right + 1
        steps[left - 1] = InsertionStep(label, "L")
        steps[right - 1] = InsertionStep(label, "R")
    return steps


def rsk_tableaux(d: Diagram) -> list[StandardTableau]:
    """The ``2k+1`` intermediate tableaux of the insertion/deletion sequence."""
    t = StandardTableau()
    out = [t]
    for step in insertion_sequence(d):
        if step.side == "L":
            t = row_insert(t, step.label)
        elif step.side == "R":
            t = jdt_delete(t, step.label)
        out.append(t)
    return out


def rsk(d: Diagram) -> tuple[Path, Path]:
    shapes = [t.shape for t in rsk_tableaux(d)]
    k = d.k
    return Path(tuple(shapes[: k + 1])), Path(tuple(reversed(shapes[k:])))
