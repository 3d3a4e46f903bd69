"""Exact rank by fraction-free (Bareiss) elimination over the integers."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _to_int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        vals = [Fraction(v) for v in row]
        denom = 1
        for v in vals:
            denom = denom * v.denominator // _gcd(denom, v.denominator)
        out.append([int(v * denom) for v in vals])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix, computed without floating point.

    Rows are scaled to integers, then eliminated with Bareiss's one-step
    division so that every intermediate entry stays an exact integer.
    """
    m = _to_int_rows(rows)
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pr = m[rank]
        pv = pr[col]
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[col]
            if f == 0:
                for c in range(col + 1, ncols):
                    row[c] = row[c] * pv // prev
            else:
                for c in range(col + 1, ncols):
                    row[c] = (row[c] * pv - f * pr[c]) // prev
            row[col] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def distinct_nonzero_columns(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Drop zero and repeated columns; the row rank is unchanged."""
    cols = {}
    for c in zip(*rows):
        if any(c):
            cols.setdefault(tuple(c), None)
    if not cols:
        return [[] for _ in rows]
    return [list(r) for r in zip(*cols)]
