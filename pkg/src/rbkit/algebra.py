"""Linear combinations of diagrams over Z[x], the rank ideals, and the relation checker."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .diagrams import Diagram, DiagramError, Letter, concatenate, generator

Number = Union[int, Fraction, float]


class Polynomial:
    """Univariate polynomial in ``x`` with Python-int coefficients.

    Stored dense, lowest degree first, with no trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def constant(cls, a: int) -> Polynomial:
        return cls([a])

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(p + q for p, q in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        out = Polynomial([1])
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x: Number) -> Number:
        acc = 0 * x
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def terms(self) -> list[list]:
        """``[[degree, "coeff"], ...]`` for the nonzero coefficients."""
        return [[d, str(a)] for d, a in enumerate(self.coeffs) if a]

    @classmethod
    def from_terms(cls, terms: Sequence[Sequence]) -> Polynomial:
        out = Polynomial()
        for deg, coeff in terms:
            out = out + Polynomial.monomial(int(deg), int(coeff))
        return out

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[d]
            if not a:
                continue
            mono = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if mono and abs(a) == 1:
                s = ("-" if a < 0 else "") + mono
            else:
                s = f"{a}{'*' + mono if mono else ''}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")


X = Polynomial.x()
ONE = Polynomial.constant(1)


class AlgebraElement:
    """Element of RB_k(x): a finite map from diagrams to nonzero polynomials."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[Diagram, Polynomial] | None = None):
        self.k = k
        clean: dict[Diagram, Polynomial] = {}
        for d, p in (terms or {}).items():
            if d.k != k:
                raise DiagramError(f"diagram of size {d.k} in element of size {k}")
            if isinstance(p, int):
                p = Polynomial.constant(p)
            if p:
                clean[d] = p
        self.terms = clean

    @classmethod
    def basis(cls, d: Diagram, coeff: Polynomial | int = 1) -> AlgebraElement:
        return cls(d.k, {d: coeff if isinstance(coeff, Polynomial) else Polynomial.constant(coeff)})

    @classmethod
    def one(cls, k: int) -> AlgebraElement:
        return cls.basis(Diagram.identity(k))

    @classmethod
    def zero(cls, k: int) -> AlgebraElement:
        return cls(k)

    @classmethod
    def word(cls, k: int, letters: Sequence[Letter]) -> AlgebraElement:
        out = cls.one(k)
        for letter in letters:
            out = out * cls.basis(generator(letter.kind, letter.index, k))
        return out

    def _check(self, other: AlgebraElement) -> None:
        if self.k != other.k:
            raise DiagramError(f"size mismatch: {self.k} != {other.k}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self.terms)
        for d, p in other.terms.items():
            out[d] = out.get(d, Polynomial()) + p
        return AlgebraElement(self.k, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.k, {d: -p for d, p in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: Polynomial | int) -> AlgebraElement:
        if isinstance(c, int):
            c = Polynomial.constant(c)
        return AlgebraElement(self.k, {d: c * p for d, p in self.terms.items()})

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, (int, Polynomial)):
            return self.scale(other)
        self._check(other)
        out: dict[Diagram, Polynomial] = {}
        for d1, p1 in self.terms.items():
            for d2, p2 in other.terms.items():
                res = concatenate(d1, d2)
                # y = 1: middle strands contribute no factor
                coeff = (p1 * p2) * Polynomial.monomial(res.loops)
                out[res.diagram] = out.get(res.diagram, Polynomial()) + coeff
        return AlgebraElement(self.k, out)

    def __rmul__(self, c) -> AlgebraElement:
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.k == other.k and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.k, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def max_rank(self) -> int:
        return max((d.rank for d in self.terms), default=-1)

    def to_json(self) -> dict:
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return {
            "k": self.k,
            "terms": [{"diagram": d.to_json(), "poly": p.terms()} for d, p in items],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> AlgebraElement:
        if isinstance(data, str):
            data = json.loads(data)
        k = int(data["k"])
        terms: dict[Diagram, Polynomial] = {}
        for t in data.get("terms", []):
            d = Diagram.from_json(t["diagram"])
            terms[d] = terms.get(d, Polynomial()) + Polynomial.from_terms(t["poly"])
        return cls(k, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"0 (k={self.k})"
        return " + ".join(f"({p})*{d!r}" for d, p in self.terms.items())


def add(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a + b


def scale(a: AlgebraElement, c: Polynomial | int) -> AlgebraElement:
    return a.scale(c)


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b


def ideal_membership(a: AlgebraElement, r: int) -> bool:
    """True iff every diagram in ``a`` has rank at most ``r``."""
    return all(d.rank <= r for d in a.terms)


# -- presentation -------------------------------------------------------------

Side = tuple[tuple[Polynomial, tuple[Letter, ...]], ...]


@dataclass(frozen=True)
class Relation:
    """One instance ``lhs = rhs``; each side is a sum of ``coeff * word``."""

    id: str
    lhs: Side
    rhs: Side
    text: str

    def evaluate(self, k: int) -> AlgebraElement:
        return evaluate_side(k, self.lhs) - evaluate_side(k, self.rhs)


def evaluate_side(k: int, side: Side) -> AlgebraElement:
    out = AlgebraElement.zero(k)
    for coeff, letters in side:
        out = out + AlgebraElement.word(k, letters).scale(coeff)
    return out


def _w(text: str) -> tuple[Letter, ...]:
    """Parse ``"s1 t2 p3"`` into letters; ``""`` is the empty word."""
    return tuple(Letter(tok[0], int(tok[1:])) for tok in text.split())


def _rel(rid: str, lhs: str, rhs: str, lhs_coeff: Polynomial = ONE,
         rhs_coeff: Polynomial = ONE) -> Relation:
    lside = ((lhs_coeff, _w(lhs)),)
    rside = ((rhs_coeff, _w(rhs)),)
    lc = "" if lhs_coeff == ONE else f"({lhs_coeff}) "
    rc = "" if rhs_coeff == ONE else f"({rhs_coeff}) "
    text = f"{lc}{lhs or '1'} = {rc}{rhs or '1'}"
    return Relation(rid, lside, rside, text)


PRINTED_QUADRATIC_ID = "B(a)*"


def presentation_relations(k: int, include_printed_variant: bool = False) -> list[Relation]:
    """Every instance of the defining relations at size ``k``.

    Families: ``S`` symmetric group, ``B`` Brauer, ``R`` rook monoid, ``RB``
    mixed.  ``B(a)`` is ``t_i^2 = x t_i``; the variant ``t_i^2 = (x+1) t_i`` is
    appended as ``B(a)*`` when requested.
    """
    rels: list[Relation] = []
    n = k - 1  # number of s_i / t_i
    pairs_far = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if abs(i - j) > 1]

    for i in range(1, n + 1):
        rels.append(_rel("S(a)", f"s{i} s{i}", ""))
    for i, j in pairs_far:
        if i < j:
            rels.append(_rel("S(b)", f"s{i} s{j}", f"s{j} s{i}"))
    for i in range(1, n):
        rels.append(_rel("S(c)", f"s{i} s{i+1} s{i}", f"s{i+1} s{i} s{i+1}"))

    for i in range(1, n + 1):
        rels.append(_rel("B(a)", f"t{i} t{i}", f"t{i}", ONE, X))
    for i, j in pairs_far:
        if i < j:
            rels.append(_rel("B(b)", f"t{i} t{j}", f"t{j} t{i}"))
        rels.append(_rel("B(b)", f"t{i} s{j}", f"s{j} t{i}"))
    for i in range(1, n + 1):
        rels.append(_rel("B(c)", f"t{i} s{i}", f"t{i}"))
        rels.append(_rel("B(c)", f"s{i} t{i}", f"t{i}"))
    for i in range(1, n + 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= n:
                rels.append(_rel("B(d)", f"t{i} t{j} t{i}", f"t{i}"))
                rels.append(_rel("B(e)", f"s{i} t{j} t{i}", f"s{j} t{i}"))
                rels.append(_rel("B(e)", f"t{i} t{j} s{i}", f"t{i} s{j}"))

    for i in range(1, k + 1):
        rels.append(_rel("R(a)", f"p{i} p{i}", f"p{i}"))
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            rels.append(_rel("R(b)", f"p{i} p{j}", f"p{j} p{i}"))
    for i in range(1, n + 1):
        rels.append(_rel("R(c)", f"s{i} p{i}", f"p{i+1} s{i}"))
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            if abs(i - j) > 1:
                rels.append(_rel("R(d)", f"s{i} p{j}", f"p{j} s{i}"))
    for i in range(1, n + 1):
        rels.append(_rel("R(e)", f"p{i} s{i} p{i}", f"p{i} p{i+1}"))

    for i in range(1, n + 1):
        for j in range(1, k + 1):
            if abs(i - j) > 1:
                rels.append(_rel("RB(a)", f"t{i} p{j}", f"p{j} t{i}"))
    for i in range(1, n + 1):
        rels.append(_rel("RB(b)", f"t{i} p{i}", f"t{i} p{i+1}"))
        rels.append(_rel("RB(b)", f"t{i} p{i}", f"t{i} p{i} p{i+1}"))
        rels.append(_rel("RB(c)", f"p{i} t{i}", f"p{i+1} t{i}"))
        rels.append(_rel("RB(c)", f"p{i} t{i}", f"p{i} p{i+1} t{i}"))
        rels.append(_rel("RB(d)", f"t{i} p{i} t{i}", f"t{i}"))
        rels.append(_rel("RB(e)", f"p{i} t{i} p{i}", f"p{i} p{i+1}"))

    if include_printed_variant:
        for i in range(1, n + 1):
            rels.append(_rel(PRINTED_QUADRATIC_ID, f"t{i} t{i}", f"t{i}", ONE, X + 1))
    return rels


@dataclass
class RelationReport:
    id: str
    instance: str
    difference: AlgebraElement
    holds: bool
    note: str = ""

    def to_json(self) -> dict:
        return {
            "relation": self.id,
            "instance": self.instance,
            "holds": self.holds,
            "difference": self.difference.to_json(),
            "note": self.note,
        }


DISCREPANCY_NOTE = (
    "t_i^2 = (x+1) t_i does not hold under diagram multiplication: the product "
    "t_i t_i closes exactly one middle loop, so t_i^2 = x t_i. The x form is "
    "enforced everywhere else in this toolkit."
)


def check_presentation(k: int, max_k: int = 6) -> list[RelationReport]:
    """Evaluate every relation instance at size ``k`` by diagram multiplication.

    Both quadratic forms for ``t_i`` are reported; the ``(x+1)`` variant is
    expected to fail and carries an explanatory note.
    """
    if k > max_k:
        raise ValueError(f"k={k} exceeds presentation bound {max_k}")
    reports = []
    for rel in presentation_relations(k, include_printed_variant=True):
        diff = rel.evaluate(k)
        note = ""
        if rel.id == PRINTED_QUADRATIC_ID:
            note = DISCREPANCY_NOTE
        elif rel.id == "B(a)":
            note = "loop parameter form; this is the quadratic relation that holds"
        reports.append(RelationReport(rel.id, rel.text, diff, diff.is_zero(), note))
    return reports


def presentation_ok(reports: Sequence[RelationReport]) -> bool:
    """All standard relations hold and the ``(x+1)`` variant fails, as expected."""
    for r in reports:
        expected = r.id != PRINTED_QUADRATIC_ID
        if r.holds != expected:
            return False
    return True
