"""El-Samra-King polynomials and seminormal representations on the path basis."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence, Union

import numpy as np

from .algebra import Relation, presentation_relations
from .combinatorics import Partition, Path, box_difference, bratteli, content, enumerate_paths
from .diagrams import Diagram, count, enumerate_diagrams, factor

Scalar = Union[Fraction, float]

SINGULAR_EPS = 1e-6


class SingularParameterError(ValueError):
    """A denominator of the seminormal formulas vanishes at the requested ``x``."""


# -- El-Samra-King polynomials ------------------------------------------------

@dataclass(frozen=True)
class ESKPolynomial:
    """``P_lambda(x) = prod over cells of (x - 1 + shift) / hook``."""

    shape: Partition
    factors: tuple[tuple[int, int], ...]  # (shift, hook) per cell

    def __call__(self, x: Scalar) -> Scalar:
        acc = Fraction(1) if isinstance(x, (int, Fraction)) else 1.0
        for shift, hook in self.factors:
            if isinstance(acc, Fraction):
                acc *= Fraction(x - 1 + shift, hook)
            else:
                acc *= (x - 1 + shift) / hook
        return acc

    @property
    def degree(self) -> int:
        return len(self.factors)

    def coefficients(self) -> list[Fraction]:
        """Expanded coefficients, lowest degree first."""
        coeffs = [Fraction(1)]
        for shift, hook in self.factors:
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] += c * Fraction(shift - 1, hook)
                nxt[i + 1] += c / hook
            coeffs = nxt
        return coeffs


def hook(lam: Partition, i: int, j: int) -> int:
    return lam.row(i) - j + lam.col(j) - i + 1


def root_shift(lam: Partition, i: int, j: int) -> int:
    if i <= j:
        return lam.row(i) + lam.row(j) - i - j + 1
    return -lam.col(i) - lam.col(j) + i + j - 1


@lru_cache(maxsize=None)
def esk(lam: Partition) -> ESKPolynomial:
    lam = Partition(lam)
    return ESKPolynomial(lam, tuple((root_shift(lam, i, j), hook(lam, i, j)) for i, j in lam.cells()))


def esk_eval(lam: Sequence[int] | Partition, x: Scalar) -> Scalar:
    if isinstance(x, int):
        x = Fraction(x)
    return esk(Partition(lam))(x)


def branching_check(gamma: Sequence[int] | Partition, xs: Sequence[Scalar]) -> list[Scalar]:
    """``|sum over beta in {gamma, gamma +- box} of P_beta(x) - (x+1) P_gamma(x)|`` per sample."""
    gamma = Partition(gamma)
    out = []
    for x in xs:
        if isinstance(x, int):
            x = Fraction(x)
        total = sum((esk_eval(beta, x) for beta in gamma.neighbours()), 0 * x)
        out.append(abs(total - (x + 1) * esk_eval(gamma, x)))
    return out


# -- the diamond coefficient -----------------------------------------------------

@dataclass(frozen=True)
class DiamondConvention:
    """Signs that resolve the ``+-`` cases of the axial-distance coefficient.

    ``add_add`` multiplies ``ct(b) - ct(a)`` when both steps add a box,
    ``remove_remove`` when both remove one.  In the mixed case the value is
    ``+-(x - 2 + ct(b) + ct(a))`` with sign ``mixed`` when the second step adds
    its box and ``-mixed`` when it removes it.
    """

    add_add: int = 1
    remove_remove: int = -1
    mixed: int = 1

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.add_add, self.remove_remove, self.mixed)


def candidate_conventions() -> list[DiamondConvention]:
    return [DiamondConvention(a, r, m) for a, r, m in product((1, -1), repeat=3)]


def _step(before: Partition, after: Partition) -> tuple[int, tuple[int, int]]:
    """(+1, box) if a box is added, (-1, box) if removed."""
    if after.size == before.size + 1:
        return 1, box_difference(before, after)
    if after.size == before.size - 1:
        return -1, box_difference(after, before)
    raise ValueError(f"{before} -> {after} does not change size")


def diamond(gamma: Partition, alpha: Partition, beta: Partition, rho: Partition,
            x: float, conv: DiamondConvention) -> float:
    """Coefficient for ``alpha = gamma +- a`` and ``rho = beta +- b``."""
    sa, a = _step(gamma, alpha)
    sb, b = _step(beta, rho)
    if sa == sb == 1:
        return conv.add_add * (content(b) - content(a))
    if sa == sb == -1:
        return conv.remove_remove * (content(b) - content(a))
    return conv.mixed * sb * (x - 2 + content(b) + content(a))


# -- modules ---------------------------------------------------------------------

@dataclass
class SeminormalModule:
    k: int
    shape: Partition
    basis: list[Path]
    x: float
    convention: DiamondConvention
    s: dict[int, np.ndarray] = field(default_factory=dict)
    t: dict[int, np.ndarray] = field(default_factory=dict)
    p: dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def generator(self, kind: str, i: int) -> np.ndarray:
        return {"s": self.s, "t": self.t, "p": self.p}[kind.lower()][i]

    def generators(self) -> list[tuple[str, int, np.ndarray]]:
        out = [("p", i, m) for i, m in sorted(self.p.items())]
        out += [("s", i, m) for i, m in sorted(self.s.items())]
        out += [("t", i, m) for i, m in sorted(self.t.items())]
        return out

    def word(self, letters) -> np.ndarray:
        out = np.eye(self.dim)
        for letter in letters:
            out = out @ self.generator(letter.kind, letter.index)
        return out

    def represent(self, d: Diagram) -> np.ndarray:
        """Image of a diagram, through its generator word."""
        w = factor(d)
        return self.word(w.letters) / self.x ** w.loop_power

    def labels(self) -> list[str]:
        return [" ".join(str(s) for s in path.shapes) for path in self.basis]


def _pval(lam: Partition, x: float) -> float:
    return float(esk(lam)(x - 1.0))


def _checked(value: float, what: str, ctx: tuple) -> float:
    if abs(value) < SINGULAR_EPS:
        raise SingularParameterError(f"{what} vanishes at {ctx}")
    return value


def _t_coefficient(gamma, alpha, beta, rho, x) -> float:
    if rho != gamma:
        return 0.0
    pg = _checked(_pval(gamma, x), "P_gamma(x-1)", (gamma, alpha, rho))
    prod = _pval(alpha, x) * _pval(beta, x)
    if prod < 0:
        raise SingularParameterError(f"negative product under square root at {(gamma, alpha, beta, rho)}")
    return math.sqrt(prod) / pg


def _s_coefficient(gamma, alpha, beta, rho, x, conv: DiamondConvention) -> float:
    """Entry of ``s_i`` taking the local segment ``(gamma, alpha, rho)`` to ``(gamma, beta, rho)``."""
    if alpha == gamma:
        return 1.0 if beta == rho else 0.0
    if alpha == rho:
        return 1.0 if beta == gamma else 0.0
    if beta == gamma or beta == rho:
        return 0.0
    ctx = (gamma, alpha, beta, rho)
    if alpha == beta:
        dia = _checked(diamond(gamma, alpha, alpha, rho, x, conv), "diamond", ctx)
        if rho != gamma:
            return 1.0 / dia
        pg = _checked(_pval(gamma, x), "P_gamma(x-1)", ctx)
        return (1.0 - _pval(alpha, x) / pg) / dia
    if rho != gamma:
        dia = _checked(diamond(gamma, alpha, alpha, rho, x, conv), "diamond", ctx)
        rad = (dia - 1.0) * (dia + 1.0)
        if rad < -1e-12:
            raise SingularParameterError(f"|diamond| < 1 at {ctx}")
        return math.sqrt(max(rad, 0.0)) / abs(dia)
    dia = _checked(diamond(gamma, alpha, beta, rho, x, conv), "diamond", ctx)
    pg = _checked(_pval(gamma, x), "P_gamma(x-1)", ctx)
    prod = _pval(alpha, x) * _pval(beta, x)
    if prod < 0:
        raise SingularParameterError(f"negative product under square root at {ctx}")
    return -math.sqrt(prod) / (pg * dia)


def _prescan(basis: Sequence[Path], x: float) -> None:
    """Reject ``x`` when any ``P_mu(x-1)`` on the basis paths is (numerically) zero."""
    for mu in sorted({mu for path in basis for mu in path.shapes}, key=Partition.key):
        _checked(_pval(mu, x), "P_mu(x-1)", (mu,))


def _resolved_convention() -> DiamondConvention:
    from ._diamond_constants import RESOLVED_CONVENTION

    return DiamondConvention(*RESOLVED_CONVENTION)


def build_module(k: int, lam: Sequence[int] | Partition, x: float,
                 convention: DiamondConvention | None = None) -> SeminormalModule:
    """Generator matrices of the seminormal module for ``lam`` at parameter ``x``.

    Column ``c`` of each matrix is the image of basis path ``c``.
    """
    lam = Partition(lam)
    conv = convention or _resolved_convention()
    x = float(x)
    basis = enumerate_paths(k, lam)
    _prescan(basis, x)
    index = {path.shapes: c for c, path in enumerate(basis)}
    m = len(basis)
    mod = SeminormalModule(k, lam, basis, x, conv)

    for j in range(1, k + 1):
        diag = [1.0 if path.shapes[j - 1] == path.shapes[j] else 0.0 for path in basis]
        mod.p[j] = np.diag(diag)

    for i in range(1, k):
        s = np.zeros((m, m))
        t = np.zeros((m, m))
        for c, path in enumerate(basis):
            gamma, alpha, rho = path.shapes[i - 1], path.shapes[i], path.shapes[i + 1]
            for beta in gamma.neighbours():
                if rho not in beta.neighbours():
                    continue
                shapes = path.shapes[:i] + (beta,) + path.shapes[i + 1:]
                r = index.get(shapes)
                if r is None:
                    continue
                t[r, c] = _t_coefficient(gamma, alpha, beta, rho, x)
                s[r, c] = _s_coefficient(gamma, alpha, beta, rho, x, conv)
        mod.s[i] = s
        mod.t[i] = t
    return mod


def build_level(k: int, x: float, convention: DiamondConvention | None = None) -> list[SeminormalModule]:
    return [build_module(k, lam, x, convention) for lam in bratteli(k)[k].multiplicities]


# -- verification ------------------------------------------------------------------

def _side_matrix(mod: SeminormalModule, side) -> np.ndarray:
    out = np.zeros((mod.dim, mod.dim))
    for coeff, letters in side:
        out = out + coeff(mod.x) * mod.word(letters)
    return out


def relation_residual(mod: SeminormalModule, rel: Relation) -> float:
    diff = _side_matrix(mod, rel.lhs) - _side_matrix(mod, rel.rhs)
    return float(np.max(np.abs(diff))) if diff.size else 0.0


@dataclass
class RelationsReport:
    k: int
    x: float
    max_residual: float
    worst: str
    passed: bool
    per_relation: dict[str, float]

    def to_json(self) -> dict:
        return {
            "claim": "seminormal relations",
            "params": {"k": self.k, "x": self.x},
            "residual": self.max_residual,
            "worst": self.worst,
            "per_relation": self.per_relation,
            "pass": self.passed,
        }


def verify_relations(k: int, x: float, tolerance: float = 1e-8,
                     convention: DiamondConvention | None = None,
                     modules: Sequence[SeminormalModule] | None = None) -> RelationsReport:
    """Max residual of every relation instance (with ``t_i^2 = x t_i``) over all shapes at level ``k``."""
    mods = modules if modules is not None else build_level(k, x, convention)
    rels = presentation_relations(k)
    worst, worst_id = 0.0, ""
    per: dict[str, float] = {}
    for mod in mods:
        for rel in rels:
            r = relation_residual(mod, rel)
            per[rel.id] = max(per.get(rel.id, 0.0), r)
            if r > worst:
                worst, worst_id = r, f"{rel.id} {rel.text} on {mod.shape}"
    return RelationsReport(k, x, worst, worst_id, worst < tolerance, per)


def resolve_convention(max_k: int = 3, samples: int = 5, seed: int = 0,
                       tolerance: float = 1e-8) -> list[DiamondConvention]:
    """Sign conventions under which every relation holds for ``k <= max_k`` at random generic ``x``."""
    rng = np.random.default_rng(seed)
    xs = [float(v) for v in rng.uniform(max_k + 1.5, max_k + 12.0, size=samples)]
    passing = []
    for conv in candidate_conventions():
        ok = True
        for x in xs:
            for k in range(1, max_k + 1):
                try:
                    rep = verify_relations(k, x, tolerance, conv)
                except SingularParameterError:
                    ok = False
                    break
                if not rep.passed:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            passing.append(conv)
    return passing


def grouped_order(mod: SeminormalModule) -> tuple[list[int], list[tuple[Partition, int, int]]]:
    """Permutation grouping basis paths by penultimate shape, and the resulting blocks."""
    penult = [path.shapes[-2] for path in mod.basis]
    shapes = sorted(set(penult), key=Partition.key)
    perm: list[int] = []
    blocks = []
    for mu in shapes:
        idx = [c for c, s in enumerate(penult) if s == mu]
        blocks.append((mu, len(perm), len(perm) + len(idx)))
        perm.extend(idx)
    return perm, blocks


@dataclass
class RestrictionReport:
    k: int
    shape: Partition
    blocks: list[tuple[Partition, int]]
    max_residual: float
    passed: bool

    def to_json(self) -> dict:
        return {
            "claim": "restriction blocks",
            "params": {"k": self.k, "shape": list(self.shape)},
            "blocks": [[list(mu), size] for mu, size in self.blocks],
            "residual": self.max_residual,
            "pass": self.passed,
        }


def verify_restriction(k: int, lam: Sequence[int] | Partition, x: float = 7.3,
                       tolerance: float = 1e-8,
                       convention: DiamondConvention | None = None) -> RestrictionReport:
    """Generators of the size ``k-1`` subalgebra act block-diagonally, one block per penultimate shape."""
    lam = Partition(lam)
    if k == 0:
        return RestrictionReport(k, lam, [], 0.0, True)
    mod = build_module(k, lam, x, convention)
    perm, blocks = grouped_order(mod)
    subs = {mu: build_module(k - 1, mu, x, convention) for mu, _, _ in blocks}
    worst = 0.0
    gens = [("p", i) for i in range(1, k)] + [(g, i) for g in ("s", "t") for i in range(1, k - 1)]
    for kind, i in gens:
        big = mod.generator(kind, i)[np.ix_(perm, perm)]
        expected = np.zeros_like(big)
        for mu, lo, hi in blocks:
            expected[lo:hi, lo:hi] = subs[mu].generator(kind, i)
        if big.size:
            worst = max(worst, float(np.max(np.abs(big - expected))))
    sizes = [(mu, hi - lo) for mu, lo, hi in blocks]
    return RestrictionReport(k, lam, sizes, worst, worst < tolerance)


def commutant_dimension(mats: Sequence[np.ndarray], m: int) -> tuple[int, float]:
    """Dimension of ``{X : A X = X A for all A}`` (``m x m``) via SVD, and the singular-value gap at the cut."""
    eye = np.eye(m)
    rows = [np.kron(eye, a) - np.kron(a.T, eye) for a in mats]
    if not rows:
        return m * m, math.inf
    big = np.vstack(rows)
    sv = np.linalg.svd(big, compute_uv=False)
    sv = np.concatenate([sv, np.zeros(m * m - len(sv))]) if len(sv) < m * m else sv
    scale = sv[0] if sv[0] > 0 else 1.0
    tol = scale * 1e-9
    null = int(np.sum(sv <= tol))
    kept = sv[sv > tol]
    dropped = sv[sv <= tol]
    if len(kept) and len(dropped):
        ratio = kept[-1] / max(dropped[0], 1e-300)
    else:
        ratio = math.inf
    return null, float(ratio)


@dataclass
class CompletenessReport:
    k: int
    x: float
    dims: dict[Partition, int]
    sum_of_squares: int
    diagram_count: int
    commutant_dims: dict[Partition, int]
    min_gap: float
    joint_rank: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "claim": "seminormal completeness",
            "params": {"k": self.k, "x": self.x},
            "dims": [[list(lam), d] for lam, d in self.dims.items()],
            "sum_of_squares": self.sum_of_squares,
            "count": self.diagram_count,
            "commutant_dims": [[list(lam), d] for lam, d in self.commutant_dims.items()],
            "min_singular_gap": self.min_gap,
            "joint_rank": self.joint_rank,
            "pass": self.passed,
        }


def joint_image_rank(k: int, modules: Sequence[SeminormalModule]) -> int:
    """Numerical rank of the images of all diagrams under the direct sum of the modules."""
    rows = []
    for d in enumerate_diagrams(k):
        rows.append(np.concatenate([mod.represent(d).ravel() for mod in modules]))
    mat = np.array(rows)
    sv = np.linalg.svd(mat, compute_uv=False)
    return int(np.sum(sv > sv[0] * 1e-10))


def verify_complete(k: int, x: float, gap: float = 1e6,
                    convention: DiamondConvention | None = None) -> CompletenessReport:
    mods = build_level(k, x, convention)
    dims = {mod.shape: mod.dim for mod in mods}
    sos = sum(d * d for d in dims.values())
    cdims: dict[Partition, int] = {}
    min_gap = math.inf
    for mod in mods:
        dim, ratio = commutant_dimension([m for _, _, m in mod.generators()], mod.dim)
        cdims[mod.shape] = dim
        min_gap = min(min_gap, ratio)
    rank = joint_image_rank(k, mods)
    total = count(k)
    passed = (sos == total and all(v == 1 for v in cdims.values())
              and min_gap > gap and rank == total)
    return CompletenessReport(k, x, dims, sos, total, cdims, min_gap, rank, passed)


CONSTANTS_HEADER = (
    "# Generated by `rbkit seminormal --resolve-convention`; do not edit by hand.\n"
    "# Signs (add_add, remove_remove, mixed) of the diamond function, selected as the\n"
    "# unique candidate under which every defining relation holds at random generic x.\n"
)


def write_convention_constants(conv: DiamondConvention, path: str | None = None) -> str:
    """Write the resolved convention module and return its path."""
    import os

    target = path or os.path.join(os.path.dirname(__file__), "_diamond_constants.py")
    with open(target, "w", encoding="utf-8") as fh:
        fh.write(CONSTANTS_HEADER)
        fh.write(f"RESOLVED_CONVENTION = {conv.as_tuple()!r}\n")
    return target


def matrices_csv(mod: SeminormalModule) -> str:
    """All generator matrices of ``mod`` as CSV blocks; basis path labels go in a header comment."""
    lines = [f"# shape={mod.shape!r} k={mod.k} x={mod.x!r} dim={mod.dim}"]
    lines += [f"# basis[{c}] = {label}" for c, label in enumerate(mod.labels())]
    for kind, i, mat in mod.generators():
        lines.append(f"# {kind}{i}")
        lines += [",".join(f"{v:.17g}" for v in row) for row in mat]
    return "\n".join(lines) + "\n"


__all__ = [
    "ESKPolynomial", "esk", "esk_eval", "branching_check", "DiamondConvention",
    "candidate_conventions", "diamond", "SeminormalModule", "build_module", "build_level",
    "verify_relations", "resolve_convention", "verify_restriction", "verify_complete",
    "commutant_dimension", "SingularParameterError", "write_convention_constants",
    "matrices_csv",
]
