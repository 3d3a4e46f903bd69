"""The action of RB_k(n+1) on tensor space and checks against the orthogonal group.

``V`` has basis ``v_0..v_n``; ``O_n`` fixes ``v_0`` and acts orthogonally on
``v_1..v_n``.  Basis tensors of ``V^{(x)k}`` are ordered row-major in the
mixed-radix digits ``(i_1, ..., i_k)``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .diagrams import Diagram, concatenate, count, enumerate_diagrams, generator
from .linalg import distinct_nonzero_columns, exact_rank

DEFAULT_MAX_DIM = 4096


def max_dim() -> int:
    return int(os.environ.get("RBKIT_MAX_DIM", DEFAULT_MAX_DIM))


class SizeBoundError(ValueError):
    pass


@dataclass(frozen=True)
class TensorRepConfig:
    k: int
    n: int

    @property
    def dim(self) -> int:
        """Dimension of ``V``."""
        return self.n + 1

    @property
    def x(self) -> int:
        return self.n + 1

    @property
    def space_dim(self) -> int:
        return self.dim ** self.k

    def check_bound(self) -> None:
        if self.space_dim > max_dim():
            raise SizeBoundError(
                f"(n+1)^k = {self.space_dim} exceeds RBKIT_MAX_DIM={max_dim()}")


def represent(d: Diagram, cfg: TensorRepConfig) -> np.ndarray:
    """Integer matrix of ``d`` on ``V^{(x)k}``; entry ``(out, in)`` is the product of edge weights.

    Bottom vertices carry the input labels and top vertices the output labels.
    Entries are 0/1, so the int64 matrix is exact.
    """
    if d.k != cfg.k:
        raise ValueError(f"diagram k={d.k} but config k={cfg.k}")
    cfg.check_bound()
    k, q = cfg.k, cfg.dim
    size = q ** k
    mat = np.zeros((size, size), dtype=np.int64)
    weights = [q ** (k - 1 - c) for c in range(k)]
    top_pairs = d.top_horizontals()
    bottom_pairs = [(a - k, b - k) for a, b in d.bottom_horizontals()]
    bottom_iso = [v - k for v in d.isolated() if v >= k]
    verticals = [(a, b - k) for a, b in d.vertical_edges()]
    for labels in product(range(q), repeat=k):
        if any(labels[c] != 0 for c in bottom_iso):
            continue
        if any(labels[a] != labels[b] for a, b in bottom_pairs):
            continue
        col = sum(w * a for w, a in zip(weights, labels))
        base = sum(weights[t] * labels[b] for t, b in verticals)
        # top isolated vertices are pinned to v_0, contributing nothing to the index
        for free in product(range(q), repeat=len(top_pairs)):
            row = base + sum((weights[a] + weights[b]) * f for (a, b), f in zip(top_pairs, free))
            mat[row, col] = 1
    return mat


def generator_matrices(cfg: TensorRepConfig) -> list[tuple[str, np.ndarray]]:
    out = []
    for i in range(1, cfg.k):
        out.append((f"s{i}", represent(generator("s", i, cfg.k), cfg)))
        out.append((f"t{i}", represent(generator("t", i, cfg.k), cfg)))
    for i in range(1, cfg.k + 1):
        out.append((f"p{i}", represent(generator("p", i, cfg.k), cfg)))
    return out


# -- reports ------------------------------------------------------------------------

@dataclass
class Report:
    claim: str
    params: dict
    passed: bool
    residual: float | None = None
    rank: int | None = None
    detail: dict | None = None

    def to_json(self) -> dict:
        out = {"claim": self.claim, "params": self.params, "pass": self.passed}
        if self.residual is not None:
            out["residual"] = self.residual
        if self.rank is not None:
            out["rank"] = self.rank
        if self.detail:
            out.update(self.detail)
        return out


def verify_homomorphism(cfg: TensorRepConfig, pairs: Iterable[tuple[Diagram, Diagram]] | None = None,
                        samples: int | None = None, seed: int = 0) -> Report:
    """Check ``pi(d1 d2) = pi(d1) pi(d2)`` exactly with loops scaled by ``n+1``.

    ``pairs=None`` means all pairs when ``samples`` is ``None``, else that many
    random pairs drawn with ``seed``.
    """
    params = {"k": cfg.k, "n": cfg.n}
    try:
        cfg.check_bound()
    except SizeBoundError as exc:
        return Report("homomorphism", params, True, detail={"skipped": str(exc)})
    if pairs is None:
        basis = enumerate_diagrams(cfg.k)
        if samples is None:
            pairs = [(a, b) for a in basis for b in basis]
        else:
            rng = np.random.default_rng(seed)
            idx = rng.integers(0, len(basis), size=(samples, 2))
            pairs = [(basis[i], basis[j]) for i, j in idx]
    cache: dict[Diagram, np.ndarray] = {}

    def rep(d: Diagram) -> np.ndarray:
        if d not in cache:
            cache[d] = represent(d, cfg)
        return cache[d]

    checked = failures = 0
    for d1, d2 in pairs:
        res = concatenate(d1, d2)
        lhs = cfg.x ** res.loops * rep(res.diagram)
        if not np.array_equal(lhs, rep(d1) @ rep(d2)):
            failures += 1
        checked += 1
    params["pairs"] = checked
    return Report("homomorphism", params, failures == 0, detail={"failures": failures, "exact": True})


# -- orthogonal samples ----------------------------------------------------------------

@dataclass(frozen=True)
class OrthogonalSample:
    """An ``(n+1) x (n+1)`` matrix fixing ``v_0`` and orthogonal on ``v_1..v_n``."""

    g: np.ndarray
    provenance: str


def embed(h: np.ndarray) -> np.ndarray:
    n = h.shape[0]
    g = np.zeros((n + 1, n + 1), dtype=h.dtype)
    g[0, 0] = 1
    g[1:, 1:] = h
    return g


def givens_sample(n: int, rng: np.random.Generator, rotations: int | None = None) -> OrthogonalSample:
    h = np.eye(n)
    pairs = [(p, q) for p in range(n) for q in range(p + 1, n)]
    for _ in range(rotations or max(1, len(pairs))):
        if not pairs:
            break
        p, q = pairs[rng.integers(len(pairs))]
        theta = rng.uniform(0, 2 * math.pi)
        c, s = math.cos(theta), math.sin(theta)
        r = np.eye(n)
        r[p, p] = r[q, q] = c
        r[p, q], r[q, p] = -s, s
        h = r @ h
    return OrthogonalSample(embed(h), "givens")


def signed_permutation_sample(n: int, rng: np.random.Generator) -> OrthogonalSample:
    perm = rng.permutation(n)
    signs = rng.choice([-1, 1], size=n)
    h = np.zeros((n, n), dtype=np.int64)
    h[np.arange(n), perm] = signs
    return OrthogonalSample(embed(h), "signed_permutation")


def orthogonal_samples(n: int, count_: int, rng: np.random.Generator) -> list[OrthogonalSample]:
    """Cycle through Givens products, signed permutations and their products."""
    out = []
    for j in range(count_):
        kind = j % 3
        if kind == 0:
            out.append(givens_sample(n, rng))
        elif kind == 1:
            out.append(signed_permutation_sample(n, rng))
        else:
            a, b = givens_sample(n, rng), signed_permutation_sample(n, rng)
            out.append(OrthogonalSample(a.g @ b.g, "product"))
    return out


def tensor_power(g: np.ndarray, k: int) -> np.ndarray:
    out = np.ones((1, 1), dtype=g.dtype)
    for _ in range(k):
        out = np.kron(out, g)
    return out


def commuting_residual(cfg: TensorRepConfig, g: np.ndarray,
                       mats: Sequence[tuple[str, np.ndarray]] | None = None) -> float:
    mats = mats if mats is not None else generator_matrices(cfg)
    rho = tensor_power(g, cfg.k)
    worst = 0.0
    for _, pi in mats:
        diff = pi @ rho - rho @ pi
        if diff.size:
            worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def verify_commuting(cfg: TensorRepConfig, samples: int = 20, tolerance: float = 1e-9,
                     seed: int = 0, exact: bool = False) -> Report:
    """Max of ``|pi(d) rho(g) - rho(g) pi(d)|`` over sampled ``g`` and all generators ``d``.

    With ``exact`` only integer signed permutations are sampled and the
    residual is computed in integer arithmetic.
    """
    cfg.check_bound()
    rng = np.random.default_rng(seed)
    mats = generator_matrices(cfg)
    if exact:
        gs = [signed_permutation_sample(cfg.n, rng) for _ in range(samples)]
    else:
        gs = orthogonal_samples(cfg.n, samples, rng)
    worst = 0.0
    max_orth = 0.0
    for sample in gs:
        h = sample.g[1:, 1:].astype(float)
        max_orth = max(max_orth, float(np.max(np.abs(h @ h.T - np.eye(cfg.n)))) if cfg.n else 0.0)
        worst = max(worst, commuting_residual(cfg, sample.g, mats))
    passed = worst == 0 if exact else worst < tolerance
    params = {"k": cfg.k, "n": cfg.n, "samples": samples, "tolerance": tolerance,
              "seed": seed, "exact": exact}
    return Report("commuting", params, passed, residual=worst,
                  detail={"max_orthogonality_defect": max_orth})


def verify_faithful(cfg: TensorRepConfig, max_entries: int = 2_000_000) -> Report:
    """Exact rank of the vectorized images of all diagrams; faithful iff it equals ``count(k)``."""
    cfg.check_bound()
    total = count(cfg.k)
    entries = total * cfg.space_dim ** 2
    if entries > max_entries:
        raise SizeBoundError(f"{entries} matrix entries exceed bound {max_entries}")
    rows = [represent(d, cfg).ravel() for d in enumerate_diagrams(cfg.k)]
    reduced = distinct_nonzero_columns([r.tolist() for r in rows])
    rank = exact_rank(reduced)
    params = {"k": cfg.k, "n": cfg.n, "hypothesis_n_ge_k": cfg.n >= cfg.k}
    passed = rank == total if cfg.n >= cfg.k else True
    return Report("faithful", params, passed, rank=rank, detail={"count": total})


def bimodule_dimension_check(k: int, n: int) -> tuple[int, int]:
    """``((n+1)^k, sum over lambda of P_lambda(n) m_k^lambda)``; equal when ``n >= k``."""
    from fractions import Fraction

    from .combinatorics import bratteli
    from .seminormal import esk_eval

    level = bratteli(k)[k].multiplicities
    total = sum(esk_eval(lam, Fraction(n)) * m for lam, m in level.items())
    return (n + 1) ** k, int(total)
