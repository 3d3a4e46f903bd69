"""Aggregated verification checks behind ``rbkit suite``."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import check_presentation, presentation_ok
from .combinatorics import bratteli, partitions_of, rsk
from .diagrams import Diagram, count, enumerate_diagrams
from .schur_weyl import TensorRepConfig, verify_commuting, verify_faithful, verify_homomorphism
from .seminormal import branching_check, esk_eval, verify_complete, verify_relations, verify_restriction

EXAMPLE_RSK_DIAGRAM = Diagram.from_named_edges(
    6, [("t1", "b3"), ("t3", "b1"), ("t5", "b4"), ("t2", "t4"), ("b5", "b6")])
EXAMPLE_RSK_P = ((), (1,), (2,), (2, 1), (1, 1), (2, 1), (2, 1))
EXAMPLE_RSK_Q = ((), (1,), (1,), (1, 1), (2, 1), (3, 1), (2, 1))
COUNTS = (1, 2, 10, 76, 764, 9496, 140152, 2390480, 46206736)


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        # timing stays out of the payload so reports are byte-stable
        return {"claim": self.name, "pass": self.passed, **self.detail}


def _timed(name: str, fn: Callable[[], tuple[bool, dict]]) -> CheckResult:
    start = time.perf_counter()
    ok, detail = fn()
    return CheckResult(name, ok, time.perf_counter() - start, detail)


def check_counting(max_k: int = 8) -> tuple[bool, dict]:
    values = [count(k) for k in range(max_k + 1)]
    return values == list(COUNTS[: max_k + 1]), {"values": values}


def check_presentation_up_to(max_k: int) -> tuple[bool, dict]:
    failing = {}
    for k in range(max_k + 1):
        reps = check_presentation(k)
        if not presentation_ok(reps):
            failing[k] = [r.instance for r in reps if not r.holds]
    return not failing, {"max_k": max_k, "failing": failing}


def check_tensor(k: int, n: int, samples: int, seed: int) -> tuple[bool, dict]:
    cfg = TensorRepConfig(k, n)
    exhaustive = count(k) ** 2 <= 10_000
    hom = verify_homomorphism(cfg, samples=None if exhaustive else 200, seed=seed)
    com = verify_commuting(cfg, samples=samples, seed=seed)
    faith = verify_faithful(cfg)
    ok = hom.passed and com.passed and faith.passed
    return ok, {"homomorphism": hom.to_json(), "commuting": com.to_json(),
                "faithful": faith.to_json()}


def check_bratteli(max_k: int = 8) -> tuple[bool, dict]:
    levels = bratteli(max_k)
    sums = [sum(m * m for m in lvl.multiplicities.values()) for lvl in levels]
    return sums == [count(k) for k in range(max_k + 1)], {"sum_of_squares": sums}


def check_rsk(max_k: int) -> tuple[bool, dict]:
    p, q = rsk(EXAMPLE_RSK_DIAGRAM)
    example = (tuple(map(tuple, p.shapes)) == EXAMPLE_RSK_P
               and tuple(map(tuple, q.shapes)) == EXAMPLE_RSK_Q)
    sizes = {}
    ok = example
    for k in range(max_k + 1):
        image = set()
        for d in enumerate_diagrams(k):
            a, b = rsk(d)
            ok &= a.shape == b.shape
            image.add((a.shapes, b.shapes))
        expected = sum(m * m for m in bratteli(k)[k].multiplicities.values())
        sizes[k] = len(image)
        ok &= len(image) == count(k) == expected
    return ok, {"example": example, "image_sizes": sizes}


def check_esk(max_size: int = 6) -> tuple[bool, dict]:
    xs = [Fraction(v, 7) for v in range(-20, 60, 9)]
    worst = Fraction(0)
    for r in range(max_size + 1):
        for gamma in partitions_of(r):
            worst = max(worst, *branching_check(gamma, xs))
    x = Fraction(13, 3)
    small = (esk_eval((), x) == 1 and esk_eval((1,), x) == x
             and esk_eval((2,), x) == (x + 2) * (x - 1) / 2
             and esk_eval((1, 1), x) == x * (x - 1) / 2)
    return small and worst == 0, {"max_branching_residual": str(worst)}


def check_seminormal(max_k: int, x: float, tolerance: float) -> tuple[bool, dict]:
    detail = {}
    ok = True
    for k in range(max_k + 1):
        rel = verify_relations(k, x, tolerance)
        res = max((verify_restriction(k, lam, x, tolerance).max_residual
                   for lam in bratteli(k)[k].multiplicities), default=0.0)
        comp = verify_complete(k, x)
        ok &= rel.passed and res < tolerance and comp.passed
        detail[k] = {"relations": rel.max_residual, "restriction": res,
                     "sum_of_squares": comp.sum_of_squares, "joint_rank": comp.joint_rank,
                     "commutant_dims": sorted(set(comp.commutant_dims.values()))}
    return ok, {"x": x, "levels": detail}


def run_suite(k: int = 4, n: int = 3, x: float = 7.3, samples: int = 20, seed: int = 0,
              tolerance: float = 1e-8) -> list[CheckResult]:
    kt = min(k, 3)
    nt = max(n, kt)
    return [
        _timed("counting", lambda: check_counting(8)),
        _timed("presentation", lambda: check_presentation_up_to(min(k, 5))),
        _timed("tensor", lambda: check_tensor(kt, nt, samples, seed)),
        _timed("bratteli", lambda: check_bratteli(8)),
        _timed("rsk", lambda: check_rsk(min(k, 4))),
        _timed("esk", lambda: check_esk(6)),
        _timed("seminormal", lambda: check_seminormal(min(k, 4), x, tolerance)),
    ]
