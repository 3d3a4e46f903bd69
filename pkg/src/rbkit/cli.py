"""Command-line front end: ``rbkit <command> [flags]``.

Exit codes: 0 when every requested check passes, 1 on a failed check (the
failing report is printed), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable, TextIO

from . import algebra, combinatorics, diagrams, schur_weyl, seminormal, suite
from .diagrams import Diagram, DiagramError, Letter
from .render import render as render_diagram

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- flag parsing -----------------------------------------------------------------------

def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _decimal(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text}") from exc


def _shape(text: str) -> combinatorics.Partition:
    text = text.strip().strip("()")
    if text in ("", "0", "empty"):
        return combinatorics.EMPTY
    try:
        parts = [int(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}; use e.g. 2,1") from exc
    if any(p <= 0 for p in parts) or parts != sorted(parts, reverse=True):
        raise argparse.ArgumentTypeError(f"{text!r} is not a partition")
    return combinatorics.Partition(parts)


def _word(text: str) -> list[Letter]:
    letters = []
    for tok in text.replace(",", " ").split():
        kind, idx = tok[0].lower(), tok[1:]
        if kind not in "stp" or not idx.isdigit():
            raise argparse.ArgumentTypeError(f"bad generator {tok!r}; use s1, t2, p3")
        letters.append(Letter(kind, int(idx)))
    return letters


def _load_diagram(path: str) -> Diagram:
    try:
        with open(path, encoding="utf-8") as fh:
            return Diagram.from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _common(**flags: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    if flags.get("k"):
        p.add_argument("--k", type=_nonneg_int, required=flags.get("k_required", True))
    if flags.get("n"):
        p.add_argument("--n", type=_nonneg_int, default=None)
    if flags.get("x"):
        p.add_argument("--x", type=_decimal, default=None, help="algebra parameter (decimal)")
    if flags.get("sampling"):
        p.add_argument("--seed", type=_seed, default=0)
        p.add_argument("--samples", type=_nonneg_int, default=20)
    if flags.get("tolerance"):
        p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rbkit", description="Rook-Brauer algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("count", parents=[_common(k=True)], help="|RB_k|")
    p = sub.add_parser("enumerate", parents=[_common(k=True)], help="list diagrams")
    p.add_argument("--family", choices=diagrams.FAMILIES)

    p = sub.add_parser("mult", parents=[_common(k=True, k_required=False)],
                       help="multiply two diagram files, or evaluate a generator word")
    p.add_argument("--diagram", metavar="FILE", action="append", default=[])
    p.add_argument("--word", type=_word)

    sub.add_parser("relations", parents=[_common(k=True)], help="check the presentation")

    p = sub.add_parser("tensor", parents=[_common(k=True, n=True, sampling=True, tolerance=True)],
                       help="tensor-space representation checks")
    p.add_argument("--exact", action="store_true", help="integer signed permutations only")

    sub.add_parser("bratteli", parents=[_common(k=True)], help="Bratteli diagram levels")
    p = sub.add_parser("paths", parents=[_common(k=True)], help="paths to a shape")
    p.add_argument("--shape", type=_shape, required=True)

    p = sub.add_parser("rsk", parents=[_common()], help="RSK pair of a diagram")
    p.add_argument("--diagram", metavar="FILE", required=True)

    p = sub.add_parser("esk", parents=[_common(x=True)], help="dimension polynomial P_lambda")
    p.add_argument("--shape", type=_shape, required=True)

    p = sub.add_parser("seminormal", parents=[_common(k=True, x=True, sampling=True, tolerance=True)],
                       help="seminormal module checks")
    p.add_argument("--shape", type=_shape)
    p.add_argument("--csv", metavar="FILE", help="dump generator matrices of --shape as CSV")
    p.add_argument("--resolve-convention", action="store_true",
                   help="search sign conventions and rewrite the generated constants")

    p = sub.add_parser("render", parents=[_common()], help="draw a diagram")
    p.add_argument("--diagram", metavar="FILE", required=True)
    p.add_argument("--format", choices=("ascii", "svg"), default="ascii")

    p = sub.add_parser("suite", parents=[_common(k=True, n=True, x=True, sampling=True,
                                                 tolerance=True)],
                       help="run every acceptance check")
    return parser


# -- commands ---------------------------------------------------------------------------
# Each returns (passed, json_payload, human_text).

Result = tuple[bool, object, str]


def _cmd_count(a) -> Result:
    c = diagrams.count(a.k)
    return True, {"k": a.k, "count": c}, str(c)


def _cmd_enumerate(a) -> Result:
    ds = diagrams.enumerate_diagrams(a.k)
    if a.family:
        ds = [d for d in ds if a.family in diagrams.classify(d)]
    payload = [d.to_json() for d in ds]
    text = "\n".join(json.dumps(d.named_edges()) for d in ds)
    return True, payload, text


def _cmd_mult(a) -> Result:
    if a.word is not None:
        if a.k is None:
            raise UsageError("--word needs --k")
        if a.diagram:
            raise UsageError("give either --word or two --diagram files")
        value = diagrams.evaluate_word(diagrams.GeneratorWord(a.k, tuple(a.word)))
        elem = algebra.AlgebraElement.word(a.k, a.word)
        payload = {"diagram": value.diagram.to_json(), "loops": value.loops,
                   "isolated": value.isolated, "element": elem.to_json()}
        return True, payload, repr(elem)
    if len(a.diagram) != 2:
        raise UsageError("mult needs exactly two --diagram files or a --word")
    d1, d2 = (_load_diagram(f) for f in a.diagram)
    if d1.k != d2.k:
        raise UsageError(f"size mismatch: k={d1.k} and k={d2.k}")
    res = diagrams.concatenate(d1, d2)
    payload = {"diagram": res.diagram.to_json(), "loops": res.loops, "isolated": res.isolated}
    text = (f"edges: {json.dumps(res.diagram.named_edges())}\n"
            f"loops: {res.loops}\nisolated: {res.isolated}")
    return True, payload, text


def _cmd_relations(a) -> Result:
    reports = algebra.check_presentation(a.k)
    ok = algebra.presentation_ok(reports)
    payload = {"claim": "presentation", "params": {"k": a.k}, "pass": ok,
               "relations": [r.to_json() for r in reports]}
    rows = [f"{'relation':<8} {'instance':<28} holds"]
    for r in reports:
        rows.append(f"{r.id:<8} {r.instance:<28} {'yes' if r.holds else 'NO'}"
                    + (f"  ({r.note})" if r.id == algebra.PRINTED_QUADRATIC_ID else ""))
    return ok, payload, "\n".join(rows)


def _cmd_tensor(a) -> Result:
    n = a.k if a.n is None else a.n
    cfg = schur_weyl.TensorRepConfig(a.k, n)
    try:
        cfg.check_bound()
    except schur_weyl.SizeBoundError as exc:
        raise UsageError(str(exc)) from exc
    exhaustive = diagrams.count(a.k) ** 2 <= 10_000
    reports = [
        schur_weyl.verify_homomorphism(cfg, samples=None if exhaustive else a.samples * 10,
                                       seed=a.seed),
        schur_weyl.verify_commuting(cfg, a.samples, a.tolerance, a.seed, a.exact),
    ]
    try:
        reports.append(schur_weyl.verify_faithful(cfg))
    except schur_weyl.SizeBoundError as exc:
        reports.append(schur_weyl.Report("faithful", {"k": a.k, "n": n}, True,
                                         detail={"skipped": str(exc)}))
    ok = all(r.passed for r in reports)
    text = "\n".join(_report_line(r.to_json()) for r in reports)
    return ok, [r.to_json() for r in reports], text


def _report_line(rep: dict) -> str:
    extra = ", ".join(f"{key}={rep[key]}" for key in ("residual", "rank", "skipped") if key in rep)
    return f"{'PASS' if rep['pass'] else 'FAIL'}  {rep['claim']:<14} {rep.get('params', '')} {extra}"


def _cmd_bratteli(a) -> Result:
    levels = combinatorics.bratteli(a.k)
    text = "\n".join(
        f"level {lv.level}: " + ", ".join(f"{lam!r}:{m}" for lam, m in lv.multiplicities.items())
        for lv in levels)
    return True, [lv.to_json() for lv in levels], text


def _cmd_paths(a) -> Result:
    paths = combinatorics.enumerate_paths(a.k, a.shape)
    return True, [p.to_json() for p in paths], "\n".join(repr(p) for p in paths)


def _cmd_rsk(a) -> Result:
    d = _load_diagram(a.diagram)
    p, q = combinatorics.rsk(d)
    payload = {"k": d.k, "P": p.to_json(), "Q": q.to_json()}
    return True, payload, f"P = {p!r}\nQ = {q!r}"


def _cmd_esk(a) -> Result:
    poly = seminormal.esk(a.shape)
    payload = {"shape": list(a.shape), "coefficients": [str(c) for c in poly.coefficients()]}
    text = f"P{a.shape!r}(x) coefficients (constant first): " + ", ".join(
        str(c) for c in poly.coefficients())
    if a.x is not None:
        value = poly(a.x)
        payload["x"] = str(a.x)
        payload["value"] = str(value)
        text += f"\nP{a.shape!r}({a.x}) = {value}"
    return True, payload, text


def _cmd_seminormal(a) -> Result:
    if a.resolve_convention:
        found = seminormal.resolve_convention(max_k=min(a.k, 3) or 1, seed=a.seed)
        if len(found) != 1:
            return False, {"conventions": [c.as_tuple() for c in found]}, \
                f"expected a unique convention, found {[c.as_tuple() for c in found]}"
        path = seminormal.write_convention_constants(found[0])
        return True, {"convention": found[0].as_tuple(), "written": path}, \
            f"convention {found[0].as_tuple()} written to {path}"
    x = float(a.x if a.x is not None else Fraction(73, 10))
    tol = max(a.tolerance, 1e-8)
    try:
        if a.csv:
            if a.shape is None:
                raise UsageError("--csv needs --shape")
            mod = seminormal.build_module(a.k, a.shape, x)
            with open(a.csv, "w", encoding="utf-8") as fh:
                fh.write(seminormal.matrices_csv(mod))
        shapes = [a.shape] if a.shape is not None else list(
            combinatorics.bratteli(a.k)[a.k].multiplicities)
        rel = seminormal.verify_relations(a.k, x, tol)
        res = [seminormal.verify_restriction(a.k, lam, x, tol) for lam in shapes]
        comp = seminormal.verify_complete(a.k, x)
    except seminormal.SingularParameterError as exc:
        payload = {"claim": "seminormal", "params": {"k": a.k, "x": x}, "pass": False,
                   "singular": str(exc)}
        return False, payload, f"FAIL  singular parameter: {exc}"
    reports = [rel.to_json()] + [r.to_json() for r in res] + [comp.to_json()]
    ok = rel.passed and all(r.passed for r in res) and comp.passed
    return ok, reports, "\n".join(_report_line(r) for r in reports)


def _cmd_render(a) -> Result:
    d = _load_diagram(a.diagram)
    out = render_diagram(d, a.format)
    return True, {"format": a.format, "output": out}, out.rstrip("\n")


def _cmd_suite(a) -> Result:
    x = float(a.x if a.x is not None else Fraction(73, 10))
    n = a.n if a.n is not None else max(a.k, 3)
    results = suite.run_suite(a.k, n, x, a.samples, a.seed, max(a.tolerance, 1e-8))
    ok = all(r.passed for r in results)
    text = "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}" for r in results)
    return ok, [r.to_json() for r in results], text


COMMANDS: dict[str, Callable[[argparse.Namespace], Result]] = {
    "count": _cmd_count, "enumerate": _cmd_enumerate, "mult": _cmd_mult,
    "relations": _cmd_relations, "tensor": _cmd_tensor, "bratteli": _cmd_bratteli,
    "paths": _cmd_paths, "rsk": _cmd_rsk, "esk": _cmd_esk, "seminormal": _cmd_seminormal,
    "render": _cmd_render, "suite": _cmd_suite,
}


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if hasattr(obj, "item"):
        return obj.item()
    raise TypeError(f"not serializable: {type(obj).__name__}")


def run(argv: list[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        ok, payload, text = COMMANDS[args.command](args)
    except (UsageError, DiagramError, schur_weyl.SizeBoundError, ValueError) as exc:
        print(f"rbkit {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE
    body = json.dumps(payload, indent=2, default=_default) if args.json else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body + "\n")
    else:
        print(body, file=stdout)
    if not ok and args.out:
        print(body, file=stderr)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())
