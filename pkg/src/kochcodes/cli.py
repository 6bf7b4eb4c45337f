"""Command-line interface.

Exit codes: 0 success or passing verdict, 1 failing verdict, 2 bad input or
usage.  Every subcommand accepts ``--json``; JSON output uses sorted keys and
contains no floats (rationals are "p/q" strings).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from . import catalog, enumerators, gf2core, lattice, tetrad
from .gf2core import Code, CodeError, DualityClass


class Result:
    def __init__(self, payload, text: str, code: int = 0):
        self.payload = payload
        self.text = text
        self.exit_code = code


def _read_code(path: str) -> Code:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CodeError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return gf2core.parse_matrix(text)
    except CodeError as exc:
        raise CodeError(f"{path}: {exc}") from None


def _frac(x: Fraction) -> str:
    return str(x)


def contract(code: Code) -> dict:
    """The summary block shared by ``info`` and ``catalog show``."""
    cls = gf2core.classify_self_duality(code)
    out = {"n": code.n, "k": code.k, "type": str(cls), "d": None,
           "signature": None, "c4": None, "extremal": None}
    if 1 <= code.k <= gf2core.ENUM_CAP:
        out["d"] = gf2core.min_distance(code)
    if cls is DualityClass.TYPE_II:
        out["extremal"] = gf2core.is_extremal(code)
    if gf2core.is_doubly_even(code) and code.k <= gf2core.ENUM_CAP:
        dec = tetrad.decompose(code)
        out["signature"] = str(dec.signature)
        out["c4"] = dec.total_t4
    return out


def _contract_text(c: dict) -> str:
    return "\n".join(f"{k}: {'-' if v is None else v}" for k, v in c.items())


def cmd_info(args) -> Result:
    c = contract(_read_code(args.file))
    return Result(c, _contract_text(c))


def cmd_dual(args) -> Result:
    d = gf2core.dual(_read_code(args.file))
    return Result({"n": d.n, "k": d.k, "rows": d.rows()}, gf2core.format_matrix(d).rstrip("\n"))


def cmd_wenum(args) -> Result:
    code = _read_code(args.file)
    wd = enumerators.weight_distribution(code)
    text = "\n".join(f"A[{w}] = {a}" for w, a in enumerate(wd.A) if a)
    return Result({"n": wd.n, "A": list(wd.A), "polynomial": wd.as_poly().to_json()}, text)


def _parse_coeffs(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise CodeError(f"bad coefficient list {text!r}") from None


def cmd_hwenum(args) -> Result:
    code = _read_code(args.file)
    try:
        if args.unit is not None:
            P = enumerators.HarmonicLinForm.unit(code.n, args.unit)
        else:
            P = enumerators.HarmonicLinForm.linear(_parse_coeffs(args.coeffs))
    except ValueError as exc:
        raise CodeError(str(exc)) from None
    poly = enumerators.hwe(code, P)
    payload = {"form": [_frac(a) for a in P.coeffs], "polynomial": poly.to_json(),
               "zero": poly.is_zero()}
    return Result(payload, f"W = {poly}")


def _decomposition_json(dec: tetrad.TetradDecomposition) -> dict:
    return {
        "n": dec.n,
        "signature": str(dec.signature),
        "c4": dec.total_t4,
        "uncovered": list(dec.uncovered),
        "components": [
            {"label": str(c.label), "support": list(c.support), "m": c.m,
             "dim": c.dim, "t4": c.t4, "eta": _frac(c.eta)}
            for c in dec.components
        ],
    }


def cmd_tetrad(args) -> Result:
    dec = tetrad.decompose(_read_code(args.file))
    lines = [f"signature: {dec.signature}", f"|C_4|: {dec.total_t4}"]
    for c in dec.components:
        lines.append(f"  {c.label}: m={c.m} dim={c.dim} t4={c.t4} eta={c.eta} "
                     f"support={','.join(map(str, c.support))}")
    if dec.uncovered:
        lines.append(f"uncovered: {','.join(map(str, dec.uncovered))}")
    return Result(_decomposition_json(dec), "\n".join(lines))


def cmd_koch(args) -> Result:
    v = tetrad.koch_check(_read_code(args.file))
    verdict = "pass" if v.passed else "fail"
    payload = {"passed": v.passed, "signature": str(v.signature),
               "decomposition": _decomposition_json(v.decomposition)}
    return Result(payload, f"signature: {v.signature}\nkoch: {verdict}", 0 if v.passed else 1)


def cmd_prop(args) -> Result:
    r = tetrad.prop_check(_read_code(args.file))
    payload = {"passed": r.passed, "branch": r.branch, "c4": r.total_t4,
               "target_eta": _frac(r.target_eta),
               "etas": [[lab, _frac(e)] for lab, e in r.etas],
               "uncovered": list(r.uncovered)}
    lines = [f"|C_4| = {r.total_t4}, target eta = {r.target_eta}, branch: {r.branch}"]
    lines += [f"  {lab}: eta = {e}" for lab, e in r.etas]
    lines.append(f"proposition: {'pass' if r.passed else 'fail'}")
    return Result(payload, "\n".join(lines), 0 if r.passed else 1)


def cmd_design(args) -> Result:
    code = _read_code(args.file)
    weights = [args.weight] if args.weight is not None else range(code.n + 1)
    results = [enumerators.design_check(code, w) for w in weights]
    payload = [
        {"weight": r.weight, "passed": r.passed,
         "lambda": None if r.lam is None else _frac(r.lam),
         "failing_coordinate": r.failing_coordinate}
        for r in results
    ]
    lines = [
        f"w={r.weight}: lambda = {r.lam}" if r.passed
        else f"w={r.weight}: FAIL at coordinate {r.failing_coordinate}"
        for r in results
    ]
    ok = all(r.passed for r in results)
    return Result(payload, "\n".join(lines), 0 if ok else 1)


def cmd_admissible(args) -> Result:
    try:
        sigs = [str(s) for s in tetrad.admissible_systems(args.n)]
    except ValueError as exc:
        raise CodeError(str(exc)) from None
    return Result(sigs, "\n".join(sigs))


def cmd_catalog(args) -> Result:
    if args.action == "list":
        names = list(catalog.CATALOG_NAMES)
        return Result(names, "\n".join(names))
    if not args.name:
        raise CodeError("catalog show needs a name")
    code = catalog.build(args.name)
    c = contract(code)
    payload = {"name": args.name, "contract": c, "rows": code.rows()}
    header = f"{args.name}\ncontract: {json.dumps(c, sort_keys=True)}"
    return Result(payload, gf2core.format_matrix(code, header).rstrip("\n"))


def cmd_complete(args) -> Result:
    T = _read_code(args.file)
    C = catalog.complete_to_type2(T, args.length)
    if C is None:
        return Result({"found": False, "rows": None}, "no completion exists", 1)
    return Result({"found": True, "rows": C.rows()}, gf2core.format_matrix(C).rstrip("\n"))


def cmd_census(args) -> Result:
    rep = catalog.enumerate_type2(args.n)
    formula = catalog.count_type2_formula(args.n) if args.n % 8 == 0 else 0
    payload = {
        "n": rep.n, "count": rep.count, "formula": formula, "mass": rep.mass(),
        "classes": [
            {"representative": c.representative.rows(), "size": c.size,
             "aut_order": c.aut_order}
            for c in rep.classes
        ] if rep.count else [],
    }
    lines = [f"n = {rep.n}: {rep.count} Type II codes (formula {formula})"]
    for c in payload["classes"]:
        lines.append(f"  class of size {c['size']}, |Aut| = {c['aut_order']}")
    lines.append(f"mass: {rep.mass()}")
    return Result(payload, "\n".join(lines), 0 if rep.count == formula == rep.mass() else 1)


def cmd_lattice(args) -> Result:
    r = lattice.root_count(_read_code(args.file))
    payload = {"n": r.n, "count_enum": r.count_enum, "count_formula": r.count_formula,
               "breakdown": {"axis": r.axis_roots, "tetrad": r.tetrad_roots}}
    text = (f"roots (enumerated): {r.count_enum}\n"
            f"roots (2n + 16|C_4|): {r.count_formula}")
    return Result(payload, text, 0 if r.agree else 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")

    p = argparse.ArgumentParser(prog="kochcodes", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, file: bool = True):
        sp = sub.add_parser(name, parents=[common], help=help)
        if file:
            sp.add_argument("file", help="generator matrix file")
        sp.set_defaults(func=fn)
        return sp

    add("info", cmd_info, "length, dimension, distance, duality class")
    add("dual", cmd_dual, "generator matrix of the dual code")
    add("wenum", cmd_wenum, "weight distribution")
    sp = add("hwenum", cmd_hwenum, "harmonic weight enumerator for a degree-1 form")
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--unit", type=int, help="use P_i(c) = n*c_i - wt(c) (1-based i)")
    g.add_argument("--coeffs", help="comma-separated zero-sum coefficients a_1..a_n")
    add("tetrad", cmd_tetrad, "decompose the tetrad subcode")
    add("koch", cmd_koch, "Koch criterion for a Type II code of length 24")
    add("prop", cmd_prop, "1-design and equal tetrad number check (length 24)")
    sp = add("design", cmd_design, "1-design check of C_w")
    sp.add_argument("--weight", type=int, help="single weight (default: all)")
    sp = add("admissible", cmd_admissible, "tetrad systems allowed by equal tetrad numbers",
             file=False)
    sp.add_argument("n", type=int)
    sp = add("catalog", cmd_catalog, "named codes", file=False)
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    sp = add("complete", cmd_complete, "glue a doubly-even code up to Type II")
    sp.add_argument("--length", type=int, help="target length (pads with zero columns)")
    sp = add("census", cmd_census, "all Type II codes of length n <= 8", file=False)
    sp.add_argument("n", type=int)
    sp = sub.add_parser("lattice", help="Construction A lattice checks")
    lsub = sp.add_subparsers(dest="lattice_command", required=True)
    lp = lsub.add_parser("roots", parents=[common], help="count norm-2 vectors of L_C")
    lp.add_argument("file")
    lp.set_defaults(func=cmd_lattice)
    return p


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        res = args.func(args)
    except CodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(dumps(res.payload) if args.json else res.text)
    return res.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
