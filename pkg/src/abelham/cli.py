"""Command line: ``abelham check|decompose|generate|census``.

Exit codes: 0 analyzed, 1 input or usage error, 2 a theorem route and an
oracle route disagreed (an implementation bug, never averaged away).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Optional, Sequence

from . import constructors as C
from .analysis import analyze, census, structure
from .config import DEFAULT_LIMITS
from .magma import CayleyTable, OrderCapError, TableError, parse_table, serialize_table, table_to_json

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2


def _read(path: str) -> CayleyTable:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_table(text)


def _emit(obj, as_json: bool, text: str = "") -> None:
    if as_json:
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _limits(args):
    if getattr(args, "cap_subuniverses", None) is not None:
        return replace(DEFAULT_LIMITS, max_closed_sets=args.cap_subuniverses)
    return DEFAULT_LIMITS


def _fmt_verdict(label: str, v: dict) -> str:
    val = {True: "yes", False: "no", None: "undetermined"}[v["verdict"]]
    line = f"{label}: {val}  [{v['route']}]"
    if v.get("reason"):
        line += f"  {v['reason']}"
    lines = [line]
    if v.get("witness") is not None:
        lines.append(f"  witness: {json.dumps(v['witness'], sort_keys=True)}")
    for cc in v.get("cross_checks", []):
        val = {True: "yes", False: "no", None: "undetermined"}[cc["verdict"]]
        lines.append(f"  cross-check [{cc['route']}]: {val}")
    if v.get("tc_witness"):
        w = v["tc_witness"]
        lines.append(f"  term {w['term']}: u={w['u']} v={w['v']} c={w['c']} d={w['d']}")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    t = _read(args.path)
    report = analyze(t, fast_only=args.fast_only, oracle_only=args.oracle_only, base=args.base,
                     limits=_limits(args), seed=args.seed, timing=args.timing)
    cls = report["classification"]
    text = f"order {cls['order']} {cls['kind']}\n"
    text += _fmt_verdict("abelian", report["abelian"])
    text += _fmt_verdict("hamiltonian", report["hamiltonian"])
    if not report["consistent"]:
        text += "INCONSISTENT: theorem and oracle routes disagree\n"
    _emit(report, args.json, text)
    return EXIT_OK if report["consistent"] else EXIT_INCONSISTENT


def cmd_decompose(args) -> int:
    t = _read(args.path)
    payload = structure(t, base=args.base, kind=args.as_)
    if not payload:
        raise ValueError("table is neither a quasigroup nor a semigroup")
    text = ""
    q = payload.get("quasigroup")
    if q:
        loop = q["loop"]
        text += f"derived loop at base {loop['base']}, zero {loop['zero']}\n"
        text += "".join(" ".join(map(str, r)) + "\n" for r in loop["plus"])
        text += f"R = {loop['R_cycles']}  L = {loop['L_cycles']}  r = {loop['r_cycles']}  l = {loop['l_cycles']}\n"
    s = payload.get("semigroup")
    if s:
        text += f"idempotents {s['idempotents']} closed={s['idempotents_closed']}\n"
        rb = s["rect_band"]
        if "failed" in rb:
            text += f"rectangular band of Abelian groups: no ({rb['failed']})\n"
        else:
            text += f"rectangular band of Abelian groups: {len(rb['rows'])} x {len(rb['cols'])} blocks\n"
        infl = s["inflation"]
        text += f"inflation of A*A: {'yes' if infl else 'no'}\n"
        hij = s.get("hij")
        if hij and "error" not in hij:
            text += f"H x I x J: |H|={len(hij['H'])} |I|={hij['I_order']} |J|={hij['J_order']}\n"
    _emit(payload, args.json, text)
    return EXIT_OK


def _fibers(text: str) -> dict[int, int]:
    out = {}
    for part in filter(None, text.split(",")):
        b, k = part.split(":")
        out[int(b)] = int(k)
    return out


def cmd_generate(args) -> int:
    kind, n = args.kind, args.n
    if kind == "zn":
        t = C.zn(n)
    elif kind == "product":
        t = C.abelian_product(args.ns)
    elif kind == "leftzero":
        t = C.leftzero(n)
    elif kind == "rightzero":
        t = C.rightzero(n)
    elif kind == "rectband":
        t = C.rect_band_product(C.zn(n), args.rows, args.cols)
    elif kind == "inflate":
        base = _read(args.source) if args.source else C.zn(n)
        t = C.inflate(base, _fibers(args.fibers))
    elif kind == "linearq":
        t = C.linear_quasigroup(C.zn(n), C.multiplier(n, args.phi), C.multiplier(n, args.psi), args.c % n)
    elif kind == "fixture":
        t = C.fixture_table(args.name)
    elif kind in ("s3", "q8"):
        t = C.fixture_table(kind)
    elif kind == "random-semigroup":
        t = C.random_semigroup(n, args.seed)
    elif kind == "random-latin":
        t = C.random_latin_square(n, args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(kind)
    if args.json:
        _emit(table_to_json(t), True)
    else:
        sys.stdout.write(serialize_table(t))
    return EXIT_OK


def cmd_census(args) -> int:
    row = census(args.order, args.cls, sample=args.sample, seed=args.seed, limits=_limits(args))
    _emit(row.to_json(), args.json, row.to_csv())
    return EXIT_OK if row.disagreements == 0 else EXIT_INCONSISTENT


GENERATE_KINDS = ("zn", "product", "leftzero", "rightzero", "rectband", "inflate", "linearq",
                  "fixture", "s3", "q8", "random-semigroup", "random-latin")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abelham", description="Abelian and Hamiltonian tests for finite groupoids.")
    sub = p.add_subparsers(dest="command", required=True)

    chk = sub.add_parser("check", help="decide Abelian and Hamiltonian for one table")
    chk.add_argument("path", help="table file, or - for stdin")
    mode = chk.add_mutually_exclusive_group()
    mode.add_argument("--fast-only", action="store_true", help="skip oracle cross-checks where a theorem route exists")
    mode.add_argument("--oracle-only", action="store_true", help="skip the theorem routes")
    chk.add_argument("--base", type=int, default=None, help="base point for the derived loop")
    chk.add_argument("--cap-subuniverses", type=int, default=None)
    chk.add_argument("--seed", type=int, default=0, help="seed for the witness search")
    chk.add_argument("--timing", action="store_true", help="add wall-clock time to the report")
    chk.add_argument("--json", action="store_true")
    chk.set_defaults(func=cmd_check)

    dec = sub.add_parser("decompose", help="derived loop or semigroup structure")
    dec.add_argument("path")
    dec.add_argument("--as", dest="as_", choices=("quasigroup", "semigroup"), default=None)
    dec.add_argument("--base", type=int, default=None)
    dec.add_argument("--json", action="store_true")
    dec.set_defaults(func=cmd_decompose)

    gen = sub.add_parser("generate", help="emit a fixture or family member in table format")
    gen.add_argument("kind", choices=GENERATE_KINDS)
    gen.add_argument("-n", "--n", type=int, default=2)
    gen.add_argument("--ns", type=int, nargs="+", default=[2, 2])
    gen.add_argument("--rows", type=int, default=1)
    gen.add_argument("--cols", type=int, default=1)
    gen.add_argument("--from", dest="source", default=None, help="base table file for inflate (default Z_n)")
    gen.add_argument("--fibers", default="", help="extra elements per base element, e.g. 0:1,2:2")
    gen.add_argument("--phi", type=int, default=1, help="linearq: multiplier for the left argument")
    gen.add_argument("--psi", type=int, default=1, help="linearq: multiplier for the right argument")
    gen.add_argument("--c", type=int, default=0, help="linearq: additive constant")
    gen.add_argument("--name", choices=C.FIXTURES, default="q4a")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=cmd_generate)

    cen = sub.add_parser("census", help="compare oracle and fast deciders over a class of tables")
    cen.add_argument("--order", type=int, required=True)
    cen.add_argument("--class", dest="cls", choices=("semigroup", "quasigroup", "identity"), required=True)
    cen.add_argument("--sample", type=int, default=None, help="random sample size instead of exhaustive")
    cen.add_argument("--seed", type=int, default=0)
    cen.add_argument("--cap-subuniverses", type=int, default=None)
    cen.add_argument("--json", action="store_true")
    cen.set_defaults(func=cmd_census)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TableError, OrderCapError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"abelham: error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
