"""``heiscat`` command line.

Exit codes: 0 when every assertion passes, 1 on an assertion failure, 2 on a
usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import checks, fock, heisenberg as hz, lattice as lt
from .diagram import CheckResult, VerificationReport, cross_check, cross_check_transposed, verify_fg, verify_sdcross_lemma
from .expr import IndexOutOfRange, ParseError, parse_element
from .lattice import Lattice

DEFAULT_MAX_DEGREE = 3


class UsageError(Exception):
    pass


@dataclass
class Session:
    lattice: Lattice
    max_degree: int = DEFAULT_MAX_DEGREE
    output_format: str = "pretty"


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _load_matrix(path: str) -> list[list[int]]:
    data = _load_json(path)
    if isinstance(data, dict):
        data = data.get("gram", data.get("matrix"))
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise UsageError(f"{path} does not hold a matrix")
    if any(len(r) != len(data) for r in data):
        raise UsageError(f"{path}: matrix must be square")
    return [[int(v) for v in r] for r in data]


def _session(args) -> Session:
    if args.lattice and args.gram:
        raise UsageError("give either --lattice or --gram, not both")
    try:
        if args.lattice:
            lat = Lattice.from_json(_load_json(args.lattice))
        elif args.gram:
            lat = Lattice(json.loads(args.gram))
        else:
            lat = Lattice([[1]])
    except (lt.LatticeError, json.JSONDecodeError, KeyError, TypeError) as exc:
        raise UsageError(f"bad lattice: {exc}") from exc
    env = os.environ.get("HEISCAT_MAX_DEGREE")
    max_degree = args.max_degree
    if max_degree is None:
        max_degree = int(env) if env else DEFAULT_MAX_DEGREE
    return Session(lat, max_degree=max_degree, output_format=args.format)


# --------------------------------------------------------------------------
# Output
# --------------------------------------------------------------------------

def _emit(session: Session, payload, pretty: str, rows: Sequence[Sequence] | None = None) -> None:
    fmt = session.output_format
    if fmt == "json":
        print(json.dumps(payload))
    elif fmt == "tsv":
        for row in rows if rows is not None else [[pretty]]:
            print("\t".join(str(c) for c in row))
    else:
        print(pretty)


def _matrix_text(m) -> str:
    return json.dumps([list(r) for r in m])


def _emit_report(session: Session, rep: VerificationReport) -> int:
    data = rep.to_json()
    fails = rep.failures
    pretty = f"{rep.name}: {'PASS' if rep.passed else 'FAIL'} ({len(rep.checks) - len(fails)}/{len(rep.checks)} checks)"
    for f in fails[:5]:
        pretty += f"\n  {f.identity} {json.dumps(f.params)} {json.dumps(f.witness)}"
    rows = [[c.identity, json.dumps(c.params), c.status] for c in rep.checks]
    _emit(session, data, pretty, rows)
    return 0 if rep.passed else 1


# --------------------------------------------------------------------------
# Commands
# --------------------------------------------------------------------------

def cmd_normalize(args, session: Session) -> int:
    x = hz.normal_order(parse_element(args.expr, session.lattice), session.lattice)
    _emit(session, x.to_json(), str(x), [[r["coeff"], json.dumps(r["p"]), json.dumps(r["q"]), r["weight"]]
                                        for r in x.to_json()])
    return 0


def cmd_commutator(args, session: Session) -> int:
    lat = session.lattice
    x = hz.commutator(parse_element(args.left, lat), parse_element(args.right, lat), lat)
    _emit(session, x.to_json(), str(x))
    return 0


def _fock_argument(text: str, lat: Lattice) -> fock.FockVector:
    text = text.strip()
    if text in ("vac", "vacuum", "1"):
        return fock.vacuum()
    if text.startswith("["):
        return fock.FockVector.from_json(json.loads(text))
    if os.path.exists(text):
        return fock.FockVector.from_json(_load_json(text))
    # a creation expression applied to the vacuum
    return fock.act(parse_element(text, lat), fock.vacuum(), lat)


def cmd_act(args, session: Session) -> int:
    lat = session.lattice
    x = parse_element(args.expr, lat)
    v = _fock_argument(args.vector, lat)
    out = fock.act(x, v, lat)
    _emit(session, out.to_json(), str(out))
    return 0


def cmd_snf(args, session: Session) -> int:
    s, d, t = lt.smith_normal_form(_load_matrix(args.matrix))
    payload = {"S": s, "D": d, "T": t}
    _emit(session, payload, _matrix_text(d), d)
    return 0


def cmd_iso(args, session: Session) -> int:
    x = _load_matrix(args.matrix)
    s, d, t = lt.smith_normal_form(x)
    gmap = lt.change_of_form(Lattice(x), s, t)
    payload = {"S": s, "D": d, "T": t, "map": gmap.to_json()}
    lines = [f"diagonal form: {_matrix_text(d)}"]
    for a, v in enumerate(gmap.q_images):
        lines.append(f"q[{a + 1}] -> qv[({','.join(map(str, v))})]")
    for b, v in enumerate(gmap.p_images):
        lines.append(f"p[{b + 1}] -> pv[({','.join(map(str, v))})]")
    rc = 0
    if args.check:
        rep = checks.iso_agreement(x, words=args.check)
        payload["check"] = rep.to_json()
        lines.append(f"normal forms agree on {args.check} random words: {rep.passed}")
        rc = 0 if rep.passed else 1
    _emit(session, payload, "\n".join(lines), [[line] for line in lines])
    return rc


def cmd_euler(args, session: Session) -> int:
    try:
        table = lt.ExtTable.from_json(_load_json(args.table))
    except (lt.LatticeError, KeyError, ValueError, AttributeError) as exc:
        raise UsageError(f"bad Ext table: {exc}") from exc
    x = lt.euler_matrix(table)
    _emit(session, x, _matrix_text(x), x)
    return 0


def cmd_dim(args, session: Session) -> int:
    d = fock.graded_dim(args.n, args.r)
    _emit(session, {"n": args.n, "r": args.r, "dim": d}, str(d), [[args.n, args.r, d]])
    return 0


def cmd_faithfulness(args, session: Session) -> int:
    rep = fock.faithfulness_report(session.max_degree, session.lattice)
    pretty = f"words={rep.word_count} rank={rep.rank} full_rank={rep.full_rank}"
    _emit(session, rep.to_json(), pretty, [[rep.word_count, rep.rank, rep.full_rank]])
    return 0 if rep.full_rank else 1


def _run_suite(name: str, args) -> VerificationReport:
    if name == "sdcross":
        return verify_sdcross_lemma(args.max if args.max is not None else 6, strict=False)
    if name == "fg":
        if args.m is not None and args.n is not None:
            return verify_fg(args.m, args.n)
        return checks.fg()
    if name == "decat":
        if args.m is not None and args.n is not None and args.chi is not None:
            return _single_decat(args.m, args.n, args.chi)
        return checks.decat()
    if name == "confluence":
        return checks.confluence(count=args.count or 500, seed=args.seed)
    if name == "faithfulness":
        return checks.faithfulness(args.max if args.max is not None else 3)
    return checks.SUITES[name]()


def _single_decat(m: int, n: int, chi: int) -> VerificationReport:
    rep = VerificationReport("decat")
    rep.checks.append(CheckResult("qp_decomposition", {"m": m, "n": n, "chi": chi},
                                  "pass" if cross_check(m, n, chi) else "fail"))
    rep.checks.append(CheckResult("transposed_decomposition", {"m": m, "n": n, "chi": chi},
                                  "pass" if cross_check_transposed(m, n, chi) else "fail"))
    return rep


def cmd_verify(args, session: Session) -> int:
    names = list(checks.SUITES) if args.suite == "all" else [args.suite]
    rc = 0
    for name in names:
        rc = max(rc, _emit_report(session, _run_suite(name, args)))
    return rc


# --------------------------------------------------------------------------
# Argument parsing
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lattice", help="JSON file {\"rank\": r, \"gram\": [[...]]}")
    common.add_argument("--gram", help="inline JSON Gram matrix, e.g. '[[1,2],[0,1]]'")
    common.add_argument("--format", choices=("json", "tsv", "pretty"), default="pretty")
    common.add_argument("--max-degree", type=int, default=None,
                        help="truncation degree (default $HEISCAT_MAX_DEGREE or 3)")

    parser = argparse.ArgumentParser(prog="heiscat", description="Heisenberg algebra toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="normal-order an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("commutator", parents=[common], help="normal-ordered [e1, e2]")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_commutator)

    p = sub.add_parser("act", parents=[common], help="act on a Fock vector: act EXPR on VEC")
    p.add_argument("expr")
    p.add_argument("on", choices=("on",))
    p.add_argument("vector", help="'vac', a creation expression, FockVector JSON, or a JSON file")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of a matrix file")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("iso", parents=[common], help="Smith form and the induced generator map")
    p.add_argument("matrix")
    p.add_argument("--check", type=int, default=0, metavar="N",
                   help="also compare normal forms of N random words across the map")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("euler", parents=[common], help="Euler matrix of an Ext table file")
    p.add_argument("table")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("dim", parents=[common], help="graded Fock dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("faithfulness", parents=[common], help="rank of the Fock action of normal words")
    p.set_defaults(func=cmd_faithfulness)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=tuple(checks.SUITES) + ("all",))
    p.add_argument("--max", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--chi", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        session = _session(args)
        return args.func(args, session)
    except (ParseError, IndexOutOfRange, UsageError, lt.LatticeError) as exc:
        print(f"heiscat {args.command}: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"heiscat {args.command}: assertion failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
