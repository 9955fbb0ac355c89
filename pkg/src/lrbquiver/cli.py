"""Command-line front end.

Exit status: 0 on success, 1 when a check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import constructors
from .algebra import (
    CheckReport,
    idempotent_basis,
    projective_checks,
    semigroup_idempotents,
    span_rank,
    verify_cspoi,
)
from .cartan import cartan_matrix, cartan_oracle_matrix, over_set_count, path_dimension_check
from .lattice import hasse_dot, interval, support_of
from .lrb import LRBError, validate_lrb
from .quiver import agreement, build_quiver, to_dot

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    source: tuple[str, object]
    command: str
    options: argparse.Namespace


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="lrbquiver",
        description="Support lattice, idempotents, quiver and Cartan matrix of a left regular band algebra.",
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--free", type=int, metavar="N", help="free left regular band on N letters")
    src.add_argument("--braid", type=int, metavar="N", help="faces of the braid arrangement in R^N")
    src.add_argument("--boolean", type=int, metavar="N", help="faces of the coordinate arrangement in R^N")
    src.add_argument("--arrangement", metavar="FILE", help="JSON file with hyperplane normals")
    src.add_argument("--table", metavar="FILE", help="JSON multiplication table")
    # accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unsafe-size", action="store_true", default=argparse.SUPPRESS, help="lift the size guards")
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS, help="write output here instead of stdout")
    p.add_argument("--unsafe-size", action="store_true", help="lift the size guards")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    sub = p.add_subparsers(dest="command", required=True)
    parser = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)
    parser("validate", help="check the band axioms")
    lat = parser("lattice", help="support lattice: Hasse diagram (DOT) or order matrix (JSON)")
    lat.add_argument("--json", action="store_true", help="emit the order matrix as JSON")
    idem = parser("idempotents", help="the primitive idempotents e_X")
    idem.add_argument("--json", action="store_true")
    idem.add_argument("--reps", choices=("smallest", "largest", "uniform"), default="smallest")
    q = parser("quiver", help="quiver of the semigroup algebra")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--dot", action="store_true", help="DOT digraph (default)")
    g.add_argument("--matrix", action="store_true", help="JSON arrow matrix")
    g.add_argument("--check", action="store_true", help="compare the three arrow computations")
    c = parser("cartan", help="Cartan matrix m(Y, X)")
    c.add_argument("--format", choices=("csv", "json"), default="csv")
    c.add_argument("--check", action="store_true", help="compare against dim e_Y kS e_X")
    parser("check", help="run every cross-check")
    return p


def load_source(kind: str, value, unsafe: bool):
    try:
        if kind == "free":
            return constructors.free_lrb(value, unsafe=unsafe)
        if kind == "braid":
            return constructors.braid_arrangement(value, unsafe=unsafe)
        if kind == "boolean":
            return constructors.boolean_arrangement(value, unsafe=unsafe)
        if kind == "arrangement":
            return constructors.arrangement_faces(constructors.load_arrangement(value), unsafe=unsafe)
        if kind == "table":
            return constructors.read_table(value)
    except (LRBError, ValueError) as exc:
        raise InputError(str(exc)) from None
    raise InputError(f"unknown source {kind}")


def _frac(q) -> str:
    return str(Fraction(q))


def cmd_validate(S, opts, out):
    report = validate_lrb(S)
    out.extend(report.lines())
    return EXIT_OK if report.ok else EXIT_FAIL


def _require_lrb(S):
    report = validate_lrb(S)
    if not report.ok:
        raise InputError("; ".join(report.lines()))


def cmd_lattice(S, opts, out):
    L, _ = support_of(S)
    if opts.json:
        out.append(json.dumps({"labels": list(L.labels), "leq": L.leq.astype(int).tolist()}))
    else:
        out.append(hasse_dot(L).rstrip("\n"))
    return EXIT_OK


def cmd_idempotents(S, opts, out):
    L, _ = support_of(S)
    sys_ = semigroup_idempotents(S, reps=opts.reps)
    report = verify_cspoi(S, sys_)
    if opts.json:
        payload = {L.labels[X]: [[S.labels[k], _frac(v)] for k, v in sorted(e.items())] for X, e in enumerate(sys_)}
        out.append(json.dumps(payload))
    else:
        for X, e in enumerate(sys_):
            out.append(f"e[{L.labels[X]}] = {e.format(S.labels)}")
        out.extend(report.lines())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_quiver(S, opts, out):
    L, _ = support_of(S)
    if opts.check:
        sys_ = semigroup_idempotents(S)
        triples = agreement(S, sys_)
        ok = True
        for (X, Y), t in sorted(triples.items()):
            agree = len(set(t)) == 1
            ok &= agree
            if t != (0, 0, 0) or not agree:
                out.append(f"{'PASS' if agree else 'FAIL'} {L.labels[X]} -> {L.labels[Y]}: "
                           f"direct={t[0]} inductive={t[1]} ext={t[2]}")
        out.append(f"{'PASS' if ok else 'FAIL'} triple agreement on {len(triples)} pairs")
        return EXIT_OK if ok else EXIT_FAIL
    Q = build_quiver(S)
    if opts.matrix:
        out.append(json.dumps({"labels": list(Q.labels), "arrows": Q.arrows.tolist()}))
    else:
        out.append(to_dot(Q).rstrip("\n"))
    return EXIT_OK


def cmd_cartan(S, opts, out):
    C = cartan_matrix(S)
    status = EXIT_OK
    if opts.check:
        O = cartan_oracle_matrix(S, semigroup_idempotents(S))
        agree = C == O
        out.append(f"{'PASS' if agree else 'FAIL'} Cartan matrix matches dim e_Y kS e_X")
        if not agree:
            status = EXIT_FAIL
    if opts.format == "json":
        out.append(json.dumps(C.to_json()))
    else:
        out.append(C.to_csv().rstrip("\n"))
    return status


def full_check(S, free: bool = False) -> CheckReport:
    """Every cross-oracle check on one band."""
    report = CheckReport()
    v = validate_lrb(S)
    report.record("validate_lrb", v.ok, "; ".join(v.lines()))
    if not v.ok:
        return report
    L, supp = support_of(S)
    sys_ = semigroup_idempotents(S)
    report.extend(verify_cspoi(S, sys_), "cspoi ")

    triples = agreement(S, sys_)
    bad = [(L.labels[X], L.labels[Y], t) for (X, Y), t in triples.items() if len(set(t)) != 1]
    report.record("triple quiver agreement", not bad, str(bad[:5]))

    C = cartan_matrix(S)
    O = cartan_oracle_matrix(S, sys_)
    report.record("Cartan oracle agreement", C == O, f"formula {C.m.tolist()} vs oracle {O.m.tolist()}")

    bad = []
    for W in range(L.size):
        for X in range(L.size):
            if not L.leq[W, X]:
                continue
            lhs = sum(C[Y, X] for Y in interval(L, W, X))
            for w in supp.members[W]:
                if lhs != over_set_count(S, w, X):
                    bad.append((S.labels[w], L.labels[X]))
    report.record("Cartan sums over intervals = #(wS_X)", not bad, str(bad[:5]))

    for X in range(L.size):
        report.extend(projective_checks(S, sys_, X))
    basis_rank = span_rank(idempotent_basis(S, sys_))
    report.record("idempotent basis rank = #S", basis_rank == S.size, f"{basis_rank} != {S.size}")

    pd = path_dimension_check(S, free=free)
    report.record("path dimension", pd.ok, pd.line())
    return report


def cmd_check(S, opts, out, free=False):
    report = full_check(S, free=free)
    out.extend(report.lines())
    return EXIT_OK if report.ok else EXIT_FAIL


COMMANDS = {
    "validate": cmd_validate,
    "lattice": cmd_lattice,
    "idempotents": cmd_idempotents,
    "quiver": cmd_quiver,
    "cartan": cmd_cartan,
    "check": cmd_check,
}


def parse_config(argv=None) -> RunConfig:
    opts = build_parser().parse_args(argv)
    for kind in ("free", "braid", "boolean", "arrangement", "table"):
        value = getattr(opts, kind)
        if value is not None:
            return RunConfig((kind, value), opts.command, opts)
    raise InputError("no source given")  # argparse enforces this already


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command; returns the exit status and the text to emit."""
    kind, value = config.source
    out: list[str] = []
    try:
        S = load_source(kind, value, config.options.unsafe_size)
        if config.command != "validate":
            _require_lrb(S)
        if config.command == "check":
            status = cmd_check(S, config.options, out, free=kind == "free")
        else:
            status = COMMANDS[config.command](S, config.options, out)
    except InputError as exc:
        return EXIT_INPUT, f"error: {exc}\n"
    except LRBError as exc:
        return EXIT_INPUT, f"error: {exc}\n"
    return status, "\n".join(out) + "\n"


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    status, text = run(config)
    if status == EXIT_INPUT:
        sys.stderr.write(text)
        return status
    if config.options.out:
        try:
            with open(config.options.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            sys.stderr.write(f"error: cannot write {config.options.out}: {exc}\n")
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
