"""Command-line front end.

Seeds travel between commands as seed files (see :mod:`clusterlift.seedio`)
on stdin/stdout, so commands compose with pipes::

    clusterlift seed build --type A --rank 3 --word 1,2,1,3,2,1 \\
        | clusterlift lift --case tensor | clusterlift quiver render --format dot

Text conventions: a Cartan type is ``A3`` or ``--type A --rank 3`` (products
as ``B2xA1``); words are comma-separated letters in subscript order, or in the
reversed order (i_l, ..., i_1) with ``--paper-order``; matrices are rows separated by
``;`` with comma-separated entries.

Exit codes: 0 success, 1 invalid input, 2 a verification suite failed.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import branching as br
from . import quiver
from .lifting import lift_seed
from .rootsys import WeylWord, cartan
from .seedcore import highly_freeze, new_seed, semi_freeze
from .seedio import dump_seed, load_nu, load_seed
from .suites import SUITES, run_suite

ORACLE_CHECKS = {"fz": "fz", "charts": "charts", "variables": "variables",
                 "expansion": "expansion", "witness": "witness"}


class UsageError(ValueError):
    pass


def parse_letters(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"cannot read {text!r} as a comma-separated list of integers") from None


def parse_matrix(text: str) -> list[list[int]]:
    rows = [r for r in text.replace("\n", ";").split(";") if r.strip()]
    return [list(parse_letters(r)) for r in rows]


def parse_labels(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def _cartan(args):
    if args.type is None:
        raise UsageError("--type is required")
    return cartan(args.type, args.rank) if args.rank is not None else cartan(args.type)


def _word(args, cd) -> WeylWord:
    letters = parse_letters(args.word)
    return WeylWord.from_paper_order(letters, cd) if args.paper_order else WeylWord(letters, cd)


def _read(args) -> str:
    if getattr(args, "input", None) and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()
    return sys.stdin.read()


def _write(args, text: str) -> None:
    if getattr(args, "output", None) and args.output != "-":
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands

def cmd_seed_build(args) -> int:
    if args.word is not None or args.levi is not None:
        cd = _cartan(args)
        w = br.levi_word(cd, parse_letters(args.levi)) if args.levi is not None else _word(args, cd)
        seed = br.uw_seed(cd, w).seed
    elif args.matrix is not None:
        B = parse_matrix(args.matrix)
        if args.kinds is None:
            raise UsageError("--matrix needs --kinds")
        kinds = parse_labels(args.kinds)
        vertices = parse_labels(args.vertices) if args.vertices else [str(i) for i in range(1, len(kinds) + 1)]
        sigma = parse_matrix(args.sigma) if args.sigma else None
        seed = new_seed(vertices, kinds, B, sigma)
    else:
        raise UsageError("seed build needs --word, --levi or --matrix")
    _write(args, dump_seed(seed))
    return 0


def cmd_seed_mutate(args) -> int:
    seed = load_seed(_read(args))
    _write(args, dump_seed(seed.mutate_path(parse_labels(args.at))))
    return 0


def cmd_seed_freeze(args) -> int:
    seed = load_seed(_read(args))
    if args.semi:
        seed = semi_freeze(seed, parse_labels(args.semi))
    if args.high:
        seed = highly_freeze(seed, parse_labels(args.high))
    _write(args, dump_seed(seed))
    return 0


def cmd_lift(args) -> int:
    seed = load_seed(_read(args))
    if args.nu:
        with open(args.nu, encoding="utf-8") as fh:
            cfg = load_nu(fh.read())
        _write(args, dump_seed(lift_seed(seed, cfg)))
        return 0
    if args.case is None:
        raise UsageError("lift needs --nu or --case")
    w = seed.word
    if w is None:
        raise UsageError(f"--case {args.case} needs a seed built from a word")
    cd = w.cartan
    if args.case == "levi":
        out = lift_seed(seed, br.levi_nu(cd, w))
    elif args.case == "tensor":
        out = lift_seed(seed, br.tensor_nu(cd, w))
    elif args.case == "base-affine":
        out = br.base_affine_seed(cd, w)[1]
    else:
        wp = WeylWord(parse_letters(args.word_prime), cd) if args.word_prime else w
        out = br.double_cell_lifted(cd, wp, w)
    _write(args, dump_seed(out))
    return 0


def cmd_quiver_render(args) -> int:
    seed = load_seed(_read(args))
    _write(args, quiver.to_dot(seed) if args.format == "dot" else quiver.to_text(seed))
    return 0


def _run_suites(names: Sequence[str], args) -> int:
    failed = []
    out = []
    for name in names:
        rep = run_suite(name, seed=args.seed, trials=args.trials)
        out.extend(rep.lines())
        failed.extend(f"{name} {c}" + (f" {d}" if d else "") for c, ok, d in rep.rows if not ok)
    _write(args, "\n".join(out) + "\n")
    if failed:
        sys.stderr.write(f"{len(failed)} failing case(s):\n" + "\n".join(failed) + "\n")
        return 2
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    return _run_suites(names, args)


def cmd_oracle(args) -> int:
    return _run_suites([ORACLE_CHECKS[args.check]], args)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clusterlift", description="Cluster seeds, monomial liftings and branching seeds.")
    sub = p.add_subparsers(dest="command", required=True)

    def io(q, inp=True):
        if inp:
            q.add_argument("-i", "--input", help="input seed file (default stdin)")
        q.add_argument("-o", "--output", help="output file (default stdout)")

    seed = sub.add_parser("seed", help="build, mutate and freeze seeds").add_subparsers(dest="action", required=True)
    b = seed.add_parser("build", help="seed from a word or from an exchange matrix")
    b.add_argument("--type", help="Cartan type, e.g. A3, G2, B2xA1 or a family letter with --rank")
    b.add_argument("--rank", type=int)
    b.add_argument("--word", help="reduced word, comma-separated")
    b.add_argument("--paper-order", action="store_true", help="the word is written (i_l, ..., i_1)")
    b.add_argument("--levi", help="build the seed of w_0 w_{0,I} for the listed simple roots I")
    b.add_argument("--matrix", help="exchange matrix rows, e.g. '0,3;-1,0;0,-2;0,1'")
    b.add_argument("--kinds", help="uf/sf/hf per vertex, comma-separated")
    b.add_argument("--vertices", help="vertex labels, comma-separated (default 1..n)")
    b.add_argument("--sigma", help="degree configuration rows, same syntax as --matrix")
    io(b, inp=False)
    b.set_defaults(func=cmd_seed_build)

    m = seed.add_parser("mutate", help="mutate along a sequence of vertices")
    m.add_argument("--at", required=True, help="vertices, comma-separated, applied left to right")
    io(m)
    m.set_defaults(func=cmd_seed_mutate)

    f = seed.add_parser("freeze", help="semi-freeze highly-frozen vertices or highly-freeze semi-frozen ones")
    f.add_argument("--semi", help="highly-frozen vertices to semi-freeze")
    f.add_argument("--high", help="semi-frozen vertices to highly-freeze")
    io(f)
    f.set_defaults(func=cmd_seed_freeze)

    lf = sub.add_parser("lift", help="monomial lifting by a matrix file or a branching case")
    lf.add_argument("--nu", help="lifting matrix file")
    lf.add_argument("--case", choices=("levi", "tensor", "base-affine", "double-cell"))
    lf.add_argument("--word-prime", help="second word for --case double-cell (default: the seed's word)")
    io(lf)
    lf.set_defaults(func=cmd_lift)

    q = sub.add_parser("quiver", help="render valued quivers").add_subparsers(dest="action", required=True)
    r = q.add_parser("render")
    r.add_argument("--format", choices=("dot", "text"), default="text")
    io(r)
    r.set_defaults(func=cmd_quiver_render)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    v.add_argument("--trials", type=int, help="number of random trials (suite default otherwise)")
    v.add_argument("--seed", type=int, default=0, help="PRNG seed")
    io(v, inp=False)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="minor-oracle checks")
    o.add_argument("--check", required=True, choices=list(ORACLE_CHECKS))
    o.add_argument("--trials", type=int)
    o.add_argument("--seed", type=int, default=0)
    io(o, inp=False)
    o.set_defaults(func=cmd_oracle)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        sys.stderr.write(f"error: {msg}\n")
        return 1


def main() -> None:
    sys.exit(run())
