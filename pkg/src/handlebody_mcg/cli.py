"""Command line front end.

Every command prints one JSON document on stdout.  Errors print
``{"error": {...}}`` on stderr.  Exit codes: 0 success or accepted,
3 rejected, 2 uncertified input, 1 any other error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from .expr import ExprSyntaxError, parse_expr
from .generators import (
    evaluate,
    random_expr,
    relation_suite,
    theorem_generating_set,
)
from .knots import TorsionError, abelianize, alexander_matrix, knot_group, tietze_simplify
from .morphism import Automorphism
from .surface import SurfaceModel, UncertifiedError, check_extension
from .words import WordError

LOG_ENV = "HANDLEBODY_MCG_LOG_LEVEL"

EXIT_OK, EXIT_ERROR, EXIT_UNCERTIFIED, EXIT_REJECTED = 0, 1, 2, 3

log = logging.getLogger("handlebody_mcg")


class CliError(Exception):
    def __init__(self, kind: str, message: str, code: int = EXIT_ERROR, **extra):
        super().__init__(message)
        self.kind, self.code, self.extra = kind, code, extra


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message)


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _model(args) -> SurfaceModel:
    try:
        return SurfaceModel(args.genus)
    except ValueError as exc:
        raise CliError("invalid_genus", str(exc)) from None


def _automorphism(args, model):
    if getattr(args, "table", None):
        with open(args.table) as fh:
            data = json.load(fh)
        f = Automorphism.from_dict(data)
        if f.alphabet != model.alphabet:
            raise CliError("alphabet_mismatch", "table alphabet does not match the genus")
        return "table:" + args.table, f
    expr = parse_expr(args.expr or "", model.genus)
    return str(expr), evaluate(model, expr)


def cmd_check(args) -> int:
    model = _model(args)
    label, f = _automorphism(args, model)
    try:
        report = check_extension(model, f, mode=args.mode)
    except UncertifiedError as exc:
        raise CliError("uncertified", str(exc), EXIT_UNCERTIFIED) from None
    _emit({"expression": label, **report.to_dict()})
    return EXIT_OK if report.accepted else EXIT_REJECTED


def cmd_relations(args) -> int:
    rep = relation_suite(_model(args))
    _emit(rep.to_dict())
    return EXIT_OK if rep.all_passed else EXIT_REJECTED


def knot_report(model: SurfaceModel, f: Automorphism, alexander: bool = False) -> dict:
    pres = knot_group(model, f)
    simple = tietze_simplify(pres)
    ab = abelianize(simple)
    out = {
        "genus": model.genus,
        "presentation": pres.to_dict(),
        "simplified": simple.to_dict(),
        "abelianization": ab.to_dict(),
        "trivial_knot_signature": not simple.relators and ab.free_rank == model.genus + 1,
    }
    if alexander:
        try:
            out["alexander"] = alexander_matrix(simple).to_dict()
        except TorsionError as exc:
            out["alexander"] = None
            out["alexander_error"] = str(exc)
    return out


def cmd_knot(args) -> int:
    model = _model(args)
    label, f = _automorphism(args, model)
    _emit({"expression": label, **knot_report(model, f, args.alexander)})
    return EXIT_OK


def cmd_eval(args) -> int:
    model = _model(args)
    label, f = _automorphism(args, model)
    _emit({"expression": label, **f.to_dict()})
    return EXIT_OK


def _fuzz_one(job):
    genus, text = job
    model = SurfaceModel(genus)
    f = evaluate(model, parse_expr(text, genus))
    accepted = check_extension(model, f).accepted
    simple = tietze_simplify(knot_group(model, f))
    ab = abelianize(simple)
    return accepted, ab.free_rank, bool(ab.torsion), len(simple.relators)


def cmd_fuzz(args) -> int:
    model = _model(args)
    if args.count < 0 or args.max_len < 0:
        raise CliError("usage", "--count and --max-len must be nonnegative")
    rng = random.Random(args.seed)
    words = [str(random_expr(model.genus, rng.randint(0, args.max_len), rng)) for _ in range(args.count)]
    jobs = [(model.genus, w) for w in words]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_fuzz_one, jobs, chunksize=16))
    else:
        results = [_fuzz_one(j) for j in jobs]
    accepted = sum(r[0] for r in results)
    ranks = Counter(r[1] for r in results)
    _emit({
        "genus": model.genus,
        "count": args.count,
        "max_len": args.max_len,
        "seed": args.seed,
        "generators": [n.symbol for n in theorem_generating_set(model.genus)],
        "accepted": accepted,
        "acceptance_rate": accepted / args.count if args.count else 1.0,
        "h1_ranks": {str(k): v for k, v in sorted(ranks.items())},
        "with_torsion": sum(r[2] for r in results),
        "with_relators_left": sum(r[3] > 0 for r in results),
    })
    return EXIT_OK if accepted == args.count else EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="handlebody-mcg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_expr(sp, table=False):
        sp.add_argument("--genus", "-g", type=int, required=True)
        sp.add_argument("expr", nargs="?", default="", help="generator word, e.g. \"tau1 omega1^-1\"")
        if table:
            sp.add_argument("--table", help="JSON automorphism (alphabet, forward, backward) instead of EXPR")

    sp = sub.add_parser("check", help="run the extension check")
    with_expr(sp, table=True)
    sp.add_argument("--mode", choices=("arc", "closed"), default="arc")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("relations", help="run the relation suite")
    sp.add_argument("--genus", "-g", type=int, required=True)
    sp.set_defaults(func=cmd_relations)

    sp = sub.add_parser("knot", help="knot group of the glued manifold")
    with_expr(sp, table=True)
    sp.add_argument("--alexander", action="store_true")
    sp.set_defaults(func=cmd_knot)

    sp = sub.add_parser("eval", help="print the automorphism of an expression")
    with_expr(sp, table=False)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("fuzz", help="random generator words through checker and knot pipeline")
    sp.add_argument("--genus", "-g", type=int, required=True)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--max-len", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_fuzz)
    return p


def main(argv=None) -> int:
    level = os.environ.get(LOG_ENV, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr)
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except CliError as exc:
        err = {"type": exc.kind, "message": str(exc), **exc.extra}
        code = exc.code
    except ExprSyntaxError as exc:
        err = {"type": "syntax", "message": str(exc), "position": exc.position}
        code = EXIT_ERROR
    except (WordError, ValueError, OSError, json.JSONDecodeError) as exc:
        err = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_ERROR
    json.dump({"error": err}, sys.stderr)
    sys.stderr.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
