"""
Command line interface.

Every subcommand prints one record (or report) to stdout, as text or, with
``--json``, as JSON with sorted keys. Logging goes to stderr. The exit code is
0 on success, 1 when a computation fails or a table or scan report is not ok,
and 2 on usage errors.
"""
import argparse
import json
import logging
import os
import sys

from . import __version__, constructions, harness, model_counter
from .classifier import Classifier
from .formula_catalog import DESCRIPTIONS, Formula, FormulaId, crosscheck, explain
from .genus_engine import quotient_genus
from .geometry import MODELS, get_model, prime_power
from .group_engine import GroupElem, closure, pgu_order, read_generator_file
from .util import setup_logging

logger = logging.getLogger("uqg")

COUNT_MODELS = ("tipoE", "case1", "case2", "case3", "case4", "case5", "case6", "case7")


class UsageError(Exception):
    pass


def _parse_param(text):
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise UsageError("Expected key=value, got '{}'".format(text))
    try:
        return key, json.loads(value)
    except ValueError:
        return key, value


def _load_group(args):
    """The generators of ``--gens`` or ``--recipe``, checked against ``--q``."""
    if args.gens:
        model, gens, provenance = read_generator_file(args.gens)
    elif args.recipe:
        if args.q is None:
            raise UsageError("--recipe needs --q")
        params = dict(_parse_param(p) for p in args.param)
        model, gens = constructions.build(args.q, args.recipe, **params)
        provenance = {"recipe": args.recipe, "params": params}
    else:
        raise UsageError("One of --gens or --recipe is required")
    if args.q is not None and args.q != model.q:
        raise UsageError("--q {} does not match the generators over q = {}".format(args.q, model.q))
    return model, gens, provenance


def _field_info(args):
    model = get_model(args.model, args.q)
    p, n = prime_power(args.q)
    return {
        "q": args.q,
        "p": p,
        "n": n,
        "field": model.field.to_json(),
        "model": model.tag,
        "genus": model.genus,
        "points": model.point_count,
        "pgu_order": pgu_order(args.q),
    }


def _classify(args):
    if args.matrix:
        if args.q is None:
            raise UsageError("--matrix needs --q")
        rows = json.loads(args.matrix.replace("−", "-"))
        gens = [GroupElem.from_rows(get_model(args.model, args.q), rows)]
    else:
        _, gens, _ = _load_group(args)
    classifier = Classifier.default()
    out = []
    for g in gens:
        cls = classifier.classify(g)
        out.append({"type": cls.etype, "order": cls.order, "i": cls.i})
    return out[0] if len(out) == 1 else out


def _genus(args):
    _, gens, provenance = _load_group(args)
    report = quotient_genus(closure(gens))
    out = report.to_json()
    if provenance is not None:
        out["provenance"] = provenance
    return out


def _catalog(args):
    if args.formula is None:
        return {f.value: DESCRIPTIONS[f] for f in Formula}
    value, trace = explain(FormulaId.parse(args.formula))
    return {"formula": args.formula, "value": str(value), "trace": trace}


def _crosscheck(args):
    if args.registry:
        checks = harness.run_registry()
        return {
            "entries": [c.to_json() for c in checks],
            "ok": all(c.ok for c in checks),
        }
    if args.formula is None:
        raise UsageError("--formula or --registry is required")
    _, gens, _ = _load_group(args)
    return crosscheck(FormulaId.parse(args.formula), gens).to_json()


def _table(args):
    root = harness.fixtures_root(args.fixtures_dir)
    if args.materialize:
        harness.materialize_fixtures(args.q, root)
    return harness.run_table(args.q, root, threads=args.threads)


def _scan(args):
    return harness.full_scan(args.q, threads=args.threads)


def _count(args):
    if args.model == "tipoE":
        if args.all_lambdas:
            report = model_counter.lambda_independence(args.q, args.d)
            return {
                "counts": {str(lam): n for lam, n in sorted(report.counts.items())},
                "independent": report.independent,
            }
        lam = json.loads(args.lam) if args.lam is not None else None
        return model_counter.count_tipoE(args.q, args.d, lam).to_json()
    case = int(args.model[len("case") :])
    return model_counter.count_named_model(case, args.q, args.d).to_json()


def _parse_census(text):
    try:
        census = {int(k): int(v) for k, v in json.loads(text).items()}
    except (ValueError, AttributeError):
        raise UsageError('Expected a census like {{"1": 1, "2": 3}}, got "{}"'.format(text))
    return dict(sorted(census.items()))


def _search(args):
    census = _parse_census(args.census) if args.census else None
    order = args.order
    if census is not None:
        if order is None:
            order = sum(census.values())
        elif order != sum(census.values()):
            raise UsageError(
                "--census counts {} elements, not --order {}".format(sum(census.values()), order)
            )
    if order is None:
        raise UsageError("One of --order or --census is required")
    group = constructions.seeded_search(
        args.q, order, seed=args.seed, budget=args.budget, census=census, path=args.out
    )
    out = group.genus_report().to_json()
    out["generators"] = [g.to_json() for g in group.generators]
    out["seed"] = args.seed
    return out


def _add_threads(parser):
    parser.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads (default: the number of CPUs)",
    )


def _add_group_source(parser):
    parser.add_argument("--gens", help="generator file (JSON)")
    parser.add_argument("--recipe", choices=sorted(constructions.RECIPES), help="named recipe")
    parser.add_argument(
        "--param", action="append", default=[], metavar="KEY=VALUE", help="recipe parameter"
    )


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="log more (repeat for debug)"
    )

    parser = argparse.ArgumentParser(
        prog="uqg", description="Genera of quotients of the Hermitian curve."
    )
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("field-info", parents=[common], help="the field and curve for q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--model", choices=MODELS, default="fermat")
    p.set_defaults(func=_field_info)

    p = sub.add_parser("classify", parents=[common], help="classify group elements")
    p.add_argument("--q", type=int)
    p.add_argument("--model", choices=MODELS, default="fermat")
    p.add_argument("--matrix", help="3x3 matrix as a JSON list of rows")
    _add_group_source(p)
    p.set_defaults(func=_classify)

    p = sub.add_parser("genus", parents=[common], help="genus of H_q / G")
    p.add_argument("--q", type=int)
    _add_group_source(p)
    p.set_defaults(func=_genus)

    p = sub.add_parser("catalog", parents=[common], help="list or evaluate closed forms")
    p.add_argument("--formula", help="e.g. borel:q=9,pk=3,d=1")
    p.set_defaults(func=_catalog)

    p = sub.add_parser("crosscheck", parents=[common], help="compare a formula with the engine")
    p.add_argument("--q", type=int)
    p.add_argument("--formula")
    p.add_argument("--registry", action="store_true", help="check the curated registries")
    _add_group_source(p)
    p.set_defaults(func=_crosscheck)

    p = sub.add_parser("table", parents=[common], help="reproduce a published table")
    p.add_argument("--q", type=int, required=True)
    _add_threads(p)
    p.add_argument("--fixtures-dir", help="fixture root, default $UQG_FIXTURES or ./fixtures")
    p.add_argument("--materialize", action="store_true", help="write fixtures first")
    p.set_defaults(func=_table)

    p = sub.add_parser("scan", parents=[common], help="classify all of PGU(3, q), q <= 5")
    p.add_argument("--q", type=int, required=True)
    _add_threads(p)
    p.set_defaults(func=_scan)

    p = sub.add_parser("count", parents=[common], help="count points of a quotient model")
    p.add_argument("--model", choices=COUNT_MODELS, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--lambda", dest="lam", help="lambda as a JSON coefficient list")
    p.add_argument("--all-lambdas", action="store_true", help="count for every lambda")
    p.set_defaults(func=_count)

    p = sub.add_parser("search", parents=[common], help="random search for a subgroup")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--order", type=int, help="group order")
    p.add_argument("--census", help='element orders as JSON, e.g. {"1": 1, "2": 1, "4": 6}')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--out", help="write the generators found to this file")
    p.set_defaults(func=_search)

    return parser


def _render(result):
    if hasattr(result, "render"):
        return result.render()
    if isinstance(result, list):
        return "\n".join(_render(r) for r in result)
    if isinstance(result, dict):
        lines = []
        for key, value in sorted(result.items()):
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            lines.append("{}: {}".format(key, value))
        return "\n".join(lines)
    return str(result)


def _emit(result, as_json):
    if as_json:
        if hasattr(result, "to_json"):
            result = result.to_json()
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        print(_render(result))


def dispatch(argv=None):
    """
    Run one subcommand.

    :returns: the exit code.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    setup_logging(levels[min(args.verbose, 2)])

    try:
        result = args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        logger.error(str(e))
        return 2
    except (ValueError, RuntimeError, ArithmeticError, OSError) as e:
        logger.error(str(e))
        return 1

    _emit(result, args.json)
    if not getattr(result, "ok", True):
        logger.error("{} finished with failures".format(args.command))
        return 1
    return 0


def main():
    sys.exit(dispatch())
