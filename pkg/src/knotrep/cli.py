"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 some result is budget-
incomplete, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

from .algebra.groebner import Budget, DegreeBudgetExceeded
from .algebra.ideal import Ideal, eliminate, format_ideal, ideal_equal, krull_dimension
from .algebra.lemmas import PolynomialMap, check_dimension_lemma, image_closure_demo
from .algebra.poly import Polynomial
from .diagram import DiagramError, SourceFormat, read_knot_text, to_pd_text
from .groups import group_by_name, group_from_text
from .homs import DEFAULT_SEARCH_BUDGET, BudgetExceeded, count_homs, fox_colorings
from .obstruction import SCHEMA_VERSION, ModelSpec, compare_knots
from .presentation import abelianization, format_presentation, tietze_simplify, wirtinger
from .repvariety import Gauge, Target, UnsupportedTarget, build_rep_ideal, variety_dimension

EXIT_OK, EXIT_USAGE, EXIT_INCOMPLETE, EXIT_BUG = 0, 1, 2, 3

_EXTENSIONS = {".braid": SourceFormat.BRAID, ".dt": SourceFormat.DT, ".pd": SourceFormat.PD}


class UsageError(Exception):
    pass


class InvariantViolation(AssertionError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fixture_text(name):
    base = resources.files("knotrep") / "data" / "knots"
    for ext in ("", ".pd", ".braid", ".dt"):
        cand = base / (name + ext)
        if cand.is_file():
            return cand.read_text(encoding="utf-8"), Path(str(cand))
    return None, None


def load_knot(path, fmt=None):
    p = Path(path)
    if p.is_file():
        text = p.read_text(encoding="utf-8")
    else:
        text, p = _fixture_text(path)
        if text is None:
            raise UsageError(f"no such knot file or fixture: {path}")
    if fmt is None:
        fmt = _EXTENSIONS.get(p.suffix)
    if fmt is None:
        if "strands" in text:
            fmt = SourceFormat.BRAID
        elif "X" in text:
            fmt = SourceFormat.PD
        else:
            fmt = SourceFormat.DT
    return read_knot_text(text, fmt)


def _budget(args):
    return Budget(max_degree=args.budget_deg, time_limit=args.time_limit)


def _emit(args, payload, text):
    if args.json:
        payload = dict(payload, schema=SCHEMA_VERSION)
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(text)


def _check_knot_group(p):
    if p.generator_count > 1 and p.deficiency != 1:
        raise InvariantViolation("Wirtinger presentation lost deficiency 1")
    if abelianization(p) != (1, []):
        raise InvariantViolation("knot group abelianization is not Z")


def cmd_parse(args):
    d = load_knot(args.knot, args.format)
    _emit(args, {"crossings": [[*x.edges, x.sign] for x in d.crossings],
                 "arc_count": d.arc_count, "source_format": d.source_format.value,
                 "digest": d.digest()},
          to_pd_text(d).rstrip() or "(unknot: no crossings)")
    return EXIT_OK


def cmd_wirtinger(args):
    d = load_knot(args.knot, args.format)
    p = wirtinger(d)
    _check_knot_group(p)
    moves = 0
    if args.simplify:
        p, trace = tietze_simplify(p)
        moves = len(trace)
    rank, torsion = abelianization(p)
    _emit(args, {"presentation": format_presentation(p), "generators": p.generator_count,
                 "relators": len(p.relators), "abelianization": [rank, torsion],
                 "tietze_moves": moves},
          format_presentation(p).rstrip())
    return EXIT_OK


def _load_group(args):
    if args.group_file:
        return group_from_text(Path(args.group_file).read_text(encoding="utf-8"))
    return group_by_name(args.group)


def cmd_homs(args):
    d = load_knot(args.knot, args.format)
    p, _ = tietze_simplify(wirtinger(d))
    G = _load_group(args)
    try:
        n = count_homs(p, G, args.search_budget, up_to_conjugacy=args.conjugacy)
    except BudgetExceeded as exc:
        _emit(args, {"group": G.name, "count": None, "incomplete": str(exc)},
              f"incomplete: {exc}")
        return EXIT_INCOMPLETE
    _emit(args, {"group": G.name, "order": G.order, "count": n,
                 "up_to_conjugacy": args.conjugacy}, str(n))
    return EXIT_OK


def cmd_colorings(args):
    d = load_knot(args.knot, args.format)
    n = fox_colorings(d, args.n)
    _emit(args, {"n": args.n, "colorings": n}, str(n))
    return EXIT_OK


def _model(args, knot):
    d = load_knot(knot, args.format)
    p = wirtinger(d)
    if not args.no_simplify:
        p, _ = tietze_simplify(p)
    return build_rep_ideal(p, Target.parse(args.model), Gauge(args.gauge))


def cmd_ideal(args):
    m = _model(args, args.knot)
    header = m.header()
    text = format_ideal(m.ideal)
    _emit(args, {"header": header, "ideal": text},
          json.dumps(header, sort_keys=True) + "\n" + text.rstrip())
    return EXIT_OK


def cmd_dim(args):
    m = _model(args, args.knot)
    inv = variety_dimension(m, _budget(args).started())
    _emit(args, inv.as_dict(),
          f"{inv.target} gauge={inv.gauge}: {inv.dimension_list}"
          + ("" if inv.complete else " (incomplete)")
          + ("" if inv.certified else " [uncertified]"))
    return EXIT_OK if inv.complete else EXIT_INCOMPLETE


def cmd_compare(args):
    a = load_knot(args.a, args.format)
    b = load_knot(args.b, args.format)
    models = [ModelSpec.parse(m.strip(), args.gauge) for m in args.model.split(",")]
    report = compare_knots(a, b, models, _budget(args), simplify=not args.no_simplify)
    if args.json:
        print(report.to_json())
    else:
        for e in report.entries:
            m = e.model
            print(f"{m['target']} gauge={m['gauge']}: A={e.dims_a} B={e.dims_b} -> {e.verdict.value}")
        print(f"combined: {report.combined.value}" + (" (heuristic)" if report.heuristic else ""))
    return EXIT_INCOMPLETE if report.incomplete else EXIT_OK


def lemma_demo(budget=None):
    """Worked examples for elimination, image closures and the dimension lemma."""
    budget = budget or Budget()
    names = ["x", "y"]

    def ideal(*polys):
        I = Ideal([], 2, names=names)
        return I.with_gens([I.poly(s) for s in polys])

    x, y = Polynomial.gens(2)
    hyperbola = ideal("x*y - 1")
    out = {
        "hyperbola": {
            "eliminate_y": format_ideal(eliminate(hyperbola, [1], budget)),
            "closure_projection": format_ideal(
                image_closure_demo(PolynomialMap([x]), hyperbola, budget)),
            "closure_difference": format_ideal(
                image_closure_demo(PolynomialMap([x - y]), hyperbola, budget)),
            "hyperbola_dimension": krull_dimension(hyperbola, budget),
        },
        "dimension_lemma": [
            check_dimension_lemma(ideal("x*y - 1"), ideal("x*y - 1", "x - 1"),
                                  budget=budget).as_dict(),
            check_dimension_lemma(ideal("x*y - 1"), ideal("x*y - 1"), budget=budget).as_dict(),
            check_dimension_lemma(ideal("x*y"), ideal("x"), X_irreducible=True,
                                  budget=budget).as_dict(),
        ],
        "ideal_equal": {
            "(x) vs (x^2)": ideal_equal(ideal("x"), ideal("x^2"), budget).value,
            "(xy-1) vs (xy-1, x-1)": ideal_equal(hyperbola, ideal("x*y - 1", "x - 1"),
                                                 budget).value,
            "(x) vs (y)": ideal_equal(ideal("x"), ideal("y"), budget).value,
        },
    }
    return out


def cmd_lemma_demo(args):
    payload = lemma_demo(_budget(args))
    if args.json:
        print(json.dumps(dict(payload, schema=SCHEMA_VERSION), sort_keys=True, indent=2,
                         ensure_ascii=False))
        return EXIT_OK
    r = payload["hyperbola"]
    print("Zariski closure of the projection of {xy=1}:", r["closure_projection"].splitlines()[1:] or ["0"])
    print("Zariski closure of (x,y) -> x-y on {xy=1}:", r["closure_difference"].splitlines()[1:] or ["0"])
    for rep in payload["dimension_lemma"]:
        print(f"dims {rep['dim_x']} vs {rep['dim_y']}: {rep['conclusion']}"
              + (f" [{rep['diagnostic']}]" if rep["diagnostic"] else ""))
    for k, v in payload["ideal_equal"].items():
        print(f"{k}: {v}")
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="knotrep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, knot=True):
        if knot:
            sp.add_argument("--knot", required=True)
        sp.add_argument("--format", type=SourceFormat, choices=list(SourceFormat))
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--budget-deg", type=int, default=40)
        sp.add_argument("--time-limit", type=float, default=None)

    def model_opts(sp):
        sp.add_argument("--model", default="su2")
        sp.add_argument("--gauge", choices=["none", "fix1"], default="none")
        sp.add_argument("--no-simplify", action="store_true")

    sp = sub.add_parser("parse")
    common(sp)
    sp.set_defaults(func=cmd_parse)
    sp = sub.add_parser("wirtinger")
    common(sp)
    sp.add_argument("--simplify", action="store_true")
    sp.set_defaults(func=cmd_wirtinger)
    sp = sub.add_parser("homs")
    common(sp)
    sp.add_argument("--group", default="S3")
    sp.add_argument("--group-file")
    sp.add_argument("--conjugacy", action="store_true")
    sp.add_argument("--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    sp.set_defaults(func=cmd_homs)
    sp = sub.add_parser("colorings")
    common(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_colorings)
    sp = sub.add_parser("ideal")
    common(sp)
    model_opts(sp)
    sp.set_defaults(func=cmd_ideal)
    sp = sub.add_parser("dim")
    common(sp)
    model_opts(sp)
    sp.set_defaults(func=cmd_dim)
    sp = sub.add_parser("compare")
    common(sp, knot=False)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    model_opts(sp)
    sp.set_defaults(func=cmd_compare)
    sp = sub.add_parser("lemma-demo")
    common(sp, knot=False)
    sp.set_defaults(func=cmd_lemma_demo)
    return parser


def run_cli(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "command", None):
            raise UsageError("missing subcommand")
        return args.func(args)
    except (UsageError, DiagramError, UnsupportedTarget, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegreeBudgetExceeded as exc:
        print(f"incomplete: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_BUG


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
