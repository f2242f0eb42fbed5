"""leavitt-lab: command-line front end.

Exit codes: 0 success / all suites pass, 1 a computation precondition failed
or a suite failed, 2 usage error (bad flags, expressions or literals).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import AlgebraElement, BasisWord
from .field import Field
from .harness import SUITES, SuiteConfig, run_suite
from .jacobson import parse_expr, to_jacobson, to_leavitt
from .laurent import LaurentSeriesElement, RationalFunc, parse_poly, quotient_map
from .literals import MODULES, LiteralError, dumps, parse_element
from .models.catalog import catalog, prufer_parameters
from .models.ew import EWElement, ew_act
from .models.prufer import PruferElement, ReducibleParameterError, prufer_act, rational_act
from .models.socle import socle_decompose
from .models.theta import ThetaElement, baer_extend, reduce_bounded_to_laurent_series, theta_act
from .models.truncated import InconclusiveError
from .parser import ParseError

SUITE_ALIASES = {"iso": "iso-roundtrip", "oracle": "oracle-equivalence", "pmap": "pmap-relations"}


class UsageError(Exception):
    pass


def _field(text: str) -> Field:
    try:
        return Field.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", type=_field, default=Field.rational(), help="q or gf:<p> (default q)")
    p.add_argument("--order", type=int, default=16, help="truncation order (default 16)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--json", action="store_true", help="emit JSON")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="leavitt-lab", description=(
        "Exact arithmetic in K<X,Y|XY=1> = L_K(T) and its indecomposable injective modules."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p.add_argument("--presentation", choices=("leavitt", "jacobson"), default="leavitt")

    p = sub.add_parser("mul", parents=[common], help="product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--presentation", choices=("leavitt", "jacobson"), default="leavitt")

    p = sub.add_parser("convert", parents=[common], help="apply the isomorphism")
    p.add_argument("expr")
    p.add_argument("--from", dest="source", choices=("leavitt", "jacobson"), required=True)
    p.add_argument("--to", dest="target", choices=("leavitt", "jacobson"), required=True)

    p = sub.add_parser("quotient", parents=[common], help="image in R/J = K[cbar, cbar^-1]")
    p.add_argument("expr")

    p = sub.add_parser("act", parents=[common], help="act by a ring element on a module element")
    p.add_argument("ring_expr")
    p.add_argument("--on", dest="module", choices=MODULES, required=True)
    p.add_argument("literal")
    p.add_argument("--presentation", choices=("leavitt", "jacobson"), default="leavitt")

    p = sub.add_parser("baer", parents=[common], help="extend R p(c) -> Theta to R")
    p.add_argument("--p", dest="poly", required=True)
    p.add_argument("--image", required=True, help="theta literal for the image of p(c)")

    p = sub.add_parser("socle", parents=[common], help="socle operations")
    p.add_argument("action", choices=("decompose",))
    p.add_argument("expr")

    p = sub.add_parser("reduce", parents=[common], help="bounded Theta element to K((cbar))")
    p.add_argument("literal")
    p.add_argument("--bound", type=int)

    p = sub.add_parser("catalog", parents=[common], help="the indecomposable injective modules")
    p.add_argument("--parameters", type=int, metavar="DEG",
                   help="also list certified U^f parameters up to this degree (finite fields)")

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("suite", help="suite name or 'all': " + ", ".join(SUITES))
    p.add_argument("--timing", action="store_true", help="include wall time (not reproducible)")
    return parser


def _expr(text: str, presentation: str, field: Field):
    return parse_expr(text, presentation, field)


def _ring(text: str, presentation: str, field: Field) -> AlgebraElement:
    x = _expr(text, presentation, field)
    return to_leavitt(x) if presentation == "jacobson" else x


def _emit(args, value, as_json=None):
    if args.json:
        print(dumps(as_json if as_json is not None else value.to_json()))
    else:
        print(value)


def cmd_nf(args):
    _emit(args, _expr(args.expr, args.presentation, args.field))


def cmd_mul(args):
    a = _expr(args.left, args.presentation, args.field)
    b = _expr(args.right, args.presentation, args.field)
    _emit(args, a * b)


def cmd_convert(args):
    x = _expr(args.expr, args.source, args.field)
    if args.source != args.target:
        x = to_leavitt(x) if args.target == "leavitt" else to_jacobson(x)
    _emit(args, x)


def cmd_quotient(args):
    img = quotient_map(_ring(args.expr, "leavitt", args.field))
    _emit(args, img, {"terms": {str(e): str(k) for e, k in sorted(img.terms.items())}})


def cmd_act(args):
    r = _ring(args.ring_expr, args.presentation, args.field)
    m = parse_element(args.module, args.literal, args.field)
    if isinstance(m, ThetaElement):
        out = theta_act(r, m)
    elif isinstance(m, EWElement):
        out = ew_act(r, m)
    elif isinstance(m, PruferElement):
        out = prufer_act(r, m)
    elif isinstance(m, RationalFunc):
        out = rational_act(r, m)
    elif isinstance(m, LaurentSeriesElement):
        out = m.mul_laurent(quotient_map(r))
    else:  # pragma: no cover
        raise UsageError(f"cannot act on {args.module}")
    _emit(args, out)


def cmd_baer(args):
    p = parse_poly(args.poly, args.field)
    image = parse_element("theta", args.image, args.field)
    _emit(args, baer_extend(p, image, args.order))


def cmd_socle(args):
    vec = socle_decompose(_ring(args.expr, "leavitt", args.field))
    if args.json:
        print(dumps(vec.to_json()))
        return
    F = args.field
    print(f"Rw: {vec.w_component.to_algebra()}")
    for i, comp in sorted(vec.summand_components.items()):
        r = comp.to_algebra()
        part = r * AlgebraElement.word(F, BasisWord.dstar_cstar(i))
        print(f"R d*(c*)^{i}: {part}  (= ({r}) d*(c*)^{i})")


def cmd_reduce(args):
    t = parse_element("theta", args.literal, args.field)
    _emit(args, reduce_bounded_to_laurent_series(t, args.bound))


def cmd_catalog(args):
    entries = catalog()
    params = None
    if args.parameters is not None:
        if not args.field.is_finite:
            raise UsageError("--parameters needs a finite field (--field gf:<p>)")
        params = [str(f) for f in prufer_parameters(args.field, args.parameters)]
    if args.json:
        out = {"modules": [e.to_json() for e in entries]}
        if params is not None:
            out["prufer_parameters"] = params
        print(dumps(out))
        return
    for e in entries:
        line = f"{e.family:<8} {e.element_type:<15} Jacobson: {e.jacobson_name}"
        if e.parameter:
            line += f"  [{e.parameter}]"
        print(line)
    if params is not None:
        print(f"certified U^f parameters over {args.field} up to degree {args.parameters}:")
        for f in params:
            print(f"  {f}")


def cmd_verify(args) -> int:
    name = SUITE_ALIASES.get(args.suite, args.suite)
    if name != "all" and name not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
    try:
        cfg = SuiteConfig(args.field, args.order, args.seed, args.trials)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    names = list(SUITES) if name == "all" else [name]
    reports = [run_suite(n, cfg) for n in names]
    ok = all(r.passed for r in reports)
    if args.json:
        print(dumps({"passed": ok, "suites": [r.to_json(args.timing) for r in reports]}))
    else:
        for r in reports:
            print(r.render(args.timing))
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} suites passed")
    return 0 if ok else 1


COMMANDS = {
    "nf": cmd_nf, "mul": cmd_mul, "convert": cmd_convert, "quotient": cmd_quotient, "act": cmd_act,
    "baer": cmd_baer, "socle": cmd_socle, "reduce": cmd_reduce, "catalog": cmd_catalog, "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args) or 0
    except (UsageError, ParseError, LiteralError, json.JSONDecodeError) as exc:
        print(f"leavitt-lab: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, ReducibleParameterError, InconclusiveError) as exc:
        print(f"leavitt-lab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
