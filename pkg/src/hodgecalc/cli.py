"""Command-line surface.

Verbs: gb, nf, hodge, coeff, milnor, lct, mult-ideal, minexp, restrict, verify.
Every run is a pure function of (command, flags, seed): reports in ``--json``
mode are byte-identical across invocations with the same inputs.  Exit codes:
0 success, 1 computation refused (an unmet precondition blocked every
pathway), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import ComputationRefused, HodgecalcError, InputError
from .groebner import (
    Ideal,
    divisorial_part,
    normal_form,
    reduced_groebner,
)
from .hodge import HodgeQuery, SamplerConfig, hodge_ideal_generic, restrict_general_hyperplane
from .milnor import milnor_basis
from .orders import GREVLEX, order_by_name
from .polynomials import (
    VariableSpace,
    WeightVector,
    infer_space,
    parse_generators,
    poly_parse,
    render,
)
from .thresholds import generic_min_exp, lct_monomial, multiplier_ideal_monomial
from .verify import SUITES, run_suite


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact fraction: {text!r}") from None


def _space_from_args(args, source_text: str) -> VariableSpace:
    if getattr(args, "vars", None):
        base = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    else:
        base = infer_space(source_text).base
    params = ()
    if getattr(args, "params", None):
        params = tuple(v.strip() for v in args.params.split(",") if v.strip())
        base = tuple(name for name in base if name not in params)
    return VariableSpace(base, params)


def _ideal_from_args(args) -> Ideal:
    if not args.ideal:
        raise InputError("--ideal is required for this command")
    space = _space_from_args(args, args.ideal)
    return Ideal(space, parse_generators(args.ideal, space))


def _emit(args, doc: dict, human_lines) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _report(command: str, inputs: dict, result, provenance: str, seed) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "provenance": provenance,
        "seed": seed,
        "timings": None,
    }


def _cmd_gb(args) -> int:
    ideal = _ideal_from_args(args)
    order = order_by_name(args.order)
    reduced_groebner(ideal, order)
    doc = _report(
        "gb",
        {"ideal": args.ideal, "vars": list(ideal.space.names), "order": order.name},
        ideal.to_json(order, reduced=True),
        "groebner",
        None,
    )
    lines = [f"reduced basis ({order.name}):"] + [
        f"  {render(g, order)}" for g in ideal.reduced_basis(order)
    ]
    _emit(args, doc, lines)
    return 0


def _cmd_nf(args) -> int:
    if not args.poly:
        raise InputError("--poly is required for nf")
    ideal = _ideal_from_args(args)
    order = order_by_name(args.order)
    f = poly_parse(args.poly, ideal.space)
    remainder = normal_form(f, ideal, order)
    doc = _report(
        "nf",
        {"poly": args.poly, "ideal": args.ideal, "order": order.name},
        {"normal_form": render(remainder, order), "member": remainder.is_zero()},
        "groebner",
        None,
    )
    _emit(args, doc, [f"normal form: {render(remainder, order)}",
                      f"member: {remainder.is_zero()}"])
    return 0


def _cmd_hodge(args) -> int:
    ideal = _ideal_from_args(args)
    lam = _fraction(args.lam)
    query = HodgeQuery(args.p, lam)
    cfg = SamplerConfig(seed=args.seed)
    i0 = None
    if args.i0:
        i0 = Ideal(ideal.space, parse_generators(args.i0, ideal.space))
    if args.assert_codim2:
        divisorial_part(ideal, assert_codim2=True)
    result = hodge_ideal_generic(ideal, query, cfg, i0=i0)
    doc = _report(
        "hodge",
        {"ideal": args.ideal, "p": args.p, "lambda": args.lam, "vars": list(ideal.space.names)},
        result.to_json(),
        result.provenance,
        args.seed,
    )
    lines = [
        f"hodge ideal (p={args.p}, lambda={lam}):",
    ] + [f"  {render(g)}" for g in result.ideal.reduced_basis()] + [
        f"pathway: {result.provenance}; samples: {result.samples_used}; "
        f"agreement: {result.agreement}",
    ]
    if result.agreement == "union-taken":
        lines.append(
            "warning: samples disagreed; reporting the generator sum over all samples"
        )
    _emit(args, doc, lines)
    return 0


def _cmd_coeff(args) -> int:
    from .hodge import coeff_ideal

    if not args.params:
        raise InputError("coeff needs --params naming the parameter variables")
    ideal = _ideal_from_args(args)
    result = coeff_ideal(ideal)
    doc = _report(
        "coeff",
        {"ideal": args.ideal, "vars": list(ideal.space.base), "params": list(ideal.space.params)},
        result.to_json(reduced=True),
        "coefficient-extraction",
        None,
    )
    _emit(args, doc, ["coefficient ideal:"] + [f"  {render(g)}" for g in result.reduced_basis()])
    return 0


def _cmd_milnor(args) -> int:
    if not args.poly:
        raise InputError("--poly is required for milnor")
    if args.vars:
        space = VariableSpace(tuple(v.strip() for v in args.vars.split(",")))
    else:
        space = infer_space(args.poly)
    f = poly_parse(args.poly, space)
    weights = None
    if args.weights:
        weights = WeightVector(tuple(int(w) for w in args.weights.split(",")))
    data = milnor_basis(f, weights)
    doc = _report(
        "milnor",
        {"poly": args.poly, "weights": args.weights},
        data.to_json(),
        "staircase",
        None,
    )
    lines = [f"milnor number: {data.milnor_number}", "basis (monomial, degree):"] + [
        f"  {entry['monomial']}  {entry['degree']}" for entry in data.to_json()["basis"]
    ]
    _emit(args, doc, lines)
    return 0


def _cmd_lct(args) -> int:
    ideal = _ideal_from_args(args)
    value = lct_monomial(ideal)
    doc = _report(
        "lct",
        {"ideal": args.ideal},
        value.to_json(),
        "newton-polyhedron",
        None,
    )
    _emit(args, doc, [str(value)])
    return 0


def _cmd_mult_ideal(args) -> int:
    ideal = _ideal_from_args(args)
    c = _fraction(args.c)
    result = multiplier_ideal_monomial(ideal, c, left_limit=args.left_limit)
    doc = _report(
        "mult-ideal",
        {"ideal": args.ideal, "c": args.c, "left_limit": args.left_limit},
        result.to_json(reduced=True),
        "newton-polyhedron",
        None,
    )
    _emit(args, doc, ["multiplier ideal:"] + [f"  {render(g)}" for g in result.reduced_basis()])
    return 0


def _cmd_minexp(args) -> int:
    ideal = _ideal_from_args(args)
    value = generic_min_exp(
        ideal,
        mode=args.mode,
        search_denominators=args.denominators,
        sampler_config=SamplerConfig(seed=args.seed),
    )
    result = {"value": value.to_json(), "lower_bound_only": value.lower_bound_only}
    if value.lower_bound_only:
        result["grid_denominator"] = value.grid_denominator
    doc = _report(
        "minexp",
        {"ideal": args.ideal, "mode": args.mode},
        result,
        "newton-polyhedron" if args.mode == "monomial" else "triviality-search",
        args.seed,
    )
    _emit(args, doc, [str(value)])
    return 0


def _cmd_restrict(args) -> int:
    ideal = _ideal_from_args(args)
    result = restrict_general_hyperplane(ideal, seed=args.seed)
    doc = _report(
        "restrict",
        {"ideal": args.ideal},
        result.to_json(reduced=True),
        "substitution",
        args.seed,
    )
    _emit(args, doc, ["restricted ideal:"] + [f"  {render(g)}" for g in result.reduced_basis()])
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed)
    failed = [r for r in results if not r.ok]
    doc = _report(
        "verify",
        {"suite": args.suite},
        {
            "checks": [
                {"name": r.name, "suite": r.suite, "ok": r.ok, "detail": r.detail}
                for r in results
            ],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        },
        "verification",
        args.seed,
    )
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        lines.append(f"{status}  [{r.suite}] {r.name}" + (f" -- {r.detail}" if not r.ok else ""))
    lines.append(f"{len(results) - len(failed)} passed, {len(failed)} failed")
    _emit(args, doc, lines)
    return 1 if failed else 0


_COMMANDS = {
    "gb": _cmd_gb,
    "nf": _cmd_nf,
    "hodge": _cmd_hodge,
    "coeff": _cmd_coeff,
    "milnor": _cmd_milnor,
    "lct": _cmd_lct,
    "mult-ideal": _cmd_mult_ideal,
    "minexp": _cmd_minexp,
    "restrict": _cmd_restrict,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgecalc",
        description="Exact computation of Hodge ideals, multiplier ideals, and "
        "threshold invariants of polynomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal=True, seed=False):
        if ideal:
            p.add_argument("--ideal", help="comma-separated generators in the input grammar")
            p.add_argument("--vars", help="comma-separated variable names (default: inferred)")
            p.add_argument("--params", help="comma-separated parameter variable names")
        p.add_argument("--order", default="grevlex", choices=["grevlex", "grlex"])
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--config", help="JSON file with default values for these flags")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gb", help="reduced Groebner basis")
    common(p)
    p = sub.add_parser("nf", help="normal form of a polynomial modulo an ideal")
    common(p)
    p.add_argument("--poly", help="the polynomial to reduce")
    p = sub.add_parser("hodge", help="Hodge ideal of a rational power of an ideal")
    common(p, seed=True)
    p.add_argument("--p", type=int, default=0, help="filtration level")
    p.add_argument("--lambda", dest="lam", default="1", help="exact exponent in (0,1]")
    p.add_argument("--weights", help="comma-separated positive integer weights")
    p.add_argument("--i0", help="explicit level-zero ideal (generators)")
    p.add_argument(
        "--assert-codim2",
        action="store_true",
        help="assert that the ideal defines a codimension >= 2 subscheme",
    )
    p = sub.add_parser("coeff", help="coefficient ideal of a parametric ideal")
    common(p)
    p = sub.add_parser("milnor", help="Milnor algebra basis of an isolated singularity")
    common(p, ideal=False)
    p.add_argument("--poly", help="the defining polynomial")
    p.add_argument("--vars", help="comma-separated variable names (default: inferred)")
    p.add_argument("--weights", help="comma-separated positive integer weights")
    p = sub.add_parser("lct", help="log canonical threshold of a monomial ideal")
    common(p)
    p = sub.add_parser("mult-ideal", help="monomial multiplier ideal")
    common(p)
    p.add_argument("--c", default="1", help="exact exponent")
    p.add_argument("--left-limit", action="store_true",
                   help="use the ideal just below c (left limit)")
    p = sub.add_parser("minexp", help="generic minimal exponent")
    common(p, seed=True)
    p.add_argument("--mode", default="monomial", choices=["monomial", "search"])
    p.add_argument("--denominators", type=int, default=6,
                   help="search-mode grid: exponents with denominator up to this")
    p = sub.add_parser("restrict", help="restrict an ideal to a seeded general hyperplane")
    common(p, seed=True)
    p = sub.add_parser("verify", help="run the verification suite")
    common(p, ideal=False, seed=True)
    p.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    return parser


def _apply_config(args) -> None:
    if not getattr(args, "config", None):
        return
    try:
        with open(args.config) as handle:
            values = json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read config file: {exc}") from None
    for key, value in values.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr):
            raise InputError(f"config key {key!r} is not a known flag")
        parser_default = _PARSER_DEFAULTS.get(attr)
        if getattr(args, attr) == parser_default:
            setattr(args, attr, value)


_PARSER_DEFAULTS = {
    "order": "grevlex",
    "json": False,
    "seed": 0,
    "p": 0,
    "lam": "1",
    "c": "1",
    "left_limit": False,
    "mode": "monomial",
    "denominators": 6,
    "suite": "all",
    "ideal": None,
    "vars": None,
    "params": None,
    "poly": None,
    "weights": None,
    "i0": None,
    "assert_codim2": False,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config(args)
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ComputationRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except HodgecalcError as exc:  # pragma: no cover - catch-all for subclasses
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
