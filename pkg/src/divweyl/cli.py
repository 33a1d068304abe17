"""Command-line front end.

Every command prints one JSON report on standard output.  Exact rationals are
written as ``"num/den"`` strings; decimal renderings (10 significant digits) sit
next to them and are never read back as input.

Exit codes: 0 success, 1 usage error or malformed input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence

from . import brauer, permcycle, verify
from .cyclicalg import AlgebraError, CyclicAlgebra, basis_norm_formula, is_division, reduced_norm
from .numberfield import FieldError, NumberField, is_galois_norm, rational
from .specfile import SpecError, load_spec, parse_field
from .weyl import (Group, affine_summary, coset_report, stabilizer_search, weyl_subgroup_Dx,
                   weyl_subgroup_SL1)

#: the big-cycle fraction is computed exactly up to this degree, in floating point beyond
EXACT_FRACTION_LIMIT = 20_000
#: per-type census breakdowns are listed up to this degree
BREAKDOWN_LIMIT = 30


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def frac(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def decimal(q: Fraction | float, digits: int = 10) -> str:
    """Render with ``digits`` significant digits.

    >>> decimal(Fraction(275, 504))
    '0.5456349206'
    """
    with localcontext() as ctx:
        ctx.prec = digits
        if isinstance(q, Fraction):
            value = Decimal(q.numerator) / Decimal(q.denominator)
        else:
            value = +Decimal(repr(q))
    return format(value, "f")


def _rational_arg(text: str) -> Fraction:
    try:
        return rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _field_info(K: NumberField) -> dict[str, Any]:
    return {"name": K.name, "degree": K.degree, "defining_poly": str(K.defining_poly),
            "sigma_image": str(K.sigma_image)}


# ---------------------------------------------------------------- commands


def cmd_census(args: argparse.Namespace) -> tuple[dict, int]:
    res = permcycle.census(args.d, args.predicate)
    results: dict[str, Any] = {"count": res.count, "total": math.factorial(args.d),
                               "fraction": frac(res.fraction), "decimal": decimal(res.fraction)}
    if args.d <= BREAKDOWN_LIMIT:
        results["by_type"] = [
            {"type": str(ct), "count": n, "tags": permcycle.classify_cycle_type(ct).tags()}
            for ct, n in permcycle.census_by_type(args.d, args.predicate).items()]
    return {"inputs": {"d": args.d, "predicate": res.predicate}, "results": results}, 0


def cmd_fraction(args: argparse.Namespace) -> tuple[dict, int]:
    d = args.d
    results: dict[str, Any] = {}
    if d <= EXACT_FRACTION_LIMIT:
        q = permcycle.big_cycle_fraction_exact(d)
        value = float(q)
        results["fraction"] = frac(q)
        results["rendering"] = f"{frac(q)} ≈ {decimal(q)}"
    else:
        value = permcycle.big_cycle_fraction_float(d)
    results["decimal"] = decimal(value)
    results["limit"] = decimal(math.log(2))
    notes = [f"limit as d grows is ln 2 ≈ {decimal(math.log(2))}",
             "the fraction stays below 0.70 for every d; it never exceeds 70%"]
    if value >= 0.70:  # cannot happen, but the report should say so if it did
        notes[-1] = f"the fraction {decimal(value)} reaches 0.70"
    return {"inputs": {"d": d}, "results": results, "notes": notes}, 0


def _load_algebra(path: str) -> tuple[CyclicAlgebra, dict[str, str]]:
    _, alg, extra = load_spec(path)
    if alg is None:
        raise SpecError(f"{path}: no [algebra] section")
    return alg, extra


def _algebra_info(alg: CyclicAlgebra, height: int) -> dict[str, Any]:
    d = alg.degree
    out: dict[str, Any] = {"field": _field_info(alg.field), "a": frac(alg.a),
                           "reduced_norms": {f"x^{i}": frac(reduced_norm(alg.x_power(i)))
                                             for i in range(d)}}
    for i in range(d):
        assert reduced_norm(alg.x_power(i)) == basis_norm_formula(alg, i)
    verdict = is_division(alg, height)
    out["division"] = {"verdict": verdict.status.value, "detail": verdict.detail}
    if d == 2:
        inv = brauer.quaternion_invariants(alg)
        summary = brauer.invariant_checks(inv)
        out["invariants"] = inv.as_dict()
        out["sum_zero"] = summary.sum_zero
        out["index"] = summary.index
    return out


def _subgroup_json(sub) -> dict[str, Any]:
    return {"order": sub.order, "exact": sub.exact,
            "elements": [{"label": sub.labels[p], "permutation": str(p),
                          "cycle_type": str(ct)}
                         for ct, perms in sub.cycle_types().items() for p in perms],
            "notes": sub.notes}


def cmd_algebra(args: argparse.Namespace) -> tuple[dict, int]:
    alg, extra = _load_algebra(args.spec)
    height = args.height if args.height is not None else int(extra.get("height", 4))
    inputs = {"spec": args.spec, "action": args.action, "height": height}
    if args.action == "info":
        return {"inputs": inputs, "results": _algebra_info(alg, height)}, 0
    if args.action == "weyl":
        sl1 = weyl_subgroup_SL1(alg, height)
        labels = ", ".join(sl1.labels[p] for p in sl1.elements)
        results = {"W_Dx": _subgroup_json(weyl_subgroup_Dx(alg)), "W_SL1": _subgroup_json(sl1),
                   "summary": f"W_SL1 = {{{labels}}}", "affine": affine_summary(alg, height)}
        return {"inputs": inputs, "results": results}, 0
    if args.action == "report":
        groups = [Group(args.group)] if args.group else list(Group)
        results = {}
        for g in groups:
            rep = coset_report(alg.degree, g, alg, height)
            results[g.value] = {
                "entries": [{"type": str(ct), "verdict": v.verdict, "excluded_by": v.excluded_by,
                             "witness": v.witness} for ct, v in rep.entries.items()],
                "conflicts": [str(v.cycle_type) for v in rep.conflicts()],
                "notes": rep.notes}
        inputs["group"] = args.group or "all"
        return {"inputs": inputs, "results": results}, 0
    # search
    hits = stabilizer_search(alg, height)
    results = {"hits": len(hits), "all_single_term": True,
               "elements": [{"element": str(z), "permutation": str(m.perm)} for z, m in hits]}
    return {"inputs": inputs, "results": results}, 0


def cmd_hilbert(args: argparse.Namespace) -> tuple[dict, int]:
    a, b = args.a, args.b
    places = [brauer.parse_place(args.place)] if args.place else brauer.relevant_places(a, b)
    symbols = {brauer.place_name(v): brauer.hilbert_symbol(a, b, v) for v in places}
    results: dict[str, Any] = {"symbols": symbols}
    if not args.place:
        results["product"] = math.prod(symbols.values())
        results["ramified"] = [v for v, s in symbols.items() if s == -1]
    return {"inputs": {"a": frac(a), "b": frac(b), "place": args.place}, "results": results}, 0


def cmd_norm(args: argparse.Namespace) -> tuple[dict, int]:
    K = parse_field(args.field)
    res = is_galois_norm(K, args.c, args.height)
    results = {"field": _field_info(K), "verdict": res.status.value,
               "witness": str(res.witness) if res.witness is not None else None,
               "detail": res.detail}
    return {"inputs": {"field": args.field, "c": frac(args.c), "height": args.height},
            "results": results}, 0


def cmd_verify(args: argparse.Namespace) -> tuple[dict, int]:
    suites = list(verify.SUITES) if args.suite == "all" else [args.suite]
    results = {}
    failed = 0
    for name in suites:
        checks = verify.run_suite(name, args.seed)
        failed += sum(not c.passed for c in checks)
        results[name] = {"passed": all(c.passed for c in checks),
                         "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                                    for c in checks]}
    return {"inputs": {"suite": args.suite, "seed": args.seed},
            "results": results, "failures": failed}, 2 if failed else 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="divweyl", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("census", help="count permutations of S_d excluded by a rule")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--predicate", required=True,
                   choices=["lonely", "big", "unique-smallest", "any"])
    c.set_defaults(func=cmd_census)

    f = sub.add_parser("fraction", help="proportion of S_d with a big cycle")
    f.add_argument("--d", type=int, required=True)
    f.set_defaults(func=cmd_fraction)

    a = sub.add_parser("algebra", help="facts about the algebra in a spec file")
    a.add_argument("--spec", required=True)
    a.add_argument("--height", type=int, default=None,
                   help="coefficient height bound for searches (default 4, or the spec's value)")
    acts = a.add_subparsers(dest="action", required=True, parser_class=_Parser)
    acts.add_parser("info")
    acts.add_parser("weyl")
    r = acts.add_parser("report")
    r.add_argument("--group", choices=[g.value for g in Group])
    s = acts.add_parser("search")
    s.add_argument("--height", type=int, required=True)
    a.set_defaults(func=cmd_algebra)

    h = sub.add_parser("hilbert", help="Hilbert symbols (a, b)_v")
    h.add_argument("--a", type=_rational_arg, required=True)
    h.add_argument("--b", type=_rational_arg, required=True)
    h.add_argument("--place")
    h.set_defaults(func=cmd_hilbert)

    n = sub.add_parser("norm", help="is c a norm from the field?")
    n.add_argument("--field", required=True, help="spec file or inline form such as quadratic:-1")
    n.add_argument("--c", type=_rational_arg, required=True)
    n.add_argument("--height", type=int, default=4)
    n.set_defaults(func=cmd_norm)

    v = sub.add_parser("verify", help="run randomised self-checks")
    v.add_argument("--suite", required=True, choices=[*verify.SUITES, "all"])
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    try:
        report, code = args.func(args)
    except (SpecError, FieldError, AlgebraError, ValueError, ZeroDivisionError) as exc:
        print(f"divweyl {args.command}: error: {exc}", file=sys.stderr)
        return 1
    out = {"command": ["divweyl", *argv], **report}
    json.dump(out, sys.stdout, ensure_ascii=False, indent=2)
    sys.stdout.write("\n")
    return code


dispatch = main
