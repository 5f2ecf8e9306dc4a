"""Command line front end.

Exit codes: 0 success, 1 a check failed, 2 the input could not be parsed or evaluated.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .dsl import EvalError, GammaHandle, ParseError, eval_ring_expr, parse_ring_expr
from .quaternion import obstruction_certificate
from .rings import DEFAULT_BUDGET, BudgetError, central_idempotents, is_indecomposable
from .units import jacobson_radical, radical_counting_check, un_formula, unit_group
from .verify import un_oracle, verify_props, verify_table

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, payload: dict, text_lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _load(text: str, budget: int):
    try:
        return eval_ring_expr(parse_ring_expr(text), budget=budget)
    except ParseError as exc:
        caret = " " * exc.offset + "^"
        raise InputError(f"{exc}\n  {text}\n  {caret}") from exc
    except (EvalError, BudgetError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _base_report(text: str, R) -> tuple[dict, object]:
    if isinstance(R, GammaHandle):
        rep = R.units()
        return {"expr": text, "order": None, "characteristic": 0}, rep
    rep = unit_group(R)
    return {"expr": text, "order": R.order, "characteristic": R.characteristic}, rep


def _structure_lines(payload: dict, rep) -> list[str]:
    order = "infinite" if payload["order"] is None else payload["order"]
    return [f"ring:            {payload['expr']}",
            f"order:           {order}",
            f"characteristic:  {payload['characteristic']}",
            f"units:           {rep.order}",
            f"structure:       {rep.structure}"]


def cmd_units(args) -> int:
    t0 = time.perf_counter()
    R = _load(args.expr, args.budget)
    payload, rep = _base_report(args.expr, R)
    payload["unit_order"] = rep.order
    payload["structure"] = rep.structure.as_dict()
    lines = _structure_lines(payload, rep)
    if args.elements:
        payload["elements"] = rep.labels()
        lines += ["elements:"] + [f"  {label}" for label in payload["elements"]]
    payload["timing_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_radical(args) -> int:
    t0 = time.perf_counter()
    R = _load(args.expr, args.budget)
    if isinstance(R, GammaHandle):
        raise InputError("the radical is only available for finite rings, not Gamma(k)")
    payload, rep = _base_report(args.expr, R)
    rad = jacobson_radical(R)
    ok = radical_counting_check(R, rad)
    payload["unit_order"] = rep.order
    payload["structure"] = rep.structure.as_dict()
    payload["radical"] = {"j_order": rad.j_order, "quotient_unit_order": rad.quotient_units_order,
                          "counting_identity_ok": ok}
    lines = _structure_lines(payload, rep) + [
        f"|J|:             {rad.j_order}",
        f"|(R/J)^x|:       {rad.quotient_units_order}",
        f"counting check:  {'ok' if ok else 'FAILED'}",
    ]
    if args.elements:
        payload["elements"] = [R.label(x) for x in rad.radical.elements]
        lines += ["radical elements:"] + [f"  {label}" for label in payload["elements"]]
    payload["timing_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    if not ok:
        # never report a radical block that breaks the identity
        del payload["radical"]
        print("counting identity failed", file=sys.stderr)
        _emit(args, payload, lines)
        return EXIT_FAIL
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_idempotents(args) -> int:
    t0 = time.perf_counter()
    R = _load(args.expr, args.budget)
    if isinstance(R, GammaHandle):
        raise InputError("idempotents are only available for finite rings, not Gamma(k)")
    payload, rep = _base_report(args.expr, R)
    if R.order < 2:
        raise InputError("the trivial ring has no decomposition question")
    idem = central_idempotents(R)
    payload["unit_order"] = rep.order
    payload["structure"] = rep.structure.as_dict()
    payload["idempotent_count"] = len(idem)
    payload["indecomposable"] = is_indecomposable(R)
    lines = _structure_lines(payload, rep) + [
        f"central idempotents: {len(idem)}",
        f"indecomposable:  {payload['indecomposable']}",
    ]
    if args.elements:
        payload["elements"] = [R.label(e) for e in idem]
        lines += ["idempotents:"] + [f"  {label}" for label in payload["elements"]]
    payload["timing_ms"] = round(1000 * (time.perf_counter() - t0), 3)
    _emit(args, payload, lines)
    return EXIT_OK


def _check_table(args, results) -> int:
    if args.json:
        print(json.dumps([{"name": r.name, "ok": r.ok, "detail": r.detail,
                           "timing_ms": round(1000 * r.seconds, 3)} for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.ok for r in results)}/{len(results)} passed")
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_verify_table(args) -> int:
    return _check_table(args, verify_table())


def cmd_verify_props(args) -> int:
    try:
        results = verify_props(seed=args.seed, only=set(args.only) if args.only else None)
    except KeyError as exc:
        raise InputError(exc.args[0]) from exc
    return _check_table(args, results)


def cmd_obstruction(args) -> int:
    if args.k < 1:
        raise InputError("k must be positive")
    t0 = time.perf_counter()
    cert = obstruction_certificate(args.k)
    payload = {"k": cert.k, "norm_value": cert.norm_value, "re_value": cert.re_value,
               "power_norm": cert.power_norm, "nonzero": cert.nonzero,
               "timing_ms": round(1000 * (time.perf_counter() - t0), 3)}
    e = 8 * args.k
    _emit(args, payload, [f"N(z^{e} - 1) = {cert.norm_value}",
                          f"Re(z^{e})     = {cert.re_value}",
                          f"N(z^{e})      = {cert.power_norm}",
                          f"nonzero:        {cert.nonzero}"])
    return EXIT_OK if cert.nonzero and cert.re_value > 1 else EXIT_FAIL


def cmd_un_formula(args) -> int:
    t0 = time.perf_counter()
    try:
        inv = un_formula(args.p, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    agrees: Optional[bool] = None
    if args.p**args.n <= args.budget:
        agrees = un_oracle(args.p, args.n) == inv
    payload = {"p": args.p, "n": args.n, "invariants": list(inv.factors), "d": inv.d,
               "unit_order": inv.order, "oracle_agrees": agrees,
               "timing_ms": round(1000 * (time.perf_counter() - t0), 3)}
    oracle = {None: "skipped (beyond budget)", True: "agrees", False: "DISAGREES"}[agrees]
    _emit(args, payload, [f"units of F_{args.p}[x]/(x^{args.n}): {inv}",
                          f"d = {inv.d}, order {inv.order}",
                          f"brute-force oracle: {oracle}"])
    return EXIT_FAIL if agrees is False else EXIT_OK


def cmd_gamma(args) -> int:
    if args.k < 1:
        raise InputError("k must be positive")
    args.expr = f"Gamma({args.k})"
    args.elements = getattr(args, "elements", False)
    return cmd_units(args)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument("--elements", action="store_true", help="list element labels")
    common.add_argument("--budget", type=int, help=f"largest ring to enumerate (default {DEFAULT_BUDGET})")
    common.add_argument("--seed", type=int, help="seed for sampled property checks")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="unitgroups", parents=[common],
                                     description="Unit groups of finite rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    for name, fn, help_ in (("units", cmd_units, "unit group of a ring expression"),
                            ("radical", cmd_radical, "Jacobson radical and counting identity"),
                            ("idempotents", cmd_idempotents, "central idempotents")):
        add(name, fn, help_).add_argument("expr", help='ring expression, e.g. "M(2,GF(2))"')
    add("verify-theorem1", cmd_verify_table, "check every row of the realizability table")
    add("verify-props", cmd_verify_props, "run the scripted desk checks").add_argument(
        "--only", nargs="*", metavar="KEY", help="run only these checks, e.g. gl gamma")
    add("obstruction", cmd_obstruction, "split quaternion certificate for k").add_argument("k", type=int)
    p = add("un-formula", cmd_un_formula, "closed-form unit group of F_p[x]/(x^n)")
    p.add_argument("p", type=int)
    p.add_argument("n", type=int)
    add("gamma", cmd_gamma, "unit group of Gamma(k)").add_argument("k", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("elements", False), ("budget", DEFAULT_BUDGET), ("seed", 0)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (InputError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
