"""Command-line front end.

Exit codes: 0 success, 1 a property violation or negative verdict, 2 bad input.
JSON goes to stdout (keys in a fixed order, floats in shortest round-trip form);
a one-line human summary goes to stderr.
"""

from __future__ import annotations

import argparse
import ast
import json
import operator
import sys
from typing import Callable

from .classify import classify_all
from .generator import (MAX_ENUMERATION_N, CensusReport, GeneratorSpec, census_records,
                        make_space, space_fingerprint)
from .mapping import load_map
from .solver import HypothesisError, IterationConfig, StopRule, picard_solve
from .space import (FiniteBSpace, InputError, minimal_coefficient, read_space_json,
                    validate_b_metric)

KIND_ALIASES = {"discrete": "discrete", "power": "power_metric", "power_metric": "power_metric",
                "random": "random_perturbed", "random_perturbed": "random_perturbed"}

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub,
           ast.Mult: operator.mul, ast.Div: operator.truediv}
_UNOPS = {ast.USub: operator.neg, ast.UAdd: operator.pos}


def parse_map_expr(text: str) -> Callable[[float], float]:
    """Compile a 1-D map from numbers, ``x``, ``+ - * /`` and parentheses."""
    src = text.replace("×", "*").replace("÷", "/").replace("−", "-")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse map expression {text!r}: {exc.msg}") from None

    def build(node):
        if isinstance(node, ast.Expression):
            return build(node.body)
        if isinstance(node, ast.Constant) and type(node.value) in (int, float):
            value = float(node.value)
            return lambda x: value
        if isinstance(node, ast.Name) and node.id == "x":
            return lambda x: x
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            op, lhs, rhs = _BINOPS[type(node.op)], build(node.left), build(node.right)
            return lambda x: op(lhs(x), rhs(x))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNOPS:
            op, arg = _UNOPS[type(node.op)], build(node.operand)
            return lambda x: op(arg(x))
        raise InputError(f"unsupported element in map expression {text!r}: "
                         f"{ast.dump(node)[:40]}")

    fn = build(tree)

    def safe(x: float) -> float:
        try:
            return float(fn(x))
        except ZeroDivisionError:
            raise InputError(f"map expression {text!r} divides by zero at x={x}") from None

    return safe


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, allow_nan=False) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_validate(args) -> int:
    data = read_space_json(args.space)
    dist = data["dist"]
    s_min = None
    try:
        s_min = minimal_coefficient(dist)
    except InputError:
        pass  # axioms (i)-(ii) fail; the report below lists them
    s = data.get("s", s_min if s_min is not None else 1.0)
    report = validate_b_metric(dist, s)
    _emit({"s": float(s), "s_min": s_min, **report.to_dict()})
    _say(f"{'valid' if report.valid else 'INVALID'} b-metric with s={s} "
         f"({len(report.violations)} violations), s_min={s_min}")
    return 0 if report.valid else 1


def cmd_classify(args) -> int:
    space = FiniteBSpace.from_dict(read_space_json(args.space))
    fmap = load_map(args.map)
    if fmap.n != space.n:
        raise InputError(f"map has {fmap.n} entries but the space has {space.n} points")
    rep = classify_all(space, fmap)
    _emit({"points": list(space.points), "table": list(fmap.table), **rep.to_dict()})
    _say(f"banach={rep.banach.is_member} kannan={rep.kannan.is_member} "
         f"pa={rep.pa.is_member} alpha_min={rep.pa.alpha_min} n_min={rep.pa.n_min}")
    return 0


def cmd_census(args) -> int:
    if not 1 <= args.n <= MAX_ENUMERATION_N:
        raise InputError(f"--n must lie in [1, {MAX_ENUMERATION_N}] for exhaustive enumeration")
    spec = GeneratorSpec(args.n, KIND_ALIASES[args.kind], p=args.p, seed=args.seed)
    space = make_space(spec)
    report = CensusReport(space.n, space.s, space_fingerprint(space))
    for rec in census_records(space):
        _emit({"record": rec.to_dict()})
        report.add(rec)
    _emit({"census": report.to_dict()})
    _say(f"{report.total} maps; pa_not_banach={report.counts['pa_not_banach']} "
         f"banach_not_pa={report.counts['banach_not_pa']} "
         f"blocking={report.release_blocking or 'none'}")
    return 1 if report.release_blocking else 0


def cmd_solve(args) -> int:
    fn = parse_map_expr(args.map_expr)
    p = args.metric_power
    s = args.s if args.s is not None else 2.0 ** (p - 1)
    try:
        cfg = IterationConfig(alpha=args.alpha, s=s, max_iter=args.max_iter,
                              tolerance=args.tol, stop_rule=StopRule(args.stop_rule))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    try:
        res = picard_solve(fn, lambda x, y: abs(x - y) ** p, float(args.x0), cfg)
    except HypothesisError as exc:
        raise InputError(str(exc)) from None
    except OverflowError:
        raise InputError("iteration overflowed") from None
    _emit({"map_expr": args.map_expr, "metric_power": p, **res.to_dict()})
    _say(f"{res.status.value} after {res.iterations} iterations at x={res.point!r}, "
         f"certified={res.certificate.certified}")
    return 1 if res.status.value == "max_iter_reached" else 0


def cmd_reproduce(args) -> int:
    from .reproduce import run_checks

    results = run_checks()
    ok = all(r.passed for r in results)
    _emit({"passed": ok, "checks": [r.to_dict() for r in results]})
    for r in results:
        _say(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pacontract", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the b-metric axioms of a space file")
    p.add_argument("space")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="Banach / Kannan / PA verdicts for a map")
    p.add_argument("space")
    p.add_argument("map")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="classify every self-map of a generated space")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=sorted(KIND_ALIASES), default="discrete")
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("solve", help="certified Picard iteration for a 1-D map")
    p.add_argument("--map-expr", required=True)
    p.add_argument("--metric-power", type=float, default=1.0)
    p.add_argument("--x0", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--s", type=float, default=None, help="default 2**(p-1)")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iter", type=int, default=1000)
    p.add_argument("--stop-rule", choices=[r.value for r in StopRule],
                   default=StopRule.CERTIFIED_BOUND.value)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reproduce", aliases=["paper"],
                       help="run the worked-example and exhaustive property checklist")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        _say(f"error: {exc}")
        return 2
    except ValueError as exc:  # non-finite values cannot be written as JSON
        _say(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
