"""Command-line front end: calculator, product comparison, optimizers, linalg demos."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import AlgebraOrder
from .errors import (
    ConvergenceError,
    DivisionNotAllowedError,
    DomainError,
    EvalError,
    ExprSyntaxError,
    IntalgError,
    ModeMismatchError,
    NotInvertibleError,
    OrderMismatchError,
    ShapeMismatchError,
    UnsupportedOrderError,
)
from .exprcalc import evaluate, parse
from .interval import (
    ArithmeticMode,
    format_interval,
    format_number,
    interval,
    mink_mul,
    parse_interval_literal,
)
from .linalg import (
    IntervalMatrix,
    IntervalVector,
    format_matrix,
    matmul,
    parse_matrix_text,
    power_iterate,
    schulz_invert,
)
from .optimize import (
    FdStyle,
    OptimizerConfig,
    gradient_descent,
    newton_raphson,
    write_trace_csv,
)

_INPUT_ERRORS = (
    ExprSyntaxError,
    EvalError,
    ValueError,
    OSError,
    ShapeMismatchError,
    ModeMismatchError,
    OrderMismatchError,
    UnsupportedOrderError,
)
_ALGO_ERRORS = (
    ConvergenceError,
    DivisionNotAllowedError,
    NotInvertibleError,
    DomainError,
    ZeroDivisionError,
)

DEMO_MATRICES = {
    "paper2x2": ((1.0, 2.0), (3.0, 4.0)),
    "paper3x3": ((1.0, 4.0, 5.0), (4.0, 2.0, 6.0), (5.0, 6.0, 3.0)),
}


def _mode(args) -> ArithmeticMode:
    return ArithmeticMode(args.mode)


def _fmt(args, x) -> str:
    return format_interval(x.raw, raw=args.raw)


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--mode",
        choices=[m.value for m in ArithmeticMode],
        default=ArithmeticMode.TRUE.value,
        help="arithmetic mode (default: true)",
    )
    p.add_argument(
        "--order",
        type=int,
        choices=[int(o) for o in AlgebraOrder],
        default=4,
        help="algebra order (default: 4; division needs 4)",
    )
    p.add_argument(
        "--raw",
        action="store_true",
        help="print raw (lo,hi) pairs instead of canonical [min,max]",
    )


def _parse_binding(text: str) -> tuple[str, tuple[float, float]]:
    name, sep, literal = text.partition("=")
    name = name.strip()
    if not sep or not name.isidentifier():
        raise ValueError(f"invalid binding {text!r}; expected NAME=INTERVAL")
    return name, parse_interval_literal(literal.strip())


def _cmd_calc(args) -> int:
    mode = _mode(args)
    bindings = {}
    for binding in args.let or []:
        name, (lo, hi) = _parse_binding(binding)
        bindings[name] = interval(lo, hi, order=args.order, mode=mode)
    ast = parse(args.expr)
    result = evaluate(ast, bindings, mode=mode, order=args.order)
    print(_fmt(args, result))
    return 0


def _cmd_compare_mul(args) -> int:
    x = parse_interval_literal(args.x)
    y = parse_interval_literal(args.y)
    if x[0] > x[1] or y[0] > y[1]:
        raise ValueError("compare-mul needs proper intervals")
    rows = []
    mk = mink_mul(interval(*x).raw, interval(*y).raw)
    rows.append(("minkowski", mk))
    for order in (4, 5, 7):
        prod = interval(*x, order=order) * interval(*y, order=order)
        rows.append((f"order-{order}", prod.raw))
    for label, g in rows:
        c = g.canonical
        print(
            f"{label:<10} {format_interval(g, raw=args.raw):<32} "
            f"width {format_number(c.width)}"
        )
    return 0


def _make_function(expr_text: str, mode: ArithmeticMode, order: int):
    ast = parse(expr_text)

    def f(x):
        return evaluate(ast, {"x": x}, mode=mode, order=order)

    return f


def _run_optimizer(args, runner) -> int:
    mode = _mode(args)
    f = _make_function(args.expr, mode, args.order)
    lo, hi = parse_interval_literal(args.x0)
    x0 = interval(lo, hi, order=args.order, mode=mode)
    cfg = OptimizerConfig(
        h=args.h,
        rho=getattr(args, "rho", 1e-2),
        eps=args.eps,
        max_iter=args.max_iter,
        style=FdStyle(args.style),
    )
    try:
        trace = runner(f, x0, cfg)
    except ConvergenceError as err:
        if args.csv and err.trace:
            write_trace_csv(args.csv, err.trace)
        raise
    if args.csv:
        write_trace_csv(args.csv, trace)
    last = trace[-1]
    print(f"final: {format_interval(last.x, raw=args.raw)}")
    print(f"iterations: {last.index}")
    return 0


def _cmd_gradient(args) -> int:
    return _run_optimizer(args, gradient_descent)


def _cmd_newton(args) -> int:
    return _run_optimizer(args, newton_raphson)


def _load_matrix(args) -> IntervalMatrix:
    mode = _mode(args)
    if args.file:
        text = Path(args.file).read_text(encoding="utf-8")
        return parse_matrix_text(text, order=args.order, mode=mode)
    centers = DEMO_MATRICES[args.demo]
    eps = args.eps
    return IntervalMatrix(
        tuple(
            IntervalVector(
                tuple(
                    interval(c, eps=eps, order=args.order, mode=mode) for c in row
                )
            )
            for row in centers
        )
    )


def _cmd_eigen(args) -> int:
    m = _load_matrix(args)
    n = m.shape[0]
    u0 = IntervalVector(
        tuple(interval(1.0, order=args.order, mode=m.mode) for _ in range(n))
    )
    result = power_iterate(m, u0, args.iters)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("iter,lambda_lo,lambda_hi\n")
            for rec in result.trace:
                c = rec.x.canonical
                fh.write(
                    f"{rec.index},{format_number(c.lo)},{format_number(c.hi)}\n"
                )
    print(f"eigenvalue: {_fmt(args, result.eigenvalue)}")
    print("eigenvector:")
    for entry in result.eigenvector:
        print(f"  {_fmt(args, entry)}")
    print(f"iterations: {args.iters}")
    return 0


def _cmd_invert(args) -> int:
    m = _load_matrix(args)
    inv = schulz_invert(m, tol=args.tol, max_iter=args.max_iter)
    inv_inv = schulz_invert(inv, tol=args.tol, max_iter=args.max_iter)
    print(f"M= {format_matrix(m, raw=args.raw)}")
    print(f"Inverse matrix = {format_matrix(inv, raw=args.raw)}")
    print(f"M^(-1)*M= {format_matrix(matmul(inv, m), raw=args.raw)}")
    print(f"M*M^(-1)= {format_matrix(matmul(m, inv), raw=args.raw)}")
    print(f"(M^(-1))^(-1)= {format_matrix(inv_inv, raw=args.raw)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intalg",
        description=(
            "Interval arithmetic in associative algebras: distributive products, "
            "two subtraction semantics, interval linear algebra and optimization."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("calc", help="evaluate an interval expression")
    _common_flags(p)
    p.add_argument(
        "--let",
        action="append",
        metavar="NAME=INTERVAL",
        help="bind a variable, e.g. --let a=[-1,2] (repeatable)",
    )
    p.add_argument("expr", help="expression, e.g. 'a*b+a*c'")
    p.set_defaults(handler=_cmd_calc, algo_exit=2)

    p = sub.add_parser(
        "compare-mul", help="compare a product across the set extension and all orders"
    )
    _common_flags(p)
    p.add_argument("--x", required=True, help="left factor, e.g. [-2,3]")
    p.add_argument("--y", required=True, help="right factor, e.g. [-4,2]")
    p.set_defaults(handler=_cmd_compare_mul, algo_exit=2)

    for name, handler, eps_default in (
        ("gradient", _cmd_gradient, 1e-6),
        ("newton", _cmd_newton, 1e-10),
    ):
        p = sub.add_parser(name, help=f"run {name} on an expression in x")
        _common_flags(p)
        p.add_argument("--expr", required=True, help="objective, e.g. 'x*exp(x)'")
        p.add_argument("--x0", required=True, help="start interval, e.g. 2±0.1")
        if name == "gradient":
            p.add_argument("--rho", type=float, default=1e-2, help="step size")
        p.add_argument("--h", type=float, default=1e-6, help="finite-difference step")
        p.add_argument(
            "--eps", type=float, default=eps_default, help="derivative-norm stop"
        )
        p.add_argument(
            "--style",
            choices=[s.value for s in FdStyle],
            default=FdStyle.MIDPOINT.value,
            help="finite-difference style",
        )
        p.add_argument("--max-iter", type=int, default=100_000)
        p.add_argument("--csv", help="write the iteration trace to this path")
        p.set_defaults(handler=handler, algo_exit=3)

    for name, handler in (("eigen", _cmd_eigen), ("invert", _cmd_invert)):
        p = sub.add_parser(
            name,
            help=(
                "power iteration on an interval matrix"
                if name == "eigen"
                else "Schulz-Hotelling inversion of an interval matrix"
            ),
        )
        _common_flags(p)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--file", help="matrix file (rows of interval literals)")
        src.add_argument("--demo", choices=sorted(DEMO_MATRICES))
        p.add_argument(
            "--eps", type=float, default=0.0, help="entry radius for --demo matrices"
        )
        if name == "eigen":
            p.add_argument("--iters", type=int, default=10)
            p.add_argument("--csv", help="write per-iteration eigenvalue bounds")
        else:
            p.add_argument("--tol", type=float, default=1e-12)
            p.add_argument("--max-iter", type=int, default=100)
        p.set_defaults(handler=handler, algo_exit=3)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _ALGO_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return args.algo_exit
    except _INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except IntalgError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
