"""Interval arithmetic embedded in finite-dimensional associative algebras.

Intervals live as coefficient vectors over a small generator basis (orders 4,
5 or 7), where multiplication distributes over addition and subtraction and
repeated variables cause no enclosure blow-up.  On top of the scalar
arithmetic sit interval vectors and matrices (power iteration,
Schulz-Hotelling inversion), finite-difference optimizers and an expression
calculator with a command-line front end.
"""

from .algebra import (
    AlgebraElement,
    AlgebraOrder,
    SplitCoords,
    alg_inv,
    alg_mul,
    from_split,
    generator_endpoints,
    is_invertible,
    structure_table,
    to_split,
)
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
from .exprcalc import evaluate, parse, unparse
from .interval import (
    ArithmeticMode,
    GeneralizedInterval,
    IntervalNumber,
    collapse,
    compare,
    contains,
    embed,
    exp,
    format_interval,
    format_number,
    interval,
    log,
    mink_add,
    mink_div,
    mink_mul,
    mink_sub,
    parse_interval_literal,
    pow_int,
    scalar_add,
    scalar_mul,
    sqrt,
)
from .linalg import (
    IntervalMatrix,
    IntervalVector,
    PowerIterationResult,
    dot,
    format_matrix,
    frob_sq,
    identity_matrix,
    matmul,
    matvec,
    parse_matrix_text,
    power_iterate,
    schulz_invert,
    transpose,
    two_norm,
)
from .optimize import (
    FdStyle,
    IterationRecord,
    OptimizerConfig,
    fd_first,
    fd_second,
    gradient_descent,
    newton_raphson,
    write_trace_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement",
    "AlgebraOrder",
    "ArithmeticMode",
    "ConvergenceError",
    "DivisionNotAllowedError",
    "DomainError",
    "EvalError",
    "ExprSyntaxError",
    "FdStyle",
    "GeneralizedInterval",
    "IntalgError",
    "IntervalMatrix",
    "IntervalNumber",
    "IntervalVector",
    "IterationRecord",
    "ModeMismatchError",
    "NotInvertibleError",
    "OptimizerConfig",
    "OrderMismatchError",
    "PowerIterationResult",
    "ShapeMismatchError",
    "SplitCoords",
    "UnsupportedOrderError",
    "alg_inv",
    "alg_mul",
    "collapse",
    "compare",
    "contains",
    "dot",
    "embed",
    "evaluate",
    "exp",
    "fd_first",
    "fd_second",
    "format_interval",
    "format_matrix",
    "format_number",
    "from_split",
    "frob_sq",
    "generator_endpoints",
    "gradient_descent",
    "identity_matrix",
    "interval",
    "is_invertible",
    "log",
    "matmul",
    "matvec",
    "mink_add",
    "mink_div",
    "mink_mul",
    "mink_sub",
    "newton_raphson",
    "parse",
    "parse_interval_literal",
    "parse_matrix_text",
    "pow_int",
    "power_iterate",
    "scalar_add",
    "scalar_mul",
    "schulz_invert",
    "sqrt",
    "structure_table",
    "to_split",
    "transpose",
    "two_norm",
    "unparse",
    "write_trace_csv",
]
