"""Interval vectors and matrices, power iteration and Schulz-Hotelling inversion.

All reductions run in a fixed left-to-right order so results are reproducible;
nothing collapses to endpoints between operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import AlgebraOrder
from .errors import (
    ConvergenceError,
    ModeMismatchError,
    OrderMismatchError,
    ShapeMismatchError,
    UnsupportedOrderError,
)
from .interval import (
    ArithmeticMode,
    IntervalNumber,
    format_interval,
    interval,
    parse_interval_literal,
    sqrt,
)
from .optimize import IterationRecord

__all__ = [
    "IntervalVector",
    "IntervalMatrix",
    "identity_matrix",
    "dot",
    "matvec",
    "matmul",
    "transpose",
    "frob_sq",
    "two_norm",
    "PowerIterationResult",
    "power_iterate",
    "schulz_invert",
    "parse_matrix_text",
    "format_matrix",
]


def _check_uniform(entries: Sequence[IntervalNumber], what: str) -> None:
    if not entries:
        raise ShapeMismatchError(f"{what} must not be empty")
    first = entries[0]
    for e in entries[1:]:
        if e.mode is not first.mode:
            raise ModeMismatchError(f"{what} mixes arithmetic modes")
        if e.order != first.order:
            raise OrderMismatchError(f"{what} mixes algebra orders")


@dataclass(frozen=True)
class IntervalVector:
    entries: tuple[IntervalNumber, ...]

    def __init__(self, entries: Sequence[IntervalNumber]):
        entries = tuple(entries)
        _check_uniform(entries, "vector")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[IntervalNumber]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> IntervalNumber:
        return self.entries[i]

    @property
    def mode(self) -> ArithmeticMode:
        return self.entries[0].mode

    @property
    def order(self) -> AlgebraOrder:
        return self.entries[0].order

    def __add__(self, other: "IntervalVector") -> "IntervalVector":
        if len(other) != len(self):
            raise ShapeMismatchError("vector lengths differ")
        return IntervalVector(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "IntervalVector") -> "IntervalVector":
        if len(other) != len(self):
            raise ShapeMismatchError("vector lengths differ")
        return IntervalVector(tuple(a - b for a, b in zip(self, other)))

    def scale(self, factor) -> "IntervalVector":
        return IntervalVector(tuple(e * factor for e in self.entries))


@dataclass(frozen=True)
class IntervalMatrix:
    rows: tuple[IntervalVector, ...]

    def __init__(self, rows: Sequence[IntervalVector | Sequence[IntervalNumber]]):
        rows = tuple(
            r if isinstance(r, IntervalVector) else IntervalVector(r) for r in rows
        )
        if not rows:
            raise ShapeMismatchError("matrix must not be empty")
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ShapeMismatchError("matrix rows have unequal lengths")
        _check_uniform(tuple(e for r in rows for e in r), "matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]))

    @property
    def mode(self) -> ArithmeticMode:
        return self.rows[0].mode

    @property
    def order(self) -> AlgebraOrder:
        return self.rows[0].order

    def __getitem__(self, ij: tuple[int, int]) -> IntervalNumber:
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "IntervalMatrix") -> "IntervalMatrix":
        if other.shape != self.shape:
            raise ShapeMismatchError("matrix shapes differ")
        return IntervalMatrix(tuple(a + b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "IntervalMatrix") -> "IntervalMatrix":
        if other.shape != self.shape:
            raise ShapeMismatchError("matrix shapes differ")
        return IntervalMatrix(tuple(a - b for a, b in zip(self.rows, other.rows)))

    def __mul__(self, other):
        if isinstance(other, IntervalMatrix):
            return matmul(self, other)
        return NotImplemented

    def __matmul__(self, other):
        if isinstance(other, IntervalMatrix):
            return matmul(self, other)
        if isinstance(other, IntervalVector):
            return matvec(self, other)
        return NotImplemented

    def scale(self, factor) -> "IntervalMatrix":
        return IntervalMatrix(tuple(r.scale(factor) for r in self.rows))

    @property
    def T(self) -> "IntervalMatrix":
        return transpose(self)


def identity_matrix(
    n: int,
    order: int | AlgebraOrder = 4,
    mode: ArithmeticMode = ArithmeticMode.TRUE,
) -> IntervalMatrix:
    one = interval(1.0, order=order, mode=mode)
    zero = interval(0.0, order=order, mode=mode)
    return IntervalMatrix(
        tuple(
            IntervalVector(tuple(one if i == j else zero for j in range(n)))
            for i in range(n)
        )
    )


def dot(u: IntervalVector, v: IntervalVector) -> IntervalNumber:
    if len(u) != len(v):
        raise ShapeMismatchError("vector lengths differ")
    acc = u[0] * v[0]
    for a, b in zip(u.entries[1:], v.entries[1:]):
        acc = acc + a * b
    return acc


def matvec(m: IntervalMatrix, u: IntervalVector) -> IntervalVector:
    if m.shape[1] != len(u):
        raise ShapeMismatchError(
            f"matrix of shape {m.shape} cannot multiply vector of length {len(u)}"
        )
    return IntervalVector(tuple(dot(row, u) for row in m.rows))


def transpose(m: IntervalMatrix) -> IntervalMatrix:
    nrows, ncols = m.shape
    return IntervalMatrix(
        tuple(
            IntervalVector(tuple(m.rows[i][j] for i in range(nrows)))
            for j in range(ncols)
        )
    )


def matmul(a: IntervalMatrix, b: IntervalMatrix) -> IntervalMatrix:
    if a.shape[1] != b.shape[0]:
        raise ShapeMismatchError(f"cannot multiply shapes {a.shape} and {b.shape}")
    bt = transpose(b)
    return IntervalMatrix(
        tuple(
            IntervalVector(tuple(dot(row, col) for col in bt.rows))
            for row in a.rows
        )
    )


def frob_sq(m: IntervalMatrix) -> IntervalNumber:
    """Sum of squared entries (row-major, left to right)."""
    acc = None
    for row in m.rows:
        for e in row:
            sq = e * e
            acc = sq if acc is None else acc + sq
    return acc


def two_norm(u: IntervalVector) -> IntervalNumber:
    """Euclidean norm through the algebra: sqrt of the sum of squares."""
    acc = u[0] * u[0]
    for e in u.entries[1:]:
        acc = acc + e * e
    return sqrt(acc)


@dataclass(frozen=True)
class PowerIterationResult:
    eigenvalue: IntervalNumber
    eigenvector: IntervalVector
    trace: tuple[IterationRecord, ...]


def power_iterate(
    m: IntervalMatrix, u0: IntervalVector, iters: int
) -> PowerIterationResult:
    """Normalized power iteration with a Rayleigh quotient estimate per step.

    Each step maps u to M u / ||M u||; the eigenvalue estimate after a step is
    <u, M u> / <u, u>.  The trace records the estimate's endpoints per step.
    """
    nrows, ncols = m.shape
    if nrows != ncols:
        raise ShapeMismatchError(f"matrix must be square, got shape {m.shape}")
    if len(u0) != nrows:
        raise ShapeMismatchError("start vector length does not match the matrix")
    if m.order != AlgebraOrder.ORDER_4:
        raise UnsupportedOrderError("power iteration divides, which needs order 4")
    if iters < 1:
        raise ValueError("iters must be at least 1")
    u = u0
    trace: list[IterationRecord] = []
    lam = None
    for k in range(1, iters + 1):
        w = matvec(m, u)
        norm = two_norm(w)
        u = IntervalVector(tuple(wi / norm for wi in w))
        lam = dot(u, matvec(m, u)) / dot(u, u)
        trace.append(IterationRecord(k, lam.raw))
    return PowerIterationResult(lam, u, tuple(trace))


def schulz_invert(
    m: IntervalMatrix,
    tol: float = 1e-12,
    max_iter: int = 100,
    residuals: list[float] | None = None,
) -> IntervalMatrix:
    """Quadratic inverse iteration X <- X (2I - M X), seeded with M^T / sum(M_ij^2).

    Stops when every entry of M X has midpoint within ``tol`` of the identity.
    Requires true arithmetic: the cancellation in 2I - M X is what keeps the
    iteration contracting.  ``residuals``, if given, collects the residual of
    each candidate X for convergence diagnostics.
    """
    nrows, ncols = m.shape
    if nrows != ncols:
        raise ShapeMismatchError(f"matrix must be square, got shape {m.shape}")
    if m.order != AlgebraOrder.ORDER_4:
        raise UnsupportedOrderError("matrix inversion divides, which needs order 4")
    if m.mode is not ArithmeticMode.TRUE:
        raise ModeMismatchError("schulz_invert requires true arithmetic")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = nrows
    scale = interval(1.0, order=m.order, mode=m.mode) / frob_sq(m)
    x = transpose(m).scale(scale)
    two_i = identity_matrix(n, m.order, m.mode).scale(2.0)
    resid = None
    for _ in range(max_iter):
        p = matmul(m, x)
        resid = max(
            abs(p[i, j].midpoint - (1.0 if i == j else 0.0))
            for i in range(n)
            for j in range(n)
        )
        if residuals is not None:
            residuals.append(resid)
        if resid < tol:
            return x
        x = matmul(x, two_i - p)
    raise ConvergenceError(
        f"matrix inversion did not reach tol={tol:g} after {max_iter} iterations "
        f"(last residual {resid:.3e})",
        residual=resid,
    )


# ---------------------------------------------------------------------------
# Text form: one row per line, entries comma separated, interval literals
# ---------------------------------------------------------------------------

def _split_entries(line: str) -> list[str]:
    # Commas inside [..] belong to the literal, not the row.
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in line:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p for p in (s.strip() for s in parts) if p]


def parse_matrix_text(
    text: str,
    order: int | AlgebraOrder = 4,
    mode: ArithmeticMode = ArithmeticMode.TRUE,
) -> IntervalMatrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        entries = [
            interval(*parse_interval_literal(tok), order=order, mode=mode)
            for tok in _split_entries(line)
        ]
        rows.append(IntervalVector(tuple(entries)))
    if not rows:
        raise ShapeMismatchError("matrix text contained no rows")
    return IntervalMatrix(tuple(rows))


def format_matrix(m: IntervalMatrix, raw: bool = False) -> str:
    """Session layout: rows of concatenated interval displays inside [* ... *]."""
    lines = ["[*"]
    for row in m.rows:
        lines.append("".join(format_interval(e.raw, raw=raw) for e in row))
    lines.append("*]")
    return "\n".join(lines)
