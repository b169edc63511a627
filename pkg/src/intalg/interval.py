"""Interval numbers backed by coefficient vectors in a generator algebra.

An interval is embedded once as a nonnegative combination of two adjacent
generators and then lives as a coefficient vector until a result is needed;
collapsing back to endpoints mid-computation would forfeit distributivity,
so arithmetic here never does it implicitly.

Two subtraction semantics coexist:

* ``TRUE``      - subtraction is coefficientwise, so x - x == [0, 0] and
                  finite differences of nearby intervals are small.
* ``SEMANTIC``  - subtraction is x + (-y) with set negation, matching
                  classical interval arithmetic.

Raw endpoint pairs may come out reversed (lo > hi); those are the "negative"
elements of the completed interval space.  Display and comparison use the
sorted (canonical) pair, the raw orientation is preserved internally.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator

from .algebra import (
    AlgebraElement,
    AlgebraOrder,
    _as_order,
    alg_inv,
    alg_mul,
    generator_endpoints,
)
from .errors import (
    DivisionNotAllowedError,
    DomainError,
    ModeMismatchError,
    NotInvertibleError,
    OrderMismatchError,
    UnsupportedOrderError,
)

__all__ = [
    "ArithmeticMode",
    "GeneralizedInterval",
    "IntervalNumber",
    "interval",
    "embed",
    "collapse",
    "compare",
    "contains",
    "scalar_add",
    "scalar_mul",
    "pow_int",
    "exp",
    "log",
    "sqrt",
    "mink_add",
    "mink_sub",
    "mink_mul",
    "mink_div",
    "format_number",
    "format_interval",
    "parse_interval_literal",
]


class ArithmeticMode(Enum):
    SEMANTIC = "semantic"
    TRUE = "true"


@dataclass(frozen=True)
class GeneralizedInterval:
    """An endpoint pair; improper (lo > hi) pairs are allowed."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", float(self.lo))
        object.__setattr__(self, "hi", float(self.hi))

    @property
    def is_proper(self) -> bool:
        return self.lo <= self.hi

    @property
    def canonical(self) -> "GeneralizedInterval":
        if self.lo <= self.hi:
            return self
        return GeneralizedInterval(self.hi, self.lo)

    @property
    def width(self) -> float:
        return abs(self.hi - self.lo)

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0

    @property
    def norm(self) -> float:
        return self.width + abs(self.midpoint)

    def __str__(self) -> str:
        return format_interval(self)


# ---------------------------------------------------------------------------
# Embedding and collapse
# ---------------------------------------------------------------------------

def _collapse_raw(order: AlgebraOrder, coeffs) -> tuple[float, float]:
    lo = 0.0
    hi = 0.0
    for c, (glo, ghi) in zip(coeffs, generator_endpoints(order)):
        lo += c * glo
        hi += c * ghi
    return lo, hi


def collapse(element: AlgebraElement) -> GeneralizedInterval:
    """Map a coefficient vector back to its endpoint pair (a lossy linear map)."""
    lo, hi = _collapse_raw(element.order, element.coeffs)
    return GeneralizedInterval(lo, hi)


def _neighbors(value: float) -> Iterator[float]:
    # The value itself first, then the four nearest doubles.
    yield value
    down = math.nextafter(value, -math.inf)
    up = math.nextafter(value, math.inf)
    yield down
    yield up
    yield math.nextafter(down, -math.inf)
    yield math.nextafter(up, math.inf)


def _best_two_ray(
    order: AlgebraOrder,
    lo: float,
    hi: float,
    idx_a: int,
    cands_a,
    idx_b: int,
    cands_b,
) -> list[float]:
    """Pick coefficients on two generator rays whose collapse best matches (lo, hi).

    The plain solve can land one ulp off an endpoint when an intermediate sum
    ties; probing the neighboring doubles recovers the exact preimage in every
    case observed, so the round trip collapse(embed(lo, hi)) stays exact.
    """
    n = int(order)
    best: list[float] | None = None
    best_err = math.inf
    for a in cands_a:
        if a < 0.0:
            continue
        for b in cands_b(a) if callable(cands_b) else cands_b:
            if b < 0.0:
                continue
            coeffs = [0.0] * n
            coeffs[idx_a] = a
            coeffs[idx_b] = b
            l2, h2 = _collapse_raw(order, coeffs)
            if l2 == lo and h2 == hi:
                return coeffs
            err = abs(l2 - lo) + abs(h2 - hi)
            if err < best_err:
                best_err = err
                best = coeffs
    assert best is not None
    return best


def _embed_zero_cone(lo: float, hi: float, order: AlgebraOrder) -> list[float]:
    # lo < 0 < hi strictly.  Generator rays fanning across the cone, sorted by
    # -lo/hi slope; the gates below are exact float comparisons.
    if order == AlgebraOrder.ORDER_4:
        n = int(order)
        coeffs = [0.0] * n
        coeffs[1] = hi
        coeffs[2] = -lo
        return coeffs
    if order == AlgebraOrder.ORDER_5:
        if -lo <= hi:
            # between [0,1] and [-1,1]: lo pins the e5 coefficient exactly
            return _best_two_ray(order, lo, hi, 4, (-lo,), 1, _neighbors(hi + lo))
        # between [-1,1] and [-1,0]: hi pins the e5 coefficient exactly
        return _best_two_ray(order, lo, hi, 4, (hi,), 2, _neighbors(-lo - hi))
    # order 7
    if -2.0 * lo <= hi:
        # between [0,1] and [-1/2,1]
        return _best_two_ray(
            order, lo, hi, 6, (-2.0 * lo,), 1, _neighbors(hi + 2.0 * lo)
        )
    if -lo <= hi:
        # between [-1/2,1] and [-1,1]: both rays touch both endpoints
        return _best_two_ray(
            order,
            lo,
            hi,
            6,
            _neighbors(2.0 * (lo + hi)),
            4,
            lambda a: _neighbors(hi - a),
        )
    if -lo <= 2.0 * hi:
        # between [-1,1] and [-1,1/2]
        return _best_two_ray(
            order,
            lo,
            hi,
            5,
            _neighbors(-2.0 * (lo + hi)),
            4,
            lambda a: _neighbors(hi - 0.5 * a),
        )
    # between [-1,1/2] and [-1,0]
    return _best_two_ray(order, lo, hi, 5, (2.0 * hi,), 2, _neighbors(-lo - 2.0 * hi))


def embed(lo: float, hi: float, order: int | AlgebraOrder = 4) -> AlgebraElement:
    """Embed an endpoint pair as nonnegative coordinates on two adjacent rays.

    Improper pairs embed as the negation of the mirrored proper pair, so the
    collapse of the result always reproduces (lo, hi).
    """
    order = _as_order(order)
    lo = float(lo)
    hi = float(hi)
    if lo > hi:
        return -embed(-lo, -hi, order)
    n = int(order)
    coeffs = [0.0] * n
    if lo >= 0.0:
        return AlgebraElement(
            order,
            tuple(
                _best_two_ray(order, lo, hi, 0, (lo,), 1, _neighbors(hi - lo))
            ),
        )
    if hi <= 0.0:
        return AlgebraElement(
            order,
            tuple(
                _best_two_ray(order, lo, hi, 3, (-hi,), 2, _neighbors(hi - lo))
            ),
        )
    return AlgebraElement(order, tuple(_embed_zero_cone(lo, hi, order)))


# ---------------------------------------------------------------------------
# Interval numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class IntervalNumber:
    """An algebra element tagged with an arithmetic mode.

    Values are immutable; equality and ordering act on the canonical endpoint
    pair (two distinct elements can denote the same interval), while
    :meth:`same_element` compares the underlying coefficient vectors.
    """

    mode: ArithmeticMode
    element: AlgebraElement

    @property
    def order(self) -> AlgebraOrder:
        return self.element.order

    @property
    def raw(self) -> GeneralizedInterval:
        return collapse(self.element)

    @property
    def canonical(self) -> GeneralizedInterval:
        return self.raw.canonical

    @property
    def min(self) -> float:
        return self.canonical.lo

    @property
    def max(self) -> float:
        return self.canonical.hi

    @property
    def width(self) -> float:
        return self.raw.width

    @property
    def midpoint(self) -> float:
        return self.raw.midpoint

    @property
    def norm(self) -> float:
        return self.raw.norm

    def __abs__(self) -> float:
        return self.norm

    def __str__(self) -> str:
        return format_interval(self.raw)

    def __repr__(self) -> str:
        r = self.raw
        return (
            f"IntervalNumber(({r.lo!r}, {r.hi!r}), order={int(self.order)}, "
            f"mode={self.mode.value})"
        )

    # -- coercion and compatibility checks ---------------------------------

    def _coerce(self, other) -> "IntervalNumber | None":
        if isinstance(other, IntervalNumber):
            if other.mode is not self.mode:
                raise ModeMismatchError(
                    f"mixed arithmetic modes: {self.mode.value} vs {other.mode.value}"
                )
            if other.order != self.order:
                raise OrderMismatchError(
                    f"mixed algebra orders: {int(self.order)} vs {int(other.order)}"
                )
            return other
        if isinstance(other, (int, float)):
            v = float(other)
            return IntervalNumber(self.mode, embed(v, v, self.order))
        return None

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self) -> "IntervalNumber":
        if self.mode is ArithmeticMode.TRUE:
            return IntervalNumber(self.mode, -self.element)
        c = self.canonical
        return IntervalNumber(self.mode, embed(-c.hi, -c.lo, self.order))

    def __add__(self, other) -> "IntervalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntervalNumber(self.mode, self.element + o.element)

    __radd__ = __add__

    def __sub__(self, other) -> "IntervalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.mode is ArithmeticMode.TRUE:
            return IntervalNumber(self.mode, self.element - o.element)
        return self + (-o)

    def __rsub__(self, other) -> "IntervalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other) -> "IntervalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntervalNumber(self.mode, alg_mul(self.element, o.element))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "IntervalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _divide(self, o)

    def __rtruediv__(self, other) -> "IntervalNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _divide(o, self)

    def __pow__(self, exponent) -> "IntervalNumber":
        return pow_int(self, exponent)

    # -- ordering and containment -------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, float)):
            other = IntervalNumber(self.mode, embed(float(other), float(other), self.order))
        if not isinstance(other, IntervalNumber):
            return NotImplemented
        a, b = self.canonical, other.canonical
        return a.lo == b.lo and a.hi == b.hi

    def __hash__(self) -> int:
        c = self.canonical
        return hash((c.lo, c.hi))

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def _as_interval_number(self, other) -> "IntervalNumber":
        # comparisons and containment act on canonical pairs only, so they
        # accept any mode/order combination (unlike arithmetic)
        if isinstance(other, IntervalNumber):
            return other
        if isinstance(other, (int, float)):
            v = float(other)
            return IntervalNumber(self.mode, embed(v, v, self.order))
        raise TypeError(f"cannot compare IntervalNumber with {type(other)!r}")

    def _cmp(self, other) -> int:
        return compare(self, self._as_interval_number(other))

    def contains(self, other) -> bool:
        """Set containment of the canonical intervals."""
        if isinstance(other, (int, float)):
            v = float(other)
            c = self.canonical
            return c.lo <= v <= c.hi
        o = self._as_interval_number(other)
        a, b = self.canonical, o.canonical
        return a.lo <= b.lo and b.hi <= a.hi

    def same_element(self, other: "IntervalNumber") -> bool:
        """Identity of the underlying coefficient vectors (not just the interval)."""
        return (
            self.order == other.order
            and self.element.coeffs == other.element.coeffs
        )


def _divide(x: IntervalNumber, y: IntervalNumber) -> IntervalNumber:
    if x.order != AlgebraOrder.ORDER_4:
        raise UnsupportedOrderError(
            f"interval division is only defined at order 4 (got order {int(x.order)})"
        )
    try:
        inv = alg_inv(y.element)
    except NotInvertibleError:
        raise DivisionNotAllowedError(
            f"interval division not allowed: divisor {format_interval(y.raw)} "
            "is not invertible",
            divisor=y,
        ) from None
    return IntervalNumber(x.mode, alg_mul(x.element, inv))


def interval(
    lo: float,
    hi: float | None = None,
    *,
    eps: float | None = None,
    order: int | AlgebraOrder = 4,
    mode: ArithmeticMode = ArithmeticMode.TRUE,
) -> IntervalNumber:
    """Build an interval number.

    ``interval(a, b)`` is [a, b]; ``interval(c)`` the point interval [c, c];
    ``interval(c, eps=e)`` the ball [c - e, c + e].
    """
    if eps is not None:
        if hi is not None:
            raise ValueError("give either hi or eps, not both")
        if eps < 0:
            raise ValueError("eps must be nonnegative")
        lo, hi = float(lo) - eps, float(lo) + eps
    elif hi is None:
        hi = lo
    return IntervalNumber(mode, embed(float(lo), float(hi), order))


def compare(x: IntervalNumber, y: IntervalNumber) -> int:
    """Total order: midpoint first for non-nested pairs, width first for nested.

    Ties on the deciding key fall through to the other key; a full tie means
    equal.  Returns -1, 0 or 1.
    """
    a, b = x.canonical, y.canonical
    nested = (a.lo <= b.lo and b.hi <= a.hi) or (b.lo <= a.lo and a.hi <= b.hi)
    if nested:
        keys = ((a.width, b.width), (a.midpoint, b.midpoint))
    else:
        keys = ((a.midpoint, b.midpoint), (a.width, b.width))
    for ka, kb in keys:
        if ka < kb:
            return -1
        if ka > kb:
            return 1
    return 0


def contains(outer: GeneralizedInterval, inner: GeneralizedInterval) -> bool:
    """Canonical set containment for endpoint pairs."""
    a, b = outer.canonical, inner.canonical
    return a.lo <= b.lo and b.hi <= a.hi


def scalar_add(a: float, x: IntervalNumber) -> IntervalNumber:
    return x + float(a)


def scalar_mul(a: float, x: IntervalNumber) -> IntervalNumber:
    """Scale by a real: nonnegative factors scale coefficients directly."""
    a = float(a)
    if a >= 0.0 or x.mode is ArithmeticMode.TRUE:
        return IntervalNumber(x.mode, x.element.scale(a))
    return scalar_mul(-a, -x)


def pow_int(x: IntervalNumber, exponent: int) -> IntervalNumber:
    """Left-fold power through the algebra product; exponent must be >= 0."""
    if not isinstance(exponent, int) or isinstance(exponent, bool):
        raise ValueError(f"integer exponent required, got {exponent!r}")
    if exponent < 0:
        raise ValueError("negative exponents are not supported")
    result = IntervalNumber(x.mode, AlgebraElement.unit(x.order))
    for _ in range(exponent):
        result = result * x
    return result


# ---------------------------------------------------------------------------
# Monotone function lifting
# ---------------------------------------------------------------------------

def _lift(fn: Callable[[float], float], x: IntervalNumber) -> IntervalNumber:
    r = x.raw
    return IntervalNumber(x.mode, embed(fn(r.lo), fn(r.hi), x.order))


def exp(x: IntervalNumber) -> IntervalNumber:
    """Endpoint lift of exp; improper orientation is preserved."""
    return _lift(math.exp, x)


def log(x: IntervalNumber) -> IntervalNumber:
    if x.canonical.lo <= 0.0:
        raise DomainError(
            f"log requires a strictly positive interval, got {format_interval(x.raw)}"
        )
    return _lift(math.log, x)


def sqrt(x: IntervalNumber) -> IntervalNumber:
    if x.canonical.lo < 0.0:
        raise DomainError(
            f"sqrt requires a nonnegative interval, got {format_interval(x.raw)}"
        )
    return _lift(math.sqrt, x)


# ---------------------------------------------------------------------------
# Minkowski (set extension) reference arithmetic
# ---------------------------------------------------------------------------

def _require_proper(g: GeneralizedInterval, op: str) -> GeneralizedInterval:
    if not g.is_proper:
        raise ValueError(f"{op} requires proper intervals, got {g!r}")
    return g


def mink_add(x: GeneralizedInterval, y: GeneralizedInterval) -> GeneralizedInterval:
    x = _require_proper(x, "mink_add")
    y = _require_proper(y, "mink_add")
    return GeneralizedInterval(x.lo + y.lo, x.hi + y.hi)


def mink_sub(x: GeneralizedInterval, y: GeneralizedInterval) -> GeneralizedInterval:
    x = _require_proper(x, "mink_sub")
    y = _require_proper(y, "mink_sub")
    return GeneralizedInterval(x.lo - y.hi, x.hi - y.lo)


def mink_mul(x: GeneralizedInterval, y: GeneralizedInterval) -> GeneralizedInterval:
    x = _require_proper(x, "mink_mul")
    y = _require_proper(y, "mink_mul")
    products = (x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi)
    return GeneralizedInterval(min(products), max(products))


def mink_div(x: GeneralizedInterval, y: GeneralizedInterval) -> GeneralizedInterval:
    x = _require_proper(x, "mink_div")
    y = _require_proper(y, "mink_div")
    if y.lo <= 0.0 <= y.hi:
        raise ZeroDivisionError(
            f"mink_div by an interval containing zero: {y!r}"
        )
    quotients = (x.lo / y.lo, x.lo / y.hi, x.hi / y.lo, x.hi / y.hi)
    return GeneralizedInterval(min(quotients), max(quotients))


# ---------------------------------------------------------------------------
# Display formats and literals
# ---------------------------------------------------------------------------

def format_number(value: float) -> str:
    """12 significant digits, with a trailing .0 on integral values."""
    if value == 0.0:
        value = 0.0  # never print the sign of a negative zero
    s = "%.12g" % value
    if s.lstrip("+-").isdigit():
        s += ".0"
    return s


def format_interval(g: GeneralizedInterval, raw: bool = False) -> str:
    if raw:
        return f"({format_number(g.lo)},{format_number(g.hi)})"
    c = g.canonical
    return f"[{format_number(c.lo)},{format_number(c.hi)}]"


_NUM = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_BRACKET_RE = re.compile(rf"^\[\s*({_NUM})\s*,\s*({_NUM})\s*\]$")
_BALL_RE = re.compile(rf"^({_NUM})\s*(?:±|\+-)\s*({_NUM})$")
_BARE_RE = re.compile(rf"^({_NUM})$")


def parse_interval_literal(text: str) -> tuple[float, float]:
    """Parse "[a,b]", "c±e" (ASCII synonym "c+-e") or a bare number."""
    s = text.strip()
    m = _BRACKET_RE.match(s)
    if m:
        return float(m.group(1)), float(m.group(2))
    m = _BALL_RE.match(s)
    if m:
        c, e = float(m.group(1)), float(m.group(2))
        if e < 0:
            raise ValueError(f"negative radius in interval literal: {text!r}")
        return c - e, c + e
    m = _BARE_RE.match(s)
    if m:
        v = float(m.group(1))
        return v, v
    raise ValueError(f"invalid interval literal: {text!r}")
