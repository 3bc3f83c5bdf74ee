"""Exact scalars: rationals (``gmpy2.mpq``) and elements of real or imaginary
quadratic fields Q(sqrt d).

A ``Quad`` always has a nonzero irrational part; any operation whose result
has zero irrational part collapses back to a plain ``mpq``.  This keeps
equality and hashing canonical: a rational value has exactly one
representation.
"""

from __future__ import annotations

import ast
import numbers
from functools import lru_cache
from typing import Union

import gmpy2
from gmpy2 import mpq

from .errors import DivisionByZero, IncompatibleFields, ScalarParseError

MPQ = type(mpq(0))
Scalar = Union[MPQ, "Quad"]

__all__ = [
    "MPQ",
    "Quad",
    "QQ",
    "Scalar",
    "arith",
    "as_rational",
    "conjugate",
    "field_of",
    "format_scalar",
    "is_rational",
    "parse_scalar",
    "quad",
    "sqrt_rational",
    "squarefree_decompose",
]


def QQ(x) -> MPQ:
    """Coerce ints, Fractions, decimal-free strings and mpq to ``mpq``."""
    if isinstance(x, MPQ):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, numbers.Rational)):
        return mpq(x)
    if isinstance(x, str):
        try:
            return mpq(x.strip())
        except ValueError as exc:
            raise ScalarParseError(f"not a rational: {x!r}") from exc
    if isinstance(x, Quad):
        raise TypeError(f"{x} is irrational")
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


@lru_cache(maxsize=256)
def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write ``n = s**2 * d`` with ``s >= 0`` and ``d`` squarefree (sign kept in d)."""
    n = int(n)
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    m = abs(n)
    if gmpy2.is_square(m):
        return int(gmpy2.isqrt(m)), sign
    s, d = 1, 1
    p = 2
    while p < 10_000 and p * p <= m:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
        p = int(gmpy2.next_prime(p))
    if m > 1:
        if gmpy2.is_square(m):
            s *= int(gmpy2.isqrt(m))
        elif p * p > m or gmpy2.is_prime(m):
            d *= m
        else:
            from sympy import factorint  # large composite cofactor

            for q, e in factorint(m).items():
                s *= q ** (e // 2)
                if e % 2:
                    d *= q
    return s, sign * d


class Quad:
    """``a + b*sqrt(d)`` with rational a, b (b != 0) and squarefree d not in {0, 1}."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        a, b, d = QQ(a), QQ(b), int(d)
        if b == 0:
            raise ValueError("Quad needs a nonzero irrational part; use quad() to collapse")
        if d in (0, 1) or squarefree_decompose(d)[0] != 1:
            raise ValueError(f"d={d} is not a squarefree non-unit")
        self.a, self.b, self.d = a, b, d

    @classmethod
    def _raw(cls, a, b, d):
        q = object.__new__(cls)
        q.a, q.b, q.d = a, b, d
        return q

    def __reduce__(self):
        return (Quad, (self.a, self.b, self.d))

    # arithmetic -------------------------------------------------------
    def _field(self, other: Quad) -> int:
        if other.d != self.d:
            raise IncompatibleFields(f"Q(sqrt {self.d}) vs Q(sqrt {other.d})")
        return self.d

    def __add__(self, o):
        if isinstance(o, Quad):
            return _mk(self.a + o.a, self.b + o.b, self._field(o))
        if isinstance(o, (int, MPQ)):
            return Quad._raw(self.a + o, self.b, self.d)
        if isinstance(o, numbers.Rational):
            return Quad._raw(self.a + mpq(o), self.b, self.d)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Quad._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, o):
        if isinstance(o, Quad):
            return _mk(self.a - o.a, self.b - o.b, self._field(o))
        if isinstance(o, (int, MPQ)):
            return Quad._raw(self.a - o, self.b, self.d)
        if isinstance(o, numbers.Rational):
            return Quad._raw(self.a - mpq(o), self.b, self.d)
        return NotImplemented

    def __rsub__(self, o):
        if isinstance(o, (int, MPQ)):
            return Quad._raw(o - self.a, -self.b, self.d)
        if isinstance(o, numbers.Rational):
            return Quad._raw(mpq(o) - self.a, -self.b, self.d)
        return NotImplemented

    def __mul__(self, o):
        if isinstance(o, Quad):
            d = self._field(o)
            return _mk(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)
        if isinstance(o, (int, MPQ)):
            return _mk(self.a * o, self.b * o, self.d)
        if isinstance(o, numbers.Rational):
            o = mpq(o)
            return _mk(self.a * o, self.b * o, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def norm(self) -> MPQ:
        return self.a * self.a - self.d * self.b * self.b

    def trace(self) -> MPQ:
        return 2 * self.a

    def conjugate(self) -> Quad:
        return Quad._raw(self.a, -self.b, self.d)

    def inverse(self) -> Quad:
        # a nonzero Quad has nonzero norm since d is not a square
        n = self.norm()
        return Quad._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, o):
        if isinstance(o, Quad):
            self._field(o)
            return self * o.inverse()
        if isinstance(o, (int, MPQ, numbers.Rational)):
            if o == 0:
                raise DivisionByZero("division by zero")
            o = mpq(o)
            return Quad._raw(self.a / o, self.b / o, self.d)
        return NotImplemented

    def __rtruediv__(self, o):
        if isinstance(o, (int, MPQ, numbers.Rational)):
            return mpq(o) * self.inverse()
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result: Scalar = mpq(1)
        base: Scalar = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison -------------------------------------------------------
    def __eq__(self, o):
        if isinstance(o, Quad):
            return self.d == o.d and self.a == o.a and self.b == o.b
        if isinstance(o, (int, numbers.Rational)):
            return False
        return NotImplemented

    def __ne__(self, o):
        r = self.__eq__(o)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return True

    def __float__(self):
        if self.d < 0:
            raise TypeError("imaginary quadratic element has no real value")
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __lt__(self, o):
        return _sign(self - o) < 0

    def __gt__(self, o):
        return _sign(self - o) > 0

    def __le__(self, o):
        return _sign(self - o) <= 0

    def __ge__(self, o):
        return _sign(self - o) >= 0

    def __repr__(self):
        return f"Quad({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


def _mk(a, b, d):
    # internal constructor for already-canonical d
    return a if b == 0 else Quad._raw(a, b, d)


def _sign(x) -> int:
    """Sign of a real scalar, computed exactly."""
    if not isinstance(x, Quad):
        return (x > 0) - (x < 0)
    if x.d < 0:
        raise TypeError("imaginary quadratic elements are not ordered")
    # sign(a + b sqrt d): compare a^2 with b^2 d when signs differ
    sa, sb = (x.a > 0) - (x.a < 0), (x.b > 0) - (x.b < 0)
    if sa == sb or sa == 0:
        return sb
    return sa if x.a * x.a > x.b * x.b * x.d else sb


def quad(a, b, d: int) -> Scalar:
    """Build ``a + b*sqrt(d)``, collapsing to ``mpq`` when the irrational part vanishes.

    ``d`` need not be squarefree here; square factors move into ``b``.
    """
    a, b = QQ(a), QQ(b)
    if b == 0:
        return a
    s, d0 = squarefree_decompose(int(d))
    if d0 == 1 or s == 0:
        return a + b * s
    return Quad._raw(a, b * s, d0) if s != 1 else Quad._raw(a, b, d0)


def sqrt_rational(q) -> Scalar:
    """Exact square root of a rational as an element of Q or Q(sqrt d)."""
    q = QQ(q)
    if q == 0:
        return mpq(0)
    num, den = int(q.numerator), int(q.denominator)
    # sqrt(num/den) = sqrt(num*den)/den
    s, d = squarefree_decompose(num * den)
    if d == 1:
        return mpq(s, den)
    return Quad._raw(mpq(0), mpq(s, den), d)


def is_rational(x) -> bool:
    return not isinstance(x, Quad)


def field_of(x) -> int | None:
    """The radicand d when x is irrational, else None."""
    return x.d if isinstance(x, Quad) else None


def conjugate(x) -> Scalar:
    return x.conjugate() if isinstance(x, Quad) else x


def as_rational(x) -> MPQ | None:
    """x as an mpq, or None when x is irrational."""
    if isinstance(x, Quad):
        return None
    return QQ(x)


def arith(op: str, x, y) -> Scalar:
    """Dispatch ``op`` in {'+', '-', '*', '/'} on two scalars."""
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    if op == "*":
        return x * y
    if op == "/":
        if y == 0:
            raise DivisionByZero(f"{x} / 0")
        if isinstance(x, Quad) or isinstance(y, Quad):
            return x / y
        return QQ(x) / QQ(y)
    raise ValueError(f"unknown operator {op!r}")


# text form ------------------------------------------------------------

def _fmt_q(q: MPQ) -> str:
    return str(q)


def format_scalar(x) -> str:
    """Canonical text ``a+b*sqrt(d)``; rationals print as ``p/q``."""
    if not isinstance(x, Quad):
        return _fmt_q(QQ(x))
    root = f"sqrt({x.d})"
    if x.b == 1:
        bpart = root
    elif x.b == -1:
        bpart = "-" + root
    else:
        bpart = f"{_fmt_q(x.b)}*{root}"
    if x.a == 0:
        return bpart
    sep = "" if bpart.startswith("-") else "+"
    return f"{_fmt_q(x.a)}{sep}{bpart}"


def _eval_scalar_node(node) -> Scalar:
    if isinstance(node, ast.Expression):
        return _eval_scalar_node(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return mpq(node.value)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_scalar_node(node.operand)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left, right = _eval_scalar_node(node.left), _eval_scalar_node(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return arith("/", left, right)
        if isinstance(node.op, ast.Pow) and is_rational(right) and QQ(right).denominator == 1:
            return left ** int(right)
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id == "sqrt"
        and len(node.args) == 1
        and not node.keywords
    ):
        arg = _eval_scalar_node(node.args[0])
        if not is_rational(arg):
            raise ScalarParseError("nested square roots are not supported")
        return sqrt_rational(arg)
    raise ScalarParseError(f"unsupported syntax in scalar: {ast.dump(node)}")


def parse_scalar(text: str) -> Scalar:
    """Parse the canonical text form (and simple arithmetic on it)."""
    if isinstance(text, (int, MPQ, Quad)):
        return text
    src = str(text).strip().replace("^", "**")
    if not src:
        raise ScalarParseError("empty scalar")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ScalarParseError(f"cannot parse scalar {text!r}") from exc
    return _eval_scalar_node(tree)
