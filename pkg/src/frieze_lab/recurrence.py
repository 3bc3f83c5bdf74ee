"""Minimal linear recurrences of frieze sequences and the period form
x^(2m) - c x^m + 1 of their characteristic polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .errors import FriezeError, InsufficientData, NoRecurrenceFound
from .scalars import MPQ, QQ, Scalar, format_scalar, quad, squarefree_decompose


class DegenerateTrace(FriezeError, ValueError):
    """c = 2 or c = -2: the roots are +-1 and growth is polynomial."""


class UPoly:
    """Univariate polynomial over Q, coefficients stored lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [QQ(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, k: int, c=1) -> UPoly:
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> MPQ:
        return self.coeffs[-1]

    def monic(self) -> UPoly:
        lc = self.lc()
        return UPoly([c / lc for c in self.coeffs])

    def __call__(self, x):
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, o: UPoly) -> UPoly:
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (mpq(0),) * (n - len(self.coeffs))
        b = o.coeffs + (mpq(0),) * (n - len(o.coeffs))
        return UPoly([x + y for x, y in zip(a, b)])

    def __neg__(self) -> UPoly:
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, o: UPoly) -> UPoly:
        return self + (-o)

    def __mul__(self, o: UPoly) -> UPoly:
        if self.is_zero() or o.is_zero():
            return UPoly([])
        out = [mpq(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    def divmod(self, o: UPoly) -> tuple[UPoly, UPoly]:
        if o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        q = [mpq(0)] * max(len(r) - o.degree, 1)
        lc = o.lc()
        while len(r) - 1 >= o.degree and r:
            k = len(r) - 1 - o.degree
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(o.coeffs):
                r[i + k] -= f * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return UPoly(q), UPoly(r)

    def __mod__(self, o: UPoly) -> UPoly:
        return self.divmod(o)[1]

    def divides(self, o: UPoly) -> bool:
        return (o % self).is_zero()

    def to_text(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            neg = c < 0
            a = -c if neg else c
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if not mono:
                body = format_scalar(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_scalar(a)}*{mono}"
            parts.append(("- " if neg else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"UPoly({self.to_text()!r})"


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_lcm(a: UPoly, b: UPoly) -> UPoly:
    g = poly_gcd(a, b)
    return (a * b).divmod(g)[0].monic()


def berlekamp_massey(samples: Sequence) -> UPoly:
    """Monic characteristic polynomial of the shortest linear recurrence
    generating ``samples`` exactly (over Q)."""
    s = [QQ(x) for x in samples]
    C = [mpq(1)]  # connection polynomial, C[0] = 1
    Bp = [mpq(1)]
    L, m, b = 0, 1, mpq(1)
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            d += C[i] * s[n - i]
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = list(C)
        if len(C) < len(Bp) + m:
            C += [mpq(0)] * (len(Bp) + m - len(C))
        for i, x in enumerate(Bp):
            C[i + m] -= coef * x
        if 2 * L <= n:
            L, Bp, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    C += [mpq(0)] * (L + 1 - len(C))
    # x^L + C1 x^(L-1) + ... + CL
    return UPoly([C[L - i] for i in range(L + 1)])


def annihilates(p: UPoly, samples: Sequence) -> bool:
    """Whether sum_i p_i a_{j+i} = 0 for every full window j."""
    L = p.degree
    cs = p.coeffs
    for j in range(len(samples) - L):
        if sum((cs[i] * samples[j + i] for i in range(L + 1)), mpq(0)) != 0:
            return False
    return True


def min_char_poly(samples: Sequence, max_order: int | None = None) -> UPoly:
    """Minimal monic characteristic polynomial of a sequence of rationals.

    Needs ``len(samples) >= 2*max_order + 1``; the result is then the unique
    minimal recurrence of the sampled window.
    """
    N = len(samples)
    if max_order is None:
        max_order = (N - 1) // 2
    if N < 2 * max_order + 1:
        raise InsufficientData(f"{N} samples cannot certify order {max_order}")
    p = berlekamp_massey(samples)
    if p.degree > max_order:
        raise NoRecurrenceFound(f"no recurrence of order <= {max_order} over {N} samples")
    if not annihilates(p, [QQ(x) for x in samples]):  # pragma: no cover - algorithm guarantee
        raise NoRecurrenceFound("Berlekamp-Massey output failed verification")
    return p


def trace_for_period(p: UPoly, m: int) -> MPQ | None:
    """The rational c with p | x^(2m) - c x^m + 1, or None."""
    if p.degree < 1:
        return None
    r1 = UPoly.monomial(m) % p
    r2 = (UPoly.monomial(2 * m) + UPoly([1])) % p
    if r1.is_zero():
        return None
    idx = next(i for i, c in enumerate(r1.coeffs) if c != 0)
    a2 = r2.coeffs[idx] if idx < len(r2.coeffs) else mpq(0)
    c = a2 / r1.coeffs[idx]
    if (r2 - UPoly([c]) * r1).is_zero():
        return c
    return None


def period_form(p: UPoly, bound: int | None = None) -> tuple[int, MPQ] | None:
    """Smallest (m, c) with p dividing x^(2m) - c x^m + 1, searching m <= 2 deg p."""
    if p.is_zero() or p.coeffs[0] == 0:
        return None
    bound = bound or 2 * max(p.degree, 1)
    for m in range(1, bound + 1):
        c = trace_for_period(p, m)
        if c is not None:
            return m, c
    return None


def quadratic_roots(c) -> tuple[Scalar, Scalar]:
    """rho = (c + s sqrt d)/2 and its inverse, where c^2 - 4 = s^2 d."""
    c = QQ(c)
    if c in (2, -2):
        raise DegenerateTrace(f"c = {c} has the double root {c / 2}")
    num, den = int(c.numerator), int(c.denominator)
    # sqrt(c^2 - 4) = sqrt(num^2 - 4 den^2) / den
    s, d = squarefree_decompose(num * num - 4 * den * den)
    rho = quad(c / 2, mpq(s, 2 * den), d)
    rho_inv = quad(c / 2, mpq(-s, 2 * den), d)
    return rho, rho_inv


def classify_trace(c) -> str:
    c = QQ(c)
    if c in (-1, 0, 1):
        return "finite"
    if c == 2:
        return "line"
    if c == -2:
        return "signed_line"
    return "curve"


@dataclass(frozen=True)
class RecurrenceResult:
    charpoly: UPoly
    m: int
    c: MPQ
    d: int | None = None
    rho: Scalar | None = None

    @property
    def kind(self) -> str:
        return classify_trace(self.c)

    @classmethod
    def build(cls, charpoly: UPoly, m: int, c) -> RecurrenceResult:
        c = QQ(c)
        if classify_trace(c) in ("line", "signed_line"):
            return cls(charpoly, m, c)
        rho, _ = quadratic_roots(c)
        d = getattr(rho, "d", 1)
        return cls(charpoly, m, c, d, rho)

    def to_dict(self) -> dict:
        return {
            "charpoly": self.charpoly.to_text(),
            "m": self.m,
            "c": format_scalar(self.c),
            "d": self.d,
            "rho": None if self.rho is None else format_scalar(self.rho),
            "kind": self.kind,
        }


def trace_power(c, k: int) -> MPQ:
    """c_k = rho^k + rho^-k, so that the m-step trace c becomes the km-step trace."""
    c = QQ(c)
    prev, cur = mpq(2), c
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, c * cur - prev
    return cur


def recurrence_for(samples_by_coord: Sequence[Sequence], max_order: int | None = None) -> RecurrenceResult:
    """Joint recurrence of several coordinate sequences (lcm of their minimal
    polynomials) in period form."""
    total: UPoly | None = None
    for samples in samples_by_coord:
        p = min_char_poly(samples, max_order)
        total = p if total is None else poly_lcm(total, p)
    if total is None:
        raise InsufficientData("no sequences given")
    pf = period_form(total)
    if pf is None:
        raise NoRecurrenceFound(f"{total} has no period form x^(2m) - c x^m + 1")
    return RecurrenceResult.build(total, *pf)
