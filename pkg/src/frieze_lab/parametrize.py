"""Per-residue rational parametrizations of frieze orbits.

Along a residue class t mod m, each coordinate satisfies
a_{i,t+jm} = r_i(rho^j) for a Laurent polynomial r_i (or a polynomial in j
when rho = +-1).  The Laurent polynomials are recovered by exact
interpolation on a small symmetric support and validated on held-out
samples.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass
from typing import Mapping, Sequence

from gmpy2 import mpq

from ._linalg import solve
from .errors import FitFailed, FriezeError, InsufficientData
from .recurrence import RecurrenceResult
from .scalars import MPQ, QQ, Quad, Scalar, conjugate, format_scalar, parse_scalar
from .seeds import FriezeOrbit


class SingularSystem(FriezeError, ArithmeticError):
    pass


class LaurentPoly1:
    """Finite sum of b_e t^e over integer exponents e."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs = {
            int(e): (c if isinstance(c, (MPQ, Quad)) else QQ(c))
            for e, c in (coeffs or {}).items()
            if c != 0
        }

    def __call__(self, x):
        total = mpq(0)
        for e, c in self.coeffs.items():
            total = total + c * x ** e
        return total

    def __eq__(self, other):
        return isinstance(other, LaurentPoly1) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.coeffs))

    def conjugate(self) -> LaurentPoly1:
        return LaurentPoly1({e: conjugate(c) for e, c in self.coeffs.items()})

    def numerator_denominator(self) -> tuple[dict[int, Scalar], int]:
        """r = f(t) / t^k with f a polynomial (dict degree -> coeff) and k >= 0."""
        if not self.coeffs:
            return {}, 0
        k = max(0, -min(self.coeffs))
        return {e + k: c for e, c in self.coeffs.items()}, k

    def to_text(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            cs = f"({format_scalar(c)})" if isinstance(c, Quad) or c < 0 else format_scalar(c)
            if e == 0:
                parts.append(cs)
            else:
                mono = var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentPoly1({self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, var: str = "t") -> LaurentPoly1:
        src = text.strip().replace("^", "**")
        tree = ast.parse(src, mode="eval").body
        out: dict[int, Scalar] = {}

        def term(node, sign):
            if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Add):
                term(node.left, sign)
                term(node.right, sign)
                return
            if isinstance(node, ast.BinOp) and isinstance(node.op, ast.Sub):
                term(node.left, sign)
                term(node.right, -sign)
                return
            coef, exp = mpq(1), 0
            factors = []

            def flatten(n):
                if isinstance(n, ast.BinOp) and isinstance(n.op, ast.Mult):
                    flatten(n.left)
                    flatten(n.right)
                else:
                    factors.append(n)

            flatten(node)
            for f in factors:
                if isinstance(f, ast.Name) and f.id == var:
                    exp += 1
                elif isinstance(f, ast.BinOp) and isinstance(f.op, ast.Pow) and isinstance(f.left, ast.Name) and f.left.id == var:
                    exp += int(ast.literal_eval(f.right))
                else:
                    coef = coef * parse_scalar(ast.unparse(f))
            out[exp] = out.get(exp, 0) + sign * coef

        term(tree, 1)
        return cls(out)


@dataclass
class ComponentParametrization:
    t: int
    m: int
    mode: str  # "laurent", "poly" or "signed_poly"
    r: list[LaurentPoly1]
    rho: Scalar | None = None

    @property
    def n(self) -> int:
        return len(self.r)

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "m": self.m,
            "mode": self.mode,
            "rho": None if self.rho is None else format_scalar(self.rho),
            "r": [ri.to_text("t" if self.mode == "laurent" else "j") for ri in self.r],
        }


def eval_param(p: ComponentParametrization, j: int) -> tuple:
    """The point a_{t + j m} predicted by the parametrization."""
    if p.mode == "laurent":
        x = p.rho ** j
        return tuple(ri(x) for ri in p.r)
    if j < 0:
        raise ValueError("polynomial modes are only defined for j >= 0")
    sign = -1 if (p.mode == "signed_poly" and j % 2) else 1
    return tuple(sign * ri(mpq(j)) for ri in p.r)


def fit_laurent(values: Sequence, rho, support: Sequence[int]) -> LaurentPoly1:
    """Unique Laurent polynomial with the given support taking values[j] at rho^j."""
    support = list(support)
    k = len(support)
    if len(values) < k:
        raise InsufficientData(f"{len(values)} values for a support of size {k}")
    powers = [rho ** j for j in range(k)]
    A = [[p ** e for e in support] for p in powers]
    sol = solve(A, list(values[:k]))
    if sol is None:
        raise SingularSystem(f"interpolation matrix is singular for support {support}")
    return LaurentPoly1(dict(zip(support, sol)))


def fit_polynomial(values: Sequence, degree: int) -> LaurentPoly1:
    """Polynomial f of the given degree with f(j) = values[j]."""
    k = degree + 1
    if len(values) < k:
        raise InsufficientData(f"{len(values)} values for degree {degree}")
    A = [[mpq(j) ** e for e in range(k)] for j in range(k)]
    sol = solve(A, list(values[:k]))
    return LaurentPoly1(dict(enumerate(sol)))


SUPPORT_CAP = 9


def laurent_supports() -> list[list[int]]:
    """Escalation order: parity-symmetric supports, then contiguous ones."""
    out = [list(range(-k, k + 1, 2)) for k in range(1, SUPPORT_CAP)]
    out += [list(range(-k, k + 1)) for k in range(1, SUPPORT_CAP // 2 + 1)]
    return out


HELD_OUT = 2


def samples_for(orbit: FriezeOrbit, t: int, m: int, coordinate: int) -> list:
    pts = orbit.points
    return [pts[s][coordinate - 1] for s in range(t, len(pts), m)]


def samples_needed(mode: str = "laurent") -> int:
    """Samples per residue class that always suffice for the widest support."""
    return SUPPORT_CAP + HELD_OUT


def fit_coordinate(values: Sequence, rec: RecurrenceResult, mode: str, coordinate: int = 0) -> LaurentPoly1:
    tried = []
    if mode == "laurent":
        for support in laurent_supports():
            if len(values) < len(support) + HELD_OUT:
                break
            tried.append(tuple(support))
            try:
                r = fit_laurent(values, rec.rho, support)
            except SingularSystem:
                continue
            x = mpq(1)
            ok = True
            for j, v in enumerate(values):
                if r(x) != v:
                    ok = False
                    break
                x = x * rec.rho
            if ok:
                return r
    else:
        signs = [(-1) ** j if mode == "signed_poly" else 1 for j in range(len(values))]
        vals = [s * v for s, v in zip(signs, values)]
        for deg in range(0, SUPPORT_CAP):
            if len(vals) < deg + 1 + HELD_OUT:
                break
            tried.append(deg)
            f = fit_polynomial(vals, deg)
            if all(f(mpq(j)) == v for j, v in enumerate(vals)):
                return f
    if not tried or len(tried) < (len(laurent_supports()) if mode == "laurent" else SUPPORT_CAP):
        raise InsufficientData(f"orbit too short to fit coordinate {coordinate} (tried {tried})")
    raise FitFailed(coordinate, tried)


def mode_for(rec: RecurrenceResult) -> str:
    kind = rec.kind
    if kind == "line":
        return "poly"
    if kind == "signed_line":
        return "signed_poly"
    if kind == "finite":
        raise ValueError("finite orbits have no curve parametrization")
    return "laurent"


def fit_component(orbit: FriezeOrbit, t: int, rec: RecurrenceResult, mode: str | None = None) -> ComponentParametrization:
    """Parametrize the residue class t mod rec.m of the orbit."""
    mode = mode or mode_for(rec)
    m = rec.m
    if not 0 <= t < m:
        raise ValueError(f"residue {t} outside 0..{m - 1}")
    rs = []
    for i in range(1, orbit.quiver.n + 1):
        rs.append(fit_coordinate(samples_for(orbit, t, m, i), rec, mode, i))
    return ComponentParametrization(t, m, mode, rs, rec.rho if mode == "laurent" else None)
