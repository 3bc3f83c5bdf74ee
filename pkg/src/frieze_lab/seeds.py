"""Specialized seed mutation, cluster automorphisms written as a mutation
word followed by a vertex permutation, orbits, and symbolic Laurent mutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from gmpy2 import mpq

from .errors import (
    InvalidAutomorphism,
    NewCoordinateZero,
    NonLaurentResult,
    NotGeneralSpecialization,
    VertexOutOfRange,
    ZeroDenominator,
)
from .polyring import MonomialOrder, MultiPoly, divide
from .quiver import (
    Perm,
    Quiver,
    admissible_sink_order,
    apply_perm,
    check_perm,
    format_cycles,
    identity_perm,
    parse_cycles,
    perm_inverse,
)
from .scalars import MPQ, QQ, Quad, format_scalar, parse_scalar

Point = tuple


def _scalar(x):
    if isinstance(x, (MPQ, Quad)):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return QQ(x)


def as_point(values: Sequence) -> Point:
    return tuple(_scalar(v) for v in values)


@dataclass(frozen=True)
class PointSeed:
    quiver: Quiver
    point: Point

    def __post_init__(self):
        object.__setattr__(self, "point", as_point(self.point))
        if len(self.point) != self.quiver.n:
            raise ValueError(f"point has {len(self.point)} coordinates, quiver has {self.quiver.n} vertices")


def exchange(q: Quiver, point: Sequence, k: int):
    """New value of coordinate k (1-based) under mutation of (point, q) at k."""
    n = q.n
    if not 1 <= k <= n:
        raise VertexOutOfRange(f"vertex {k} not in 1..{n}")
    c = k - 1
    if point[c] == 0:
        raise ZeroDenominator(k)
    plus = mpq(1)
    minus = mpq(1)
    for i in range(n):
        b = q.B[i][c]
        if b > 0:
            plus = plus * point[i] ** b
        elif b < 0:
            minus = minus * point[i] ** (-b)
    new = (plus + minus) / point[c]
    if new == 0:
        raise NewCoordinateZero(k)
    return new


def mutate_point(seed: PointSeed, k: int) -> PointSeed:
    new = exchange(seed.quiver, seed.point, k)
    pt = list(seed.point)
    pt[k - 1] = new
    return PointSeed(seed.quiver.mutate(k), tuple(pt))


@dataclass(frozen=True)
class AutomorphismSpec:
    """Cluster automorphism f with f(x_i) = (mu_word(x))_{sigma(i)}."""

    word: tuple[int, ...]
    sigma: Perm

    def __init__(self, word: Sequence[int], sigma: Sequence[int]):
        object.__setattr__(self, "word", tuple(int(k) for k in word))
        object.__setattr__(self, "sigma", check_perm(sigma))
        n = len(self.sigma)
        if any(not 1 <= k <= n for k in self.word):
            raise VertexOutOfRange(f"mutation word {list(self.word)} leaves 1..{n}")

    @property
    def n(self) -> int:
        return len(self.sigma)

    def to_dict(self) -> dict:
        return {"word": list(self.word), "sigma": format_cycles(self.sigma)}

    @classmethod
    def from_dict(cls, data: Mapping, n: int) -> AutomorphismSpec:
        sigma = data.get("sigma", "()")
        perm = parse_cycles(sigma, n) if isinstance(sigma, str) else check_perm(sigma, n)
        return cls(data["word"], perm)

    def __str__(self):
        return f"word={','.join(map(str, self.word))} sigma={format_cycles(self.sigma)}"


def coxeter_spec(q: Quiver) -> AutomorphismSpec:
    return AutomorphismSpec(admissible_sink_order(q), identity_perm(q.n))


def inverse_spec(spec: AutomorphismSpec) -> AutomorphismSpec:
    inv = perm_inverse(spec.sigma)
    return AutomorphismSpec([inv[k - 1] for k in reversed(spec.word)], inv)


def validate_spec(spec: AutomorphismSpec, q: Quiver) -> str:
    """'direct', 'inverse' or 'invalid' according to the relabeled mutated quiver."""
    if spec.n != q.n:
        return "invalid"
    cur = q
    for k in spec.word:
        cur = cur.mutate(k)
    r = cur.relabel(spec.sigma)
    if r.B == q.B:
        return "direct"
    if r.B == q.opposite().B:
        return "inverse"
    return "invalid"


def apply_spec(q: Quiver, spec: AutomorphismSpec, point: Sequence) -> Point:
    """f(a): mutate the seed (a, q) along the word, then permute."""
    pt = list(point)
    cur = q
    for k in spec.word:
        pt[k - 1] = exchange(cur, pt, k)
        cur = cur.mutate(k)
    return apply_perm(spec.sigma, pt)


@dataclass
class FriezeOrbit:
    base: PointSeed
    spec: AutomorphismSpec
    points: list[Point] = field(default_factory=list)

    @property
    def quiver(self) -> Quiver:
        return self.base.quiver

    def __len__(self):
        return len(self.points)

    def __getitem__(self, t):
        return self.points[t]

    def extend(self, T: int) -> FriezeOrbit:
        """Grow in place until points a_0 .. a_T exist."""
        q = self.base.quiver
        while len(self.points) <= T:
            t = len(self.points)
            try:
                nxt = apply_spec(q, self.spec, self.points[-1])
            except (ZeroDenominator, NewCoordinateZero) as exc:
                raise NotGeneralSpecialization(t, exc.vertex) from exc
            self.points.append(nxt)
        return self

    def coordinate(self, i: int) -> list:
        """The frieze sequence of the 1-based vertex i."""
        return [p[i - 1] for p in self.points]

    def to_text_rows(self) -> list[list[str]]:
        return [[format_scalar(x) for x in p] for p in self.points]


def orbit(seed: PointSeed, spec: AutomorphismSpec, T: int, *, check: bool = True) -> FriezeOrbit:
    """Points a_0 .. a_T with a_{t+1} = f(a_t)."""
    if check and validate_spec(spec, seed.quiver) == "invalid":
        raise InvalidAutomorphism(f"{spec} does not induce a cluster automorphism")
    for i, x in enumerate(seed.point):
        if x == 0:
            raise NotGeneralSpecialization(0, i + 1)
    orb = FriezeOrbit(seed, spec, [seed.point])
    return orb.extend(T)


# symbolic mutation ---------------------------------------------------------

class LaurentPoly:
    """Laurent polynomial in x1..xn with rational coefficients; exponents may be negative."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.n = n
        self.terms = {tuple(e): QQ(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def variable(cls, n: int, i: int) -> LaurentPoly:
        return cls(n, {tuple(int(j == i - 1) for j in range(n)): 1})

    @classmethod
    def constant(cls, n: int, c) -> LaurentPoly:
        return cls(n, {(0,) * n: c})

    def __add__(self, o: LaurentPoly) -> LaurentPoly:
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e, 0) + c
            if v:
                t[e] = v
            else:
                t.pop(e, None)
        return LaurentPoly(self.n, t)

    def __mul__(self, o: LaurentPoly) -> LaurentPoly:
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return LaurentPoly(self.n, t)

    def __pow__(self, k: int) -> LaurentPoly:
        out = LaurentPoly.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        return isinstance(o, LaurentPoly) and self.n == o.n and self.terms == o.terms

    def _split(self) -> tuple[tuple[int, ...], MultiPoly]:
        # self = x^shift * P with P a polynomial having no monomial factor
        shift = tuple(min(e[i] for e in self.terms) for i in range(self.n))
        names = tuple(f"x{i + 1}" for i in range(self.n))
        P = MultiPoly(names, {tuple(a - b for a, b in zip(e, shift)): c for e, c in self.terms.items()})
        return shift, P

    def exact_div(self, o: LaurentPoly) -> LaurentPoly:
        if not o.terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self.terms:
            return LaurentPoly(self.n)
        s1, P = self._split()
        s2, Qp = o._split()
        (quo,), rem = divide(P, [Qp], MonomialOrder.lex(P.vars))
        if not rem.is_zero():
            raise NonLaurentResult("exchange quotient is not a Laurent polynomial")
        shift = tuple(a - b for a, b in zip(s1, s2))
        return LaurentPoly(self.n, {tuple(a + b for a, b in zip(e, shift)): c for e, c in quo.terms.items()})

    def evaluate(self, point: Sequence):
        total = mpq(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            total = total + term
        return total

    def coefficients(self):
        return list(self.terms.values())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{k}" if k != 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"{self.terms[e]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


@dataclass(frozen=True)
class LaurentSeed:
    quiver: Quiver
    cluster: tuple[LaurentPoly, ...]

    @classmethod
    def initial(cls, q: Quiver) -> LaurentSeed:
        return cls(q, tuple(LaurentPoly.variable(q.n, i + 1) for i in range(q.n)))


def mutate_symbolic(seed: LaurentSeed, k: int) -> LaurentSeed:
    q, xs = seed.quiver, seed.cluster
    n = q.n
    if not 1 <= k <= n:
        raise VertexOutOfRange(f"vertex {k} not in 1..{n}")
    c = k - 1
    plus = LaurentPoly.constant(n, 1)
    minus = LaurentPoly.constant(n, 1)
    for i in range(n):
        b = q.B[i][c]
        if b > 0:
            plus = plus * xs[i] ** b
        elif b < 0:
            minus = minus * xs[i] ** (-b)
    new = (plus + minus).exact_div(xs[c])
    cl = list(xs)
    cl[c] = new
    return LaurentSeed(q.mutate(k), tuple(cl))


def apply_spec_symbolic(seed: LaurentSeed, spec: AutomorphismSpec) -> LaurentSeed:
    """Images f(x_1) .. f(x_n) as Laurent polynomials; the quiver returned is the
    mutated one relabeled by sigma."""
    cur = seed
    for k in spec.word:
        cur = mutate_symbolic(cur, k)
    return LaurentSeed(cur.quiver.relabel(spec.sigma), apply_perm(spec.sigma, cur.cluster))
