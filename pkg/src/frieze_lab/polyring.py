"""Sparse multivariate polynomials over Q or Q(sqrt d), lexicographic
orders, multivariate division and Buchberger's algorithm.

Internally the Groebner routines work on plain dicts whose keys are exponent
tuples permuted into priority order, so that Python's tuple comparison *is*
the lex order.  ``MultiPoly`` is the public value type.
"""

from __future__ import annotations

import ast
import heapq
import json
from dataclasses import dataclass
from itertools import count
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import OrderMismatch, PolyParseError, VariableMismatch, ZeroDivisor
from .scalars import MPQ, Quad, QQ, conjugate, format_scalar, is_rational, sqrt_rational

Exp = tuple[int, ...]


def _coerce(c):
    if isinstance(c, (MPQ, Quad)):
        return c
    return QQ(c)


class MultiPoly:
    """Polynomial in a fixed tuple of named variables.

    Two polynomials can only be combined when their variable tuples agree.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exp, object] | None = None):
        self.vars = tuple(variables)
        n = len(self.vars)
        clean: dict[Exp, object] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n or any(x < 0 for x in e):
                raise VariableMismatch(f"bad exponent {e} for variables {self.vars}")
            if c != 0:
                clean[e] = _coerce(c)
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict) -> MultiPoly:
        p = object.__new__(cls)
        p.vars = variables
        p.terms = terms
        return p

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> MultiPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> MultiPoly:
        variables = tuple(variables)
        if name not in variables:
            raise VariableMismatch(f"{name} not among {variables}")
        e = tuple(int(v == name) for v in variables)
        return cls._raw(variables, {e: mpq(1)})

    # basic protocol ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if other == 0 or isinstance(other, (int, MPQ, Quad)):
            return self.terms == ({(0,) * len(self.vars): other} if other != 0 else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _same(self, other: MultiPoly):
        if self.vars != other.vars:
            raise VariableMismatch(f"{self.vars} vs {other.vars}")

    def _lift(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._same(other)
            return other
        return MultiPoly.constant(self.vars, other)

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            v = t.get(e, 0) + c
            if v == 0:
                t.pop(e, None)
            else:
                t[e] = v
        return MultiPoly._raw(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> MultiPoly:
        if c == 0:
            return MultiPoly._raw(self.vars, {})
        return MultiPoly._raw(self.vars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(_coerce(other))
        self._same(other)
        t: dict[Exp, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e, 0) + c1 * c2
                if v == 0:
                    t.pop(e, None)
                else:
                    t[e] = v
        return MultiPoly._raw(self.vars, t)

    def __rmul__(self, other):
        return self.scale(_coerce(other))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # inspection ------------------------------------------------------------
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, name: str) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def used_vars(self) -> set[str]:
        return {v for i, v in enumerate(self.vars) if any(e[i] for e in self.terms)}

    def is_rational(self) -> bool:
        return all(is_rational(c) for c in self.terms.values())

    def coefficient(self, exp: Exp):
        return self.terms.get(tuple(exp), mpq(0))

    def conjugate(self) -> MultiPoly:
        return MultiPoly._raw(self.vars, {e: conjugate(c) for e, c in self.terms.items()})

    def map_coeffs(self, fn) -> MultiPoly:
        return MultiPoly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def diff(self, name: str) -> MultiPoly:
        i = self.vars.index(name)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                t[ne] = c * e[i]
        return MultiPoly._raw(self.vars, t)

    def evaluate(self, point):
        """Value at a point given as a mapping name -> scalar or a sequence."""
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.vars]
        else:
            vals = list(point)
            if len(vals) != len(self.vars):
                raise VariableMismatch("point has the wrong number of coordinates")
        total = mpq(0)
        powers: list[dict[int, object]] = [{} for _ in vals]
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = vals[i] ** k
                        powers[i][k] = p
                    term = term * p
            total = total + term
        return total

    def substitute(self, mapping: Mapping[str, object]) -> MultiPoly:
        """Replace some variables by scalars or polynomials in the same ring."""
        result = MultiPoly._raw(self.vars, {})
        idx = {v: i for i, v in enumerate(self.vars)}
        for name in mapping:
            if name not in idx:
                raise VariableMismatch(f"{name} not among {self.vars}")
        for e, c in self.terms.items():
            keep = list(e)
            term = MultiPoly._raw(self.vars, {}) + c
            for name, val in mapping.items():
                i = idx[name]
                k = e[i]
                keep[i] = 0
                if k:
                    term = term * (val ** k if isinstance(val, MultiPoly) else MultiPoly.constant(self.vars, val ** k))
            mono = MultiPoly._raw(self.vars, {tuple(keep): mpq(1)})
            result = result + term * mono
        return result

    def with_vars(self, variables: Sequence[str]) -> MultiPoly:
        """Re-embed into another variable tuple containing every used variable."""
        variables = tuple(variables)
        pos = {v: i for i, v in enumerate(variables)}
        used = self.used_vars()
        missing = used - set(variables)
        if missing:
            raise VariableMismatch(f"variables {sorted(missing)} are not in the target ring")
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, k in enumerate(e):
                if k:
                    ne[pos[self.vars[i]]] = k
            t[tuple(ne)] = c
        return MultiPoly._raw(variables, t)

    def coeffs_in(self, name: str) -> list[MultiPoly]:
        """Coefficients (lowest degree first) as a polynomial in one variable."""
        i = self.vars.index(name)
        deg = self.degree(name)
        out = [dict() for _ in range(max(deg + 1, 1))]
        for e, c in self.terms.items():
            out[e[i]][e[:i] + (0,) + e[i + 1 :]] = c
        return [MultiPoly._raw(self.vars, t) for t in out]

    # text ----------------------------------------------------------------
    def to_text(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        if order is None:
            order = MonomialOrder.lex(self.vars)
        order.check(self.vars)
        pieces = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, e) if k
            )
            if isinstance(c, Quad):
                cs = "(" + format_scalar(c) + ")"
                neg = False
            else:
                neg = c < 0
                cs = format_scalar(-c if neg else c)
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            pieces.append(("- " if neg else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.vars}, {self.to_text()!r})"

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> MultiPoly:
        return parse_poly(text, variables)


# parsing -----------------------------------------------------------------

def parse_poly(text: str, variables: Sequence[str]) -> MultiPoly:
    """Parse text such as ``2*x2^2 - 6*x2*x3 + (1+sqrt(3))*t + 1``."""
    variables = tuple(variables)
    src = str(text).strip().replace("^", "**")
    if not src:
        raise PolyParseError("empty polynomial")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolyParseError(f"cannot parse {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return MultiPoly.constant(variables, node.value)
        if isinstance(node, ast.Name):
            if node.id not in variables:
                raise PolyParseError(f"unknown variable {node.id!r}")
            return MultiPoly.var(variables, node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b.total_degree() > 0 or b.is_zero():
                    raise PolyParseError("division only by nonzero constants")
                return a.scale(1 / b.terms[(0,) * len(variables)])
            if isinstance(node.op, ast.Pow):
                if b.total_degree() > 0 or not b.is_rational():
                    raise PolyParseError("exponents must be integer constants")
                k = b.terms.get((0,) * len(variables), mpq(0))
                if k.denominator != 1 or k < 0:
                    raise PolyParseError("exponents must be nonnegative integers")
                return a ** int(k)
        if (
            isinstance(node, ast.Call)
            and isinstance(node.func, ast.Name)
            and node.func.id == "sqrt"
            and len(node.args) == 1
        ):
            arg = ev(node.args[0])
            if arg.total_degree() > 0 or not arg.is_rational():
                raise PolyParseError("sqrt takes a rational constant")
            return MultiPoly.constant(variables, sqrt_rational(arg.terms.get((0,) * len(variables), 0)))
        raise PolyParseError(f"unsupported syntax: {ast.dump(node)}")

    return ev(tree)


# orders ------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Lexicographic order given by a variable priority (highest first)."""

    vars: tuple[str, ...]
    priority: tuple[int, ...]

    @classmethod
    def lex(cls, variables: Sequence[str], ranking: Sequence[str] | None = None) -> MonomialOrder:
        variables = tuple(variables)
        ranking = tuple(ranking) if ranking is not None else variables
        if sorted(ranking) != sorted(variables) or len(set(ranking)) != len(ranking):
            raise OrderMismatch(f"ranking {ranking} is not a permutation of {variables}")
        return cls(variables, tuple(variables.index(v) for v in ranking))

    @property
    def ranking(self) -> tuple[str, ...]:
        return tuple(self.vars[i] for i in self.priority)

    def key(self, e: Exp) -> tuple[int, ...]:
        return tuple(e[i] for i in self.priority)

    def unkey(self, k: Sequence[int]) -> Exp:
        e = [0] * len(k)
        for pos, i in enumerate(self.priority):
            e[i] = k[pos]
        return tuple(e)

    def check(self, variables: Sequence[str]) -> None:
        if tuple(variables) != self.vars:
            raise VariableMismatch(f"order is over {self.vars}, polynomial over {tuple(variables)}")

    def restrict(self, keep: Sequence[str]) -> MonomialOrder:
        keep_set = set(keep)
        ranking = [v for v in self.ranking if v in keep_set]
        variables = tuple(v for v in self.vars if v in keep_set)
        return MonomialOrder.lex(variables, ranking)

    def describe(self) -> str:
        return " > ".join(self.ranking)


# internal dict polynomials ---------------------------------------------

def _to_internal(p: MultiPoly, order: MonomialOrder) -> dict:
    order.check(p.vars)
    pr = order.priority
    return {tuple(e[i] for i in pr): c for e, c in p.terms.items()}


def _from_internal(d: dict, order: MonomialOrder) -> MultiPoly:
    return MultiPoly._raw(order.vars, {order.unkey(k): c for k, c in d.items()})


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _neg(m: tuple) -> tuple:
    return tuple(-x for x in m)


def _monic(p: dict) -> dict:
    lc = p[max(p)]
    if lc == 1:
        return p
    inv = 1 / lc
    return {m: c * inv for m, c in p.items()}


def _normal_form(f: dict, basis: list[tuple[tuple, dict]]) -> dict:
    """Full reduction of f by monic polynomials (lead, poly)."""
    p = dict(f)
    heap = [_neg(m) for m in p]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        m = _neg(heapq.heappop(heap))
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, g in basis:
            if _divides(lm, m):
                u = tuple(a - b for a, b in zip(m, lm))
                for gm, gc in g.items():
                    if gm == lm:
                        continue
                    nm = tuple(a + b for a, b in zip(u, gm))
                    old = p.get(nm)
                    if old is None:
                        p[nm] = -c * gc
                        heapq.heappush(heap, _neg(nm))
                    else:
                        v = old - c * gc
                        if v == 0:
                            del p[nm]
                        else:
                            p[nm] = v
                break
        else:
            rem[m] = c
    return rem


def _spoly(f: tuple[tuple, dict], g: tuple[tuple, dict]) -> dict:
    (lf, pf), (lg, pg) = f, g
    L = tuple(max(a, b) for a, b in zip(lf, lg))
    uf = tuple(a - b for a, b in zip(L, lf))
    ug = tuple(a - b for a, b in zip(L, lg))
    out: dict = {}
    for m, c in pf.items():
        out[tuple(a + b for a, b in zip(uf, m))] = c
    for m, c in pg.items():
        k = tuple(a + b for a, b in zip(ug, m))
        v = out.get(k, 0) - c
        if v == 0:
            out.pop(k, None)
        else:
            out[k] = v
    return out


def _buchberger(F: Iterable[dict]) -> list[tuple[tuple, dict]]:
    """Groebner basis (monic, not reduced) via the normal selection strategy
    with Buchberger's coprime and chain criteria."""
    G: list[tuple[tuple, dict]] = []
    pending: dict[tuple[int, int], tuple] = {}
    heap: list = []
    tick = count()

    def add(h: dict):
        h = _monic(h)
        lm = max(h)
        k = len(G)
        G.append((lm, h))
        for i in range(k):
            li = G[i][0]
            if all(a == 0 or b == 0 for a, b in zip(li, lm)):
                continue  # coprime leading monomials
            L = tuple(max(a, b) for a, b in zip(li, lm))
            pending[(i, k)] = L
            heapq.heappush(heap, (L, next(tick), i, k))

    for f in sorted((f for f in F if f), key=lambda d: max(d)):
        h = _normal_form(f, G)
        if h:
            add(h)
    while heap:
        L, _, i, j = heapq.heappop(heap)
        if pending.pop((i, j), None) is None:
            continue
        if _chain_skip(G, pending, i, j, L):
            continue
        h = _normal_form(_spoly(G[i], G[j]), G)
        if h:
            add(h)
    return G


def _chain_skip(G, pending, i, j, L) -> bool:
    for k, (lk, _) in enumerate(G):
        if k == i or k == j or not _divides(lk, L):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _reduce(G: list[tuple[tuple, dict]]) -> list[tuple[tuple, dict]]:
    G = sorted(((lm, _monic(g)) for lm, g in G), key=lambda t: t[0])
    minimal: list[tuple[tuple, dict]] = []
    for lm, g in G:
        if not any(_divides(l2, lm) for l2, _ in minimal):
            minimal.append((lm, g))
    out = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = {m: c for m, c in g.items() if m != lm}
        r = _normal_form(tail, others)
        r[lm] = g[lm]
        out.append((lm, r))
    return out


# public API ----------------------------------------------------------------

@dataclass
class GroebnerBasis:
    gens: list[MultiPoly]
    order: MonomialOrder
    reduced: bool = False

    @property
    def vars(self) -> tuple[str, ...]:
        return self.order.vars

    def is_unit(self) -> bool:
        return any(g.total_degree() == 0 for g in self.gens)

    def texts(self) -> list[str]:
        return [g.to_text(self.order) for g in self.gens]

    def to_dict(self) -> dict:
        return {"variables": list(self.vars), "order": list(self.order.ranking), "generators": self.texts()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict, reduced: bool = False) -> GroebnerBasis:
        variables = data.get("variables") or sorted(data["order"])
        order = MonomialOrder.lex(variables, data["order"])
        gens = [parse_poly(t, variables) for t in data["generators"]]
        return cls(gens, order, reduced)

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.order == other.order and set(self.gens) == set(other.gens)


def leading(f: MultiPoly, order: MonomialOrder):
    """(leading monomial exponent, leading coefficient) of a nonzero polynomial."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no leading term")
    order.check(f.vars)
    e = max(f.terms, key=order.key)
    return e, f.terms[e]


def divide(f: MultiPoly, divisors: Sequence[MultiPoly], order: MonomialOrder):
    """Multivariate division: f = sum q_i g_i + r with no term of r divisible
    by any leading monomial."""
    if any(g.is_zero() for g in divisors):
        raise ZeroDivisor("cannot divide by the zero polynomial")
    p = _to_internal(f, order)
    gs = [_to_internal(g, order) for g in divisors]
    leads = [(max(g), g[max(g)]) for g in gs]
    qs: list[dict] = [{} for _ in gs]
    rem: dict = {}
    heap = [_neg(m) for m in p]
    heapq.heapify(heap)
    while heap:
        m = _neg(heapq.heappop(heap))
        c = p.pop(m, None)
        if c is None:
            continue
        for idx, (lm, lc) in enumerate(leads):
            if _divides(lm, m):
                u = tuple(a - b for a, b in zip(m, lm))
                coef = c / lc
                qs[idx][u] = qs[idx].get(u, 0) + coef
                for gm, gc in gs[idx].items():
                    if gm == lm:
                        continue
                    nm = tuple(a + b for a, b in zip(u, gm))
                    old = p.get(nm)
                    if old is None:
                        p[nm] = -coef * gc
                        heapq.heappush(heap, _neg(nm))
                    else:
                        v = old - coef * gc
                        if v == 0:
                            del p[nm]
                        else:
                            p[nm] = v
                break
        else:
            rem[m] = c
    quotients = [_from_internal({k: v for k, v in q.items() if v != 0}, order) for q in qs]
    return quotients, _from_internal(rem, order)


def s_poly(f: MultiPoly, g: MultiPoly, order: MonomialOrder) -> MultiPoly:
    pf, pg = _to_internal(f, order), _to_internal(g, order)
    if not pf or not pg:
        raise ZeroDivisor("S-polynomial of the zero polynomial")
    return _from_internal(_spoly((max(pf), _monic(pf)), (max(pg), _monic(pg))), order)


def normal_form(f: MultiPoly, G: Sequence[MultiPoly], order: MonomialOrder) -> MultiPoly:
    basis = []
    for g in G:
        d = _to_internal(g, order)
        if d:
            d = _monic(d)
            basis.append((max(d), d))
    return _from_internal(_normal_form(_to_internal(f, order), basis), order)


def buchberger(F: Sequence[MultiPoly], order: MonomialOrder) -> GroebnerBasis:
    """A Groebner basis of the ideal generated by F (not yet reduced)."""
    G = _buchberger(_to_internal(f, order) for f in F)
    return GroebnerBasis([_from_internal(g, order) for _, g in G], order, False)


def reduce_basis(G: GroebnerBasis | Sequence[MultiPoly], order: MonomialOrder | None = None) -> GroebnerBasis:
    """The unique reduced Groebner basis (monic, sorted by increasing leading monomial)."""
    if isinstance(G, GroebnerBasis):
        order = order or G.order
        gens = G.gens
    else:
        gens = list(G)
        if order is None:
            raise OrderMismatch("an order is required")
    internal = [_to_internal(g, order) for g in gens]
    internal = [(max(d), d) for d in internal if d]
    return GroebnerBasis([_from_internal(g, order) for _, g in _reduce(internal)], order, True)


def groebner(F: Sequence[MultiPoly], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by F."""
    G = _buchberger(_to_internal(f, order) for f in F)
    return GroebnerBasis([_from_internal(g, order) for _, g in _reduce(G)], order, True)


def is_groebner(G: Sequence[MultiPoly] | GroebnerBasis, order: MonomialOrder | None = None) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    if isinstance(G, GroebnerBasis):
        order = order or G.order
        gens = G.gens
    else:
        gens = list(G)
    basis = []
    for g in gens:
        d = _to_internal(g, order)
        if d:
            d = _monic(d)
            basis.append((max(d), d))
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if _normal_form(_spoly(basis[i], basis[j]), basis):
                return False
    return True


def eliminate(G: GroebnerBasis, keep: Sequence[str]) -> GroebnerBasis:
    """G intersected with the subring in the variables ``keep``.

    Valid only when every eliminated variable ranks above every kept one.
    """
    order = G.order
    keep_set = set(keep)
    if not keep_set <= set(order.vars):
        raise VariableMismatch(f"{sorted(keep_set - set(order.vars))} not in the ring")
    ranking = order.ranking
    first_kept = min((ranking.index(v) for v in keep_set), default=len(ranking))
    if any(v not in keep_set for v in ranking[first_kept:]):
        raise OrderMismatch(f"order {order.describe()} is not an elimination order for {sorted(keep_set)}")
    sub = order.restrict(keep)
    gens = [g.with_vars(sub.vars) for g in G.gens if g.used_vars() <= keep_set]
    return GroebnerBasis(gens, sub, G.reduced)


def sylvester_resultant(f: MultiPoly, g: MultiPoly, name: str) -> MultiPoly:
    """Resultant of f and g with respect to one variable (determinant of the
    Sylvester matrix, computed by fraction-free elimination)."""
    f._same(g)
    a = f.coeffs_in(name)[::-1]  # highest degree first
    b = g.coeffs_in(name)[::-1]
    m, n = len(a) - 1, len(b) - 1
    if f.is_zero() or g.is_zero():
        return MultiPoly.constant(f.vars, 0)
    if m == 0 and n == 0:
        return MultiPoly.constant(f.vars, 1)
    size = m + n
    zero = MultiPoly.constant(f.vars, 0)
    M = []
    for r in range(n):
        M.append([zero] * r + a + [zero] * (size - r - m - 1))
    for r in range(m):
        M.append([zero] * r + b + [zero] * (size - r - n - 1))
    return _bareiss_det(M)


def _exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    order = MonomialOrder.lex(p.vars)
    (quo,), rem = divide(p, [q], order)
    if not rem.is_zero():
        raise ArithmeticError("inexact division in fraction-free elimination")
    return quo


def _bareiss_det(M: list[list[MultiPoly]]) -> MultiPoly:
    n = len(M)
    A = [row[:] for row in M]
    sign = 1
    prev = MultiPoly.constant(A[0][0].vars, 1)
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return MultiPoly.constant(A[0][0].vars, 0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = _exact_div(A[i][j] * A[k][k] - A[i][k] * A[k][j], prev)
        prev = A[k][k]
    det = A[n - 1][n - 1]
    return det if sign == 1 else -det
