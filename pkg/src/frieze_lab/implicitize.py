"""From a rational parametrization t -> (r_1(t), ..., r_n(t)) to the prime
ideal of the image closure, plus closed forms and smoothness analysis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from ._linalg import nullspace, rank
from .errors import AlphaZero, DescentFailed, ShapeMismatch
from .parametrize import ComponentParametrization
from .polyring import (
    GroebnerBasis,
    MonomialOrder,
    MultiPoly,
    eliminate,
    groebner,
    leading,
    reduce_basis,
)
from .scalars import MPQ, QQ, Quad, conjugate, sqrt_rational


class DegreeTooHigh(ShapeMismatch):
    pass


def x_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


ORDER_PRESETS = ("anchor", "natural", "reverse")


def resolve_order(n: int, order: str | Sequence[str] | None = None, anchor: int = 1) -> tuple[str, ...]:
    """Variable ranking (highest first) for a preset name or an explicit list.

    'anchor': ascending indices with the anchor variable moved last;
    'natural': x1 > x2 > ... > xn; 'reverse': xn > ... > x1.
    """
    xs = x_names(n)
    if order is None or order == "anchor":
        a = f"x{anchor}"
        return tuple(v for v in xs if v != a) + (a,)
    if order == "natural":
        return xs
    if order == "reverse":
        return xs[::-1]
    if isinstance(order, str):
        order = [v.strip() for v in order.replace(">", ",").split(",") if v.strip()]
    ranking = tuple(order)
    if sorted(ranking) != sorted(xs):
        raise ValueError(f"order {ranking} is not a ranking of {xs}")
    return ranking


@dataclass
class ImplicitResult:
    basis: GroebnerBasis
    dim: int
    geometry: str  # point_set | line | conic_graph | general_curve
    smooth: str = "undetermined"  # yes | no | undetermined

    def to_dict(self) -> dict:
        d = self.basis.to_dict()
        d.update({"dim": self.dim, "geometry": self.geometry, "smooth": self.smooth})
        return d


def implicit_generators(p: ComponentParametrization, var: str = "t") -> list[MultiPoly]:
    """x_i g_i(t) - f_i(t) where r_i = f_i / g_i and g_i is a power of t."""
    n = p.n
    V = (var,) + x_names(n)
    gens = []
    for i, r in enumerate(p.r):
        num, k = r.numerator_denominator()
        terms = {(e,) + (0,) * n: -c for e, c in num.items()}
        xe = [0] * n
        xe[i] = 1
        terms[(k,) + tuple(xe)] = mpq(1)
        gens.append(MultiPoly(V, terms))
    return gens


def descend(G: GroebnerBasis) -> GroebnerBasis:
    """Return G over Q, or raise DescentFailed.

    A reduced basis of an ideal defined over Q is already rational.  If some
    generator is not, each irrational g is replaced by g + conj(g) and
    (g - conj(g))/sqrt(d); this is only accepted if the ideal is unchanged,
    which in practice means failure is loud.
    """
    if all(g.is_rational() for g in G.gens):
        return G
    witness = next(g for g in G.gens if not g.is_rational())
    new = []
    for g in G.gens:
        if g.is_rational():
            new.append(g)
            continue
        gb = g.conjugate()
        new.append(g + gb)
        diff = g - gb
        new.append(diff.map_coeffs(lambda c: c.b if isinstance(c, Quad) else QQ(0)))
    H = groebner([h for h in new if not h.is_zero()], G.order)
    if H.gens != reduce_basis(G).gens:
        raise DescentFailed(witness.to_text(G.order))
    return H  # pragma: no cover - unreachable for a correct irrational basis


def classify_geometry(G: GroebnerBasis, dim: int) -> str:
    if dim == 0:
        return "point_set"
    solved, core_vars, core = split_solved(G)
    if all(g.total_degree() <= 1 for g in G.gens):
        return "line"
    if len(core) == 1 and len(core_vars) == 2 and core[0].total_degree() <= 2:
        return "conic_graph"
    return "general_curve"


def split_solved(G: GroebnerBasis):
    """Separate generators x_v - (terms in other variables) whose leading
    monomial is a single variable; for a reduced basis that variable appears
    nowhere else."""
    solved: dict[str, MultiPoly] = {}
    core = []
    for g in G.gens:
        e, _ = leading(g, G.order)
        if sum(e) == 1:
            solved[G.vars[e.index(1)]] = g
        else:
            core.append(g)
    core_vars = [v for v in G.order.ranking if v not in solved]
    return solved, core_vars, core


def implicitize(p: ComponentParametrization, order: str | Sequence[str] | None = None, anchor: int = 1) -> ImplicitResult:
    """Prime ideal of the closure of the parametrized curve, as a reduced
    Groebner basis over Q for the requested variable order."""
    n = p.n
    ranking = resolve_order(n, order, anchor)
    xs = x_names(n)
    if all(set(r.coeffs) <= {0} for r in p.r):
        # constant parametrization: a single point
        pt = [r.coeffs.get(0, mpq(0)) for r in p.r]
        o = MonomialOrder.lex(xs, ranking)
        gens = [MultiPoly.var(xs, x) - c for x, c in zip(xs, pt)]
        G = descend(groebner(gens, o))
        return ImplicitResult(G, 0, "point_set", "yes")
    V = ("t",) + xs
    o = MonomialOrder.lex(V, ("t",) + ranking)
    G = groebner(implicit_generators(p), o)
    E = descend(eliminate(G, xs))
    res = ImplicitResult(E, 1, classify_geometry(E, 1))
    res.smooth = smoothness_check(res)
    return res


# closed form ----------------------------------------------------------------

def _shape(r, i):
    sup = set(r.coeffs)
    if sup <= {-1, 1}:
        return "linear", (r.coeffs.get(1, 0), r.coeffs.get(-1, 0))
    if sup <= {-2, 0, 2}:
        return "quadratic", (r.coeffs.get(2, 0), r.coeffs.get(0, 0), r.coeffs.get(-2, 0))
    raise ShapeMismatch(f"r_{i} has support {sorted(sup)}, expected (a t^2 + b)/t or (c t^4 + d t^2 + e)/t^2")


def closed_form_basis(p: ComponentParametrization, first: int = 1, last: int | None = None) -> GroebnerBasis:
    """Groebner basis written down directly from the coefficients when every
    coordinate has the shape (a t^2 + b)/t or (c t^4 + d t^2 + e)/t^2.

    Order: the middle variables ascending, then x_last, then x_first.
    """
    n = p.n
    last = last or n
    if p.mode != "laurent":
        raise ShapeMismatch("closed form needs a Laurent parametrization")
    shapes = [_shape(r, i + 1) for i, r in enumerate(p.r)]
    (s1, (a1, b1)), (sn, (an, bn)) = shapes[first - 1], shapes[last - 1]
    if s1 != "linear" or sn != "linear":
        raise ShapeMismatch(f"x{first} and x{last} must have the shape (a t^2 + b)/t")
    alpha = a1 * bn - an * b1
    if alpha == 0:
        raise AlphaZero(f"a{first}*b{last} - a{last}*b{first} vanishes")
    xs = x_names(n)
    X, Y = MultiPoly.var(xs, f"x{first}"), MultiPoly.var(xs, f"x{last}")
    middle = [k for k in range(1, n + 1) if k not in (first, last)]
    gens = []
    for k in middle:
        kind, cf = shapes[k - 1]
        xk = MultiPoly.var(xs, f"x{k}")
        if kind == "linear":
            ak, bk = cf
            Lt = X * (-(an * bk - bn * ak) / alpha) + Y * ((a1 * bk - b1 * ak) / alpha)
        else:
            if a1 * b1 == 0:
                raise ShapeMismatch(f"x{first} needs a{first}*b{first} != 0 for quadratic coordinates")
            ck, dk, ek = cf
            den = a1 * b1
            Lt = (
                X * X * (-(a1 * an * ek - b1 * bn * ck) / (den * alpha))
                + X * Y * ((a1 * a1 * ek - b1 * b1 * ck) / (den * alpha))
                - (a1 * a1 * ek - a1 * b1 * dk + b1 * b1 * ck) / den
            )
        gens.append(xk - Lt)
    H = X * X * (an * bn) - X * Y * (a1 * bn + an * b1) + Y * Y * (a1 * b1) + alpha * alpha
    gens.append(H)
    ranking = tuple(f"x{k}" for k in middle) + (f"x{last}", f"x{first}")
    order = MonomialOrder.lex(xs, ranking)
    return descend(reduce_basis(gens, order))


# smoothness -------------------------------------------------------------------

def conic_analysis(H: MultiPoly) -> dict:
    """Irreducibility and smoothness of a plane curve of degree <= 2."""
    used = sorted(H.used_vars(), key=H.vars.index)
    deg = H.total_degree()
    if deg > 2 or len(used) > 2:
        raise DegreeTooHigh(f"{H} is not a plane conic")
    if deg <= 0:
        return {"irreducible": False, "smooth": False, "degree": max(deg, 0)}
    if deg == 1:
        return {"irreducible": True, "smooth": True, "degree": 1}
    names = used + [v for v in H.vars if v not in used][: 2 - len(used)]
    idx = [H.vars.index(v) for v in names]

    def coef(i, j):
        e = [0] * len(H.vars)
        e[idx[0]] += i
        if len(idx) > 1:
            e[idx[1]] += j
        elif j:
            return mpq(0)
        return H.coefficient(tuple(e))

    A, B, C = coef(2, 0), coef(1, 1), coef(0, 2)
    D, E, F = coef(1, 0), coef(0, 1), coef(0, 0)
    M = [[A, B / 2, D / 2], [B / 2, C, E / 2], [D / 2, E / 2, F]]
    det = (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )
    if det != 0:
        return {"irreducible": True, "smooth": True, "degree": 2}
    # degenerate: H is constant on the affine set where its gradient
    # vanishes, so one critical point decides whether a singular point exists
    crit = [v for v in nullspace([[2 * A, B, D], [B, 2 * C, E]], 3) if v[2] != 0]
    singular = bool(crit) and H.evaluate(_critical_point(H, names, crit[0])) == 0
    return {"irreducible": False, "smooth": not singular, "degree": 2}


def _critical_point(H: MultiPoly, names: Sequence[str], v: Sequence) -> dict:
    pt = {x: mpq(0) for x in H.vars}
    pt[names[0]] = v[0] / v[2]
    if len(names) > 1:
        pt[names[1]] = v[1] / v[2]
    return pt


def _upoly_trim(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _upoly_gcd(a: list, b: list) -> list:
    a, b = _upoly_trim(list(a)), _upoly_trim(list(b))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            f = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[i + shift] = r[i + shift] - f * c
            r.pop()
            _upoly_trim(r)
        a, b = b, r
    return [c / a[-1] for c in a] if a else a


def _roots_low_degree(cs: list):
    """Roots of a monic polynomial of degree <= 2 with scalar coefficients,
    or None when they leave the scalar tower."""
    deg = len(cs) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [-cs[0] / cs[1]]
    if deg == 2:
        b, c = cs[1] / cs[2], cs[0] / cs[2]
        disc = b * b - 4 * c
        if isinstance(disc, Quad):
            return None
        s = sqrt_rational(disc)
        if isinstance(s, Quad) and (isinstance(b, Quad) and b.d != s.d):
            return None
        if s == 0:
            return [-b / 2]
        return [(-b + s) / 2, (-b - s) / 2]
    return None


def _rational_univariate_roots(f: MultiPoly, var: str):
    """Roots over Q or quadratic fields of a univariate rational polynomial, or
    None if an irreducible factor of degree > 2 occurs."""
    from sympy import Poly, Rational, symbols  # factorization utility

    s = symbols("s")
    i = f.vars.index(var)
    expr = 0
    for e, c in f.terms.items():
        expr += Rational(int(c.numerator), int(c.denominator)) * s ** e[i]
    roots = []
    for fac, _ in Poly(expr, s).factor_list()[1]:
        cs = [QQ(str(c)) for c in reversed(fac.all_coeffs())]
        r = _roots_low_degree(cs)
        if r is None:
            return None
        roots.extend(r)
    return roots


def _solve_zero_dim(G: GroebnerBasis):
    """All points of a zero-dimensional ideal given by a lex basis, provided
    each step only needs one quadratic extension; None otherwise."""
    ranking = list(G.order.ranking)
    points = [dict()]
    for v in reversed(ranking):
        new_points = []
        for pt in points:
            polys = []
            for g in G.gens:
                if g.used_vars() - set(pt) <= {v} and v in g.used_vars():
                    h = g
                    for name, val in pt.items():
                        h = h.substitute({name: val})
                    polys.append([h.coeffs_in(v)[k].coefficient((0,) * len(h.vars)) for k in range(h.degree(v) + 1)])
            if not polys:
                return None  # positive dimensional
            if not pt:
                # lowest variable: factor its univariate generator over Q
                g0 = next(g for g in G.gens if g.used_vars() == {v})
                roots = _rational_univariate_roots(g0, v)
            else:
                gcd = polys[0]
                for p in polys[1:]:
                    gcd = _upoly_gcd(gcd, p)
                roots = _roots_low_degree(gcd) if gcd else None
            if roots is None:
                return None
            for r in roots:
                q = dict(pt)
                q[v] = r
                new_points.append(q)
        points = new_points
    return points


def singular_points_plane(H: MultiPoly, u: str, v: str):
    """Singular points of the plane curve H(u, v) = 0, or None if not computable."""
    vars2 = (u, v)
    h = H.with_vars(vars2)
    o = MonomialOrder.lex(vars2, (u, v))
    G = groebner([h, h.diff(u), h.diff(v)], o)
    if G.is_unit():
        return []
    return _solve_zero_dim(G)


def smoothness_check(res: ImplicitResult) -> str:
    if res.geometry in ("point_set", "line"):
        return "yes"
    G = res.basis
    solved, core_vars, core = split_solved(G)
    if res.geometry == "conic_graph":
        return "yes" if conic_analysis(core[0])["smooth"] else "no"
    if len(core_vars) > 3 or len(core_vars) < 2:
        return "undetermined"
    if len(core_vars) == 2:
        if len(core) != 1:
            return "undetermined"
        pts = singular_points_plane(core[0], core_vars[0], core_vars[1])
        if pts is None:
            return "undetermined"
        return "yes" if not pts else "no"
    w, u, v = core_vars  # w ranks highest
    plane = [g for g in core if w not in g.used_vars()]
    upper = [g for g in core if w in g.used_vars()]
    if len(plane) != 1:
        return "undetermined"
    # the projection forgetting w must be finite: some generator has a pure power of w as leading monomial
    wi = G.vars.index(w)
    if not any(
        (lambda e: e[wi] > 0 and sum(e) == e[wi])(leading(g, G.order)[0]) for g in upper
    ):
        return "undetermined"
    cands = singular_points_plane(plane[0], u, v)
    if cands is None:
        return "undetermined"
    for pt in cands:
        polys = []
        for g in upper:
            h = g.substitute(pt)
            polys.append([h.coeffs_in(w)[k].coefficient((0,) * len(h.vars)) for k in range(h.degree(w) + 1)])
        gcd = polys[0]
        for p in polys[1:]:
            gcd = _upoly_gcd(gcd, p)
        roots = _roots_low_degree(gcd) if len(gcd) <= 3 else None
        if roots is None:
            return "undetermined"
        for r in roots:
            full = dict(pt)
            full[w] = r
            J = [[g.diff(x).evaluate({**{y: mpq(0) for y in G.vars}, **full}) for x in core_vars] for g in core]
            if rank(J) < len(core_vars) - 1:
                return "no"
    return "yes"
