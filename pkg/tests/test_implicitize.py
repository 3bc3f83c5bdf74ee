from __future__ import annotations

import pytest
import sympy
from gmpy2 import mpq

from cases import report, ones
from frieze_lab import catalog
from frieze_lab.errors import AlphaZero, DescentFailed, ShapeMismatch
from frieze_lab.implicitize import (
    closed_form_basis,
    conic_analysis,
    descend,
    implicitize,
    resolve_order,
    singular_points_plane,
    split_solved,
)
from frieze_lab.parametrize import ComponentParametrization, LaurentPoly1
from frieze_lab.pipeline import Options, compute_frieze_variety
from frieze_lab.polyring import GroebnerBasis, MonomialOrder, MultiPoly, parse_poly
from frieze_lab.scalars import quad
from frieze_lab.seeds import coxeter_spec

XY = ("x", "y")


@pytest.mark.parametrize("n, m, c", [(5, 2, 14), (6, 3, 23), (7, 4, 34), (8, 5, 47)])
def test_d_tilde_closed_form_equals_buchberger(n, m, c):
    q = catalog.d_tilde(n)
    rep = compute_frieze_variety(q, coxeter_spec(q), ones(n), Options())
    assert (rep.m, rep.recurrence.c) == (m, c)
    assert c == n * n - 2 * n - 1
    for comp in rep.components:
        assert closed_form_basis(comp.param, 1, n) == comp.result.basis
        assert comp.result.geometry == "conic_graph" and comp.result.smooth == "yes"


def test_elimination_matches_sympy():
    comp = report("A21").components[0]
    p = comp.param
    t = sympy.Symbol("t")
    xs = sympy.symbols("x1 x2 x3")
    eqs = []
    for xi, r in zip(xs, p.r):
        num, k = r.numerator_denominator()
        f = sum(sympy.sympify(str(c).replace("^", "**")) * t ** e for e, c in num.items())
        eqs.append(xi * t ** k - f)
    G = sympy.groebner(eqs, t, *xs, order="lex")
    sym_elim = [g for g in G.exprs if t not in g.free_symbols]
    ours = comp.result.basis
    # same ideal: each side reduces to zero modulo the other
    theirs = sympy.groebner(sym_elim, *[sympy.Symbol(v) for v in ours.order.ranking], order="lex")
    for g in ours.gens:
        assert theirs.reduce(sympy.sympify(g.to_text().replace("^", "**")))[1] == 0
    assert len(theirs.exprs) == len(ours.gens)


@pytest.mark.parametrize(
    "text, irreducible, smooth",
    [
        ("x^2 + y^2 - 1", True, True),
        ("x^2 - 3*x*y + y^2 + 1", True, True),
        ("x^2 - 1", False, True),  # two parallel lines
        ("x*y", False, False),
        ("x^2 - y^2", False, False),
        ("x^2", False, False),
    ],
)
def test_conic_analysis(text, irreducible, smooth):
    info = conic_analysis(parse_poly(text, XY))
    assert info["irreducible"] is irreducible and info["smooth"] is smooth


def test_plane_singularities_against_sympy():
    for text in ("y^2 - x^3 - x^2", "y^2 - x^3", "x^2 + y^2 - 1"):
        H = parse_poly(text, XY)
        ours = singular_points_plane(H, "x", "y")
        x, y = sympy.symbols("x y")
        h = sympy.sympify(text.replace("^", "**"))
        sols = sympy.solve([h, sympy.diff(h, x), sympy.diff(h, y)], [x, y], dict=True)
        assert {(p["x"], p["y"]) for p in ours} == {(mpq(str(s[x])), mpq(str(s[y]))) for s in sols}


def test_folded_star_quartic_has_a_node():
    comp = report("star_folded").components[0]
    assert comp.result.smooth == "no"
    _, core_vars, core = split_solved(comp.result.basis)
    assert singular_points_plane(core[0], *core_vars) == [{"x1": mpq(-1), "x2": mpq(0)}]
    # x2 = (a t^2 + b)/t vanishes at both t = +-sqrt(-b/a), and x1 depends on t^2 only,
    # so two parameter values land on the node
    r1, r2 = comp.param.r
    s = -r2.coeffs[-1] / r2.coeffs[1]  # t^2 at the zeros of x2
    assert r1.coeffs[2] * s + r1.coeffs[0] + r1.coeffs[-2] / s == -1


def test_resolve_order():
    assert resolve_order(4) == ("x2", "x3", "x4", "x1")
    assert resolve_order(4, "anchor", 3) == ("x1", "x2", "x4", "x3")
    assert resolve_order(3, "natural") == ("x1", "x2", "x3")
    assert resolve_order(3, "reverse") == ("x3", "x2", "x1")
    assert resolve_order(3, "x2 > x3 > x1") == ("x2", "x3", "x1")
    with pytest.raises(ValueError):
        resolve_order(3, ["x1", "x2"])


def laurent_param(*rs, c=7):
    from frieze_lab.recurrence import quadratic_roots

    return ComponentParametrization(0, 1, "laurent", [LaurentPoly1(r) for r in rs], quadratic_roots(c)[0])


def test_closed_form_errors():
    with pytest.raises(AlphaZero):
        closed_form_basis(laurent_param({1: 1, -1: 1}, {1: 2, -1: 2}))
    with pytest.raises(ShapeMismatch):
        closed_form_basis(laurent_param({3: 1}, {1: 1, -1: 2}))


def test_constant_parametrization_is_a_point():
    p = laurent_param({0: 2}, {0: 3})
    res = implicitize(p, "natural")
    assert res.geometry == "point_set" and res.basis.texts() == ["x2 - 3", "x1 - 2"]


def test_descent():
    o = MonomialOrder.lex(XY)
    rational = GroebnerBasis([parse_poly("x - y^2", XY)], o, True)
    assert descend(rational) is rational
    with pytest.raises(DescentFailed):
        descend(GroebnerBasis([MultiPoly.var(XY, "x") - quad(0, 1, 2)], o, True))
