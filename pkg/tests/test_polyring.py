from __future__ import annotations

import random

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from frieze_lab.errors import OrderMismatch, PolyParseError, VariableMismatch, ZeroDivisor
from frieze_lab.polyring import (
    GroebnerBasis,
    MonomialOrder,
    MultiPoly,
    divide,
    eliminate,
    groebner,
    is_groebner,
    leading,
    normal_form,
    parse_poly,
    sylvester_resultant,
)
from frieze_lab.scalars import quad
from properties import VARS, random_order, random_poly


def to_sympy(p: MultiPoly):
    return sympy.sympify(p.to_text().replace("^", "**"))


def monic(p: MultiPoly, order: MonomialOrder) -> MultiPoly:
    return p.scale(1 / leading(p, order)[1])


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_groebner_matches_sympy(seed):
    rng = random.Random(seed)
    nv = rng.randint(1, 3)
    order = random_order(rng, nv)
    gens = [random_poly(rng, nv, rng.randint(1, 3), 2, 3, min_degree=1) + random_poly(rng, nv, 1, 0, 3)
            for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if not g.is_zero()] or [MultiPoly.var(VARS[:nv], VARS[0])]
    ours = groebner(gens, order)
    syms = [sympy.Symbol(v) for v in order.ranking]
    theirs = sympy.groebner([to_sympy(g) for g in gens], *syms, order="lex")
    expected = {monic(parse_poly(str(e), order.vars), order) for e in theirs.exprs}
    assert set(ours.gens) == expected
    assert is_groebner(ours)


def test_textbook_basis():
    names = ("x", "y")
    order = MonomialOrder.lex(names, ("x", "y"))
    f = parse_poly("x^2 + y^2 - 1", names)
    g = parse_poly("x - y", names)
    G = groebner([f, g], order)
    assert set(G.texts()) == {"x - y", "y^2 - 1/2"}


def test_division_remainder_is_normal_form():
    names = ("x", "y")
    order = MonomialOrder.lex(names)
    f = parse_poly("x^2*y + x*y^2 + y^2", names)
    gs = [parse_poly("x*y - 1", names), parse_poly("y^2 - 1", names)]
    (q1, q2), r = divide(f, gs, order)
    assert q1 * gs[0] + q2 * gs[1] + r == f
    assert r.to_text(order) == "x + y + 1"
    G = groebner(gs, order)
    assert normal_form(f, G.gens, order) == divide(f, G.gens, order)[1]
    with pytest.raises(ZeroDivisor):
        divide(f, [MultiPoly.constant(names, 0)], order)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=4),
       st.lists(st.integers(min_value=-4, max_value=4), min_size=1, max_size=4))
def test_resultant_is_product_over_roots(roots, gcoeffs):
    names = ("x", "y")
    x = MultiPoly.var(names, "x")
    f = MultiPoly.constant(names, 1)
    for r in roots:
        f = f * (x - r)
    g = MultiPoly.constant(names, 0)
    for k, c in enumerate(gcoeffs):
        g = g + x ** k * c
    res = sylvester_resultant(f, g, "x")
    expected = mpq(1)
    for r in roots:
        expected *= g.evaluate({"x": r, "y": 0})
    assert res == MultiPoly.constant(names, expected)


def test_resultant_matches_sympy_bivariate():
    names = ("x", "y", "t")
    f = parse_poly("t^2*x - 3*t + 1", names)
    g = parse_poly("t^2*y - t^3 - 2", names)
    ours = sylvester_resultant(f, g, "t")
    theirs = sympy.resultant(to_sympy(f), to_sympy(g), sympy.Symbol("t"))
    assert sympy.expand(to_sympy(ours) - theirs) == 0


def test_eliminate_requires_elimination_order():
    names = ("x", "y", "z")
    order = MonomialOrder.lex(names, ("x", "y", "z"))
    G = groebner([parse_poly("x - y^2", names), parse_poly("x - z^3", names)], order)
    sub = eliminate(G, ["y", "z"])
    assert sub.vars == ("y", "z") and sub.texts() == ["y^2 - z^3"]
    with pytest.raises(OrderMismatch):
        eliminate(G, ["x", "z"])
    with pytest.raises(VariableMismatch):
        eliminate(G, ["w"])


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_text_roundtrip(seed):
    rng = random.Random(seed)
    p = random_poly(rng, 4, rng.randint(0, 6), 4)
    assert parse_poly(p.to_text(), VARS) == p
    order = random_order(rng, 4)
    assert parse_poly(p.to_text(order), VARS) == p


def test_irrational_coefficients():
    names = ("x",)
    p = parse_poly("(1+sqrt(21))*x^2 - 5/2", names)
    assert p.coefficient((2,)) == quad(1, 1, 21)
    assert parse_poly(p.to_text(), names) == p
    assert p.conjugate().coefficient((2,)) == quad(1, -1, 21)


def test_parse_errors():
    with pytest.raises(PolyParseError):
        parse_poly("x + w", ("x",))
    with pytest.raises(PolyParseError):
        parse_poly("x^(1/2)", ("x",))
    with pytest.raises(OrderMismatch):
        MonomialOrder.lex(("x", "y"), ("x", "x"))


def test_basis_dict_roundtrip():
    names = ("x1", "x2")
    order = MonomialOrder.lex(names, ("x2", "x1"))
    G = groebner([parse_poly("x2^2 - x1", names), parse_poly("x1^2 - 4", names)], order)
    assert GroebnerBasis.from_dict(G.to_dict()) == G
