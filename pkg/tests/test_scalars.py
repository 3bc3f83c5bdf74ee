from __future__ import annotations

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from frieze_lab.errors import DivisionByZero, IncompatibleFields, ScalarParseError
from frieze_lab.scalars import (
    Quad,
    format_scalar,
    parse_scalar,
    quad,
    sqrt_rational,
    squarefree_decompose,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20).map(mpq)
radicands = st.sampled_from([2, 3, 5, 21, -1, -3, 413])


@st.composite
def field_elements(draw, d=None):
    d = d if d is not None else draw(radicands)
    return quad(draw(rationals), draw(rationals), d)


def to_sympy(x):
    if isinstance(x, Quad):
        return sympy.Rational(str(x.a)) + sympy.Rational(str(x.b)) * sympy.sqrt(x.d)
    return sympy.Rational(str(x))


@settings(max_examples=60, deadline=None)
@given(st.data(), radicands)
def test_arithmetic_matches_sympy(data, d):
    x = data.draw(field_elements(d))
    y = data.draw(field_elements(d))
    for got, want in ((x + y, to_sympy(x) + to_sympy(y)), (x - y, to_sympy(x) - to_sympy(y)),
                      (x * y, to_sympy(x) * to_sympy(y))):
        assert sympy.simplify(to_sympy(got) - want) == 0
    if y != 0:
        assert sympy.simplify(to_sympy(x / y) - to_sympy(x) / to_sympy(y)) == 0


@settings(max_examples=200, deadline=None)
@given(st.data(), radicands)
def test_field_axioms(data, d):
    x, y, z = (data.draw(field_elements(d)) for _ in range(3))
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if x != 0:
        assert x * (1 / x) == 1


@settings(max_examples=200, deadline=None)
@given(st.data(), radicands)
def test_norm_is_multiplicative(data, d):
    x, y = data.draw(field_elements(d)), data.draw(field_elements(d))
    nx = x.norm() if isinstance(x, Quad) else x * x
    ny = y.norm() if isinstance(y, Quad) else y * y
    nxy = (x * y).norm() if isinstance(x * y, Quad) else (x * y) ** 2
    assert nxy == nx * ny


@settings(max_examples=200, deadline=None)
@given(field_elements())
def test_text_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=-10**12, max_value=10**12).filter(bool))
def test_squarefree_matches_factorint(n):
    s, d = squarefree_decompose(n)
    assert s * s * d == n
    assert all(e == 1 for e in sympy.factorint(abs(d)).values())


def test_squarefree_large_cofactor():
    p, q = 1000003, 1000033
    s, d = squarefree_decompose(p * p * q * 7)
    assert (s, d) == (p, 7 * q)


def test_quad_collapses_and_normalizes():
    assert quad(3, 0, 5) == 3 and not isinstance(quad(3, 0, 5), Quad)
    assert quad(0, 1, 12) == quad(0, 2, 3)
    assert quad(1, 1, 4) == 3
    assert sqrt_rational(mpq(9, 4)) == mpq(3, 2)
    assert sqrt_rational(mpq(1, 2)) == quad(0, mpq(1, 2), 2)


def test_ordering_of_real_quadratics():
    rho = quad(26, 15, 3)
    assert rho > 51 and rho.conjugate() < 1 and rho * rho.conjugate() == 1


def test_errors():
    with pytest.raises(IncompatibleFields):
        quad(0, 1, 2) + quad(0, 1, 3)
    with pytest.raises(DivisionByZero):
        parse_scalar("1/0")
    with pytest.raises(ScalarParseError):
        parse_scalar("sqrt(sqrt(2))")
    with pytest.raises(ScalarParseError):
        parse_scalar("x + 1")
    with pytest.raises(ValueError):
        Quad(1, 1, 4)


def test_canonical_format():
    assert format_scalar(quad(mpq(61, 2), mpq(3, 2), 413)) == "61/2+3/2*sqrt(413)"
    assert format_scalar(quad(26, -15, 3)) == "26-15*sqrt(3)"
    assert format_scalar(mpq(-7, 3)) == "-7/3"
