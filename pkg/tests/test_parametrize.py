from __future__ import annotations

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from cases import report
from frieze_lab import catalog
from frieze_lab.errors import FitFailed, InsufficientData
from frieze_lab.parametrize import (
    LaurentPoly1,
    eval_param,
    fit_component,
    fit_coordinate,
    fit_laurent,
    laurent_supports,
    samples_needed,
)
from frieze_lab.recurrence import RecurrenceResult, UPoly
from frieze_lab.scalars import quad
from frieze_lab.seeds import apply_spec, coxeter_spec, inverse_spec

small = st.integers(min_value=-6, max_value=6)


def rec_for(c: int, m: int = 1) -> RecurrenceResult:
    p = UPoly([1] + [0] * (m - 1) + [-c] + [0] * (m - 1) + [1])
    return RecurrenceResult.build(p, m, c)


@st.composite
def laurent_targets(draw):
    """A trace c and a Laurent polynomial with coefficients in the field of rho."""
    c = draw(st.sampled_from([3, 5, 7, 14, 52]))
    d = rec_for(c).rho.d
    support = draw(st.sampled_from([s for s in laurent_supports() if len(s) <= 5]))
    return c, LaurentPoly1({e: quad(draw(small), draw(small), d) for e in support})


@settings(max_examples=80, deadline=None)
@given(laurent_targets())
def test_laurent_fit_roundtrip(target):
    c, r = target
    rec = rec_for(c)
    vals = [r(rec.rho ** j) for j in range(samples_needed() + 1)]
    got = fit_coordinate(vals, rec, "laurent")
    assert all(got(rec.rho ** j) == r(rec.rho ** j) for j in range(-5, 30))


@settings(max_examples=60, deadline=None)
@given(st.lists(small, min_size=1, max_size=6), st.booleans())
def test_polynomial_fit_roundtrip(coeffs, signed):
    f = LaurentPoly1(dict(enumerate(coeffs)))
    vals = [(-1) ** (j * signed) * f(mpq(j)) for j in range(samples_needed() + 1)]
    mode = "signed_poly" if signed else "poly"
    g = fit_coordinate(vals, rec_for(-2 if signed else 2), mode)
    assert g == f


def test_fit_rejects_nonrecurrent_data():
    vals = [mpq(2) ** (j * j) for j in range(40)]
    with pytest.raises(FitFailed):
        fit_coordinate(vals, rec_for(7), "laurent")
    with pytest.raises(InsufficientData):
        fit_coordinate(vals[:3], rec_for(7), "laurent")


def test_interpolation_is_exact():
    rec = rec_for(7)
    r = fit_laurent([mpq(1), mpq(3)], rec.rho, [-1, 1])
    assert r(mpq(1)) == 1 and r(rec.rho) == 3


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.integers(min_value=-5, max_value=5), small, max_size=5))
def test_text_roundtrip(coeffs):
    r = LaurentPoly1(coeffs)
    assert LaurentPoly1.parse(r.to_text()) == r


def test_text_with_irrational_coefficients():
    r = LaurentPoly1({-1: quad(1, 2, 3), 2: mpq(-5, 7)})
    assert LaurentPoly1.parse(r.to_text()) == r
    assert r.conjugate().coeffs[-1] == quad(1, -2, 3)
    num, k = r.numerator_denominator()
    assert k == 1 and set(num) == {0, 3}


@pytest.mark.parametrize("name", ["A21", "D5", "E6"])
def test_parametrization_predicts_unseen_points(name):
    rep = report(name)
    far = rep.orbit.extend(len(rep.orbit) + 3 * rep.m)
    for comp in rep.components:
        p = comp.param
        for j in range(0, (len(far) - 1 - p.t) // p.m + 1):
            assert eval_param(p, j) == far[p.t + j * p.m]


def test_negative_steps_run_the_orbit_backwards():
    rep = report("A21")
    p = rep.components[0].param
    q = catalog.a21()
    back = apply_spec(q, inverse_spec(coxeter_spec(q)), (1, 1, 1))
    prev = apply_spec(q, inverse_spec(coxeter_spec(q)), back)  # a_{-m} with m = 2
    assert p.t == 0 and p.m == 2
    assert eval_param(p, -1) == prev


def test_line_case_fits_polynomials():
    vals = [mpq(3 * j + 1) for j in range(15)]
    assert fit_coordinate(vals, rec_for(2), "poly") == LaurentPoly1({0: 1, 1: 3})


def test_fit_component_checks_residue():
    rep = report("A21")
    with pytest.raises(ValueError):
        fit_component(rep.orbit, rep.m, rep.recurrence)
