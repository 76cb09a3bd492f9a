"""Tests for the quadrature oracle itself."""

import math

import pytest

from hugelschaffer.curve import CurveParams
from hugelschaffer.oracle import (
    DepthExhausted,
    QuadratureSpec,
    Rule,
    quad,
    quad_area,
    quad_elliptic,
)


def test_constant_integrand():
    assert quad(lambda t: 1.0, 0.0, math.pi / 2) == pytest.approx(
        math.pi / 2, abs=1e-12
    )


def test_I1_and_J1():
    f = lambda t: math.sin(t) ** 2 * math.cos(t)
    assert quad(f, 0.0, math.pi / 2) == pytest.approx(1 / 3, abs=1e-11)
    assert quad(f, math.pi / 2, math.pi) == pytest.approx(-1 / 3, abs=1e-11)


def test_gauss_rule_agrees_with_simpson():
    spec = QuadratureSpec(rule=Rule.GAUSS_LEGENDRE, gauss_order=8)
    f = lambda t: math.exp(-t) * math.sin(3 * t)
    assert quad(f, 0.0, 2.0, spec) == pytest.approx(quad(f, 0.0, 2.0), abs=1e-10)


def test_richardson_sanity():
    # halving abs_tol never moves the result by more than the prior abs_tol
    f = lambda t: 1.0 / math.sqrt(1.0 - 0.81 * math.sin(t) ** 2)
    loose = quad(f, 0.0, math.pi / 2, QuadratureSpec(abs_tol=1e-8))
    tight = quad(f, 0.0, math.pi / 2, QuadratureSpec(abs_tol=5e-9))
    assert abs(loose - tight) <= 1e-8


def test_determinism():
    f = lambda t: math.sin(t) ** 2 * math.sqrt(1.0 - 0.25 * math.sin(t) ** 2)
    assert quad(f, 0.0, math.pi) == quad(f, 0.0, math.pi)


def test_depth_exhaustion():
    spec = QuadratureSpec(abs_tol=1e-15, max_depth=3)
    with pytest.raises(DepthExhausted) as info:
        quad(lambda t: 1.0 / math.sqrt(abs(t) + 1e-14), -1.0, 1.0, spec)
    assert math.isfinite(info.value.best)


def test_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(abs_tol=1e-16)
    with pytest.raises(ValueError):
        QuadratureSpec(max_depth=61)


def test_quad_elliptic_values():
    # E at modulus 1 is the integral of |cos|, i.e. exactly 1
    assert quad_elliptic("E", 1.0) == pytest.approx(1.0, abs=1e-11)
    assert quad_elliptic("K", 0.0) == pytest.approx(math.pi / 2, abs=1e-12)
    with pytest.raises(ValueError):
        quad_elliptic("K", 1.0)
    with pytest.raises(ValueError):
        quad_elliptic("F", 0.5)


def test_quad_elliptic_matches_agm():
    from hugelschaffer.elliptic import complete_E, complete_K

    assert abs(quad_elliptic("K", 0.5) - complete_K(0.5)) < 1e-11
    assert abs(quad_elliptic("E", 0.5) - complete_E(0.5)) < 1e-11


def test_quad_area_degenerate_case():
    # a = b = w gives the parabola-plus-line region of area 8abq/3 = 32/3
    result = quad_area(CurveParams(2, 2, 2))
    assert result.total == pytest.approx(32 / 3, abs=1e-6)


def test_quad_area_halves_difference():
    result = quad_area(CurveParams(4, 3, 2))
    assert result.part2 - result.part1 == pytest.approx(16.0, rel=1e-9)


def test_quad_area_matches_closed_form():
    from hugelschaffer.area import area_exact

    for params in (CurveParams(4, 3, 2), CurveParams(2, 3, 4)):
        exact = area_exact(params).total
        assert abs(quad_area(params).total - exact) / exact < 1e-8


def test_finite_difference_derivative_route():
    params = CurveParams(4, 3, 2)
    analytic = quad_area(params, derivative="analytic")
    fd = quad_area(params, derivative="fd", spec=QuadratureSpec(abs_tol=1e-9))
    assert fd.total == pytest.approx(analytic.total, rel=1e-7)
    with pytest.raises(ValueError):
        quad_area(params, derivative="nope")
