"""Tests for the first/second Taylor approximations and inequality chains.

The coefficient fixtures are compared as exact rationals, never through
floating point.
"""

import math
from fractions import Fraction

import pytest

from hugelschaffer.elliptic import (
    AREA_SERIES,
    D_SERIES,
    DomainError,
    E_SERIES,
    K_SERIES,
    complete_K,
    target_value,
)
from hugelschaffer.taylor import (
    ApproxKind,
    eval_approx,
    first_taylor,
    second_taylor,
    verify_chain,
)

F = Fraction

# pi-multiples of x^0, x^2, ..., x^10 in the degree-10 Maclaurin truncations
FIRST_KIND_COEFFS = {
    "K": [F(1, 2), F(1, 8), F(9, 128), F(25, 512), F(1225, 32768), F(3969, 131072)],
    "E": [F(1, 2), F(-1, 8), F(-3, 128), F(-5, 512), F(-175, 32768), F(-441, 131072)],
    "D": [F(1, 4), F(3, 32), F(15, 256), F(175, 4096), F(2205, 65536), F(14553, 524288)],
    "A": [F(1), F(-1, 8), F(-1, 64), F(-5, 1024), F(-35, 16384), F(-147, 131072)],
}

TARGETS = {"K": K_SERIES, "E": E_SERIES, "D": D_SERIES, "A": AREA_SERIES}

# (const, pi-multiple) of the endpoint correction at beta = 1, per degree
SECOND_KIND_CORRECTIONS_E = {
    1: (F(1), F(-1, 2)),
    2: (F(1), F(-1, 2)),
    3: (F(1), F(-3, 8)),
    4: (F(1), F(-3, 8)),
    5: (F(1), F(-45, 128)),
    6: (F(1), F(-45, 128)),
    7: (F(1), F(-175, 512)),
    8: (F(1), F(-175, 512)),
    9: (F(1), F(-11025, 32768)),
    10: (F(1), F(-11025, 32768)),
}
SECOND_KIND_CORRECTIONS_A = {
    1: (F(8, 3), F(-1)),
    2: (F(8, 3), F(-1)),
    3: (F(8, 3), F(-7, 8)),
    4: (F(8, 3), F(-7, 8)),
    5: (F(8, 3), F(-55, 64)),
    6: (F(8, 3), F(-55, 64)),
    7: (F(8, 3), F(-875, 1024)),
    8: (F(8, 3), F(-875, 1024)),
    9: (F(8, 3), F(-13965, 16384)),
    10: (F(8, 3), F(-13965, 16384)),
}


@pytest.mark.parametrize("name", sorted(TARGETS))
def test_first_kind_table_fixtures_exact(name):
    approx = first_taylor(TARGETS[name], 10)
    assert [t.pi_coeff for t in approx.terms] == FIRST_KIND_COEFFS[name]
    assert all(t.const_coeff == 0 and t.float_coeff == 0.0 for t in approx.terms)
    assert [t.power for t in approx.terms] == [0, 2, 4, 6, 8, 10]


@pytest.mark.parametrize(
    "fixtures,name",
    [(SECOND_KIND_CORRECTIONS_E, "E"), (SECOND_KIND_CORRECTIONS_A, "A")],
)
def test_second_kind_correction_fixtures_exact(fixtures, name):
    target = TARGETS[name]
    for degree, (const, pi_mult) in fixtures.items():
        corr = second_taylor(target, degree, 1.0).terms[-1]
        assert corr.power == degree
        assert corr.const_coeff == const
        assert corr.pi_coeff == pi_mult
        assert corr.float_coeff == 0.0


def test_first_taylor_examples():
    # degree 4 of K: pi/2 + pi/8 x^2 + 9pi/128 x^4
    k4 = first_taylor(K_SERIES, 4)
    assert [t.pi_coeff for t in k4.terms] == [F(1, 2), F(1, 8), F(9, 128)]
    # degree 1 of E is still the constant pi/2
    e1 = first_taylor(E_SERIES, 1)
    assert [t.pi_coeff for t in e1.terms] == [F(1, 2)]
    # degree 10 of D, full row
    d10 = first_taylor(D_SERIES, 10)
    assert [t.pi_coeff for t in d10.terms] == FIRST_KIND_COEFFS["D"]


def test_second_taylor_examples():
    # constant approximation of E at beta = 1
    e0 = second_taylor(E_SERIES, 0, 1.0)
    assert eval_approx(e0, 0.3) == 1.0
    # degree 3 of E: pi/2 - pi/8 x^2 + (1 - 3pi/8) x^3
    e3 = second_taylor(E_SERIES, 3, 1.0)
    coeffs = e3.coefficients()
    assert coeffs[0] == pytest.approx(math.pi / 2)
    assert coeffs[2] == pytest.approx(-math.pi / 8)
    assert coeffs[3] == pytest.approx(1 - 3 * math.pi / 8)
    # degree 1 of K anchored at beta = 0.5 reproduces K(0.5)
    k1 = second_taylor(K_SERIES, 1, 0.5)
    assert eval_approx(k1, 0.5) == pytest.approx(complete_K(0.5), abs=1e-12)


@pytest.mark.parametrize("name", sorted(TARGETS))
@pytest.mark.parametrize("i", range(5))
def test_even_degree_collapse(name, i):
    target = TARGETS[name]
    even = first_taylor(target, 2 * i)
    odd = first_taylor(target, 2 * i + 1)
    for x in (0.1, 0.35, 0.8):
        assert eval_approx(even, x) == eval_approx(odd, x)


@pytest.mark.parametrize("name,beta", [("K", 0.7), ("E", 1.0), ("D", 0.9), ("A", 1.0)])
@pytest.mark.parametrize("n", range(1, 8))
def test_endpoint_interpolation(name, beta, n):
    target = TARGETS[name]
    approx = second_taylor(target, n, beta)
    assert eval_approx(approx, beta) == pytest.approx(
        target_value(target, beta), abs=1e-12
    )


def test_eval_examples():
    assert eval_approx(first_taylor(K_SERIES, 2), 0.0) == pytest.approx(math.pi / 2)
    assert eval_approx(second_taylor(E_SERIES, 3, 1.0), 1.0) == pytest.approx(1.0, abs=1e-12)
    # area truncation of degree 2 at the parabola endpoint: 7pi/8
    assert eval_approx(first_taylor(AREA_SERIES, 2), 1.0) == pytest.approx(
        7 * math.pi / 8
    )


def test_beta_one_redirected_for_divergent_targets():
    approx = second_taylor(K_SERIES, 2, 1.0)
    assert approx.beta == pytest.approx(0.999999)
    with pytest.raises(DomainError):
        second_taylor(K_SERIES, 2, 1.2)
    with pytest.raises(DomainError):
        second_taylor(E_SERIES, 2, 1.0001)


def test_eval_domain_errors():
    with pytest.raises(DomainError):
        eval_approx(first_taylor(K_SERIES, 4), 1.0)  # K has no endpoint value
    with pytest.raises(DomainError):
        eval_approx(second_taylor(E_SERIES, 3, 0.5), 0.6)
    # allowed: first-kind area polynomial at the closed endpoint
    eval_approx(first_taylor(AREA_SERIES, 4), 1.0)


GRID_09 = [i / 10.0 for i in range(1, 10)]


@pytest.mark.parametrize(
    "name,beta,grid",
    [
        ("E", 1.0, GRID_09),
        ("A", 1.0, [0.25, 0.5, 0.75]),
        ("K", 0.9, [i / 10.0 for i in range(1, 9)]),
        ("D", 0.9, [i / 10.0 for i in range(1, 9)]),
    ],
)
def test_chains_hold(name, beta, grid):
    report = verify_chain(TARGETS[name], 10, beta, grid)
    assert report.ok, report.violations


def test_chain_margins_shrink_with_degree():
    report = verify_chain(E_SERIES, 10, 1.0, GRID_09)
    for x in GRID_09:
        for margins in (report.first_margins[x], report.second_margins[x]):
            for lo, hi in zip(margins[1:], margins):
                assert lo <= hi + 1e-14


def test_chain_area_constant_second_is_endpoint_value():
    # the degree-0 endpoint-corrected approximant is the constant A(beta)
    a0 = second_taylor(AREA_SERIES, 0, 1.0)
    assert eval_approx(a0, 0.5) == pytest.approx(8.0 / 3.0)
