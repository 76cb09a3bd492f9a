"""Egg areas: exact closed form, series, Taylor approximants, and bounds.

The exact area of the egg part is
    (4/3) a b q [ (1 - 1/k^2) K(k) + (1 + 1/k^2) E(k) ],
with subareas split at the extremum abscissa.  A power series in the
modulus gives an equivalent route (and, evaluated at k = 1, a series
representation of 1/pi).  Taylor approximants of the series bound the
area from both sides; ``bounds`` packages those into a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import oracle, taylor
from .curve import CurveParams, derive
from .elliptic import (
    AREA_SERIES,
    DomainError,
    complete_E,
    complete_K,
    series_eval,
    series_partial,
)
from .taylor import ApproxKind

__all__ = [
    "AreaBreakdown",
    "BoundsCertificate",
    "integral_I",
    "check_J_relations",
    "area_exact",
    "area_series",
    "area_series_partial",
    "area_taylor",
    "bounds",
    "inv_pi_partial",
]

# Above this modulus the (1 - 1/k^2) K term cancels badly; use the series.
_SERIES_SWITCH = 0.99


@dataclass(frozen=True)
class AreaBreakdown:
    total: float
    part1: float  # subarea left of the extremum abscissa
    part2: float  # subarea right of it
    scale: float  # a * b * q
    k: float


@dataclass(frozen=True)
class BoundsCertificate:
    """Two-sided area bounds with their refinement margins.

    ``delta`` is the lower-refinement margin consistent with the degree-1
    endpoint-corrected approximant, a*b*q*(pi - 8/3)*(1 - k).  The
    published form a*b*q*pi*(1 - k) is carried as ``delta_printed`` and
    flagged: added to the coarse lower bound it overshoots the true area
    for small k.
    """

    lower_coarse: float
    upper_coarse: float
    lower_refined: float
    upper_refined: float
    delta: float
    nabla: float
    delta_printed: float
    delta_printed_consistent: bool
    nabla_piecewise: float
    exact_total: float


def integral_I(index: int, k: float) -> float:
    """Closed forms of the three building-block integrals over [0, pi/2].

    I1 = 1/3; I2 and I3 are the sin^2-weighted radical integrals expressed
    through K and E.
    """
    if index == 1:
        return 1.0 / 3.0
    if index not in (2, 3):
        raise ValueError("index must be 1, 2 or 3")
    if not (0.0 < k < 1.0):
        raise DomainError(f"modulus must lie in (0, 1) for I{index}, got {k!r}")
    k2 = k * k
    bigK, bigE = complete_K(k), complete_E(k)
    if index == 2:
        return (1.0 - k2) / (3.0 * k2) * bigK + (2.0 * k2 - 1.0) / (3.0 * k2) * bigE
    return (2.0 * k2 - 2.0) / (3.0 * k2 * k2) * bigK + (2.0 - k2) / (3.0 * k2 * k2) * bigE


def check_J_relations(
    k: float, spec: oracle.QuadratureSpec = oracle.DEFAULT_SPEC
) -> dict[str, float]:
    """Quadrature check of the [pi/2, pi] counterparts of I1..I3.

    Returns the absolute deviations from J1 = -1/3, J2 = I2, J3 = I3.
    """
    if not (0.0 < k < 1.0):
        raise DomainError(f"modulus must lie in (0, 1), got {k!r}")
    k2 = k * k
    half_pi, pi = 0.5 * math.pi, math.pi

    j1 = oracle.quad(lambda t: math.sin(t) ** 2 * math.cos(t), half_pi, pi, spec)
    j2 = oracle.quad(
        lambda t: math.sin(t) ** 2 * math.sqrt(1.0 - k2 * math.sin(t) ** 2),
        half_pi,
        pi,
        spec,
    )
    j3 = oracle.quad(
        lambda t: math.sin(t) ** 2
        * math.cos(t) ** 2
        / math.sqrt(1.0 - k2 * math.sin(t) ** 2),
        half_pi,
        pi,
        spec,
    )
    return {
        "J1": abs(j1 - (-1.0 / 3.0)),
        "J2": abs(j2 - integral_I(2, k)),
        "J3": abs(j3 - integral_I(3, k)),
    }


def area_exact(params: CurveParams) -> AreaBreakdown:
    """Exact egg area and its two subareas.

    The subareas follow from the total and the exact difference
    part2 - part1 = (8/3) a b q k.  At k = 1 the closed form degenerates
    to the parabola-plus-line value (8/3) a b q.
    """
    shape = derive(params)
    k = shape.k
    scale = params.a * params.b * shape.q
    if k == 1.0:
        total = 8.0 * scale / 3.0
    elif k > _SERIES_SWITCH:
        total = scale * series_eval(AREA_SERIES, k, tol=1e-16)
    else:
        inv2 = 1.0 / (k * k)
        total = (
            (4.0 / 3.0)
            * scale
            * ((1.0 - inv2) * complete_K(k) + (1.0 + inv2) * complete_E(k))
        )
    diff = (8.0 / 3.0) * scale * k
    return AreaBreakdown(
        total=total,
        part1=0.5 * (total - diff),
        part2=0.5 * (total + diff),
        scale=scale,
        k=k,
    )


def area_series(params: CurveParams, tol: float = 1e-14) -> float:
    """Area via the modulus power series, truncated at ``tol``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    shape = derive(params)
    scale = params.a * params.b * shape.q
    return scale * series_eval(AREA_SERIES, shape.k, tol)


def area_series_partial(params: CurveParams, n_terms: int) -> float:
    """Area series summed over a fixed number of terms (endpoint probing)."""
    shape = derive(params)
    scale = params.a * params.b * shape.q
    return scale * series_partial(AREA_SERIES, shape.k, n_terms)


def area_taylor(
    params: CurveParams,
    n: int,
    kind: ApproxKind,
    beta: Optional[float] = None,
) -> float:
    """Taylor-approximant area: upper bound (first) or lower bound (second)."""
    shape = derive(params)
    scale = params.a * params.b * shape.q
    if kind is ApproxKind.FIRST:
        approx = taylor.first_taylor(AREA_SERIES, n)
    else:
        if beta is None:
            beta = 1.0
        approx = taylor.second_taylor(AREA_SERIES, n, beta)
    return scale * taylor.eval_approx(approx, shape.k)


def bounds(params: CurveParams) -> BoundsCertificate:
    """Coarse and refined two-sided bounds with margin diagnostics.

    Coarse: (8/3) a b q <= area <= pi a b q.  Refined: the degree-1
    endpoint-corrected approximant from below and the degree-2 Maclaurin
    truncation from above.
    """
    shape = derive(params)
    k = shape.k
    scale = params.a * params.b * shape.q
    exact = area_exact(params).total

    lower_coarse = 8.0 * scale / 3.0
    upper_coarse = math.pi * scale
    lower_refined = area_taylor(params, 1, ApproxKind.SECOND, beta=1.0)
    upper_refined = area_taylor(params, 2, ApproxKind.FIRST)

    delta = scale * (math.pi - 8.0 / 3.0) * (1.0 - k)
    nabla = (math.pi / 8.0) * scale * k * k
    delta_printed = scale * math.pi * (1.0 - k)
    a, b, w = params.a, params.b, params.w
    if w < a:
        nabla_piecewise = math.pi * b * w * w / (8.0 * a)
    elif w > a:
        nabla_piecewise = math.pi * a**4 * b / (8.0 * w**3)
    else:
        nabla_piecewise = math.pi * scale / 8.0

    return BoundsCertificate(
        lower_coarse=lower_coarse,
        upper_coarse=upper_coarse,
        lower_refined=lower_refined,
        upper_refined=upper_refined,
        delta=delta,
        nabla=nabla,
        delta_printed=delta_printed,
        delta_printed_consistent=(lower_coarse + delta_printed) <= exact,
        nabla_piecewise=nabla_piecewise,
        exact_total=exact,
    )


def inv_pi_partial(N: int) -> float:
    """Partial sum of the 1/pi series: (3/8)(1 - sum of the area-series tail).

    Strictly decreasing in N toward 1/pi; the coefficients come from the
    same double-factorial recurrence as the area series.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    r = 1.0
    acc = 0.0
    for i in range(1, N + 1):
        r *= ((2 * i - 1) / (2 * i)) ** 2
        acc += r / ((2 * i - 1) * (i + 1))
    return 0.375 * (1.0 - acc)
