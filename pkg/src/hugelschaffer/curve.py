"""Hügelschäffer curve model: parameters, derived shape quantities,
implicit cubics, and the egg-part parametrization.

The curve 2wxy^2 + b^2 x^2 + (a^2 + w^2) y^2 - a^2 b^2 = 0 splits into an
egg-shaped oval over [-a, a] and a hyperbolic part left of the asymptote
abscissa gamma.  A unification parameter q (1 when w < a, a/w when w > a)
collapses the two construction regimes into a single equation, and the
modulus k = q^2 w / a is the one shape parameter the area depends on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "CurveParams",
    "Regime",
    "DerivedShape",
    "PlanePoint",
    "derive",
    "implicit_F",
    "implicit_Fq",
    "point_at",
    "sample_egg",
    "construction_circles",
    "q_unification_residual",
]


class PlanePoint(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class CurveParams:
    """The three positive Hügelschäffer parameters.

    a, b are the semi-axes along x and y; w is the distance between the
    two construction-circle centers.
    """

    a: float
    b: float
    w: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "w"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"parameter {name} must be positive, got {v!r}")


class Regime(Enum):
    W_LESS_A = "w<a"
    W_GREATER_A = "w>a"
    DEGENERATE = "w=a"


@dataclass(frozen=True)
class DerivedShape:
    q: float
    k: float
    u: float  # extremum abscissa, -q^2 w
    gamma: float  # hyperbolic-branch asymptote abscissa
    regime: Regime


def derive(params: CurveParams) -> DerivedShape:
    """Derive q, k, the extremum abscissa and gamma from the parameters."""
    a, w = params.a, params.w
    if w < a:
        q = 1.0
        regime = Regime.W_LESS_A
    elif w > a:
        q = a / w
        regime = Regime.W_GREATER_A
    else:
        q = 1.0
        regime = Regime.DEGENERATE
    k = q * q * w / a
    u = -(q * q) * w
    gamma = -(a * a + w * w) / (2.0 * w)
    return DerivedShape(q=q, k=k, u=u, gamma=gamma, regime=regime)


def implicit_F(params: CurveParams, p: PlanePoint) -> float:
    """Left side of 2wxy^2 + b^2 x^2 + (a^2 + w^2) y^2 - a^2 b^2 at p."""
    a, b, w = params.a, params.b, params.w
    x, y = p
    return 2 * w * x * y * y + b * b * x * x + (a * a + w * w) * y * y - a * a * b * b


def implicit_Fq(params: CurveParams, p: PlanePoint) -> float:
    """Left side of the q-unified cubic at p.

    With q from ``derive`` this vanishes exactly where ``implicit_F``
    does; the two cubics differ only by the factor q^2.
    """
    a, b, w = params.a, params.b, params.w
    q = derive(params).q
    q2 = q * q
    x, y = p
    return (
        2 * q2 * w * x * y * y
        + q2 * b * b * x * x
        + (a * a + q2 * q2 * w * w) * y * y
        - a * a * b * b * q2
    )


def q_unification_residual(a: Fraction, b: Fraction, w: Fraction) -> Fraction:
    """(q^2 - 1)(q^2 w^2 - a^2) in exact rational arithmetic.

    Zero iff the q-unified cubic is proportional to the original one,
    which holds for q chosen per the unification rule.
    """
    del b  # the residual does not involve b
    q = Fraction(1) if w < a else Fraction(a, w)
    q2 = q * q
    return (q2 - 1) * (q2 * w * w - a * a)


def point_at(params: CurveParams, t: float) -> PlanePoint:
    """Egg-part point at parameter t in [0, 2*pi].

    x(t) = -q^2 w sin^2 t + cos t * sqrt(a^2 - q^4 w^2 sin^2 t),
    y(t) = q b sin t.  The radicand is nonnegative for k <= 1.
    """
    a, b, w = params.a, params.b, params.w
    q = derive(params).q
    q2w = q * q * w
    s, c = math.sin(t), math.cos(t)
    radicand = a * a - q2w * q2w * s * s
    root = math.sqrt(max(radicand, 0.0))
    return PlanePoint(-q2w * s * s + c * root, q * b * s)


def sample_egg(params: CurveParams, n: int) -> list[PlanePoint]:
    """n points on a uniform t-grid over [0, 2*pi], closed at (a, 0)."""
    if n < 2:
        raise ValueError("need at least 2 sample points")
    points = [point_at(params, 2.0 * math.pi * j / (n - 1)) for j in range(n - 1)]
    points.append(points[0])  # exact closure at t = 2*pi
    return points


def construction_circles(
    params: CurveParams, n: int
) -> tuple[list[PlanePoint], list[PlanePoint]]:
    """Samples of the two construction circles on a uniform t-grid.

    K1 is centered at the origin with radius a; K2 at (-q^2 w, 0) with
    radius q*b.
    """
    if n < 2:
        raise ValueError("need at least 2 sample points")
    a, b, w = params.a, params.b, params.w
    q = derive(params).q
    cx = -(q * q) * w
    r2 = q * b
    k1, k2 = [], []
    for j in range(n):
        t = 2.0 * math.pi * j / (n - 1)
        s, c = math.sin(t), math.cos(t)
        k1.append(PlanePoint(a * c, a * s))
        k2.append(PlanePoint(cx + r2 * c, r2 * s))
    return k1, k2
