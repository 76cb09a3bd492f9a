"""Independent quadrature oracle.

Brute-force numerical integration of the defining integrals (elliptic
integrals, the egg-area line integral), used to validate every closed
form in the library.  Deliberately self-contained: nothing here calls the
AGM evaluators or the closed-form area code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, NamedTuple

import numpy as np

from .curve import CurveParams

__all__ = [
    "Rule",
    "QuadratureSpec",
    "DepthExhausted",
    "quad",
    "quad_elliptic",
    "quad_area",
    "AreaQuadrature",
    "DEFAULT_SPEC",
]


class Rule(Enum):
    ADAPTIVE_SIMPSON = "simpson"
    GAUSS_LEGENDRE = "gauss-legendre"


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-11
    max_depth: int = 40
    rule: Rule = Rule.ADAPTIVE_SIMPSON
    gauss_order: int = 8

    def __post_init__(self) -> None:
        if self.abs_tol < 1e-15:
            raise ValueError("abs_tol must be at least 1e-15")
        if not (0 < self.max_depth <= 60):
            raise ValueError("max_depth must lie in (0, 60]")
        if self.gauss_order < 1:
            raise ValueError("gauss_order must be positive")


DEFAULT_SPEC = QuadratureSpec()


class DepthExhausted(RuntimeError):
    """Adaptive subdivision hit max_depth before reaching the tolerance."""

    def __init__(self, best: float, err_bound: float):
        super().__init__(
            f"quadrature depth exhausted; best estimate {best!r} "
            f"with error bound ~{err_bound:.3e}"
        )
        self.best = best
        self.err_bound = err_bound


def _simpson(f: Callable[[float], float], lo: float, hi: float) -> float:
    mid = 0.5 * (lo + hi)
    return (hi - lo) / 6.0 * (f(lo) + 4.0 * f(mid) + f(hi))


@lru_cache(maxsize=None)
def _gauss_nodes(order: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    x, w = np.polynomial.legendre.leggauss(order)
    return tuple(x.tolist()), tuple(w.tolist())


def _gauss_panel(
    f: Callable[[float], float], lo: float, hi: float, order: int
) -> float:
    nodes, weights = _gauss_nodes(order)
    half = 0.5 * (hi - lo)
    mid = 0.5 * (lo + hi)
    return half * sum(wi * f(mid + half * xi) for xi, wi in zip(nodes, weights))


def quad(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
) -> float:
    """Adaptive bisection quadrature of f over [lo, hi].

    The panel rule is Simpson (with the classic S/15 error estimate) or a
    fixed-order Gauss-Legendre rule (whole-vs-halves estimate).  Raises
    ``DepthExhausted`` when ``spec.max_depth`` bisections are not enough.
    """
    if spec.rule is Rule.ADAPTIVE_SIMPSON:
        panel = _simpson
        shrink = 15.0
    else:
        panel = lambda g, a, b: _gauss_panel(g, a, b, spec.gauss_order)
        shrink = 1.0

    def recurse(a: float, b: float, whole: float, tol: float, depth: int) -> float:
        mid = 0.5 * (a + b)
        left = panel(f, a, mid)
        right = panel(f, mid, b)
        err = (left + right - whole) / shrink
        if abs(err) <= tol or (b - a) < 1e-300:
            return left + right + err
        if depth >= spec.max_depth:
            raise DepthExhausted(left + right, abs(err))
        return recurse(a, mid, left, 0.5 * tol, depth + 1) + recurse(
            mid, b, right, 0.5 * tol, depth + 1
        )

    if lo == hi:
        return 0.0
    return recurse(lo, hi, panel(f, lo, hi), spec.abs_tol, 0)


def quad_elliptic(
    kind: str, k: float, spec: QuadratureSpec = DEFAULT_SPEC
) -> float:
    """Direct quadrature of the defining integral of K or E."""
    if kind not in ("K", "E"):
        raise ValueError("kind must be 'K' or 'E'")
    if not (0.0 <= k <= 1.0) or (kind == "K" and k == 1.0):
        raise ValueError(f"modulus {k!r} outside the domain of {kind}")
    k2 = k * k

    if kind == "K":
        f = lambda t: 1.0 / math.sqrt(1.0 - k2 * math.sin(t) ** 2)
    else:
        f = lambda t: math.sqrt(max(1.0 - k2 * math.sin(t) ** 2, 0.0))
    return quad(f, 0.0, 0.5 * math.pi, spec)


class AreaQuadrature(NamedTuple):
    total: float
    part1: float  # t in [pi/2, pi], mirrored to the lower half
    part2: float  # t in [0, pi/2]


def _parametrization(params: CurveParams):
    """Local x(t), y(t), x'(t) of the egg part (independent re-derivation)."""
    a, b, w = params.a, params.b, params.w
    q = 1.0 if w <= a else a / w
    q2w = q * q * w
    q4w2 = q2w * q2w

    def y(t: float) -> float:
        return q * b * math.sin(t)

    def x(t: float) -> float:
        s, c = math.sin(t), math.cos(t)
        return -q2w * s * s + c * math.sqrt(max(a * a - q4w2 * s * s, 0.0))

    def xprime(t: float) -> float:
        s, c = math.sin(t), math.cos(t)
        root = math.sqrt(max(a * a - q4w2 * s * s, 0.0))
        out = -2.0 * q2w * s * c - s * root
        if root > 1e-12:
            out -= q4w2 * s * c * c / root
        else:
            # k = 1 limit: root = a|cos t|, so the quotient stays finite
            out -= q4w2 * s * abs(c) / a
        return out

    return x, y, xprime


def quad_area(
    params: CurveParams,
    spec: QuadratureSpec = DEFAULT_SPEC,
    derivative: str = "analytic",
) -> AreaQuadrature:
    """Oracle area: -2 * integral of y(t) x'(t) over [0, pi].

    Split at t = pi/2 to mirror the two subarea integrals.  ``derivative``
    selects the analytic x'(t) or a central finite difference (h = 1e-6),
    the latter guarding against mistakes in the derivative itself.
    """
    x, y, xprime = _parametrization(params)
    if derivative == "fd":
        h = 1e-6
        dx = lambda t: (x(t + h) - x(t - h)) / (2.0 * h)
    elif derivative == "analytic":
        dx = xprime
    else:
        raise ValueError("derivative must be 'analytic' or 'fd'")

    integrand = lambda t: y(t) * dx(t)
    part2 = -2.0 * quad(integrand, 0.0, 0.5 * math.pi, spec)
    part1 = -2.0 * quad(integrand, 0.5 * math.pi, math.pi, spec)
    return AreaQuadrature(part1 + part2, part1, part2)
