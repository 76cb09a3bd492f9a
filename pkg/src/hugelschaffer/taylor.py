"""First and second Taylor approximations of series-defined functions.

The first approximation is the truncated Maclaurin polynomial; the second
adds an endpoint-matching correction term so that the polynomial agrees
with the function at a chosen point ``beta``.  Together they sandwich the
function from both sides, and ``verify_chain`` checks the full interleaved
inequality chain on a grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .elliptic import (
    DomainError,
    SeriesKind,
    SeriesTarget,
    target_value,
)

__all__ = [
    "ApproxKind",
    "PolyTerm",
    "TaylorApprox",
    "ChainReport",
    "first_taylor",
    "second_taylor",
    "eval_approx",
    "verify_chain",
    "CHAIN_SLACK",
]

# Divergent-at-1 targets get this stand-in when a caller asks for beta = 1.
_NEAR_ONE_BETA = 0.999999

# Rounding slack for the non-strict chain inequalities.
CHAIN_SLACK = 1e-14


class ApproxKind(Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class PolyTerm:
    """One polynomial term: (pi_coeff * pi + const_coeff + float_coeff) * x^power.

    The two Fraction slots keep table fixtures exactly representable;
    ``float_coeff`` is only nonzero for correction terms whose endpoint
    value is itself transcendental (K and D at a generic beta).
    """

    power: int
    pi_coeff: Fraction = Fraction(0)
    const_coeff: Fraction = Fraction(0)
    float_coeff: float = 0.0

    def value(self) -> float:
        return math.pi * float(self.pi_coeff) + float(self.const_coeff) + self.float_coeff

    def is_exact(self) -> bool:
        return self.float_coeff == 0.0


@dataclass(frozen=True)
class TaylorApprox:
    """An immutable polynomial enclosure of a series-defined function."""

    target: SeriesTarget
    kind: ApproxKind
    degree: int
    beta: Optional[float]  # None for the first kind
    terms: tuple[PolyTerm, ...]

    def coefficients(self) -> list[float]:
        """Dense float coefficient list, index = power."""
        dense = [0.0] * (self.degree + 1)
        for t in self.terms:
            dense[t.power] += t.value()
        return dense


def first_taylor(target: SeriesTarget, n: int) -> TaylorApprox:
    """Truncated Maclaurin polynomial of degree n (even powers only)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    terms = tuple(
        PolyTerm(power=2 * i, pi_coeff=target.coeff(i)) for i in range(n // 2 + 1)
    )
    return TaylorApprox(target, ApproxKind.FIRST, n, None, terms)


def _resolve_beta(target: SeriesTarget, beta: float) -> float:
    if target.value_at_one is not None:
        if not (0.0 < beta <= 1.0):
            raise DomainError(
                f"beta must lie in (0, 1] for {target.kind.value}, got {beta!r}"
            )
        return beta
    if beta == 1.0:
        return _NEAR_ONE_BETA
    if not (0.0 < beta < 1.0):
        raise DomainError(
            f"beta must lie in (0, 1) for {target.kind.value}, got {beta!r}"
        )
    return beta


def second_taylor(target: SeriesTarget, n: int, beta: float) -> TaylorApprox:
    """T_{n-1} plus the correction (x/beta)^n * (f(beta) - T_{n-1}(beta)).

    For n = 0 the approximation is the constant f(beta).  When beta = 1
    and the target has an exact endpoint value, the correction coefficient
    is carried exactly (rational plus rational multiple of pi).
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    beta = _resolve_beta(target, beta)
    exact = beta == 1.0 and target.value_at_one is not None

    if n == 0:
        if exact:
            term = PolyTerm(0, const_coeff=target.value_at_one)
        else:
            term = PolyTerm(0, float_coeff=target_value(target, beta))
        return TaylorApprox(target, ApproxKind.SECOND, 0, beta, (term,))

    base = first_taylor(target, n - 1)
    if exact:
        # T_{n-1}(1) = pi * sum of rational coefficients
        pi_sum = sum((t.pi_coeff for t in base.terms), Fraction(0))
        corr = PolyTerm(n, pi_coeff=-pi_sum, const_coeff=target.value_at_one)
    else:
        f_beta = target_value(target, beta)
        t_beta = _horner(base.coefficients(), beta)
        corr = PolyTerm(n, float_coeff=(f_beta - t_beta) / beta**n)
    return TaylorApprox(target, ApproxKind.SECOND, n, beta, base.terms + (corr,))


def _horner(coeffs: Sequence[float], x: float) -> float:
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def eval_approx(approx: TaylorApprox, x: float) -> float:
    """Evaluate the polynomial at x (Horner), with domain checks."""
    if approx.kind is ApproxKind.SECOND:
        assert approx.beta is not None
        if abs(x) > approx.beta:
            raise DomainError(
                f"second approximation valid on [-{approx.beta}, {approx.beta}], got {x!r}"
            )
    else:
        limit_closed = approx.target.value_at_one is not None
        if abs(x) > approx.target.radius or (
            abs(x) == approx.target.radius and not limit_closed
        ):
            raise DomainError(
                f"first approximation valid inside radius {approx.target.radius}, got {x!r}"
            )
    return _horner(approx.coefficients(), x)


@dataclass
class ChainViolation:
    x: float
    description: str


@dataclass
class ChainReport:
    """Result of checking the interleaved two-sided inequality chain."""

    target: SeriesTarget
    max_degree: int
    beta: float
    grid: tuple[float, ...]
    ok: bool
    violations: list[ChainViolation] = field(default_factory=list)
    # per grid point: |T_j(x) - f(x)| and |second_j(x) - f(x)| for j = 0..max_degree
    first_margins: dict[float, list[float]] = field(default_factory=dict)
    second_margins: dict[float, list[float]] = field(default_factory=dict)


def _first_is_lower(target: SeriesTarget) -> bool:
    # K and D: Maclaurin truncations approach from below; E and the area
    # function have negative tail terms, so the direction flips.
    return target.kind in (SeriesKind.K, SeriesKind.D)


def verify_chain(
    target: SeriesTarget,
    max_degree: int,
    beta: float,
    grid: Sequence[float],
    slack: float = CHAIN_SLACK,
) -> ChainReport:
    """Check T_0, T_1, ..., f(x), ..., second_1, second_0 ordering on a grid.

    For K and D the first approximations lie below the function and the
    second ones above; for E and the area function the directions are
    reversed.  ``slack`` absorbs rounding at coincidence points.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    beta_eff = _resolve_beta(target, beta)
    firsts = [first_taylor(target, j) for j in range(max_degree + 1)]
    seconds = [second_taylor(target, j, beta) for j in range(max_degree + 1)]
    lower_is_first = _first_is_lower(target)

    report = ChainReport(
        target=target,
        max_degree=max_degree,
        beta=beta_eff,
        grid=tuple(grid),
        ok=True,
    )

    for x in grid:
        if not (0.0 < x <= beta_eff):
            raise DomainError(f"grid point {x!r} outside (0, beta]")
        f = target_value(target, x)
        tvals = [eval_approx(p, x) for p in firsts]
        svals = [eval_approx(p, x) for p in seconds]
        eps = slack * max(1.0, abs(f))

        def fail(msg: str) -> None:
            report.ok = False
            report.violations.append(ChainViolation(x, msg))

        sign = 1.0 if lower_is_first else -1.0
        # monotone approach of the first family toward f
        for j in range(max_degree):
            if sign * (tvals[j + 1] - tvals[j]) < -eps:
                fail(f"first-kind degrees {j},{j + 1} out of order")
        # monotone approach of the second family toward f
        for j in range(max_degree):
            if sign * (svals[j] - svals[j + 1]) < -eps:
                fail(f"second-kind degrees {j},{j + 1} out of order")
        # the function separates the two families
        for j in range(max_degree + 1):
            if sign * (f - tvals[j]) < -eps:
                fail(f"first-kind degree {j} on the wrong side of f")
            if sign * (svals[j] - f) < -eps:
                fail(f"second-kind degree {j} on the wrong side of f")

        report.first_margins[x] = [abs(v - f) for v in tvals]
        report.second_margins[x] = [abs(v - f) for v in svals]

    return report
