"""Complete elliptic integrals K, E and the derived integral D.

Two independent evaluation routes are provided: the quadratically
convergent AGM iteration (used by ``complete_K`` / ``complete_E``) and
truncated power series with exact rational coefficients (``series_eval``).
The series route also covers the scale-free egg-area function, which
shares the same coefficient machinery.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

__all__ = [
    "DomainError",
    "SeriesKind",
    "SeriesTarget",
    "K_SERIES",
    "E_SERIES",
    "D_SERIES",
    "AREA_SERIES",
    "complete_K",
    "complete_E",
    "complete_D",
    "series_coeff",
    "series_eval",
    "series_partial",
    "series_sum",
    "target_value",
    "MAX_SERIES_TERMS",
]


class DomainError(ValueError):
    """Argument lies outside the mathematical domain of an operation."""


# Hard cap on series summation: near the endpoint x = 1 the terms only
# decay like 1/i^3, so a tolerance may not be reachable in finite time.
MAX_SERIES_TERMS = 10_000_000

# The AGM gap can stagnate at one ulp above the target, so the loop is
# additionally capped; quadratic convergence needs well under 10 rounds.
_AGM_TOL = 1e-16
_AGM_MAX_ITER = 40

# D(x) = (K(x) - E(x))/x^2 loses relative accuracy to cancellation as
# x -> 0; below this threshold the series is used instead.
_D_SERIES_CUTOFF = 0.25


@lru_cache(maxsize=None)
def _dblfact_ratio_sq(i: int) -> Fraction:
    """((2i-1)!!/(2i)!!)^2 as an exact rational, by recurrence."""
    if i == 0:
        return Fraction(1)
    return _dblfact_ratio_sq(i - 1) * Fraction(2 * i - 1, 2 * i) ** 2


class SeriesKind(Enum):
    K = "K"
    E = "E"
    D = "D"
    AREA = "Area"


@dataclass(frozen=True)
class SeriesTarget:
    """A function defined by an even power series with rational coefficients.

    ``coeff(i)`` is the exact rational multiplier of pi * x^(2i); for the
    area target the series is scale-free (the a*b*q factor is applied by
    the caller).  All four targets have convergence radius 1.
    """

    kind: SeriesKind

    radius: float = 1.0

    @property
    def value_at_one(self) -> Optional[Fraction]:
        """Exact endpoint value where the series converges at x = 1."""
        if self.kind is SeriesKind.E:
            return Fraction(1)
        if self.kind is SeriesKind.AREA:
            return Fraction(8, 3)
        return None

    def coeff(self, i: int) -> Fraction:
        """Signed rational multiplier of pi * x^(2i)."""
        if i < 0:
            raise ValueError("series index must be nonnegative")
        r = _dblfact_ratio_sq(i)
        if self.kind is SeriesKind.K:
            return r / 2
        if self.kind is SeriesKind.E:
            if i == 0:
                return Fraction(1, 2)
            return -r / (2 * (2 * i - 1))
        if self.kind is SeriesKind.D:
            return Fraction(i + 1, 2 * i + 1) * _dblfact_ratio_sq(i + 1)
        # AREA
        if i == 0:
            return Fraction(1)
        return -r / ((2 * i - 1) * (i + 1))


K_SERIES = SeriesTarget(SeriesKind.K)
E_SERIES = SeriesTarget(SeriesKind.E)
D_SERIES = SeriesTarget(SeriesKind.D)
AREA_SERIES = SeriesTarget(SeriesKind.AREA)


def series_coeff(target: SeriesTarget, i: int) -> Fraction:
    """Exact rational coefficient of pi * x^(2i) in the target's series."""
    return target.coeff(i)


def _float_terms(target: SeriesTarget, x: float) -> Iterator[float]:
    """Signed series terms (including the pi factor) at the point x.

    The double-factorial ratio is carried as a float recurrence; no
    factorials are ever formed.
    """
    kind = target.kind
    x2 = x * x
    r = 1.0  # ((2i-1)!!/(2i)!!)^2
    xp = 1.0  # x^(2i)
    i = 0
    pi = math.pi
    while True:
        r_next = r * ((2 * i + 1) / (2 * i + 2)) ** 2
        if kind is SeriesKind.K:
            c = 0.5 * r
        elif kind is SeriesKind.E:
            c = 0.5 if i == 0 else -0.5 * r / (2 * i - 1)
        elif kind is SeriesKind.D:
            c = (i + 1) / (2 * i + 1) * r_next
        else:  # AREA
            c = 1.0 if i == 0 else -r / ((2 * i - 1) * (i + 1))
        yield pi * c * xp
        i += 1
        r = r_next
        xp *= x2


class SeriesSum(NamedTuple):
    value: float
    terms_used: int
    last_term: float


def _check_series_domain(target: SeriesTarget, x: float) -> None:
    if abs(x) < target.radius:
        return
    if abs(x) == 1.0 and target.value_at_one is not None:
        return
    raise DomainError(
        f"series for {target.kind.value} does not converge at x={x!r}"
    )


def series_sum(
    target: SeriesTarget,
    x: float,
    tol: float,
    max_terms: int = MAX_SERIES_TERMS,
) -> SeriesSum:
    """Sum the series until the current term drops below ``tol``.

    Stops at ``max_terms`` regardless; ``last_term`` reports the achieved
    truncation level (the magnitude of the final term added).
    """
    _check_series_domain(target, x)
    total = 0.0
    term = 0.0
    n = 0
    for term in _float_terms(target, x):
        total += term
        n += 1
        if n > 1 and abs(term) < tol:
            break
        if n >= max_terms:
            break
    return SeriesSum(total, n, term)


def series_eval(
    target: SeriesTarget,
    x: float,
    tol: float = 1e-15,
    max_terms: int = MAX_SERIES_TERMS,
) -> float:
    """Series value of the target function at x, truncated at ``tol``."""
    return series_sum(target, x, tol, max_terms).value


def series_partial(target: SeriesTarget, x: float, n_terms: int) -> float:
    """Partial sum of exactly ``n_terms`` series terms at x.

    Unlike ``series_eval`` this never checks convergence, so it can probe
    divergence (K at x = 1) and slow endpoint convergence.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be positive")
    total = 0.0
    for n, term in enumerate(_float_terms(target, x), start=1):
        total += term
        if n >= n_terms:
            break
    return total


def _check_modulus(k: float, *, allow_one: bool, name: str) -> None:
    if not (0.0 <= k <= 1.0):
        raise DomainError(f"{name} requires a modulus in [0, 1], got {k!r}")
    if k == 1.0 and not allow_one:
        raise DomainError(f"{name} diverges at modulus 1")


def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind, 0 <= k < 1.

    AGM iteration: K(k) = pi / (2 * agm(1, sqrt(1 - k^2))).
    """
    _check_modulus(k, allow_one=False, name="K")
    a, g = 1.0, math.sqrt(1.0 - k * k)
    for _ in range(_AGM_MAX_ITER):
        if abs(a - g) <= _AGM_TOL:
            break
        a, g = 0.5 * (a + g), math.sqrt(a * g)
    return math.pi / (2.0 * a)


def complete_E(k: float) -> float:
    """Complete elliptic integral of the second kind, 0 <= k <= 1.

    AGM with correction terms: E = K * (1 - sum_n 2^(n-1) c_n^2), c_0 = k.
    """
    _check_modulus(k, allow_one=True, name="E")
    if k == 1.0:
        return 1.0
    a, g = 1.0, math.sqrt(1.0 - k * k)
    correction = 0.5 * k * k  # 2^(-1) c_0^2
    pow2 = 1.0  # 2^(n-1) for the next c_n
    for _ in range(_AGM_MAX_ITER):
        if abs(a - g) <= _AGM_TOL:
            break
        c = 0.5 * (a - g)
        a, g = 0.5 * (a + g), math.sqrt(a * g)
        correction += pow2 * c * c
        pow2 *= 2.0
    bigK = math.pi / (2.0 * a)
    return bigK * (1.0 - correction)


def complete_D(k: float) -> float:
    """D(k) = (K(k) - E(k)) / k^2 for 0 <= k < 1, with D(0) = pi/4.

    Small moduli are routed through the series to avoid the catastrophic
    cancellation of K - E near 0.
    """
    _check_modulus(k, allow_one=False, name="D")
    if k < _D_SERIES_CUTOFF:
        return series_eval(D_SERIES, k, tol=1e-18)
    return (complete_K(k) - complete_E(k)) / (k * k)


def target_value(target: SeriesTarget, x: float) -> float:
    """Direct (non-series) value of the series-defined function at x.

    For the area target this is the scale-free egg area as a function of
    the modulus: (4/3) * ((1 - 1/x^2) K + (1 + 1/x^2) E), with the ellipse
    and parabola limits at the endpoints.
    """
    kind = target.kind
    if kind is SeriesKind.K:
        return complete_K(x)
    if kind is SeriesKind.E:
        return complete_E(x)
    if kind is SeriesKind.D:
        return complete_D(x)
    # AREA, scale-free
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"area modulus must lie in [0, 1], got {x!r}")
    if x == 0.0:
        return math.pi
    if x == 1.0:
        return 8.0 / 3.0
    if x > 0.99:
        # (1 - 1/x^2) K suffers cancellation against the diverging K
        return series_eval(AREA_SERIES, x, tol=1e-16)
    inv2 = 1.0 / (x * x)
    return (4.0 / 3.0) * (
        (1.0 - inv2) * complete_K(x) + (1.0 + inv2) * complete_E(x)
    )
