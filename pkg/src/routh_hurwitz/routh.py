"""Routh elimination over exact rationals and the axis-crossing case table."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .scalar_poly import Polynomial, Z
from .sturm_index import RootDistribution, half_plane_split, sign_changes


class Kind(enum.Enum):
    STABLE = "Stable"
    UNSTABLE_OFF_AXIS = "UnstableOffAxis"
    SIMPLE_ZERO_ROOT = "SimpleZeroRoot"
    CONJUGATE_PAIR_ON_AXIS = "ConjugatePairOnAxis"
    DOUBLE_ZERO_ROOT = "DoubleZeroRoot"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class RouthOutcome:
    completed: bool
    h: tuple
    negated: bool = False

    @property
    def n(self) -> int:
        return len(self.h) - 1


@dataclass(frozen=True)
class StabilityClass:
    kind: Kind
    distribution: RootDistribution
    outcome: RouthOutcome
    # letter of the case table, None when the elimination stopped early
    case: str | None = None
    # w**2 of the axis pair in case (d)
    omega_squared: Fraction | None = None


def _routh_in_place(h: list) -> bool:
    # Line-for-line port of the Pascal routine; h[n] is never written.
    n = len(h) - 1
    k = 1
    while k < n - 1 and h[k] != 0:
        c = h[k - 1] / h[k]
        k += 1
        j = k
        while True:
            h[j] = h[j] - c * h[j + 1]
            j += 2
            if j >= n:
                break
    # the Pascal test is k = n-1; for n = 1 the loop is empty and k starts at 1
    return k >= n - 1


def routh_array(p: Polynomial) -> RouthOutcome:
    if p.is_zero or p.deg < 1:
        raise ValueError("routh_array needs a polynomial of degree >= 1")
    negated = p.lead < 0
    if negated:
        p = -p
    h = list(p.coeffs)
    completed = _routh_in_place(h)
    return RouthOutcome(completed, tuple(h), negated)


def classify(p: Polynomial) -> StabilityClass:
    """Classify ``p`` from its Routh array.

    When the elimination stops early the answer comes from the Sturm index
    instead and the kind is ``INCONCLUSIVE``.
    """
    out = routh_array(p)
    h, n = out.h, out.n
    if not out.completed:
        dist = half_plane_split(-p if out.negated else p).distribution()
        return StabilityClass(Kind.INCONCLUSIVE, dist, out)

    omega_sq = None
    if h[n - 1] != 0 and h[n] != 0:
        case = "a"
        v = sign_changes(h)
        dist = RootDistribution(n - v, v, 0)
        kind = Kind.STABLE if v == 0 else Kind.UNSTABLE_OFF_AXIS
    elif h[n - 1] != 0:
        case = "b"
        v = sign_changes(h[:n])
        dist = RootDistribution(n - 1 - v, v, 1, Z)
        kind = Kind.SIMPLE_ZERO_ROOT
    elif h[n] == 0:
        case = "e"
        v = sign_changes(h[: n - 1])
        dist = RootDistribution(n - 2 - v, v, 2, Z * Z)
        kind = Kind.DOUBLE_ZERO_ROOT
    elif h[n - 2] * h[n] < 0:
        case = "c"
        v = sign_changes(h[: n - 1])
        dist = RootDistribution(n - v - 1, v + 1, 0)
        kind = Kind.UNSTABLE_OFF_AXIS
    else:
        case = "d"
        v = sign_changes(h[: n - 1])
        omega_sq = h[n] / h[n - 2]
        dist = RootDistribution(n - 2 - v, v, 2, Polynomial((1, 0, -omega_sq)))
        kind = Kind.CONJUGATE_PAIR_ON_AXIS
    return StabilityClass(kind, dist, out, case, omega_sq)


def is_stable(p: Polynomial) -> bool:
    out = routh_array(p)
    return out.completed and all(x > 0 for x in out.h)


def describe(sc: StabilityClass) -> str:
    """Human-readable verdict line."""
    k = sc.kind
    if k is Kind.STABLE:
        return "stable"
    if k is Kind.UNSTABLE_OFF_AXIS:
        return "unstable"
    if k is Kind.SIMPLE_ZERO_ROOT:
        return "one simple root on the imaginary axis at 0"
    if k is Kind.CONJUGATE_PAIR_ON_AXIS:
        return f"two simple roots on the imaginary axis at +-i*w, w^2 = {sc.omega_squared}"
    if k is Kind.DOUBLE_ZERO_ROOT:
        return "one double root on the imaginary axis at 0"
    return "routh scheme stopped early; distribution from the Sturm index"
