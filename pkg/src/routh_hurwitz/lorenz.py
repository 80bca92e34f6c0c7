"""Fixed points of the Lorenz system and the stability of their linearizations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .routh import StabilityClass, classify
from .scalar_poly import Polynomial


@dataclass(frozen=True)
class LorenzParams:
    sigma: Fraction
    r: Fraction
    b: Fraction

    def __post_init__(self):
        for name in ("sigma", "r", "b"):
            v = Fraction(getattr(self, name))
            if v <= 0:
                raise ValueError(f"{name} must be positive, got {v}")
            object.__setattr__(self, name, v)


@dataclass(frozen=True)
class FixedPoint:
    """``(x, y, z)`` with ``x = y = sign * sqrt(radicand)``."""

    sign: int
    radicand: Fraction
    z: Fraction

    def __str__(self):
        if self.radicand == 0:
            return f"(0, 0, {self.z})"
        s = "" if self.sign > 0 else "-"
        root = f"{s}sqrt({self.radicand})"
        return f"({root}, {root}, {self.z})"


@dataclass(frozen=True)
class LorenzAnalysis:
    params: LorenzParams
    fixed_points: tuple
    p0: Polynomial
    p0_quadratic: Polynomial
    p12: Optional[Polynomial]
    p0_verdict: StabilityClass
    p12_verdict: Optional[StabilityClass]
    r_star: Optional[Fraction]  # None stands for +infinity


def critical_r(sigma, b) -> Optional[Fraction]:
    sigma, b = Fraction(sigma), Fraction(b)
    if sigma > b + 1:
        return sigma * (sigma + b + 3) / (sigma - b - 1)
    return None


def p12_polynomial(params: LorenzParams) -> Polynomial:
    s, r, b = params.sigma, params.r, params.b
    return Polynomial((1, s + b + 1, b * (s + r), 2 * s * b * (r - 1)))


def analyze(params: LorenzParams) -> LorenzAnalysis:
    s, r, b = params.sigma, params.r, params.b
    points = [FixedPoint(1, Fraction(0), Fraction(0))]
    if r > 1:
        rad = b * (r - 1)
        points += [FixedPoint(1, rad, r - 1), FixedPoint(-1, rad, r - 1)]
    quad = Polynomial((1, s + 1, s * (1 - r)))
    p0 = Polynomial((1, b)) * quad
    p12 = p12_polynomial(params) if r > 1 else None
    return LorenzAnalysis(
        params=params,
        fixed_points=tuple(points),
        p0=p0,
        p0_quadratic=quad,
        p12=p12,
        p0_verdict=classify(quad),
        p12_verdict=classify(p12) if p12 is not None else None,
        r_star=critical_r(s, b),
    )
