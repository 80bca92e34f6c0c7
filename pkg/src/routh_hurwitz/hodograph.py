"""The Mikhailov hodograph ``w -> i**(-n) p(i w)``: exact winding and plot data.

The winding increment is computed exactly from Cauchy indices.  Sampling
is floating point and used only to draw the curve.
"""
from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .scalar_poly import (
    Polynomial,
    RationalFunction,
    ZeroPolynomialError,
    as_complex,
    cauchy_root_bound,
    gcd_monic,
    imaginary_axis_split,
)
from .sturm_index import cauchy_index_interval, count_distinct_real_roots, isolate_real_roots

# tangent warp; larger values crowd samples toward w = 0
WARP = 1.4


class AxisRootError(ValueError):
    def __init__(self, gcd: Polynomial):
        super().__init__(f"polynomial has roots on the imaginary axis (gcd {gcd})")
        self.gcd = gcd


@dataclass(frozen=True)
class HodographSample:
    omega: float
    re: float
    im: float


@dataclass(frozen=True)
class WindingSummary:
    delta_over_pi: int
    crossing_indices: tuple
    crossings: tuple  # isolating intervals of the crossing parameters


def winding_increment(p) -> WindingSummary:
    cp = as_complex(p)
    if cp.is_zero:
        raise ZeroPolynomialError("hodograph of the zero polynomial")
    split = imaginary_axis_split(cp)
    g = gcd_monic(split.f0, split.f1)
    if g.deg > 0 and count_distinct_real_roots(g) > 0:
        raise AxisRootError(g)
    R = RationalFunction(split.f1, split.f0)
    indices, crossings = [], []
    for a, b in isolate_real_roots(R.den):
        i = cauchy_index_interval(R, a, b)
        if i:  # even-order poles are not crossings
            indices.append(i)
            crossings.append((a, b))
    return WindingSummary(sum(indices), tuple(indices), tuple(crossings))


def omega_grid(bound: float, points: int) -> np.ndarray:
    t = np.linspace(-1.0, 1.0, points)
    return bound * np.tan(WARP * t) / math.tan(WARP)


def plot_bound(f0: Polynomial, f1: Polynomial) -> float:
    """Half-width of the sampling window.

    Twice the larger of two Cauchy bounds: that of ``f0`` (so every axis
    crossing is inside) and that of the curve polynomial ``f0 - i f1`` (so
    ``|f1| < |f0|`` near the ends and the run-out is close to horizontal).
    """
    if f0.deg < 1:
        return 2.0
    n = f0.deg
    lead = float(f0.lead)
    curve = 1 + max(math.hypot(float(f0.coeff(k)), float(f1.coeff(k))) / lead for k in range(n))
    return 2 * max(float(cauchy_root_bound(f0)), curve)


def sample_curve(p, points: int = 2000) -> list:
    if points < 2:
        raise ValueError("need at least two sample points")
    split = imaginary_axis_split(as_complex(p))
    f0, f1 = split.f0, split.f1
    bound = plot_bound(f0, f1)
    w = omega_grid(bound, points)
    re = np.polyval([float(c) for c in f0.coeffs], w)
    im = -np.polyval([float(c) for c in f1.coeffs], w) if not f1.is_zero else np.zeros_like(w)
    return [HodographSample(float(a), float(b), float(c)) for a, b, c in zip(w, re, im)]


def unwrapped_argument(samples) -> np.ndarray:
    z = np.array([complex(s.re, s.im) for s in samples])
    return np.unwrap(np.angle(z))


def _num(x: float) -> str:
    return f"{x:.12g}"


def emit(samples, fmt: str = "csv") -> str:
    if not samples:
        raise ValueError("no samples to emit")
    if fmt == "csv":
        buf = io.StringIO()
        buf.write("omega,re,im\n")
        for s in samples:
            buf.write(f"{_num(s.omega)},{_num(s.re)},{_num(s.im)}\n")
        return buf.getvalue()
    if fmt == "svg":
        return _svg(samples)
    raise ValueError(f"unknown format {fmt!r}")


def _svg(samples, size: int = 800, margin: int = 20) -> str:
    xs = [s.re for s in samples] + [0.0]
    ys = [s.im for s in samples] + [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = (size - 2 * margin) / span
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2

    def X(x):
        return size / 2 + (x - cx) * scale

    def Y(y):
        return size / 2 - (y - cy) * scale

    pts = " ".join(f"{X(s.re):.3f},{Y(s.im):.3f}" for s in samples)
    ox, oy = X(0.0), Y(0.0)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" '
        f'width="{size}" height="{size}">\n'
        f'<line x1="0" y1="{oy:.3f}" x2="{size}" y2="{oy:.3f}" stroke="gray" stroke-width="1"/>\n'
        f'<line x1="{ox:.3f}" y1="0" x2="{ox:.3f}" y2="{size}" stroke="gray" stroke-width="1"/>\n'
        f'<polyline fill="none" stroke="black" stroke-width="1.5" points="{pts}"/>\n'
        "</svg>\n"
    )
