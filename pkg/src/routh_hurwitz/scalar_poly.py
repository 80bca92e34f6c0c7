"""Exact polynomials over the rationals (and Gaussian rationals).

Coefficients are stored in descending order, ``a_0`` first, so that
``Polynomial([1, 2, 3, 1])`` is ``z**3 + 2 z**2 + 3 z + 1``.  The zero
polynomial is the empty coefficient tuple; its degree is undefined and
asking for it raises :class:`ZeroPolynomialError`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Fraction
Number = Union[int, Fraction]


class ZeroPolynomialError(ValueError):
    """An operation was handed the zero polynomial where it is not allowed."""


def _rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact coefficients")
    return Fraction(x)


def sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple = ()

    def __post_init__(self):
        cs = [_rat(c) for c in self.coeffs]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", tuple(cs[i:]))

    # construction helpers
    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> "Polynomial":
        return cls((c,) + (0,) * k)

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((1, -_rat(r)))
        return p

    @classmethod
    def from_ascending(cls, coeffs: Sequence) -> "Polynomial":
        return cls(tuple(reversed(tuple(coeffs))))

    # structure
    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def deg(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[0]

    def coeff(self, power: int) -> Fraction:
        """Coefficient of ``z**power`` (zero outside the stored range)."""
        n = len(self.coeffs) - 1
        if power < 0 or power > n:
            return Fraction(0)
        return self.coeffs[n - power]

    def ascending(self) -> tuple:
        return tuple(reversed(self.coeffs))

    def padded(self, length: int) -> tuple:
        """Descending coefficients left-padded with zeros to ``length`` entries."""
        if length < len(self.coeffs):
            raise ValueError("padding length shorter than the polynomial")
        return (Fraction(0),) * (length - len(self.coeffs)) + self.coeffs

    # arithmetic
    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.padded(n), other.padded(n)
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _rat(other)
            return Polynomial(tuple(c * x for x in self.coeffs))
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = _rat(c)
        return Polynomial(tuple(x / c for x in self.coeffs))

    def __pow__(self, k: int):
        out = Polynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        if isinstance(acc, int):
            return Fraction(acc)
        return acc

    def derivative(self) -> "Polynomial":
        n = len(self.coeffs) - 1
        return Polynomial(tuple(c * (n - i) for i, c in enumerate(self.coeffs[:-1])))

    def monic(self) -> "Polynomial":
        return self / self.lead

    def compose(self, q: "Polynomial") -> "Polynomial":
        out = Polynomial()
        for c in self.coeffs:
            out = out * q + Polynomial.constant(c)
        return out

    def __repr__(self):
        return f"Polynomial({format_coeffs(self.coeffs)!r})"

    def __str__(self):
        return format_coeffs(self.coeffs)


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.constant(x)


def format_rational(x: Fraction) -> str:
    return str(x)


def format_coeffs(coeffs) -> str:
    return " ".join(format_rational(c) for c in coeffs) if coeffs else "0"


Z = Polynomial((1, 0))  # the indeterminate


def evaluate(p: Polynomial, x) -> Fraction:
    """Horner evaluation; exact for rational ``x``."""
    return p(x)


def poly_divmod(p: Polynomial, d: Polynomial):
    """Long division: returns ``(q, r)`` with ``p = d*q + r`` and ``deg r < deg d``."""
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero or len(p.coeffs) < len(d.coeffs):
        return Polynomial(), p
    rem = list(p.coeffs)
    lead = d.coeffs[0]
    nq = len(p.coeffs) - len(d.coeffs) + 1
    quot = []
    for i in range(nq):
        c = rem[i] / lead
        quot.append(c)
        if c:
            for j, dc in enumerate(d.coeffs):
                rem[i + j] -= c * dc
    return Polynomial(tuple(quot)), Polynomial(tuple(rem[nq:]))


def gcd_monic(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean remainder sequence."""
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    return a.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    return poly_divmod(p, gcd_monic(p, p.derivative()))[0]


def reverse(p: Polynomial) -> Polynomial:
    """``z**n p(1/z)``; requires ``p(0) != 0`` so the degree is kept."""
    if p.is_zero or p.coeffs[-1] == 0:
        raise ValueError("reverse requires a nonzero constant term")
    return Polynomial(tuple(reversed(p.coeffs)))


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """``1 + max |a_k / a_0|``; every root has modulus strictly below it."""
    if p.is_zero or p.deg < 1:
        raise ValueError("root bound needs a polynomial of degree >= 1")
    a0 = abs(p.lead)
    return 1 + max(abs(c) / a0 for c in p.coeffs[1:])


def normalize_leading(p: Polynomial) -> Polynomial:
    """Negate ``p`` when its leading coefficient is negative."""
    if p.is_zero:
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    return -p if p.lead < 0 else p


# ---------------------------------------------------------------------------
# Gaussian-rational coefficients


def _cpair(x) -> tuple:
    if isinstance(x, tuple):
        re, im = x
        return _rat(re), _rat(im)
    if isinstance(x, complex):
        raise TypeError("complex floats are not accepted as exact coefficients")
    return _rat(x), Fraction(0)


@dataclass(frozen=True)
class ComplexPolynomial:
    """Polynomial whose coefficients are ``(re, im)`` pairs of rationals."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [_cpair(c) for c in self.coeffs]
        i = 0
        while i < len(cs) and cs[i] == (0, 0):
            i += 1
        object.__setattr__(self, "coeffs", tuple(cs[i:]))

    @classmethod
    def from_real(cls, p: Polynomial) -> "ComplexPolynomial":
        return cls(tuple((c, Fraction(0)) for c in p.coeffs))

    @classmethod
    def from_parts(cls, re: Polynomial, im: Polynomial) -> "ComplexPolynomial":
        n = max(len(re.coeffs), len(im.coeffs))
        return cls(tuple(zip(re.padded(n), im.padded(n))))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=(1, 0)) -> "ComplexPolynomial":
        p = cls((lead,))
        for r in roots:
            re, im = _cpair(r)
            p = p * cls(((1, 0), (-re, -im)))
        return p

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def deg(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def lead(self) -> tuple:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[0]

    @property
    def is_real(self) -> bool:
        return all(im == 0 for _, im in self.coeffs)

    def real(self) -> Polynomial:
        return Polynomial(tuple(re for re, _ in self.coeffs))

    def imag(self) -> Polynomial:
        return Polynomial(tuple(im for _, im in self.coeffs))

    def to_real(self) -> Polynomial:
        if not self.is_real:
            raise ValueError("polynomial has nonreal coefficients")
        return self.real()

    def __mul__(self, other):
        if isinstance(other, ComplexPolynomial):
            if self.is_zero or other.is_zero:
                return ComplexPolynomial()
            out = [(Fraction(0), Fraction(0))] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, (a, b) in enumerate(self.coeffs):
                for j, (c, d) in enumerate(other.coeffs):
                    re, im = out[i + j]
                    out[i + j] = (re + a * c - b * d, im + a * d + b * c)
            return ComplexPolynomial(tuple(out))
        c, d = _cpair(other)
        return ComplexPolynomial(tuple((a * c - b * d, a * d + b * c) for a, b in self.coeffs))

    __rmul__ = __mul__

    def evaluate(self, x: tuple) -> tuple:
        """Exact evaluation at a Gaussian rational ``x = (re, im)``."""
        xr, xi = _cpair(x)
        ar, ai = Fraction(0), Fraction(0)
        for cr, ci in self.coeffs:
            ar, ai = ar * xr - ai * xi + cr, ar * xi + ai * xr + ci
        return ar, ai

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for cr, ci in self.coeffs:
            acc = acc * x + complex(float(cr), float(ci))
        return acc

    def __str__(self):
        return " ".join(format_complex(c) for c in self.coeffs) if self.coeffs else "0"


def format_complex(c: tuple) -> str:
    re, im = c
    if im == 0:
        return str(re)
    if re == 0:
        return f"{im}i"
    sgn = "+" if im > 0 else "-"
    return f"{re}{sgn}{abs(im)}i"


def as_complex(p) -> ComplexPolynomial:
    if isinstance(p, ComplexPolynomial):
        return p
    return ComplexPolynomial.from_real(p)


def normalize_complex_leading(p: ComplexPolynomial) -> ComplexPolynomial:
    """Scale by the conjugate of ``a_0`` so the leading coefficient is real and positive."""
    if p.is_zero:
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    re, im = p.lead
    if im == 0:
        return p if re > 0 else p * (-1, 0)
    return p * (re, -im)


@dataclass(frozen=True)
class ImaginaryAxisSplit:
    f0: Polynomial
    f1: Polynomial


@dataclass(frozen=True)
class EvenOddSplit:
    g0: Polynomial
    g1: Polynomial


# i**(-k) as (re, im) for k mod 4
_I_INV_POWERS = ((1, 0), (0, -1), (-1, 0), (0, 1))


def imaginary_axis_split(p) -> ImaginaryAxisSplit:
    """Real polynomials ``f0, f1`` with ``f0(w) - i f1(w) = i**(-n) p(i w)``.

    ``p`` (real or complex) is first normalized to a positive real leading
    coefficient.  For real input this gives the familiar alternating pattern
    ``f0 = a0 w^n - a2 w^(n-2) + ...``, ``f1 = a1 w^(n-1) - a3 w^(n-3) + ...``.
    """
    cp = normalize_complex_leading(as_complex(p))
    f0, f1 = [], []
    for k, (xr, xi) in enumerate(cp.coeffs):
        ur, ui = _I_INV_POWERS[k % 4]
        re = xr * ur - xi * ui
        im = xr * ui + xi * ur
        f0.append(re)
        f1.append(-im)
    return ImaginaryAxisSplit(Polynomial(tuple(f0)), Polynomial(tuple(f1)))


def even_odd_split(p: Polynomial) -> EvenOddSplit:
    """``g0, g1`` with ``p(z) = g0(z**2) + z g1(z**2)``."""
    if p.is_zero:
        raise ZeroPolynomialError("even/odd split of the zero polynomial")
    asc = p.ascending()
    g0 = Polynomial.from_ascending(asc[0::2])
    g1 = Polynomial.from_ascending(asc[1::2])
    return EvenOddSplit(g0, g1)


def assemble_from_split(f0: Polynomial, f1: Polynomial) -> Polynomial:
    """Inverse of :func:`imaginary_axis_split` for real polynomials.

    Requires ``f0`` to have the parity of its degree and ``f1`` the opposite
    parity, which is what the split of a real polynomial produces.
    """
    n = f0.deg
    out = []
    for k in range(n + 1):
        src = f0 if k % 2 == 0 else f1
        c = src.coeff(n - k)
        out.append(c if (k // 2) % 2 == 0 else -c)
    for k in range(n + 1):
        other = f1 if k % 2 == 0 else f0
        if other.coeff(n - k) != 0:
            raise ValueError("split pair does not come from a real polynomial")
    return Polynomial(tuple(out))


# ---------------------------------------------------------------------------
# Rational functions


@dataclass(frozen=True)
class RationalFunction:
    """``num/den`` kept in lowest terms with a monic denominator."""

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, Polynomial):
            num = _as_poly(num)
        if not isinstance(den, Polynomial):
            den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = Polynomial(), Polynomial.constant(1)
        else:
            g = gcd_monic(num, den)
            if g.deg > 0:
                num, den = num // g, den // g
            c = den.lead
            num, den = num / c, den / c
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def polynomial(cls, p: Polynomial) -> "RationalFunction":
        return cls(p, Polynomial.constant(1))

    @property
    def is_constant(self) -> bool:
        return self.den.deg == 0 and (self.num.is_zero or self.num.deg == 0)

    @property
    def is_strictly_proper(self) -> bool:
        return self.num.is_zero or self.num.deg < self.den.deg

    def split_polynomial_part(self):
        """Return ``(q, r)`` with ``self = q + r`` and ``r`` strictly proper."""
        q, r = poly_divmod(self.num, self.den)
        return q, RationalFunction(r, self.den)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __add__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.polynomial(_as_poly(other))
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        if not isinstance(other, RationalFunction):
            other = RationalFunction.polynomial(_as_poly(other))
        return RationalFunction(self.num * other.num, self.den * other.den)

    def reciprocal(self) -> "RationalFunction":
        if self.num.is_zero:
            raise ZeroDivisionError("reciprocal of the zero function")
        return RationalFunction(self.den, self.num)

    def __str__(self):
        return f"({self.num}) / ({self.den})"
