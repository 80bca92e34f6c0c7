from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from routh_hurwitz.scalar_poly import ComplexPolynomial, Polynomial

small_ints = st.integers(min_value=-6, max_value=6)
small_rats = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=4))


@st.composite
def polynomials(draw, min_degree=1, max_degree=6, coeff=small_rats):
    """Real polynomials with a nonzero leading coefficient."""
    n = draw(st.integers(min_value=min_degree, max_value=max_degree))
    lead = draw(coeff.filter(lambda c: c != 0))
    rest = draw(st.lists(coeff, min_size=n, max_size=n))
    return Polynomial((lead, *rest))


@st.composite
def complex_polynomials(draw, min_degree=1, max_degree=4):
    n = draw(st.integers(min_value=min_degree, max_value=max_degree))
    pair = st.tuples(small_ints, small_ints)
    lead = draw(pair.filter(lambda c: c != (0, 0)))
    rest = draw(st.lists(pair, min_size=n, max_size=n))
    return ComplexPolynomial((lead, *rest))


@st.composite
def monic_real_rooted(draw, max_degree=5):
    """Monic polynomial with distinct rational roots, and the roots."""
    roots = draw(st.lists(small_rats, min_size=1, max_size=max_degree, unique=True))
    return Polynomial.from_roots(roots), sorted(roots)


# exact rational arithmetic has heavy-tailed timings; rely on test-level limits instead
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


positive_rats = st.builds(Fraction, st.integers(min_value=1, max_value=9),
                          st.integers(min_value=1, max_value=4))


@st.composite
def stable_polynomials(draw, max_factors=4):
    """Products of ``z + a`` and ``z**2 + b z + c`` with ``a, b, c > 0``."""
    p = Polynomial((draw(positive_rats),))
    for _ in range(draw(st.integers(min_value=1, max_value=max_factors))):
        if draw(st.booleans()):
            p = p * Polynomial((1, draw(positive_rats)))
        else:
            p = p * Polynomial((1, draw(positive_rats), draw(positive_rats)))
    return p


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
