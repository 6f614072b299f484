from fractions import Fraction

import pytest
from hypothesis import strategies as st

from radgen.field import QQ, GF
from radgen.poly import Polynomial, RingContext


@pytest.fixture
def R6():
    return RingContext.standard(6)


@pytest.fixture
def R5():
    return RingContext.standard(5)


def polys(ctx, max_terms=4, max_exp=2, coeffs=None):
    """Hypothesis strategy for small random polynomials in ``ctx``."""
    n = ctx.nvars
    mono = st.tuples(*[st.integers(0, max_exp)] * n)
    if coeffs is None:
        coeffs = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))
    return st.dictionaries(mono, coeffs, max_size=max_terms).map(lambda d: Polynomial(ctx, d))


def sympy_reduced_basis(ideal, order=None):
    """Reduced basis from sympy, as strings in our canonical print form."""
    import sympy

    ctx = ideal.ctx
    syms = sympy.symbols(" ".join(ctx.variables))
    exprs = [sympy.sympify(str(g).replace("^", "**"), locals=dict(zip(ctx.variables, syms)))
             for g in ideal]
    kw = {"modulus": ctx.field.modulus} if ctx.field.modulus else {"domain": "QQ"}
    gb = sympy.groebner(exprs, *syms, order=order or ctx.order, **kw)
    out = []
    for p in gb.polys:
        terms = {}
        for mono, c in p.terms():
            c = int(c) if ctx.field.modulus else Fraction(int(c.numerator), int(c.denominator))
            terms[tuple(mono)] = c
        out.append(Polynomial(ctx.with_order(order or ctx.order), terms))
    return sorted(out, key=lambda f: f.ctx.key(f.lm), reverse=True)


def monomial_in(m, gens):
    return any(all(a >= b for a, b in zip(m, g)) for g in gens)


def power_oracle(f, mono_gens, max_power=6):
    """Is some f^m (m <= max_power) in the monomial ideal?  Pure combinatorics."""
    g = f.ctx.one()
    for _ in range(max_power):
        g = g * f
        if all(monomial_in(m, mono_gens) for m in g.monomials()):
            return True
    return False


# criterion number -> (passed, summary line); filled by test_acceptance
ACCEPTANCE_RESULTS = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[n][1])
