import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from syzdim.ring import Field, MonomialOrder, PolynomialRing, QuotientRing

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

P = 32003


def monomials(n, d):
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        e = [0] * n
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


@st.composite
def homogeneous_polys(draw, ring, degree=None, max_terms=3, min_degree=1, max_degree=3):
    """Random homogeneous polynomial of a :class:`PolynomialRing`."""
    d = degree if degree is not None else draw(st.integers(min_degree, max_degree))
    monos = monomials(ring.nvars, d)
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=max_terms, unique=True))
    p = ring.field.characteristic
    coeffs = draw(st.lists(st.integers(1, (p - 1) if p else 20), min_size=len(chosen), max_size=len(chosen)))
    return sum((ring.monomial(m, c) for m, c in zip(chosen, coeffs)), ring.zero())


@st.composite
def monomial_ideals(draw, nvars=3, max_gens=3, max_degree=3):
    gens = draw(st.lists(st.tuples(*[st.integers(0, max_degree)] * nvars).filter(lambda e: 0 < sum(e) <= max_degree),
                         min_size=1, max_size=max_gens, unique=True))
    return gens


@pytest.fixture
def xyz():
    return PolynomialRing(("x", "y", "z"), Field(P), MonomialOrder("grevlex"))


def qring(variables, ideal=(), characteristic=P, **kw):
    return QuotientRing.from_strings(variables, ideal, characteristic=characteristic, **kw)


def complex_violations(res) -> list[str]:
    """Entries of ``delta_i * delta_{i+1}`` that are nonzero mod I, and non-minimal entries."""
    R = res.ring
    zero = R.base.zero()
    out = []
    diffs = res.differentials if res.window else ()
    for i, d in enumerate(diffs, start=1):
        for col in d.columns:
            for f in col:
                if f and f.constant_term():
                    out.append(f"delta_{i} has unit entry {f}")
    for i in range(1, len(diffs)):
        a, b = diffs[i - 1], diffs[i]
        for col in b.columns:
            for r in range(a.nrows):
                s = sum((a.columns[k][r] * col[k] for k in range(a.ncols)), zero)
                if R.reduce(s):
                    out.append(f"delta_{i} * delta_{i + 1} has nonzero entry {R.reduce(s)}")
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.SUMMARY:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.SUMMARY):
        terminalreporter.write_line(mod.SUMMARY[k][1])
