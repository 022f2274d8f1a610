from fractions import Fraction

import pytest
from hypothesis import strategies as st

from liecas import catalog
from liecas.exact import Polynomial


@pytest.fixture(scope="session")
def algebras():
    return {af.name: af for af in catalog.catalog()}


def C_of(name):
    return catalog.load(name).structure_constants()


small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, n=3, max_deg=3, max_terms=4):
    """Random polynomials of total degree at most ``max_deg``."""
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = [0] * n
        for _ in range(draw(st.integers(0, max_deg))):
            mono[draw(st.integers(0, n - 1))] += 1
        terms[tuple(mono)] = draw(small_rationals)
    return Polynomial(n, terms)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    entries = st.one_of(st.just(Fraction(0)), st.fractions(min_value=-4, max_value=4, max_denominator=3))
    return [[draw(entries) for _ in range(c)] for _ in range(r)]


def vectors(n):
    return st.lists(small_rationals, min_size=n, max_size=n).map(tuple)


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
