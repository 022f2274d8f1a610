import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from liecas import catalog
from liecas.enveloping import EnvelopingAlgebra, PBWElement, is_central, pbw_mul, symmetrize
from liecas.exact import Polynomial
from liecas.invariants import polynomial_invariants

from conftest import C_of, polynomials

F = Fraction
ALL = catalog.NAMES


def pbw(n, terms):
    return PBWElement(n, terms)


def test_sl2_straightening():
    C = C_of("sl2")
    e, f, h = (PBWElement.gen(3, i) for i in range(3))
    # f e = e f - h
    assert pbw_mul(C, f, e) == pbw(3, {(1, 1, 0): 1, (0, 0, 1): -1})


def test_square_is_ordered():
    C = C_of("sl2")
    for i in range(3):
        g = PBWElement.gen(3, i)
        mono = [0, 0, 0]
        mono[i] = 2
        assert pbw_mul(C, g, g) == pbw(3, {tuple(mono): 1})


@settings(max_examples=30)
@given(polynomials(), polynomials())
def test_abelian_product_is_commutative_product(p, q):
    C = C_of("abelian3")
    a, b = PBWElement(3, p.terms), PBWElement(3, q.terms)
    assert pbw_mul(C, a, b) == PBWElement(3, (p * q).terms)


def test_symmetrize_degree_one():
    C = C_of("heisenberg3")
    assert symmetrize(C, Polynomial.var(3, 2)) == PBWElement.gen(3, 2)


def test_symmetrize_sl2_casimir():
    C = C_of("sl2")
    x1, x2, x3 = (Polynomial.var(3, j) for j in range(3))
    cas = symmetrize(C, x3 * x3 + 4 * x1 * x2)
    # h^2 + 4ef - 2h
    assert cas == pbw(3, {(0, 0, 2): 1, (1, 1, 0): 4, (0, 0, 1): -2})
    assert is_central(C, cas)


@settings(max_examples=30)
@given(polynomials())
def test_symmetrize_identity_when_abelian(p):
    assert symmetrize(C_of("abelian3"), p) == PBWElement(3, p.terms)


def test_central_examples():
    assert is_central(C_of("heisenberg3"), PBWElement.gen(3, 2))
    res = is_central(C_of("sl2"), PBWElement.gen(3, 0))
    # first failing generator is f: [f, e] = -h
    assert not res and res.witness_index == 1
    assert res.witness == pbw(3, {(0, 0, 1): -1})


def test_non_invariant_symmetrizes_to_non_central():
    C = C_of("sl2")
    res = is_central(C, symmetrize(C, Polynomial.var(3, 0)))
    assert not res.central and not res.witness.is_zero()


@pytest.mark.parametrize("name", ALL)
def test_bridge_invariants_to_casimirs(name):
    C = C_of(name)
    U = EnvelopingAlgebra(C)
    for p in polynomial_invariants(C, 4).polys:
        cas = U.symmetrize(p)
        assert U.is_central(cas)
        assert cas.symbol() == p


@pytest.mark.parametrize("name", ALL)
def test_confluence_random_words(name):
    C = C_of(name)
    U = EnvelopingAlgebra(C)
    rng = random.Random(7)
    for _ in range(40):
        w = [rng.randrange(C.dim) for _ in range(rng.randint(1, 5))]
        left = U.word(w)
        right = U.gen(w[-1])
        for i in reversed(w[:-1]):
            right = U.mul(U.gen(i), right)
        assert left == right


@pytest.mark.parametrize("name", ["sl2", "sa2", "sl2_h3", "r3"])
def test_filtration(name):
    C = C_of(name)
    U = EnvelopingAlgebra(C)
    n = C.dim

    @settings(max_examples=20)
    @given(polynomials(n=n, max_deg=2, max_terms=3), polynomials(n=n, max_deg=2, max_terms=3))
    def check(p, q):
        if p.is_zero() or q.is_zero():
            return
        a, b = PBWElement(n, p.terms), PBWElement(n, q.terms)
        assert U.mul(a, b).symbol() == a.symbol() * b.symbol()

    check()


@pytest.mark.parametrize("name", ["sl2", "heisenberg3", "sa2"])
def test_symmetrize_linear(name):
    C = C_of(name)
    U = EnvelopingAlgebra(C)
    n = C.dim

    @settings(max_examples=20)
    @given(polynomials(n=n, max_deg=2, max_terms=3), polynomials(n=n, max_deg=2, max_terms=3))
    def check(p, q):
        assert U.symmetrize(p.scale(F(3, 2)) + q) == U.symmetrize(p).scale(F(3, 2)) + U.symmetrize(q)

    check()
