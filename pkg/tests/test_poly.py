import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triple_defect import GF, RATIONALS, parse, ring
from triple_defect.errors import InputError
from triple_defect.jets import choose_chart, taylor_coefficients
from triple_defect.poly import Polynomial, monomial_basis

from support import brute_monomial_tuples, random_homogeneous

R7 = ring(GF(7))
RQ = ring(RATIONALS)


def test_parse_examples():
    p = parse("x0^2*x1 - 2*x3^3", RQ)
    assert p.terms == {(2, 1, 0, 0, 0): Fraction(1), (0, 0, 0, 2 + 1, 0): Fraction(-2)}

    r2 = ring(RATIONALS, weights=(2, 1, 1, 1, 1))
    q = parse("x0 + x1^2", r2)
    assert q.weighted_degree() == 2

    with pytest.raises(InputError):
        parse("x5 + 1", RQ)


def test_parse_rationals_and_errors():
    assert parse("1/2*x0", RQ).terms == {(1, 0, 0, 0, 0): Fraction(1, 2)}
    assert parse("1/3*x0", R7).terms == {(1, 0, 0, 0, 0): 5}
    with pytest.raises(InputError):
        parse("1/0*x0", RQ)
    with pytest.raises(InputError):
        parse("1/7*x0", R7)
    with pytest.raises(InputError):
        parse("x0 +", RQ)
    with pytest.raises(InputError):
        parse("x0^0", RQ)
    with pytest.raises(InputError):
        parse("x0 x1", RQ)


def test_weighted_degree():
    assert parse("x0^5+x1^5+x2^5+x3^5+x4^5", RQ).weighted_degree() == 5
    rw = ring(GF(7), weights=(1, 1, 1, 1, 2))
    cover = parse("x4^3 - x0^6 - x1^6 - x2^6 - x3^6", rw)
    assert cover.weighted_degree() == 6
    assert parse("x0 + x1^2", RQ).weighted_degree() is None
    with pytest.raises(InputError):
        RQ.zero().weighted_degree()


def test_partial_derivatives():
    assert parse("x0^3", RQ).partial_derivative(0) == parse("3*x0^2", RQ)
    rw = ring(GF(7), weights=(1, 1, 1, 1, 2))
    cover = parse("x4^3 - x0^6", rw)
    assert cover.partial_derivative(4) == parse("3*x4^2", rw)


def test_evaluate_examples():
    fermat = parse("x0^5+x1^5+x2^5+x3^5+x4^5", RQ)
    assert fermat.evaluate((1, -1, 0, 0, 0)) == 0
    assert ring(GF(5)).constant(7).evaluate((0, 0, 0, 0, 0)) == 2
    assert parse("x0*x1", RQ).evaluate((2, 3, 0, 0, 0)) == 6


def test_monomial_basis_counts():
    assert len(monomial_basis(RQ, 7)) == 330
    rw = ring(RATIONALS, weights=(1, 1, 1, 1, 2))
    basis = monomial_basis(rw, 6)
    assert len(basis) == 130
    assert sorted(basis) == sorted(brute_monomial_tuples((1, 1, 1, 1, 2), 6))
    assert monomial_basis(RQ, 0) == [(0, 0, 0, 0, 0)]
    assert all(rw.monomial_degree(m) == 6 for m in basis)
    # graded-lex: deterministic, first monomial is x0-dominant
    assert basis[0] == (6, 0, 0, 0, 0)


def test_homogenize():
    p = parse("x1^2 + x3", RQ)
    assert p.homogenize(2, 0) == parse("x1^2 + x0*x3", RQ)
    already = parse("x0^2 + x1*x2", RQ)
    assert already.homogenize(2, 0) == already
    with pytest.raises(InputError):
        parse("x1^3", RQ).homogenize(2, 0)
    # round trip: substituting 1 for the new variable recovers the input
    h = p.homogenize(4, 0)
    assert h.weighted_degree() == 4
    images = [RQ.one()] + [RQ.variable(i) for i in range(1, 5)]
    assert h.substitute(images) == p


def test_dehomogenize_examples():
    F = parse("x0*(x1^3+x2^3+x3^3+x4^3)", RQ)
    local = F.dehomogenize(0, (1, 0, 0, 0, 0))
    lr = local.ring
    expect = parse("y1^3+y2^3+y3^3+y4^3", lr)
    assert local == expect

    G = parse("x0^2*x1 - x2^3 + 5*x0^3", RQ)
    pt = (1, 2, -1, 0, 3)
    assert G.dehomogenize(0, pt).coefficient((0, 0, 0, 0)) == G.evaluate(pt)


def test_dehomogenize_is_ring_map():
    rng = random.Random(7)
    pt = (1, 2, 3, 4, 5)
    f7 = GF(7)
    r = ring(f7)
    norm = tuple(f7.coerce(x) for x in pt)
    for _ in range(5):
        a = random_homogeneous(rng, r, 3, sparsity=0.4)
        b = random_homogeneous(rng, r, 2, sparsity=0.4)
        da, db = a.dehomogenize(0, norm), b.dehomogenize(0, norm)
        assert (a * b).dehomogenize(0, norm) == da * db
        # sums of same degree
        c = random_homogeneous(rng, r, 3, sparsity=0.4)
        assert (a + c).dehomogenize(0, norm) == da + c.dehomogenize(0, norm)


def test_dehomogenize_linear_part_matches_jets():
    # first-order Taylor data computed two ways: full expansion vs derivatives
    rng = random.Random(11)
    r = ring(GF(11))
    F = random_homogeneous(rng, r, 4, sparsity=0.5)
    pt = (1, 3, 0, 7, 2)
    chart = choose_chart(pt, r)
    local = F.dehomogenize(0, chart.center)
    coeffs = taylor_coefficients(F, chart, 1)
    for k in range(4):
        e = tuple(1 if i == k else 0 for i in range(4))
        assert local.coefficient(e) == coeffs[e]


@st.composite
def polynomials(draw):
    f = draw(st.sampled_from([GF(5), GF(7), RATIONALS]))
    weights = draw(st.sampled_from([(1, 1, 1, 1, 1), (1, 1, 1, 1, 2)]))
    r = ring(f, weights=weights)
    d = draw(st.integers(1, 4))
    basis = monomial_basis(r, d)
    terms = {}
    for m in basis:
        if draw(st.booleans()):
            c = f.coerce(draw(st.integers(-6, 6)))
            if not f.is_zero(c):
                terms[m] = c
    return Polynomial(r, terms), d


@given(polynomials())
@settings(max_examples=80, deadline=None)
def test_euler_identity(pd):
    p, d = pd
    r = p.ring
    f = r.field
    acc = r.zero()
    for i, w in enumerate(r.weights):
        acc = acc + r.variable(i) * p.partial_derivative(i) * f.coerce(w)
    assert acc == p * f.coerce(d)


@given(polynomials(), st.integers(0, 4), st.integers(0, 4))
@settings(max_examples=60, deadline=None)
def test_mixed_partials_commute(pd, i, j):
    p, _ = pd
    assert p.partial_derivative(i).partial_derivative(j) == \
        p.partial_derivative(j).partial_derivative(i)


@given(polynomials())
@settings(max_examples=80, deadline=None)
def test_parse_render_roundtrip(pd):
    p, _ = pd
    assert parse(p.render(), p.ring) == p
