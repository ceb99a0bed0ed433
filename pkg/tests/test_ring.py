from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzdim.ring import (
    MIXED, Field, MonomialOrder, ParseError, PolynomialRing, QuotientRing, homogeneous_degree, parse_poly,
    poly_arith,
)

from conftest import homogeneous_polys, qring

QQ5 = PolynomialRing(tuple("abcde"), Field(0))
GF3 = PolynomialRing(("x", "y", "z"), Field(32003))
GF7 = PolynomialRing(("x", "y"), Field(7))


def polys(ring):
    return st.one_of(homogeneous_polys(ring, max_terms=4), st.just(ring.zero()))


class TestParse:
    def test_binomial_over_rationals(self):
        f = parse_poly("ade-bce", QQ5)
        assert f.terms == {(1, 0, 0, 1, 1): 1, (0, 1, 1, 0, 1): -1}

    @pytest.mark.parametrize("text", ["0", "x^2*y - x^2*y", "3*x - 3*x + 0"])
    def test_zero(self, text):
        assert parse_poly(text, GF3).terms == {}

    def test_rational_coefficients(self):
        f = parse_poly("1/2*a - 3/4*b^2", QQ5)
        assert f.terms[(1, 0, 0, 0, 0)] == Fraction(1, 2)
        assert f.terms[(0, 2, 0, 0, 0)] == Fraction(-3, 4)

    def test_fraction_in_prime_field(self):
        assert parse_poly("1/3*x", GF7) == GF7.monomial((1, 0), 5)

    def test_implicit_multiplication_single_letters(self):
        assert parse_poly("xy^2z", GF3) == parse_poly("x*y^2*z", GF3)
        assert parse_poly("xy^2", GF3) == GF3.monomial((1, 2, 0))
        assert parse_poly("2x(y+z)", GF3) == parse_poly("2*x*y + 2*x*z", GF3)

    def test_multi_letter_names_need_star(self):
        R = PolynomialRing(("x1", "x2"))
        assert parse_poly("x1*x2^2", R).terms == {(1, 2): 1}
        with pytest.raises(ParseError):
            parse_poly("x1x2", R)

    @pytest.mark.parametrize("text", ["a+q", "a+*b", "(a", "1/0", "a^", "a^-1"])
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_poly(text, QQ5)

    def test_parentheses_and_powers(self):
        assert parse_poly("(x+y)^2", GF3) == parse_poly("x^2 + 2*x*y + y^2", GF3)

    @given(polys(GF3))
    def test_round_trip_prime_field(self, f):
        assert parse_poly(str(f), GF3) == f

    @given(polys(PolynomialRing(("x", "y", "z"), Field(0))))
    def test_round_trip_rationals(self, f):
        assert parse_poly(str(f), f.ring) == f


class TestArithmetic:
    def test_difference_of_squares(self):
        assert poly_arith(GF3("x+y"), GF3("x-y"), "mul") == GF3("x^2 - y^2")

    def test_additive_identity(self):
        f = GF3("x*y + 2*z^2")
        assert poly_arith(f, GF3.zero(), "add") == f

    def test_variable_count_mismatch(self):
        with pytest.raises(ValueError):
            poly_arith(GF3("x"), GF7("x"), "add")

    def test_no_zero_coefficients_stored(self):
        f = GF7("3*x") + GF7("4*x")
        assert f.terms == {}

    @given(polys(GF3), polys(GF3), polys(GF3))
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == GF3.zero()

    @given(polys(GF7), st.integers(0, 4))
    def test_power_is_repeated_product(self, a, n):
        prod = GF7.one()
        for _ in range(n):
            prod = prod * a
        assert a ** n == prod


class TestHomogeneity:
    def test_examples(self):
        assert homogeneous_degree(QQ5("ade - bce")) == 3
        R = PolynomialRing(tuple("xyzuv"))
        assert homogeneous_degree(R("z*u + x*v + u*v")) == 2
        assert homogeneous_degree(GF7("x + x^2")) is MIXED
        assert homogeneous_degree(GF7.zero()) is None

    @given(homogeneous_polys(GF3), homogeneous_polys(GF3))
    def test_product_degree(self, a, b):
        assert homogeneous_degree(a * b) == homogeneous_degree(a) + homogeneous_degree(b)


exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@pytest.mark.parametrize("kind", ["grevlex", "lex"])
@given(a=exps, b=exps, c=exps)
def test_order_is_multiplicative_and_global(kind, a, b, c):
    key = MonomialOrder(kind).key
    mul = lambda u, v: tuple(s + t for s, t in zip(u, v))  # noqa: E731
    if key(a) < key(b):
        assert key(mul(a, c)) < key(mul(b, c))
    assert key((0, 0, 0)) <= key(a)
    assert (key(a) == key(b)) == (a == b)


def test_grevlex_tie_break():
    key = MonomialOrder("grevlex").key
    # same degree: the monomial with less of the last variable is larger
    assert key((0, 2, 1)) > key((1, 0, 2))
    assert key((1, 1, 0)) > key((0, 2, 0)) > key((1, 0, 1))


class TestQuotientRing:
    def test_rejects_inhomogeneous_generators(self):
        with pytest.raises(ValueError):
            qring("xy", ["x + y^2"])

    def test_rejects_constant_generators(self):
        with pytest.raises(ValueError):
            qring("xy", ["1"])

    def test_reduction_in_fibonacci_ring(self):
        R = qring("xy", ["x^2", "x*y"])
        assert R.reduce(R("x") * R("x")) == R.base.zero()
        assert R.reduce(R("y^3 + x*y")) == R("y^3")

    def test_declared_primes_parsed(self):
        R = qring("abcde", ["a*d*e - b*c*e"], min_primes=[["e"], ["a*d - b*c"]])
        assert len(R.declared_min_primes) == 2

    def test_with_field(self):
        R = qring("xy", ["x^2"], characteristic=0)
        R7 = R.with_field(Field(7))
        assert R7.field.characteristic == 7 and str(R7) == "GF(7)[x, y]/(x^2)"

    def test_monomial_detection(self):
        assert qring("xy", ["x^2", "x*y"]).is_monomial()
        assert not qring("xy", ["x^2 - y^2"]).is_monomial()
        assert isinstance(qring("xy"), QuotientRing)
