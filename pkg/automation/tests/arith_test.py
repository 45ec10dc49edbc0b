#!/usr/bin/env python3
"""
Tests for the exact coefficient carriers: rationals, polynomials and
truncated series
"""

import os
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Add project root to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from schur_euclid.arith import DensePoly, LaurentPoly, Series, format_rational, parse_rational
from schur_euclid.errors import InsufficientPrecision, ParseError, ZeroConstantTerm

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
unitary_series = st.lists(rationals, min_size=1, max_size=6).map(lambda tail: Series((1,) + tuple(tail)))


class TestRationalText:
    """Test parsing and formatting of rationals"""

    def test_parse_integer_and_fraction(self):
        """Test plain and slashed forms"""
        assert parse_rational("3") == 3
        assert parse_rational("-15/7") == Fraction(-15, 7)
        assert parse_rational(" 2/4 ") == Fraction(1, 2)

    def test_parse_rejects_malformed_tokens(self):
        """Test that anything outside -?digits(/digits)? is refused with a position"""
        for token in ("1.5", "a", "1/", "+3", "1/-2"):
            with pytest.raises(ParseError):
                parse_rational(token)
        with pytest.raises(ParseError) as excinfo:
            parse_rational("x", position=4)
        assert excinfo.value.position == 4

    def test_parse_rejects_zero_denominator(self):
        """Test 1/0"""
        with pytest.raises(ParseError):
            parse_rational("1/0")

    def test_format_is_lowest_terms(self):
        """Test canonical output"""
        assert format_rational(Fraction(8, 49)) == "8/49"
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(-3) == "-3"


class TestDensePoly:
    """Test dense polynomials"""

    def test_trailing_zeros_are_stripped(self):
        """Test normal form"""
        assert DensePoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert DensePoly((0, 0)).is_zero()
        assert DensePoly().degree == -1

    def test_product_and_evaluation(self):
        """Test (1 - z)(1 - 2z)"""
        product = DensePoly((1, -1)) * DensePoly((1, -2))
        assert product.coeffs == (1, -3, 2)
        assert product(2) == 3
        assert product(Fraction(1, 2)) == 0

    def test_reversed(self):
        """Test t^d p(1/t)"""
        assert DensePoly((1, 2)).reversed(3).coeffs == (0, 0, 2, 1)
        with pytest.raises(ValueError):
            DensePoly((1, 2, 3)).reversed(1)


class TestLaurentPoly:
    """Test Laurent polynomials"""

    def test_terms_merge_and_cancel(self):
        """Test that zero coefficients are dropped"""
        p = LaurentPoly(((-1, 2), (0, 1), (-1, -2)))
        assert p.terms == ((0, 1),)

    def test_product_with_inverse_power(self):
        """Test (z + 1/z)(z - 1/z) = z^2 - z^-2"""
        p = LaurentPoly.from_mapping({1: 1, -1: 1})
        q = LaurentPoly.from_mapping({1: 1, -1: -1})
        assert (p * q).as_dict() == {2: 1, -2: -1}
        assert (p * q).min_exponent == -2

    def test_to_dense_needs_nonnegative_exponents(self):
        """Test clearing 1/z before converting"""
        p = LaurentPoly.from_mapping({-1: 3, 0: 1})
        assert p.shift(1).to_dense().coeffs == (3, 1)
        with pytest.raises(ValueError):
            p.to_dense()


class TestSeries:
    """Test truncated series arithmetic"""

    def setup_method(self):
        """Setup for each test method"""
        self.geometric = Series((1, 1, 1, 1))

    def test_order_is_tracked(self):
        """Test that binary operations keep the smaller order"""
        total = self.geometric + Series((1, 2))
        assert total.order == 2
        assert total.coeffs == (2, 3)

    def test_empty_series_is_rejected(self):
        """Test a series with no known coefficient"""
        with pytest.raises(InsufficientPrecision):
            Series(())

    def test_unknown_coefficient_raises(self):
        """Test reading past the order"""
        assert self.geometric[-1] == 0
        with pytest.raises(InsufficientPrecision):
            self.geometric[4]

    def test_product_and_quotient(self):
        """Test 1/(1 - z) times (1 - z)"""
        assert (self.geometric * DensePoly((1, -1))).coeffs == (1, 0, 0, 0)
        assert (Series.one(4) / self.geometric).coeffs == (1, -1, 0, 0)

    def test_inverse_of_cleared_denominator(self):
        """Test 1/(1 - 3z + 2z^2) = sigma_z({1,2})"""
        assert Series((1, -3, 2, 0, 0)).inverse().coeffs == (1, 3, 7, 15, 31)

    def test_inverse_needs_constant_term(self):
        """Test ZeroConstantTerm"""
        with pytest.raises(ZeroConstantTerm):
            Series((0, 1, 2)).inverse()
        with pytest.raises(ZeroConstantTerm):
            self.geometric / Series((0, 1, 0, 0))

    def test_shifts(self):
        """Test multiplying and dividing by powers of z"""
        up = self.geometric.shift_up(2)
        assert up.order == 6
        assert up.valuation() == 2
        assert up.shift_down(2) == self.geometric
        with pytest.raises(ValueError):
            self.geometric.shift_down(1)

    def test_agreement(self):
        """Test prefix comparison"""
        assert self.geometric.agrees_with(Series((1, 1, 1, 2)), 3)
        assert not self.geometric.agrees_with(Series((1, 1, 1, 2)))
        assert not self.geometric.agrees_with(Series((1, 1)), 3)

    @given(unitary_series)
    def test_inverse_is_two_sided(self, f):
        """Test f * f^-1 = 1 through the known order"""
        assert (f * f.inverse()).coeffs == Series.one(f.order).coeffs

    @given(unitary_series, unitary_series, unitary_series)
    def test_product_is_associative(self, f, g, h):
        """Test (fg)h = f(gh)"""
        assert ((f * g) * h).coeffs == (f * (g * h)).coeffs

    @given(unitary_series, unitary_series)
    def test_division_undoes_product(self, f, g):
        """Test (f / g) * g = f"""
        order = min(f.order, g.order)
        assert ((f / g) * g).coeffs == f.truncate(order).coeffs


series = st.lists(rationals, min_size=1, max_size=6).map(lambda coeffs: Series(tuple(coeffs)))
polys = st.lists(rationals, max_size=5).map(lambda coeffs: DensePoly(tuple(coeffs)))
laurents = st.dictionaries(st.integers(min_value=-3, max_value=3), rationals, max_size=4).map(
    LaurentPoly.from_mapping
)
points = rationals.filter(lambda x: x != 0)


class TestDensePolyRing:
    """Test the ring laws for polynomials"""

    @given(polys, polys)
    def test_commutative(self, p, q):
        """Test p + q = q + p and pq = qp"""
        assert p + q == q + p
        assert p * q == q * p

    @given(polys, polys, polys)
    def test_associative_and_distributive(self, p, q, r):
        """Test (pq)r = p(qr) and p(q + r) = pq + pr"""
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polys)
    def test_identities_and_negation(self, p):
        """Test p + 0 = p, 1 p = p and p - p = 0"""
        assert p + DensePoly() == p
        assert DensePoly.constant(1) * p == p
        assert (p - p).is_zero()

    @given(polys, polys, rationals)
    def test_evaluation_is_a_homomorphism(self, p, q, x):
        """Test (p + q)(x) and (pq)(x)"""
        assert (p + q)(x) == p(x) + q(x)
        assert (p * q)(x) == p(x) * q(x)


class TestLaurentPolyRing:
    """Test the ring laws for Laurent polynomials"""

    @given(laurents, laurents)
    def test_commutative(self, p, q):
        """Test p + q = q + p and pq = qp"""
        assert p + q == q + p
        assert p * q == q * p

    @given(laurents, laurents, laurents)
    def test_associative_and_distributive(self, p, q, r):
        """Test (pq)r = p(qr) and p(q + r) = pq + pr"""
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(laurents)
    def test_identities_and_negation(self, p):
        """Test p + 0 = p, 1 p = p and p - p = 0"""
        assert p + LaurentPoly.zero() == p
        assert LaurentPoly.one() * p == p
        assert (p - p).is_zero()

    @given(laurents, laurents, points)
    def test_evaluation_is_a_homomorphism(self, p, q, x):
        """Test evaluation at a nonzero point"""
        assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
        assert p.shift(2).evaluate(x) == p.evaluate(x) * x ** 2


class TestSeriesRing:
    """Test the ring laws for truncated series"""

    @given(series, series)
    def test_commutative(self, f, g):
        """Test f + g = g + f and fg = gf"""
        assert f + g == g + f
        assert f * g == g * f

    @given(series, series, series)
    def test_distributive(self, f, g, h):
        """Test f(g + h) = fg + fh through the smallest order"""
        assert f * (g + h) == f * g + f * h

    @given(series)
    def test_identities_and_negation(self, f):
        """Test f + 0 = f, 1 f = f and f - f = 0"""
        assert f + 0 == f
        assert Series.one(f.order) * f == f
        assert (f - f).valuation() is None


class TestPrecision:
    """Test that raising the order never changes known coefficients"""

    @given(unitary_series, st.data())
    def test_inverse_of_a_prefix_is_a_prefix_of_the_inverse(self, f, data):
        """Test inverse(f mod z^T) = inverse(f) mod z^T"""
        order = data.draw(st.integers(min_value=1, max_value=f.order))
        assert f.truncate(order).inverse() == f.inverse().truncate(order)

    @given(series, unitary_series, st.data())
    def test_products_and_quotients_keep_their_prefix(self, f, g, data):
        """Test fg and f / g recomputed at a lower order"""
        order = data.draw(st.integers(min_value=1, max_value=min(f.order, g.order)))
        assert f.truncate(order) * g == (f * g).truncate(order)
        assert f.truncate(order) / g == (f / g).truncate(order)
