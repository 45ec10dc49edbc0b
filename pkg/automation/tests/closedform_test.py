#!/usr/bin/env python3
"""
Tests for the closed forms of the remainders, the Pade approximants and the
eq8 polynomial solve
"""

import os
import sys
from fractions import Fraction

import pytest

# Add project root to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from schur_euclid.alphabets import EMPTY, VirtualAlphabet, sigma
from schur_euclid.closedform import (
    PASS,
    displayed_gamma,
    displayed_quotient,
    displayed_subtrahend,
    eq8_solve,
    low_k_identities,
    pade,
    pade_structure,
    remainder_one_by_sigma,
    remainder_sigma_by_one,
    remainder_sigma_by_sigma,
)
from schur_euclid.errors import InsufficientPrecision, NonGeneric
from schur_euclid.euclid import divide_iterate

A12 = VirtualAlphabet.of([1, 2])
A1235 = VirtualAlphabet.of([1, 2, 3, 5])


class TestRemainders:
    """Test closed-form remainders against the division engine"""

    def test_sigma_by_one_values(self):
        """Test f_1 and f_2 for {1,2}"""
        assert remainder_sigma_by_one(A12, 1, 3).coeffs == (1, Fraction(15, 7), Fraction(31, 7))
        assert remainder_sigma_by_one(A12, 2, 4).coeffs == (1, 3, 7, 15)

    def test_sigma_by_one_vanishing_rectangle(self):
        """Test NonGeneric names S_(4,4,4)"""
        with pytest.raises(NonGeneric) as excinfo:
            remainder_sigma_by_one(A12, 3, 4)
        assert excinfo.value.vanishing == "S_(4,4,4)"
        assert excinfo.value.index == (4, 4, 4)

    def test_k_must_be_positive(self):
        """Test ValueError for k = 0"""
        with pytest.raises(ValueError):
            remainder_sigma_by_one(A12, 0, 4)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_sigma_by_one_matches_division(self, k):
        """Test f_k from Schur functions equals f_k from division"""
        trace = divide_iterate(A1235, EMPTY, 3, 12)
        assert remainder_sigma_by_one(A1235, k, 12 - 2 * k).agrees_with(trace.series(k))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_sigma_by_sigma_matches_division(self, k):
        """Test f_k for sigma_z(A) / sigma_z(B)"""
        b = VirtualAlphabet.of([Fraction(1, 2)])
        trace = divide_iterate(A1235, b, 3, 12)
        assert remainder_sigma_by_sigma(A1235, b, k, 12).agrees_with(trace.series(k))

    @pytest.mark.parametrize("k", [0, 1, 2, 3])
    def test_one_by_sigma_matches_division(self, k):
        """Test sigma_z(A^k) in the division of 1 by sigma_z(A)"""
        trace = divide_iterate(EMPTY, A1235, 3, 12)
        assert remainder_one_by_sigma(A1235, k, 12).agrees_with(trace.series(k))

    def test_one_by_sigma_two_letters(self):
        """Test A^1 = A for two letters and the vanishing S_(2,2,2)"""
        assert remainder_one_by_sigma(A12, 1, 5).coeffs == (1, 3, 7, 15, 31)
        with pytest.raises(NonGeneric) as excinfo:
            remainder_one_by_sigma(A12, 2, 5)
        assert excinfo.value.vanishing == "S_(2,2,2)"


class TestPade:
    """Test Pade approximants built from S(A +- 1/z)"""

    def test_k_one(self):
        """Test the [1,0] approximant of sigma_z({1,2})"""
        approximant = pade(A12, 1)
        assert approximant.numerator.coeffs == (1, 3)
        assert approximant.denominator.coeffs == (1,)
        assert approximant.contact_order == 2
        assert approximant.deviation == 7

    def test_k_two(self):
        """Test the [2,1] approximant of sigma_z({1,2})"""
        approximant = pade(A12, 2)
        assert approximant.denominator.coeffs == (1, Fraction(-15, 7))
        assert approximant.numerator.coeffs == (1, Fraction(6, 7), Fraction(4, 7))
        assert approximant.contact_order == 4
        assert approximant.deviation == Fraction(-8, 7)
        assert not approximant.exact

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_matches_polynomial_closed_forms(self, k):
        """Test numerator, denominator and deviation against the Schur quotients"""
        approximant = pade(A1235, k)
        assert approximant.denominator == displayed_quotient(A1235, k)
        assert approximant.numerator == displayed_subtrahend(A1235, k)
        assert approximant.deviation == displayed_gamma(A1235, k)
        assert approximant.contact_order == 2 * k

    def test_expansion_matches_sigma_to_contact(self):
        """Test numerator / denominator agrees with sigma_z(A) below z^(2k)"""
        approximant = pade(A1235, 3)
        assert approximant.expand(6).agrees_with(sigma(A1235, 6))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_coefficient_structure(self, k):
        """Test low, middle and top coefficients of the cleared product"""
        structure = pade_structure(A1235, k)
        assert structure.holds
        assert structure.top_coefficient != 0


class TestEq8:
    """Test the quotient and subtrahend polynomials from a Hankel solve"""

    def test_k_two(self):
        """Test values for {1,2}"""
        solution = eq8_solve(A12, 2, 8)
        assert solution.quotient_poly.coeffs == (1, Fraction(-15, 7))
        assert solution.subtrahend_poly.coeffs == (1, Fraction(6, 7), Fraction(4, 7))
        assert solution.gamma == Fraction(-8, 7)
        assert solution.implied_remainder().agrees_with(remainder_sigma_by_one(A12, 2, 8))

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_matches_closed_forms(self, k):
        """Test the solve against the Schur quotients"""
        solution = eq8_solve(A1235, k, 2 * k + 6)
        assert solution.quotient_poly == displayed_quotient(A1235, k)
        assert solution.subtrahend_poly == displayed_subtrahend(A1235, k)
        assert solution.gamma == displayed_gamma(A1235, k)

    def test_vanishing_gamma(self):
        """Test that a zero gamma leaves no remainder"""
        solution = eq8_solve(A12, 3, 8)
        assert solution.gamma == 0
        with pytest.raises(NonGeneric):
            solution.implied_remainder()

    def test_order_check(self):
        """Test InsufficientPrecision"""
        with pytest.raises(InsufficientPrecision):
            eq8_solve(A12, 3, 7)


class TestLowKIdentities:
    """Test the identities for f_1, f_2 and f_3"""

    def test_generic_alphabet(self):
        """Test every identity on four letters"""
        report = low_k_identities(A1235, 12)
        assert report.all_pass
        assert report.get(2).polynomial == PASS

    def test_two_letters_stop_at_three(self):
        """Test that f_3 of {1,2} reports the vanishing rectangle"""
        report = low_k_identities(A12, 12)
        assert report.get(1).passed and report.get(2).passed
        assert report.get(3).vanishing == "S_(4,4,4)"
        assert not report.all_pass

    def test_order_check(self):
        """Test order >= 10"""
        with pytest.raises(InsufficientPrecision):
            low_k_identities(A1235, 9)
