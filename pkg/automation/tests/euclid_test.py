#!/usr/bin/env python3
"""
Tests for the Euclidean division of formal series
"""

import os
import sys
from fractions import Fraction

import pytest

# Add project root to path
sys.path.append(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from schur_euclid.alphabets import EMPTY, VirtualAlphabet, sigma
from schur_euclid.arith import Series
from schur_euclid.errors import DivisionTerminated, InsufficientPrecision
from schur_euclid.euclid import DivisionStep, Terminated, divide_iterate, divide_series, divide_step


class TestDivideStep:
    """Test a single division step"""

    def setup_method(self):
        """Setup for each test method"""
        self.alphabet = VirtualAlphabet.of([1, 2])
        self.sigma = sigma(self.alphabet, 8)

    def test_first_step(self):
        """Test sigma_z({1,2}) divided by 1"""
        step = divide_step(self.sigma, Series.one(8))
        assert isinstance(step, DivisionStep)
        assert step.alpha == 3
        assert step.beta == 7
        assert step.remainder.coeffs[:3] == (1, Fraction(15, 7), Fraction(31, 7))
        assert step.remainder.order == 6
        assert step.quotient.coeffs == (1, 3)

    def test_identical_series_terminate(self):
        """Test beta = 0 comes back as a value"""
        outcome = divide_step(self.sigma, self.sigma, k=4)
        assert outcome == Terminated(4, Fraction(0))

    def test_requires_unitary_series(self):
        """Test ValueError on a non-unitary input"""
        with pytest.raises(ValueError):
            divide_step(self.sigma.scale(2), self.sigma)

    def test_requires_order_three(self):
        """Test InsufficientPrecision below order 3"""
        with pytest.raises(InsufficientPrecision):
            divide_step(self.sigma.truncate(2), Series.one(2))


class TestDivideIterate:
    """Test iterated division"""

    def test_two_steps_on_one_two(self):
        """Test alpha and beta for sigma_z({1,2}) / 1"""
        trace = divide_iterate(VirtualAlphabet.of([1, 2]), EMPTY, 2, 10)
        assert trace.alphas == [3, Fraction(-15, 7)]
        assert trace.betas == [7, Fraction(8, 49)]
        assert not trace.is_terminated
        assert trace.reconstructs()

    def test_rational_series_terminates(self):
        """Test that a two-letter alphabet stops at the third step"""
        trace = divide_iterate(VirtualAlphabet.of([1, 2]), EMPTY, 3, 10)
        assert trace.is_terminated
        assert len(trace.steps) == 2
        assert trace.terminated.k == 2
        with pytest.raises(DivisionTerminated) as excinfo:
            trace.series(3)
        assert excinfo.value.step == 2

    def test_series_indexing(self):
        """Test f_-1 and f_0 are the inputs"""
        trace = divide_iterate(VirtualAlphabet.of([1, 2, 3]), EMPTY, 2, 8)
        assert trace.series(-1) == sigma(VirtualAlphabet.of([1, 2, 3]), 8)
        assert trace.series(0) == Series.one(8)
        assert trace.series(1) == trace.steps[0].remainder
        with pytest.raises(IndexError):
            trace.series(3)

    def test_order_must_cover_the_steps(self):
        """Test order >= 2 * steps + 2"""
        with pytest.raises(InsufficientPrecision):
            divide_iterate(VirtualAlphabet.of([1, 2, 3]), EMPTY, 4, 9)

    def test_quotient_by_sigma_has_same_steps(self):
        """Test dividing sigma_z(A) by sigma_z(B) against sigma_z(A - B) by 1"""
        a, b = VirtualAlphabet.of([1, 2, 3, 5]), VirtualAlphabet.of([4])
        direct = divide_iterate(a, b, 3, 10)
        reduced = divide_series(sigma(a - b, 10), Series.one(10), 3)
        assert direct.alphas == reduced.alphas
        assert direct.betas == reduced.betas

    def test_orders_shrink_by_two(self):
        """Test the known order of each remainder"""
        trace = divide_iterate(VirtualAlphabet.of([1, 2, 3]), EMPTY, 3, 10)
        assert [step.remainder.order for step in trace.steps] == [8, 6, 4]
