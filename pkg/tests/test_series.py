"""
Unit tests for truncated power series.
"""
import os
import random
import sys
import unittest
from fractions import Fraction

import sympy

# Add the src directory to the path
sys.path.append(os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))

from src.errors import (
    DivByNonUnit,
    InnerNotDelta,
    InsufficientOrder,
    InvalidArgument,
    NonSquareConstantTerm,
    NotInvertible,
    UncanceledPole,
)
from src.series import Series, compose, reversion, shift_t, sqrt


def _sympy_coeffs(expr, x, order):
    """Taylor coefficients of a sympy expression as Fractions."""
    poly = sympy.series(expr, x, 0, order + 1).removeO()
    return [Fraction(int(c.p), int(c.q)) for c in (sympy.Rational(poly.coeff(x, k)) for k in range(order + 1))]


class TestSeries(unittest.TestCase):
    """Test cases for Series arithmetic."""

    def setUp(self):
        """Set up test fixtures."""
        self.order = 6
        self.t = Series.t(self.order)
        self.one_minus_t = Series([1, -1], self.order)

    def test_constructor_pads_and_truncates(self):
        """Coefficients are padded with zeros and cut at the order."""
        self.assertEqual(Series([1, 2], 3).coeffs, (1, 2, 0, 0))
        self.assertEqual(Series([1, 2, 3, 4], 1).coeffs, (1, 2))
        self.assertEqual(Series(["1/2", 3]).order, 1)

    def test_empty_series_rejected(self):
        """A series needs at least one coefficient."""
        with self.assertRaises(InvalidArgument):
            Series([])

    def test_geometric(self):
        """1/(1 - 2t) has coefficients 2^k."""
        self.assertEqual(Series.geometric(2, 4).coeffs, (1, 2, 4, 8, 16))

    def test_product_and_quotient(self):
        """(1+t)(1-t) = 1 - t^2 and 1/(1-t) = 1 + t + t^2 + ..."""
        product = Series([1, 1], 3) * Series([1, -1], 3)
        self.assertEqual(product.coeffs, (1, 0, -1, 0))
        self.assertEqual((1 / self.one_minus_t).coeffs, (1,) * (self.order + 1))

    def test_ring_axioms(self):
        """Addition and multiplication are associative, commutative and distributive."""
        rng = random.Random(3)

        def draw():
            return Series([rng.choice([rng.randint(-5, 5), Fraction(rng.randint(-5, 5), rng.randint(1, 4))])
                           for _ in range(self.order + 1)])

        for _ in range(50):
            a, b, c = draw(), draw(), draw()
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a + b, b + a)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * 1, a)
            self.assertEqual(a - a, Series.constant(0, self.order))

    def test_binary_result_order_is_minimum(self):
        """Sums and products are known to the smaller order."""
        self.assertEqual((Series([1], 2) + Series([1], 5)).order, 2)
        self.assertEqual((Series([1], 7) * Series([1], 4)).order, 4)

    def test_division_by_non_unit(self):
        """Dividing by a series with zero constant term fails."""
        with self.assertRaises(DivByNonUnit):
            Series([1], 3) / self.t
        with self.assertRaises(DivByNonUnit):
            self.t / 0

    def test_scalar_operators(self):
        """Scalars are lifted to constant series."""
        self.assertEqual((1 - Series([0, 1], 3)).coeffs, (1, -1, 0, 0))
        self.assertEqual((Fraction(1, 2) * Series([2, 4], 1)).coeffs, (1, 2))
        self.assertEqual((2 / Series([1, -1], 3)).coeffs, (2, 2, 2, 2))

    def test_power(self):
        """(1+t)^3 is 1 + 3t + 3t^2 + t^3."""
        self.assertEqual((Series([1, 1], 4) ** 3).coeffs, (1, 3, 3, 1, 0))
        self.assertEqual((Series([1, 1], 4) ** 0).coeffs, (1, 0, 0, 0, 0))
        with self.assertRaises(InvalidArgument):
            Series([1, 1], 4) ** -1

    def test_compose(self):
        """Substituting 2t into 1/(1-t) gives 1/(1-2t)."""
        outer = 1 / self.one_minus_t
        self.assertEqual(compose(outer, self.t * 2), Series.geometric(2, self.order))

    def test_compose_order_is_minimum(self):
        """Composition is known to the smaller of the two orders."""
        self.assertEqual(compose(Series([1, 1], 8), Series([0, 1], 3)).order, 3)

    def test_compose_rejects_constant_inner(self):
        """The inner series must vanish at 0."""
        with self.assertRaises(InnerNotDelta):
            compose(self.one_minus_t, Series([1, 1], 3))

    def test_reversion_of_t_over_one_minus_t(self):
        """The inverse of t/(1-t) is t/(1+t)."""
        f = Series([0, 1, 1, 1, 1, 1])
        self.assertEqual(reversion(f).coeffs, (0, 1, -1, 1, -1, 1))

    def test_reversion_gives_catalan(self):
        """The inverse of t - t^2 is (1 - sqrt(1-4t))/2."""
        f = Series([0, 1, -1], 5)
        self.assertEqual(reversion(f).coeffs, (0, 1, 1, 2, 5, 14))

    def test_reversion_is_two_sided_inverse(self):
        """f(fbar) = fbar(f) = t for random series."""
        rng = random.Random(7)
        for _ in range(25):
            coeffs = [0, rng.choice([1, 2, -3, Fraction(1, 2)])] + [rng.randint(-4, 4) for _ in range(5)]
            f = Series(coeffs)
            fbar = reversion(f)
            self.assertEqual(compose(f, fbar), Series.t(f.order))
            self.assertEqual(compose(fbar, f), Series.t(f.order))

    def test_reversion_needs_delta_series(self):
        """No inverse when f(0) != 0 or f'(0) = 0."""
        with self.assertRaises(NotInvertible):
            reversion(Series([1, 1], 3))
        with self.assertRaises(NotInvertible):
            reversion(Series([0, 0, 1], 3))

    def test_sqrt_of_one_plus_t(self):
        """sqrt(1+t) = 1 + t/2 - t^2/8 + t^3/16 - 5t^4/128 + 7t^5/256."""
        root = sqrt(Series([1, 1], 5))
        expected = (1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16), Fraction(-5, 128), Fraction(7, 256))
        self.assertEqual(root.coeffs, expected)

    def test_sqrt_of_perfect_square(self):
        """sqrt(4 + 4t + t^2) = 2 + t."""
        self.assertEqual(sqrt(Series([4, 4, 1], 4)).coeffs, (2, 1, 0, 0, 0))

    def test_sqrt_matches_sympy(self):
        """sqrt(1 - 4t) agrees with a symbolic expansion."""
        x = sympy.Symbol("x")
        expected = _sympy_coeffs(sympy.sqrt(1 - 4 * x), x, 8)
        self.assertEqual(list(sqrt(Series([1, -4], 8)).coeffs), expected)

    def test_sqrt_rejects_bad_constant_term(self):
        """The leading coefficient must be a rational square at even valuation."""
        with self.assertRaises(NonSquareConstantTerm):
            sqrt(Series([2, 1], 3))
        with self.assertRaises(NonSquareConstantTerm):
            sqrt(Series([0, 1], 3))
        with self.assertRaises(NonSquareConstantTerm):
            sqrt(Series([0, 0, 0], 2))

    def test_sqrt_of_even_valuation(self):
        """sqrt(t^2 + t^3) = t sqrt(1 + t), known to one order less."""
        root = sqrt(Series([0, 0, 1, 1], 5))
        self.assertEqual(root.order, 4)
        self.assertEqual(root.coeffs, (0, 1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)))
        self.assertEqual(root * root, Series([0, 0, 1, 1], 4))
        self.assertEqual(sqrt(Series([0, 0, 0, 0, 9], 6)).coeffs, (0, 0, 3, 0, 0))

    def test_divide_t(self):
        """Division by t^k drops k orders."""
        quotient = Series([0, 0, 3, 4], 3).divide_t(2)
        self.assertEqual(quotient.coeffs, (3, 4))
        self.assertEqual(quotient.order, 1)

    def test_divide_t_with_pole(self):
        """A nonzero low coefficient cannot be divided away."""
        with self.assertRaises(UncanceledPole):
            Series([1, 2], 3).divide_t(1)

    def test_shift_t(self):
        """Multiplying by t keeps the order."""
        self.assertEqual(shift_t(Series([1, 2, 3]), 1).coeffs, (0, 1, 2))

    def test_valuation_and_degree(self):
        """First and last nonzero coefficients."""
        s = Series([0, 0, 5, 0], 3)
        self.assertEqual(s.valuation(), 2)
        self.assertEqual(s.degree(), 2)
        self.assertIsNone(Series([0], 4).valuation())
        self.assertTrue(Series([0], 4).is_zero())

    def test_coefficient_beyond_order(self):
        """Reading past the truncation order is an error."""
        with self.assertRaises(InsufficientOrder):
            Series([1, 2], 2).coeff(3)

    def test_truncate_cannot_extend(self):
        """A series cannot be truncated to a higher order."""
        with self.assertRaises(InsufficientOrder):
            Series([1, 2], 2).truncate(4)

    def test_derivative_at_zero(self):
        """f'(0) is the coefficient of t."""
        self.assertEqual(Series([0, Fraction(3, 2), 7]).derivative_at_zero(), Fraction(3, 2))

    def test_str(self):
        """Rendering lists nonzero terms and the truncation."""
        s = Series([1, 2, 0, Fraction(-1, 8)], 5)
        self.assertEqual(str(s), "1 + 2*t - 1/8*t^3 + O(t^6)")
        self.assertEqual(str(Series([0, -1], 1)), "-t + O(t^2)")
        self.assertEqual(str(Series([0], 2)), "0 + O(t^3)")

    def test_equality_includes_order(self):
        """Series known to different orders are different values."""
        self.assertNotEqual(Series([1], 2), Series([1], 3))
        self.assertEqual(Series([1, 0], 3), Series([1], 3))


if __name__ == "__main__":
    unittest.main()
