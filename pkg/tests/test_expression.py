"""
Unit tests for the generating-function expression grammar.
"""
import os
import sys
import unittest
from fractions import Fraction

# Add the src directory to the path
sys.path.append(os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))

from src.cli.expression import BinOp, Neg, Num, Pow, Sqrt, Symbol, evaluate_gf, parse_gf, series_from_text, to_text
from src.errors import DivByNonUnit, GFSyntaxError, NonSquareConstantTerm, UncanceledPole

T = Symbol()


class TestParsing(unittest.TestCase):
    """Test cases for parse_gf and to_text."""

    def test_precedence(self):
        """^ binds tighter than unary minus, which binds tighter than * and +."""
        self.assertEqual(parse_gf("1+2*t^2"), BinOp("+", Num(1), BinOp("*", Num(2), Pow(T, 2))))
        self.assertEqual(parse_gf("-t^2"), Neg(Pow(T, 2)))
        self.assertEqual(parse_gf("1/(1-t)"), BinOp("/", Num(1), BinOp("-", Num(1), T)))

    def test_left_associativity(self):
        """Chains of - and / group to the left."""
        self.assertEqual(parse_gf("1-t-t"), BinOp("-", BinOp("-", Num(1), T), T))
        self.assertEqual(parse_gf("3/4*t"), BinOp("*", BinOp("/", Num(3), Num(4)), T))

    def test_sqrt_and_whitespace(self):
        """sqrt(...) is the only function; spaces are ignored."""
        self.assertEqual(parse_gf(" sqrt( 1 - 4 * t ) "), Sqrt(BinOp("-", Num(1), BinOp("*", Num(4), T))))

    def test_print_parse_round_trip(self):
        """Printing an AST and parsing it back gives the same AST."""
        texts = [
            "1/(1-t)",
            "(1-2*t-sqrt(1-4*t))/(2*t)",
            "-t^2",
            "(-t)^2",
            "--t",
            "1-(t-t)",
            "(t^2)^3",
            "3*(7-4*t+sqrt(1-8*t))/(24-48*t+16*t^2+(3*t-3)*(1-4*t-sqrt(1-8*t)))",
        ]
        for text in texts:
            with self.subTest(text=text):
                node = parse_gf(text)
                self.assertEqual(parse_gf(to_text(node)), node)

    def test_unknown_name_reports_offset(self):
        """Names other than t and sqrt are refused with their byte offset."""
        with self.assertRaises(GFSyntaxError) as context:
            parse_gf("1 + foo")
        self.assertEqual(context.exception.offset, 4)
        self.assertIn("foo", context.exception.message)

    def test_composition_rejected(self):
        """g(f(t)) cannot be written."""
        with self.assertRaises(GFSyntaxError) as context:
            parse_gf("g(t)")
        self.assertIn("composition", context.exception.message)

    def test_malformed_expressions(self):
        """Dangling operators and juxtaposition are syntax errors."""
        for text in ("1+", "2t", "t(2)", "(1-t", "", "t^x"):
            with self.subTest(text=text):
                with self.assertRaises(GFSyntaxError) as context:
                    parse_gf(text)
                self.assertIsInstance(context.exception.offset, int)


class TestEvaluation(unittest.TestCase):
    """Test cases for expanding expressions into series."""

    def test_rational_functions(self):
        """Products, quotients and powers expand exactly."""
        self.assertEqual(series_from_text("(1+t)^2", 4).coeffs, (1, 2, 1, 0, 0))
        self.assertEqual(series_from_text("t/(1-t)", 4).coeffs, (0, 1, 1, 1, 1))
        self.assertEqual(series_from_text("3/4*t", 2).coeffs, (0, Fraction(3, 4), 0))

    def test_catalan_shift(self):
        """(1 - 2t - sqrt(1-4t))/(2t) = t + 2t^2 + 5t^3 + 14t^4 + 42t^5."""
        self.assertEqual(series_from_text("(1-2*t-sqrt(1-4*t))/(2*t)", 5).coeffs, (0, 1, 2, 5, 14, 42))

    def test_cancelled_powers_keep_requested_order(self):
        """Dividing by t costs working precision but not result order."""
        series = evaluate_gf(parse_gf("(sqrt(1+t)-1)/t"), 6)
        self.assertEqual(series.order, 6)
        self.assertEqual(series.coeff(0), Fraction(1, 2))

    def test_low_orders_with_cancelled_divisors(self):
        """A divisor that vanishes at the requested order is expanded further."""
        self.assertEqual(series_from_text("(1-2*t-sqrt(1-4*t))/(2*t)", 0).coeffs, (0,))
        self.assertEqual(series_from_text("(1-2*t-sqrt(1-4*t))/(2*t)", 1).coeffs, (0, 1))
        self.assertEqual(series_from_text("(t^3+t^4)/t^3", 0).coeffs, (1,))

    def test_even_valuation_square_root(self):
        """sqrt(t^2 + t^3)/t = sqrt(1 + t)."""
        self.assertEqual(series_from_text("sqrt(t^2+t^3)/t", 2).coeffs, (1, Fraction(1, 2), Fraction(-1, 8)))

    def test_evaluation_errors(self):
        """Poles, zero divisors and irrational square roots are evaluation errors."""
        with self.assertRaises(UncanceledPole):
            series_from_text("1/t", 4)
        with self.assertRaises(DivByNonUnit):
            series_from_text("1/(t-t)", 4)
        with self.assertRaises(DivByNonUnit):
            series_from_text("1/0", 4)
        with self.assertRaises(NonSquareConstantTerm):
            series_from_text("sqrt(2+t)", 4)
        with self.assertRaises(NonSquareConstantTerm):
            series_from_text("sqrt(t)", 4)


if __name__ == "__main__":
    unittest.main()
