"""
Unit tests for the feasible regions of the tridiagonal families.
"""
import os
import sys
import unittest
from fractions import Fraction

# Add the src directory to the path
sys.path.append(os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))

from src.errors import InvalidArgument, OutOfDomain
from src.sequences import TridiagonalProduction, production_window_from_tridiagonal
from src.tp import Verdict, exact_tridiagonal_check, jacobi_tp_check
from src.verify import region_check, region_from_theorem, region_grid

F = Fraction


class TestRegions(unittest.TestCase):
    """Test cases for region membership, comparison and grids."""

    def test_points_inside(self):
        """Worked-example parameters lie in their regions."""
        inside = [
            ("AZW1", 2, 0), ("AZW1", 4, F(1, 3)),
            ("AZW2", 1, F(1, 4)), ("AZW2", F(1, 2), F(1, 16)),
            ("AZW3", 3, 0), ("AZW3", 4, F(1, 3)),
            ("AZW4", 3, 0), ("AZW4", F(5, 2), F(1, 24)),
        ]
        for family, alpha, beta in inside:
            with self.subTest(family=family, alpha=alpha, beta=beta):
                self.assertTrue(region_check(family, alpha, beta))

    def test_points_outside(self):
        """Boundary violations and negative beta are outside."""
        outside = [("AZW1", 1, 0), ("AZW2", 1, F(1, 2)), ("AZW3", 3, 1), ("AZW4", 3, F(1, 100)), ("AZW1", 4, -1)]
        for family, alpha, beta in outside:
            with self.subTest(family=family, alpha=alpha, beta=beta):
                self.assertFalse(region_check(family, alpha, beta))

    def test_domain_errors(self):
        """alpha outside the family's domain is an error, not a point outside."""
        for family, alpha in (("AZW3", 2), ("AZW4", F(7, 2)), ("AZW4", 2), ("AZW1", -1)):
            with self.subTest(family=family, alpha=alpha):
                with self.assertRaises(OutOfDomain):
                    region_check(family, alpha, 0)
        with self.assertRaises(InvalidArgument):
            region_check("AZW5", 3, 0)

    def test_region_comparison_at_counterexample(self):
        """At AZW3(3, 2/3) the printed region and the two-root theorem say TP, the exact criterion does not."""
        comparison = region_from_theorem("azw3", 3, F(2, 3))
        self.assertTrue(comparison.printed)
        self.assertEqual(comparison.theorem, Verdict.TP)
        self.assertEqual(comparison.exact, Verdict.NOT_TP)

    def test_region_comparison_uses_one_root_theorem(self):
        """Families with a1^2 = 4 a0 a2 are compared with the one-root conditions."""
        comparison = region_from_theorem("AZW1", 2, 0)
        self.assertEqual(comparison.theorem, Verdict.TP)
        self.assertEqual(comparison.exact, Verdict.TP)

    def test_two_root_theorem_is_wider_for_azw4(self):
        """AZW4(3, 1) is outside the printed region but meets the two-root conditions."""
        comparison = region_from_theorem("AZW4", 3, 1)
        self.assertFalse(comparison.printed)
        self.assertEqual(comparison.theorem, Verdict.TP)

    def test_grid(self):
        """Grid points skip alpha outside the domain."""
        points = region_grid("AZW3", 2, 3, 0, 1, F(1, 2))
        self.assertEqual([(p.alpha, p.beta) for p in points],
                         [(F(5, 2), 0), (F(5, 2), F(1, 2)), (F(5, 2), 1), (3, 0), (3, F(1, 2)), (3, 1)])
        self.assertEqual([p.inside for p in points], [True, True, False, True, True, False])
        with self.assertRaises(InvalidArgument):
            region_grid("AZW3", 2, 3, 0, 1, 0)

    def test_exact_verdicts_agree_with_windows_on_grid(self):
        """On a 20x20 grid per family, exact TP always passes the 12x12 window screen."""
        alphas = {
            "AZW1": [F(k, 4) for k in range(20)],
            "AZW2": [F(k, 4) for k in range(20)],
            "AZW3": [2 + F(k + 1, 10) for k in range(20)],
            "AZW4": [2 + F(k + 1, 20) for k in range(20)],
        }
        betas = [F(k, 19) for k in range(20)]
        for family, values in alphas.items():
            for alpha in values:
                for beta in betas:
                    p = TridiagonalProduction.family(family, alpha, beta)
                    if exact_tridiagonal_check(p) != Verdict.TP:
                        continue
                    report = jacobi_tp_check(production_window_from_tridiagonal(p, 12))
                    self.assertTrue(report.is_tp, f"{family}({alpha}, {beta})")


if __name__ == "__main__":
    unittest.main()
