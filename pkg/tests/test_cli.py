"""
Unit tests for the riordan-tp command line.
"""
import io
import json
import os
import sys
import tempfile
import unittest
from fractions import Fraction
from unittest.mock import patch

# Add the src directory to the path
sys.path.append(os.path.abspath(
    os.path.join(os.path.dirname(__file__), '..')))

from src.arrays import AlmostRiordanSpec, MatrixWindow, build_almost
from src.cli.commands import EXIT_EVALUATION, EXIT_OK, EXIT_USAGE, main
from src.sequences import TridiagonalProduction, azw_from_almost, production_window_from_tridiagonal
from src.sequences.recovery import recover_from_tridiagonal
from src.series import Series, format_rational
from src.tp import count_minors, det_J, tp_check
from src.verify import region_grid

LINEAR_D = ["--d", "1+3*t", "--g", "1+t", "--f", "2*t+t^2"]
NOT_TP = ["--d", "(1+t)^2", "--g", "1/(1-t)", "--f", "t"]


def run(argv):
    """Run the CLI and capture what it prints."""
    stdout, stderr = io.StringIO(), io.StringIO()
    with patch("sys.stdout", stdout), patch("sys.stderr", stderr):
        code = main(argv)
    return code, stdout.getvalue(), stderr.getvalue()


class TestCommands(unittest.TestCase):
    """Test cases for the subcommands."""

    def setUp(self):
        """Set up test fixtures."""
        self.folder = tempfile.TemporaryDirectory()

    def tearDown(self):
        """Remove temporary files."""
        self.folder.cleanup()

    def test_build_json_matches_library(self):
        """The build command is a thin adapter over build_almost."""
        code, out, _ = run(["build", *LINEAR_D, "--rows", "6", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        spec = AlmostRiordanSpec(Series([1, 3], 8), Series([1, 1], 8), Series([0, 2, 1], 8))
        self.assertEqual(MatrixWindow.from_json(out), build_almost(spec, 6, 6))

    def test_build_pretty_with_decimal(self):
        """Pretty output shows exact entries and an optional rounded block."""
        code, out, _ = run(["build-quasi", "--g", "1/(1-2*t)", "--f", "t/(1-2*t)", "--rows", "3", "--decimal", "2"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("~ rounded to 2 digits:", out)

    def test_build_csv(self):
        """CSV rows are fraction strings."""
        code, out, _ = run(["build", "--g", "1/(1-t)", "--f", "t/(1-t)", "--rows", "3", "--format", "csv"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip().splitlines(), ["1,0,0", "1,1,0", "1,2,1"])

    def test_azw_json(self):
        """A-sequence coefficients are printed as exact fractions."""
        code, out, _ = run(["azw", *LINEAR_D, "--order", "5", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data["A"], ["2", "1/2", "-1/8", "1/16", "-5/128", "7/256"])
        self.assertEqual(data["w0"], "3")

    def test_tp_check_from_file(self):
        """A saved window is screened and the witness printed."""
        path = os.path.join(self.folder.name, "window.json")
        code, _, _ = run(["build", *NOT_TP, "--rows", "5", "--out", path, "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        code, out, _ = run(["tp-check", "--matrix", path, "--max-order", "3"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("verdict: NotTP", out)
        self.assertIn("witness: rows [1, 2, 3] cols [0, 1, 2] value -1", out)

    def test_tp_check_budget(self):
        """An enumeration over budget is an evaluation error."""
        code, _, err = run(["tp-check", *NOT_TP, "--rows", "5", "--budget", "3"])
        self.assertEqual(code, EXIT_EVALUATION)
        self.assertIn("budget", err)

    def test_extract_production(self):
        """The production matrix is read back from a saved window."""
        path = os.path.join(self.folder.name, "window.csv")
        run(["build", *LINEAR_D, "--rows", "4", "--out", path, "--format", "csv"])
        code, out, _ = run(["extract-production", "--matrix", path, "--format", "csv"])
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.strip().splitlines()[0].startswith("3,1,0"))

    def test_recover_window(self):
        """AZW1(2, 0) regenerates its printed rows."""
        code, out, _ = run(["recover", "--family", "AZW1", "--alpha", "2", "--beta", "0", "--rows", "6",
                            "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["entries"][5], ["1", "23", "41", "26", "8", "1"])

    def test_det_t_find_negative(self):
        """The first negative Toeplitz determinant is reported."""
        code, out, _ = run(["det-t", "--a0", "2", "--a1", "3", "--a2", "5", "--find-negative"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("n = 2", out)

    def test_det_j(self):
        """det J_4 of AZW3(3, 2/3) is -1/3."""
        code, out, _ = run(["det-j", "--family", "AZW3", "--alpha", "3", "--beta", "2/3", "--n", "4"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("det(J_4) = -1/3", out)

    def test_thm34_json(self):
        """The closed-form and exact verdicts are reported side by side."""
        code, out, _ = run(["thm34", "--family", "AZW3", "--alpha", "3", "--beta", "2/3", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual((data["thm34"], data["exact"], data["one_root"]), ("TP", "NotTP", "Inapplicable"))

    def test_region(self):
        """Region membership prints in or out."""
        self.assertEqual(run(["region", "--family", "AZW1", "--alpha", "2", "--beta", "0"])[1].strip(), "in")
        self.assertEqual(run(["region", "--family", "AZW1", "--alpha", "1", "--beta", "0"])[1].strip(), "out")

    def test_region_out_of_domain(self):
        """alpha outside the domain is a usage error."""
        code, _, _ = run(["region", "--family", "AZW3", "--alpha", "2", "--beta", "0"])
        self.assertEqual(code, EXIT_USAGE)

    def test_region_grid_csv(self):
        """The grid is CSV with a header."""
        code, out, _ = run(["region-grid", "--family", "AZW2", "--alpha-min", "0", "--alpha-max", "1",
                            "--beta-min", "0", "--beta-max", "1/4", "--step", "1/4", "--format", "csv"])
        self.assertEqual(code, EXIT_OK)
        lines = out.strip().splitlines()
        self.assertEqual(lines[0], "alpha,beta,inside")
        self.assertIn("1,1/4,in", lines)
        self.assertIn("0,1/4,out", lines)

    def test_pf_check(self):
        """Quadratics get the exact test."""
        code, out, _ = run(["pf-check", "--p", "2*t+t^2"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("PF: True", out)

    def test_verify_paper(self):
        """Replaying selected examples succeeds."""
        code, out, _ = run(["verify-paper", "--id", "azw1-2-0", "--id", "ex-gf-not-tp"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("2/2 examples verified", out)

    def test_det_t_table(self):
        """The table compares the recurrence with the closed form from n = 1."""
        code, out, _ = run(["det-t", "--a0", "1", "--a1", "2", "--a2", "1", "--n", "4", "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        rows = json.loads(out)
        self.assertEqual([row["recurrence"] for row in rows], ["1", "2", "3", "4", "5"])
        self.assertIsNone(rows[0]["closed"])
        self.assertEqual([row["closed"] for row in rows[1:]], ["2", "3", "4", "5"])
        code, out, _ = run(["det-t", "--a0", "2", "--a1", "3", "--a2", "5", "--n", "3", "--format", "csv"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out.strip().splitlines(), ["n,recurrence,closed", "0,1,", "1,3,3", "2,-1,-1", "3,-33,-33"])
        code, out, _ = run(["det-t", "--a0", "1", "--a1", "2", "--a2", "1", "--n", "2"])
        self.assertIn("det(T_2) = 3  (closed form 3)", out)

    def test_recover_tall_window(self):
        """Windows taller than the default order raise the recovery order."""
        code, out, _ = run(["recover", "--family", "AZW1", "--alpha", "2", "--beta", "0", "--rows", "9",
                            "--format", "json"])
        self.assertEqual(code, EXIT_OK)
        expected = build_almost(recover_from_tridiagonal(TridiagonalProduction.family("AZW1", 2, 0), 1, 10), 9, 9)
        self.assertEqual(MatrixWindow.from_json(out), expected)

    def test_tp_check_reports_minor_count_first(self):
        """The number of minors to enumerate goes to stderr before the screen runs."""
        code, _, err = run(["tp-check", *NOT_TP, "--rows", "5", "--max-order", "3"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn(f"screening 5x5 window: {count_minors(5, 5, 3)} minors up to order 3", err)
        _, _, err = run(["tp-check", *NOT_TP, "--rows", "5", "--budget", "3"])
        self.assertLess(err.index("screening"), err.index("error:"))


class TestThinAdapter(unittest.TestCase):
    """Test cases checking that each command prints the library result unchanged."""

    def setUp(self):
        """Set up test fixtures."""
        self.azw1 = TridiagonalProduction.family("AZW1", 2, 0)
        self.not_tp = AlmostRiordanSpec(Series([1, 2, 1], 7), Series.geometric(1, 7), Series.t(7))

    def test_azw(self):
        """azw prints azw_from_almost."""
        _, out, _ = run(["azw", *LINEAR_D, "--order", "5", "--format", "json"])
        spec = AlmostRiordanSpec(Series([1, 3], 6), Series([1, 1], 6), Series([0, 2, 1], 6))
        self.assertEqual(json.loads(out), azw_from_almost(spec, 5).to_document().model_dump(mode="json"))

    def test_production(self):
        """production prints production_window_from_tridiagonal."""
        _, out, _ = run(["production", "--family", "AZW1", "--alpha", "2", "--beta", "0", "--rows", "5",
                         "--format", "json"])
        self.assertEqual(MatrixWindow.from_json(out), production_window_from_tridiagonal(self.azw1, 5, 5))

    def test_tp_check(self):
        """tp-check prints the tp_check report."""
        _, out, _ = run(["tp-check", *NOT_TP, "--rows", "5", "--format", "json"])
        report = tp_check(build_almost(self.not_tp, 5, 5), max_order=5)
        self.assertEqual(json.loads(out), json.loads(report.model_dump_json()))

    def test_det_j(self):
        """det-j prints det_J."""
        for n in range(1, 7):
            with self.subTest(n=n):
                _, out, _ = run(["det-j", "--family", "AZW1", "--alpha", "2", "--beta", "0", "--n", str(n),
                                 "--format", "json"])
                self.assertEqual(json.loads(out), {"n": n, "det": format_rational(det_J(self.azw1, n))})

    def test_region_grid(self):
        """region-grid prints region_grid."""
        _, out, _ = run(["region-grid", "--family", "AZW3", "--alpha-min", "2", "--alpha-max", "3",
                         "--beta-min", "0", "--beta-max", "1", "--step", "1/2", "--format", "json"])
        expected = [point.model_dump(mode="json") for point in region_grid("AZW3", 2, 3, 0, 1, Fraction(1, 2))]
        self.assertEqual(json.loads(out), expected)


class TestErrors(unittest.TestCase):
    """Test cases for exit codes and error output."""

    def test_syntax_error_json(self):
        """Parse errors exit 2 and carry their offset under --format json."""
        code, out, _ = run(["build", "--d", "1", "--g", "1 + foo", "--f", "t", "--rows", "3", "--format", "json"])
        self.assertEqual(code, EXIT_USAGE)
        error = json.loads(out)
        self.assertEqual(error["error"], "GFSyntaxError")
        self.assertEqual(error["offset"], 4)

    def test_evaluation_error(self):
        """Uncancelled poles exit 3."""
        code, _, err = run(["build", "--d", "1/t", "--g", "1", "--f", "t", "--rows", "3"])
        self.assertEqual(code, EXIT_EVALUATION)
        self.assertTrue(err.startswith("error:"))

    def test_invalid_spec(self):
        """d(0) = 0 cannot be built."""
        code, _, _ = run(["build", "--d", "t", "--g", "1", "--f", "t", "--rows", "3"])
        self.assertEqual(code, EXIT_EVALUATION)

    def test_usage_errors(self):
        """Unknown commands, missing options and bad rationals exit 2."""
        self.assertEqual(run(["no-such-command"])[0], EXIT_USAGE)
        self.assertEqual(run(["verify-paper"])[0], EXIT_USAGE)
        self.assertEqual(run(["det-t", "--a0", "half", "--a1", "1", "--a2", "1"])[0], EXIT_USAGE)
        self.assertEqual(run(["azw", "--order", "3", "--format", "csv", *LINEAR_D])[0], EXIT_USAGE)

    def test_help_exits_cleanly(self):
        """--help is not an error."""
        self.assertEqual(run(["--help"])[0], EXIT_OK)


if __name__ == "__main__":
    unittest.main()
