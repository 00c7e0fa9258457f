"""
Integration tests for the command line front end.
"""
import csv
import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

from cli import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, main
from models import load_report


def run_cli(*argv):
    """Run the CLI and return (exit code, stdout text)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


class TestShapeTableCommand(unittest.TestCase):
    """Test cases for shape-table."""

    def test_csv_table(self):
        """Test the 9x10 table as csv, including the flagged cell."""
        code, output = run_cli("shape-table", "--a-max", "9", "--b-max", "10", "--format", "csv")
        self.assertEqual(code, EXIT_OK)
        rows = list(csv.DictReader(io.StringIO(output)))
        self.assertEqual(len(rows), 45)
        cells = {(int(row["a"]), int(row["b"])): row for row in rows}
        self.assertEqual([cells[(3, 7)][key] for key in "mnIJ"], ["8", "7", "3", "312"])
        self.assertEqual([cells[(8, 10)][key] for key in "mnIJ"], ["6", "5", "4", "3276"])
        self.assertEqual(cells[(2, 4)]["m"], "")
        self.assertEqual(cells[(5, 7)]["I"], "5")
        self.assertEqual(cells[(5, 7)]["note"], "printed I=11")

    def test_single_cell(self):
        """Test the smallest table as json."""
        code, output = run_cli("shape-table", "--a-max", "1", "--b-max", "2", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(output)
        self.assertEqual(data["cells"], [
            {"a": 1, "b": 2, "shape": {"m": 3, "n": 2, "I": 1, "J": 0}, "misprint": None}
        ])

    def test_csv_and_json_agree(self):
        """Test both machine formats encode the same cells."""
        _, csv_output = run_cli("shape-table", "--a-max", "6", "--b-max", "9", "--format", "csv")
        _, json_output = run_cli("shape-table", "--a-max", "6", "--b-max", "9", "--format", "json")
        rows = list(csv.DictReader(io.StringIO(csv_output)))
        cells = json.loads(json_output)["cells"]
        self.assertEqual(len(rows), len(cells))
        for row, cell in zip(rows, cells):
            self.assertEqual((int(row["a"]), int(row["b"])), (cell["a"], cell["b"]))
            if cell["shape"] is None:
                self.assertEqual(row["m"], "")
            else:
                self.assertEqual({key: int(row[key]) for key in "mnIJ"}, cell["shape"])

    def test_deterministic(self):
        """Test identical invocations give identical output."""
        argv = ("shape-table", "--a-max", "9", "--b-max", "10", "--format", "json")
        self.assertEqual(run_cli(*argv), run_cli(*argv))

    def test_text_table(self):
        """Test the text grid marks empty and misprinted cells."""
        code, output = run_cli("shape-table")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("5,3,3,6", output)
        self.assertIn("—", output)
        self.assertIn("8,7,5,11160*", output)
        self.assertIn("printed I=11", output)

    def test_bad_range(self):
        """Test a_max = 0 is a usage error."""
        code, _ = run_cli("shape-table", "--a-max", "0", "--b-max", "10")
        self.assertEqual(code, EXIT_USAGE)


class TestClassInfoCommand(unittest.TestCase):
    """Test cases for class-info."""

    def test_worked_example(self):
        """Test [3]_4 is a zeroless (5,3)-ring with identity -1."""
        code, output = run_cli("class-info", "3", "4", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        info = json.loads(output)
        self.assertEqual(info["shape"], {"m": 5, "n": 3, "I": 3, "J": 6})
        self.assertEqual(info["identity"], -1)
        self.assertTrue(info["zeroless"])
        self.assertEqual(info["closed_m"], [5, 9, 13, 17])
        self.assertEqual(info["querelement_examples"]["7"], -21)

    def test_integers(self):
        """Test [0]_1 is reported as the binary ring of integers."""
        code, output = run_cli("class-info", "0", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("Z_(2,2)(0,1)", output)
        self.assertIn("zeroless: false", output)

    def test_empty_cell(self):
        """Test [2]_4 has no closed multiplication."""
        code, output = run_cli("class-info", "2", "4", "--format", "csv")
        self.assertEqual(code, EXIT_OK)
        pairs = dict(csv.reader(io.StringIO(output)))
        self.assertEqual(pairs["note"], "no n exists <= 5")
        self.assertEqual(pairs["shape"], "")

    def test_invalid_class(self):
        """Test a >= b is a usage error."""
        self.assertEqual(run_cli("class-info", "4", "4")[0], EXIT_USAGE)


class TestPadicCommand(unittest.TestCase):
    """Test cases for padic."""

    def test_product(self):
        """Test 7*6 in Z_5 mod 5^3."""
        code, output = run_cli("padic", "7*6", "--p", "5", "--n", "3", "--format", "json")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(output)
        self.assertEqual(data["digits"], [2, 3, 1])
        self.assertEqual(data["value"], 42)
        self.assertEqual(data["partial_sums"], [2, 17, 42])

    def test_zero_and_minus_one(self):
        """Test the zero sentinel and the expansion of -1."""
        code, output = run_cli("padic", "0", "--p", "2", "--n", "4")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("valuation: ≥4", output)
        code, output = run_cli("padic", "-1", "--p", "2", "--N", "4")
        self.assertIn(".1111 (2-adic)", output)

    def test_errors(self):
        """Test parse errors and non-prime p exit with 2."""
        self.assertEqual(run_cli("padic", "2**3", "--p", "5")[0], EXIT_USAGE)
        self.assertEqual(run_cli("padic", "7", "--p", "6")[0], EXIT_USAGE)
        self.assertEqual(run_cli("padic", "7")[0], EXIT_USAGE)


class TestLiftCommand(unittest.TestCase):
    """Test cases for lift."""

    def test_lift_json(self):
        """Test the (5,3) lift over Z_2 with v = 2."""
        code, output = run_cli("lift", "--p", "2", "--m", "5", "--n", "3", "--v", "2", "--N", "4",
                               "--format", "json")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(output), {
            "p": 2, "m": 5, "n": 3, "v": 2, "modulus": 4, "admissible": [0, 1, 3], "free_from": 2
        })

    def test_lift_text(self):
        """Test the text rendering of the levels."""
        code, output = run_cli("lift", "--p", "2", "--m", "2", "--n", "2", "--v", "1", "--N", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("admissible a mod 2: {0}", output)

    def test_lift_errors(self):
        """Test non-prime p and bad v exit with 2."""
        self.assertEqual(run_cli("lift", "--p", "4", "--m", "5", "--n", "3", "--v", "2")[0], EXIT_USAGE)
        self.assertEqual(run_cli("lift", "--p", "2", "--m", "5", "--n", "3", "--v", "0")[0], EXIT_USAGE)


class TestVerifyCommand(unittest.TestCase):
    """Test cases for verify."""

    def test_verified(self):
        """Test [3]_4 over Z_2 with (5,3)."""
        code, output = run_cli("verify", "--p", "2", "--a", "3", "--b", "4", "--m", "5", "--n", "3",
                               "--samples", "30", "--seed", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(output.rstrip().endswith("verified"))

    def test_refuted(self):
        """Test (2,2) is refuted with a witness."""
        code, output = run_cli("verify", "--p", "2", "--a", "3", "--b", "4", "--m", "2", "--n", "2",
                               "--samples", "10", "--seed", "1")
        self.assertEqual(code, EXIT_REFUTED)
        self.assertIn("FAIL 2-ary addition closure", output)
        self.assertTrue(output.rstrip().endswith("refuted"))

    def test_zero_modulus(self):
        """Test b = 0 truncation is an input error."""
        code, _ = run_cli("verify", "--p", "2", "--a", "3", "--b", "0", "--m", "5", "--n", "3")
        self.assertEqual(code, EXIT_USAGE)
        code, _ = run_cli("verify", "--p", "2", "--a", "3", "--b", "2:4:0,0,0,0", "--m", "5", "--n", "3",
                          "--N", "4")
        self.assertEqual(code, EXIT_USAGE)

    def test_precision_from_digit_strings(self):
        """Test digit strings set N when --N is not given."""
        code, output = run_cli("verify", "--p", "2", "--a", "2:4:1,1,0,0", "--b", "2:4:0,0,1,0",
                               "--m", "5", "--n", "3", "--samples", "20", "--seed", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("class [3]_4 in Z_2 (N=4)", output)
        code, output = run_cli("verify", "--p", "2", "--a", "2:4:1,1,0,0", "--b", "4",
                               "--m", "5", "--n", "3", "--samples", "20", "--seed", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("(N=4)", output)

    def test_digit_strings_disagree(self):
        """Test digit strings with different N are an input error."""
        code, _ = run_cli("verify", "--p", "2", "--a", "2:4:1,1,0,0", "--b", "2:5:0,0,1,0,0",
                          "--m", "5", "--n", "3")
        self.assertEqual(code, EXIT_USAGE)

    def test_non_integer_setting(self):
        """Test a config value that is not an integer exits with 2."""
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, "polyadic_config.json")
            with open(path, 'w', encoding='utf-8') as f:
                json.dump({"samples": "many"}, f)
            code, _ = run_cli("--config", path, "verify", "--p", "2", "--a", "3", "--b", "4",
                              "--m", "5", "--n", "3")
            self.assertEqual(code, EXIT_USAGE)

    def test_json_and_report_file(self):
        """Test the json output matches the report written to disk."""
        with tempfile.TemporaryDirectory() as temp_dir:
            path = os.path.join(temp_dir, "report.json")
            code, output = run_cli("verify", "--p", "3", "--a", "2", "--b", "3", "--m", "4", "--n", "3",
                                   "--samples", "20", "--seed", "4", "--format", "json", "--report", path)
            self.assertEqual(code, EXIT_OK)
            data = json.loads(output)
            self.assertTrue(data["passed"])
            self.assertEqual(load_report(path).to_dict(), data)

    def test_seed_reproducible(self):
        """Test a fixed seed gives byte-identical json."""
        argv = ("verify", "--p", "2", "--a", "3", "--b", "4", "--m", "5", "--n", "3",
                "--samples", "10", "--seed", "9", "--format", "json")
        self.assertEqual(run_cli(*argv), run_cli(*argv))


if __name__ == '__main__':
    unittest.main()
