import unittest
import tempfile
import os
import json

from models import CheckResult, VerificationReport, load_report, save_report


class TestCheckResult(unittest.TestCase):
    """Test cases for the CheckResult dataclass."""

    def test_check_creation(self):
        """Test creating a check with all attributes."""
        check = CheckResult(
            name="5-ary addition closure",
            passed=False,
            samples=101,
            witness="addition of [3, 3] = 6 is not in [3]_4",
            skipped=None
        )

        self.assertEqual(check.name, "5-ary addition closure")
        self.assertFalse(check.passed)
        self.assertEqual(check.samples, 101)
        self.assertIn("not in", check.witness)
        self.assertIsNone(check.skipped)

    def test_check_to_dict(self):
        """Test converting check to dictionary."""
        check = CheckResult(name="distributivity", samples=10)

        check_dict = check.to_dict()
        self.assertIsInstance(check_dict, dict)
        self.assertEqual(check_dict['name'], "distributivity")
        self.assertTrue(check_dict['passed'])
        self.assertIsNone(check_dict['witness'])

    def test_check_from_dict(self):
        """Test creating check from dictionary."""
        check_dict = {
            'name': "querelement law",
            'passed': True,
            'samples': 0,
            'witness': None,
            'skipped': "addition not closed"
        }

        check = CheckResult.from_dict(check_dict)
        self.assertEqual(check.name, "querelement law")
        self.assertEqual(check.skipped, "addition not closed")


class TestVerificationReport(unittest.TestCase):
    """Test cases for the VerificationReport dataclass."""

    def make_report(self, *passed):
        checks = [CheckResult(name=f"check {i}", passed=flag, samples=1) for i, flag in enumerate(passed)]
        return VerificationReport(p=2, precision=8, a="2:8:1,1,0,0,0,0,0,0", b="2:8:0,0,1,0,0,0,0,0",
                                  m=5, n=3, checks=checks)

    def test_passed(self):
        """Test the overall verdict and first failure."""
        self.assertTrue(self.make_report(True, True).passed)
        self.assertIsNone(self.make_report(True, True).first_failure)
        report = self.make_report(True, False, False)
        self.assertFalse(report.passed)
        self.assertEqual(report.first_failure.name, "check 1")

    def test_empty_report_passes(self):
        """Test a report without checks counts as passed."""
        self.assertTrue(VerificationReport().passed)

    def test_report_to_dict(self):
        """Test the verdict is included in the dictionary."""
        report_dict = self.make_report(True, False).to_dict()
        self.assertFalse(report_dict['passed'])
        self.assertEqual(len(report_dict['checks']), 2)
        self.assertEqual(report_dict['m'], 5)

    def test_report_from_dict(self):
        """Test the dictionary form reads back to an equal report."""
        report = self.make_report(True, False)
        self.assertEqual(VerificationReport.from_dict(report.to_dict()), report)


class TestReportFiles(unittest.TestCase):
    """Test cases for saving and loading reports."""

    def setUp(self):
        """Set up test fixtures."""
        self.temp_file = tempfile.NamedTemporaryFile(delete=False, suffix='.json')
        self.temp_file.close()
        self.report_path = self.temp_file.name

    def tearDown(self):
        """Tear down test fixtures."""
        if os.path.exists(self.report_path):
            os.unlink(self.report_path)

    def test_save_and_load(self):
        """Test a report survives a trip through a JSON file."""
        report = VerificationReport(
            p=3, precision=6, a="3:6:0,0,0,0,0,0", b="3:6:1,0,0,0,0,0", m=2, n=2, degenerate=True,
            checks=[CheckResult(name="2-ary addition closure", samples=21)]
        )
        save_report(report, self.report_path)

        with open(self.report_path, 'r', encoding='utf-8') as f:
            data = json.load(f)
        self.assertTrue(data['passed'])
        self.assertTrue(data['degenerate'])

        self.assertEqual(load_report(self.report_path), report)


if __name__ == '__main__':
    unittest.main()
