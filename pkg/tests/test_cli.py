import unittest
from unittest.mock import patch
import io
import json
import sys
import os
import tempfile

# Add parent directory to path to import modules
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import setopt
from problem_io import parse_problem

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")

FIRST_GRAPH = """\
graph
1 0 0 0 0
0 1 0 0 0
0 -1 0 1 0
0 1 1 0 0
1 2 1 -1 0
"""


def fixture(name: str) -> str:
    return os.path.join(FIXTURES, name)


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        """Run every command with a clean environment and captured streams."""
        self.env_patcher = patch.dict(os.environ, {}, clear=True)
        self.env_patcher.start()
        self.stdout_patcher = patch('sys.stdout', new_callable=io.StringIO)
        self.stderr_patcher = patch('sys.stderr', new_callable=io.StringIO)
        self.stdout = self.stdout_patcher.start()
        self.stderr = self.stderr_patcher.start()

    def tearDown(self):
        self.stdout_patcher.stop()
        self.stderr_patcher.stop()
        self.env_patcher.stop()

    def run_cli(self, *argv, stdin=None):
        if stdin is None:
            return setopt.main(list(argv))
        with patch('sys.stdin', io.StringIO(stdin)):
            return setopt.main(list(argv))

    def test_analyze_exit_codes(self):
        expected = {
            "first_example.problem": 1,
            "first_example_g_zero.problem": 1,
            "first_example_image_cone.problem": 0,
            "first_example_natural_cone.problem": 0,
            "second_example.problem": 1,
        }
        for name, code in expected.items():
            self.assertEqual(self.run_cli("analyze", fixture(name)), code, msg=name)

    def test_analyze_text_report(self):
        self.run_cli("analyze", fixture("second_example.problem"))
        output = self.stdout.getvalue()
        self.assertIn("condition C ⊇ K fails", output)
        self.assertIn("suggested cone C+K = ", output)
        self.assertIn("solvable: no", output)

    def test_analyze_json(self):
        code = self.run_cli("analyze", "--json", fixture("second_example.problem"))
        self.assertEqual(code, 1)
        report = json.loads(self.stdout.getvalue())
        self.assertEqual(report["failed_conditions"], ["natural"])
        self.assertTrue(report["vr_solvable"])
        self.assertEqual(report["cone_source"], "file")

    def test_truncated_input(self):
        with open(fixture("second_example.problem")) as handle:
            text = handle.read().replace("end\n", "")
        code = self.run_cli("analyze", "-", stdin=text)
        self.assertEqual(code, 2)
        self.assertIn("missing 'end'", self.stderr.getvalue())

    def test_irregular_cone_is_an_error(self):
        text = "problem\ndim_x 2\ndim_y 2\n" + FIRST_GRAPH + "cone\n1 0\n-1 0\n0 1\n0 -1\nend\n"
        self.assertEqual(self.run_cli("analyze", "-", stdin=text), 2)
        self.assertIn("not regular", self.stderr.getvalue())
        self.assertEqual(self.run_cli("check", "-", fixture("first_example_image_cone.solution"), stdin=text), 2)

    def test_check_modified_solution(self):
        problem = fixture("second_example.problem")
        solution = fixture("second_example_modified.solution")
        self.assertEqual(self.run_cli("check", "--modified", problem, solution), 0)
        self.assertIn("passed: yes", self.stdout.getvalue())
        self.assertEqual(self.run_cli("check", problem, solution), 1)

    def test_check_fixtures_of_first_example(self):
        self.assertEqual(self.run_cli("check", "--modified", fixture("first_example_g_zero.problem"),
                                      fixture("first_example_modified.solution")), 0)
        self.assertEqual(self.run_cli("check", fixture("first_example_image_cone.problem"),
                                      fixture("first_example_image_cone.solution")), 0)

    def test_check_json(self):
        self.run_cli("check", "--json", "--modified", fixture("second_example.problem"),
                     fixture("second_example_modified.solution"))
        verdict = json.loads(self.stdout.getvalue())
        self.assertEqual(verdict["mode"], "modified")
        self.assertTrue(verdict["finite_infimizer"])

    def test_solve(self):
        self.assertEqual(self.run_cli("solve", "--modified", fixture("first_example.problem")), 0)
        output = self.stdout.getvalue()
        self.assertIn("points: (0, 0)", output)
        self.assertIn("directions: (0, 1)", output)
        self.assertIn("certified: yes", output)

    def test_solve_unsolvable(self):
        self.assertEqual(self.run_cli("solve", fixture("second_example.problem")), 1)
        self.assertIn("suggested cone C+K = ", self.stdout.getvalue())

    def test_relax(self):
        self.assertEqual(self.run_cli("relax", fixture("first_example.problem")), 0)
        relaxed = parse_problem(self.stdout.getvalue())
        self.assertEqual((relaxed.mapping.n, relaxed.mapping.q), (4, 2))
        self.assertIsNone(relaxed.cone)

    def test_from_vlp_then_analyze(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = os.path.join(tmp, "identity.problem")
            self.assertEqual(self.run_cli("from-vlp", fixture("identity.vlp"), "-o", target), 0)
            self.assertEqual(self.run_cli("analyze", target), 0)

    def test_vlp_with_lines_in_upper_image(self):
        vlp = "vlp\ndim_x 2\ndim_y 2\nobjective\n1 0\n0 1\ncone\n1 0\nend\n"
        with tempfile.TemporaryDirectory() as tmp:
            target = os.path.join(tmp, "halfplane.problem")
            self.assertEqual(self.run_cli("from-vlp", "-", "-o", target, stdin=vlp), 0)
            self.assertEqual(self.run_cli("analyze", "--json", target), 1)
        report = json.loads(self.stdout.getvalue())
        self.assertFalse(report["cond_line_free"])
        self.assertEqual(report["failed_conditions"][0], "line_free")

    def test_missing_config_file(self):
        code = self.run_cli("analyze", "--config", "nonexistent.yaml", fixture("first_example.problem"))
        self.assertEqual(code, 2)
        self.assertIn("Error loading configuration", self.stderr.getvalue())

    def test_missing_problem_file(self):
        self.assertEqual(self.run_cli("analyze", "nonexistent.problem"), 2)
        self.assertIn("Error:", self.stderr.getvalue())

    @patch('setopt.synthesize_solution')
    def test_unexpected_failure_is_an_error(self, mock_solve):
        mock_solve.side_effect = RuntimeError("No direction covers ray (1, 0) of the upper image")
        code = self.run_cli("solve", fixture("first_example_natural_cone.problem"))
        self.assertEqual(code, 2)
        self.assertIn("Internal error: No direction covers ray", self.stderr.getvalue())

    @patch('solvability.analysis.natural_cone')
    def test_analyze_records_internal_failure(self, mock_natural_cone):
        mock_natural_cone.side_effect = RuntimeError("Dominance system infeasible")
        code = self.run_cli("analyze", "--json", fixture("first_example.problem"))
        self.assertEqual(code, 2)
        report = json.loads(self.stdout.getvalue())
        self.assertEqual(report["errors"], ["Internal consistency check failed: Dominance system infeasible"])
        self.assertIn("Internal consistency check failed", self.stderr.getvalue())


if __name__ == '__main__':
    unittest.main()
