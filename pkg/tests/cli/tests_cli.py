import io
import json
import os
import unittest
from contextlib import redirect_stderr

from structura import cli

HERE = os.path.dirname(__file__)


def document(name):
    return os.path.join(HERE, "documents", name)


def golden(name):
    with open(os.path.join(HERE, "golden", name), encoding="utf-8") as f:
        return f.read()


class CliTest(unittest.TestCase):
    def run_cli(self, *argv):
        stdout = io.StringIO()
        with redirect_stderr(io.StringIO()):
            code = cli.main(list(argv), stdout=stdout)
        return code, stdout.getvalue()

    def test_ascent_golden(self):
        code, output = self.run_cli(
            "transport",
            document("monoids.structura"),
            "Or",
            "--adjunction",
            "beta",
            "--direction",
            "ascend",
            "--verify-unique",
        )
        self.assertEqual(code, 0)
        self.assertEqual(output, golden("ascend_or.txt"))

    def test_descent_golden(self):
        code, output = self.run_cli(
            "transport",
            document("groups.structura"),
            "Zmod2",
            "--adjunction",
            "discrete",
            "--direction",
            "descend",
            "--verify-unique",
        )
        self.assertEqual(code, 0)
        self.assertEqual(output, golden("descend_zmod2.txt"))

    def test_theory_golden(self):
        code, output = self.run_cli(
            "theory",
            document("monoids.structura"),
            "Monoid",
            "--hom",
            "2",
            "1",
            "--max-size",
            "3",
        )
        self.assertEqual(code, 0)
        self.assertEqual(output, golden("theory_monoid_hom_2_1.txt"))

    def test_validate_json(self):
        code, output = self.run_cli(
            "validate", document("monoids.structura"), "Or", "--json"
        )
        self.assertEqual(code, 0)
        self.assertEqual(
            json.loads(output),
            {
                "command": "validate",
                "status": "ok",
                "counts": {"failed": 0, "total": 3},
                "witnesses": [],
            },
        )

    def test_failure_exit_code(self):
        code, output = self.run_cli(
            "validate", document("monoids.structura"), "Xor"
        )
        self.assertEqual(code, 1)
        self.assertTrue(output.endswith("summary: total=1 failed=1\n"))

    def test_enumerate(self):
        code, output = self.run_cli(
            "enumerate", document("monoids.structura"), "Monoid", "--on", "S"
        )
        self.assertEqual(code, 0)
        self.assertTrue(output.endswith("count: 2\n"))

    def test_document_errors(self):
        code, output = self.run_cli(
            "validate", document("broken.structura"), "Or"
        )
        self.assertEqual(code, 2)
        self.assertEqual(
            output.splitlines(),
            [
                "error: 3:8: m expects 2 arguments, got 1",
                "error: 6:32: c is not a point of S",
                "error: 8:16: no theory named 'Semigroup'",
            ],
        )

    def test_hom_out_of_range(self):
        code, _ = self.run_cli(
            "theory",
            document("monoids.structura"),
            "Monoid",
            "--hom",
            "4",
            "1",
        )
        self.assertEqual(code, 2)

    def test_missing_file(self):
        stderr = io.StringIO()
        with redirect_stderr(stderr):
            code = cli.main(
                ["validate", document("missing.structura"), "Or"],
                stdout=io.StringIO(),
            )
        self.assertEqual(code, 2)
        self.assertIn("cannot read", stderr.getvalue())

    def test_bad_arguments(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as raised:
                cli.main(["transport", document("monoids.structura")])
        self.assertEqual(raised.exception.code, 2)

    def test_options(self):
        args = cli.build_parser().parse_args(
            ["theory", "doc", "T", "--hom", "2", "0", "--allow-bounded-oracle"]
        )
        self.assertEqual(
            cli.options_for(args),
            {
                "theory_name": "T",
                "hom": (2, 0),
                "max_size": 3,
                "allow_bounded": True,
            },
        )
