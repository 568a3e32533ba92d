import io
import json
import tempfile
from pathlib import Path
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from cli import COMMANDS, Check, Report, execute, format_matrix, load_command, parse_matrix, run
from intlat import DimensionMismatchError, LatticeError, hilb_lattice
from moduli import genus_two_reflection


def _run(*argv):
    stream = io.StringIO()
    code = run(list(argv), stream=stream)
    return code, stream.getvalue()


def _run_json(*argv):
    code, text = _run(*argv, "--json")
    return code, json.loads(text)


class ReportTests(SimpleTestCase):
    def test_ok(self):
        self.assertTrue(Report(command="x").ok)
        report = Report(command="x", checks=[Check.equal("a", 1, 1), Check.equal("b", 1, 2)])
        self.assertFalse(report.ok)
        self.assertEqual([c.name for c in report.failures()], ["b"])

    def test_pass_alias(self):
        dumped = Check.equal("a", 1, 1).model_dump(by_alias=True)
        self.assertEqual(dumped, {"name": "a", "expected": 1, "actual": 1, "pass": True})
        self.assertFalse(Check.model_validate({"name": "b", "pass": False}).passed)


class MatrixFileTests(SimpleTestCase):
    def test_parse(self):
        self.assertEqual(parse_matrix("2 3\n1 2 3\n4 5\n6\n"), [[1, 2, 3], [4, 5, 6]])
        self.assertEqual(parse_matrix(format_matrix([[0, -1], [1, 0]])), [[0, -1], [1, 0]])

    def test_malformed(self):
        with self.assertRaises(DimensionMismatchError):
            parse_matrix("2 2\n1 0 0")
        with self.assertRaises(DimensionMismatchError):
            parse_matrix("3")
        with self.assertRaises(LatticeError):
            parse_matrix("1 1\nx")


class SimpleCommandTests(SimpleTestCase):
    def test_pn_json(self):
        code, text = _run("pn", "--n", "7", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(text.strip(), '{"n":7,"entries":[[1,-6],[2,-3]],"count":2}')

    def test_pn_is_stable(self):
        self.assertEqual(_run("pn", "--n", "211", "--json"), _run("pn", "--n", "211", "--json"))

    def test_count_nonbirational(self):
        code, outputs = _run_json("count-nonbirational", "--n", "211")
        self.assertEqual(code, 0)
        self.assertEqual(outputs, {"n": 211, "count": 8})

    def test_windex(self):
        code, outputs = _run_json("windex", "--n", "6")
        self.assertEqual(code, 0)
        self.assertEqual(outputs["index"], 1)
        code, outputs = _run_json("windex", "--n", "31")
        self.assertEqual(outputs["index"], 4)
        self.assertEqual(len(outputs["residual_units"]), 8)

    def test_residual_group(self):
        code, outputs = _run_json("residual", "--n", "7")
        self.assertEqual(code, 0)
        self.assertEqual(outputs["residual_units"], [1, 5, 7, 11])

    def test_ext_order(self):
        code, outputs = _run_json("ext-order", "--n", "3", "--i", "2")
        self.assertEqual(code, 0)
        self.assertEqual(outputs, {"n": 3, "i": 2, "order": 4, "method": "formula", "stabilized": True})
        code, outputs = _run_json("ext-order", "--n", "7", "--i", "4")
        self.assertEqual(outputs["order"], 4)

    def test_mu_kernel(self):
        code, outputs = _run_json("mu-kernel", "--n", "2")
        self.assertEqual(code, 0)
        self.assertTrue(outputs["integral"])
        self.assertEqual(len(outputs["matrix"]), 24)
        code, outputs = _run_json("mu-kernel", "--n", "5")
        self.assertEqual(code, 0)
        self.assertIsNone(outputs["matrix"])

    def test_discriminant(self):
        code, outputs = _run_json("discriminant", "--lattice", "hilb:7")
        self.assertEqual(code, 0)
        self.assertEqual(outputs["orders"], [12])
        self.assertEqual(outputs["q"], ["23/12"])
        code, outputs = _run_json("discriminant", "--lattice", "mukai")
        self.assertEqual((code, outputs["orders"]), (0, []))

    def test_human_output(self):
        code, text = _run("pn", "--n", "7")
        self.assertEqual(code, 0)
        self.assertIn("pn n=7", text)
        self.assertIn("[PASS] count is 2^(rho(n-1)-1)", text)

    def test_full_report(self):
        code, text = _run("windex", "--n", "7", "--report")
        report = json.loads(text)
        self.assertEqual(report["command"], "windex")
        self.assertTrue(all(check["pass"] for check in report["checks"]))


class ExampleCommandTests(SimpleTestCase):
    def test_example7(self):
        report = execute(["example7"])
        self.assertTrue(report.ok)
        cases = {case["degree"]: case for case in report.outputs["cases"]}
        self.assertEqual(cases[2]["residual_signed"], -5)
        self.assertEqual(cases[2]["residual"], 7)
        self.assertEqual(cases[4]["residual"], 5)
        self.assertFalse(cases[2]["in_w"])
        self.assertFalse(cases[4]["in_w"])

    def test_example7_exit_code(self):
        self.assertEqual(_run("example7")[0], 0)


class MatrixCommandTests(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def _write(self, name, matrix):
        path = Path(self.tmp.name) / name
        path.write_text(format_matrix(matrix))
        return str(path)

    def test_identity_is_a_member(self):
        path = self._write("identity.txt", hilb_lattice(7).identity().matrix)
        code, outputs = _run_json("in-w", "--lattice", "hilb:7", "--matrix", path)
        self.assertEqual(code, 0)
        self.assertTrue(outputs["member"])
        self.assertEqual(outputs["extension"]["lattice"], "Mukai")
        self.assertEqual(len(outputs["extension"]["matrix"]), 24)

    def test_genus_two_reflection(self):
        _, f = genus_two_reflection(2)
        path = self._write("f.txt", f.matrix)
        code, outputs = _run_json("in-w", "--lattice", "hilb:7", "--matrix", path)
        self.assertEqual(code, 0)
        self.assertFalse(outputs["member"])
        self.assertIsNone(outputs["extension"])

        code, outputs = _run_json("residual", "--n", "7", "--matrix", path)
        self.assertEqual(code, 0)
        self.assertEqual((outputs["multiplier"], outputs["signed"], outputs["is_sign"]), (7, -5, False))

    def test_not_an_isometry(self):
        matrix = [list(row) for row in hilb_lattice(7).identity().matrix]
        matrix[0][0] = 2
        path = self._write("bad.txt", matrix)
        self.assertEqual(_run("in-w", "--lattice", "hilb:7", "--matrix", path)[0], 1)

    def test_wrong_lattice(self):
        path = self._write("k3.txt", [[int(i == j) for j in range(22)] for i in range(22)])
        self.assertEqual(_run("in-w", "--lattice", "k3", "--matrix", path)[0], 1)

    def test_missing_file(self):
        missing = str(Path(self.tmp.name) / "missing.txt")
        self.assertEqual(_run("in-w", "--lattice", "hilb:7", "--matrix", missing)[0], 2)


class ChernCommandTests(SimpleTestCase):
    def test_to_character(self):
        code, outputs = _run_json("chern", "--to-character", "3")
        self.assertEqual(code, 0)
        self.assertEqual(outputs["classes"], ["c1", "1/2*c1^2 - c2", "1/6*c1^3 - 1/2*c1*c2 + 1/2*c3"])

    def test_to_chern(self):
        code, outputs = _run_json("chern", "--to-chern", "2")
        self.assertEqual(code, 0)
        self.assertEqual(outputs["classes"], ["ch1", "1/2*ch1^2 - ch2"])

    def test_verify(self):
        code, outputs = _run_json("verify", "--lemma", "sigma-linear", "--i", "3")
        self.assertEqual(code, 0)
        self.assertTrue(outputs["holds"])
        self.assertEqual(outputs["residual"], "-c1_x^2*c1_y - c1_x*c1_y^2")
        for lemma, i in (("twist", "4"), ("newton", "5")):
            self.assertEqual(_run("verify", "--lemma", lemma, "--i", i)[0], 0)


class ExitCodeTests(SimpleTestCase):
    def test_usage_errors(self):
        self.assertEqual(_run()[0], 2)
        self.assertEqual(_run("nonsense")[0], 2)
        self.assertEqual(_run("pn")[0], 2)
        self.assertEqual(_run("pn", "--n", "seven")[0], 2)
        self.assertEqual(_run("discriminant", "--lattice", "leech")[0], 2)
        self.assertEqual(_run("chern", "--to-character", "2", "--to-chern", "2")[0], 2)
        self.assertEqual(_run("verify", "--lemma", "unknown", "--i", "3")[0], 2)
        self.assertEqual(_run("pn", "--n", "7", "--log-level", "chatty")[0], 2)

    def test_log_level(self):
        self.assertEqual(_run("pn", "--n", "7", "--log-level", "warning")[0], 0)

    def test_lattice_errors(self):
        self.assertEqual(_run("pn", "--n", "1")[0], 1)
        self.assertEqual(_run("ext-order", "--n", "7", "--i", "5")[0], 1)
        self.assertEqual(_run("verify", "--lemma", "sigma-linear", "--i", "1")[0], 1)
        self.assertEqual(_run("mukai-middle", "--n", "2", "--gens", "9")[0], 1)

    def test_failed_check(self):
        code, text = _run("mukai-middle", "--n", "2", "--gens", "48", "--batch", "0")
        self.assertEqual(code, 1)
        self.assertIn("[FAIL] generators stabilized", text)

    def test_mukai_middle(self):
        code, outputs = _run_json("mukai-middle", "--n", "2")
        self.assertEqual(code, 0)
        self.assertEqual((outputs["order"], outputs["method"], outputs["stabilized"]), (2, "snf", True))


class ManagementCommandTests(SimpleTestCase):
    def test_every_command_loads(self):
        for name in COMMANDS:
            command = load_command(name)
            self.assertEqual(command.name, name)
            self.assertTrue(command.help)

    def test_call_command(self):
        out = io.StringIO()
        call_command("pn", n=7, json=True, stdout=out)
        self.assertEqual(out.getvalue().strip(), '{"n":7,"entries":[[1,-6],[2,-3]],"count":2}')

    def test_call_command_by_module_name(self):
        out = io.StringIO()
        call_command("count_nonbirational", n=211, json=True, stdout=out)
        self.assertEqual(json.loads(out.getvalue()), {"n": 211, "count": 8})

    def test_lattice_error_becomes_command_error(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("pn", n=1, stdout=io.StringIO())
        self.assertEqual(ctx.exception.returncode, 1)

    def test_execute_rejects_bad_arguments(self):
        with self.assertRaises(CommandError) as ctx:
            execute(["nonsense"])
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError):
            execute(["pn"])
