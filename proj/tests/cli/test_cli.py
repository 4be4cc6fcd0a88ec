"""Golden-file and exit-code checks for the fhtw command-line tool.

Usage: test_cli.py <path-to-fhtw> <tests/data dir>
"""

import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

BIN = ""
DATA = Path()


def run(*args, stdin=None):
    return subprocess.run([BIN, *map(str, args)], input=stdin, capture_output=True, text=True)


def ok(*args, stdin=None):
    p = run(*args, stdin=stdin)
    if p.returncode != 0:
        raise AssertionError(f"{args} exited {p.returncode}: {p.stderr}")
    return p.stdout


class Golden(unittest.TestCase):
    def golden(self, name):
        return (DATA / "golden" / name).read_text()

    def test_rho_star_h2(self):
        out = ok("rho-star", DATA / "h2.json")
        self.assertEqual(json.loads(out)["value"], "2/1")
        self.assertEqual(out, self.golden("rho_star_h2.json"))

    def test_validate_h2_two_node(self):
        out = ok("validate", DATA / "h2.json", DATA / "h2_two_node.json")
        report = json.loads(out)
        self.assertTrue(report["valid"])
        self.assertEqual(report["width"], "2/1")
        self.assertEqual(out, self.golden("validate_h2_two_node.json"))

    def test_validate_reports_violations(self):
        report = json.loads(ok("validate", DATA / "h2.json", DATA / "h2_missing_vertex.json"))
        self.assertFalse(report["valid"])
        self.assertTrue(report["violations"])

    def test_tight_triangle(self):
        out = ok("generate", "tight", "--n0", "2", DATA / "triangle.json")
        self.assertEqual(out, self.golden("tight_triangle_n0_2.json"))
        self.assertEqual(json.loads(ok("count", stdin=out))["count"], 8)
        self.assertEqual(ok("enumerate", stdin=out), self.golden("enumerate_tight_triangle.jsonl"))
        self.assertEqual(len(ok("enumerate", "--limit", "3", stdin=out).splitlines()), 3)
        lines = ok("project", "--vars", "a", stdin=out).splitlines()
        self.assertEqual([json.loads(l) for l in lines], [{"a": "1"}, {"a": "2"}])
        self.assertTrue(json.loads(ok("solve", stdin=out))["satisfiable"])

    def test_width(self):
        out = ok("width", "--measure", "fhw", DATA / "triangle.json")
        self.assertEqual(out, self.golden("width_fhw_triangle.json"))
        self.assertEqual(json.loads(ok("width", "--measure", "ghw", DATA / "h2.json"))["value"], "2/1")


class RoundTrip(unittest.TestCase):
    def test_generate_parses_back(self):
        for args in (["hn", "2"], ["matching", "3"], ["universal", "4"]):
            out = ok("generate", *args)
            self.assertIn("value", json.loads(ok("rho-star", stdin=out)))
            width = json.loads(ok("width", "--measure", "ghw", stdin=out))
            bags = {v for node in width["decomposition"]["nodes"] for v in node["bag"]}
            self.assertEqual(bags, set(json.loads(out)["vertices"]))
        inst = ok("generate", "random", "--seed", "42", "--vars", "6", "--domain", "3", "--constraints", "5")
        self.assertEqual(inst, ok("generate", "random", "--seed", "42", "--vars", "6", "--domain", "3",
                                  "--constraints", "5"))
        self.assertIn("count", json.loads(ok("count", stdin=inst)))

    def test_decompose_output_validates(self):
        for name, budget in (("h2.json", "2"), ("triangle.json", "3/2")):
            out = json.loads(ok("decompose", "--budget", budget, DATA / name))
            self.assertTrue(out["success"])
            with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
                json.dump(out["decomposition"], f)
            report = json.loads(ok("validate", DATA / name, f.name))
            self.assertTrue(report["valid"])
            self.assertTrue(report["special_condition"])
            Path(f.name).unlink()

    def test_supplied_decomposition(self):
        inst = ok("generate", "tight", "--n0", "2", DATA / "h2.json")
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write(inst)
        count = json.loads(ok("count", "--decomposition", DATA / "h2_two_node.json", f.name))["count"]
        self.assertEqual(count, json.loads(ok("count", f.name))["count"])
        Path(f.name).unlink()


class ExitCodes(unittest.TestCase):
    def test_domain_errors_exit_1(self):
        self.assertEqual(run("rho-star", stdin="{").returncode, 1)
        self.assertEqual(run("rho-star", stdin='{"edges": [["a", 3]]}').returncode, 1)
        self.assertEqual(run("game", "--budget", "1/0", DATA / "triangle.json").returncode, 1)
        self.assertEqual(run("generate", "hn", "9").returncode, 1)
        self.assertEqual(run("nonsense").returncode, 1)
        p = run("rho-star", DATA / "missing.json")
        self.assertEqual(p.returncode, 1)
        self.assertTrue(p.stderr)
        self.assertFalse(p.stdout)

    def test_resource_limits_exit_2(self):
        self.assertEqual(run("generate", "tight", "--n0", "5000", DATA / "triangle.json").returncode, 2)
        big = ok("generate", "universal", "20")
        self.assertEqual(run("width", "--measure", "tree", stdin=big).returncode, 2)

    def test_game(self):
        self.assertEqual(json.loads(ok("game", "--budget", "1", DATA / "triangle.json"))["winner"], "robber")
        self.assertEqual(json.loads(ok("game", "--budget", "3/2", DATA / "triangle.json"))["winner"], "general")
        self.assertEqual(json.loads(ok("aw", DATA / "triangle.json"))["value"], "3/2")


if __name__ == "__main__":
    BIN, DATA = sys.argv[1], Path(sys.argv[2])
    unittest.main(argv=sys.argv[:1], verbosity=2)
