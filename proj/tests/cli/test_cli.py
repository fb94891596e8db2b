"""End-to-end checks for the subshift-lab executable.

usage: test_cli.py <subshift-lab> <source dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

try:
    import jsonschema
except ImportError:
    jsonschema = None

EXE = ""
ROOT = Path()


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([EXE, *map(str, args)], capture_output=True, text=True, env=full_env, timeout=600)


def generate(p0, p1, mk, nk, length):
    """Naive generator: pi applied to the composed substitutions on 0, truncated."""
    level = 1
    while True:
        w = "0"
        for k in reversed(range(level)):
            m, n = mk[k % len(mk)], nk[k % len(nk)]
            a, b = "0" * (m - 1) + "1", "0" * (n - 1) + "1"
            w = "".join(a if c == "0" else b for c in w)
        x = "".join(p0 if c == "0" else p1 for c in w)
        if len(x) >= length:
            return x[:length]
        level += 1


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = Path(cls.tmp.name)
        cls.fib = ROOT / "data" / "fib.json"
        cls.golden = ROOT / "data" / "goldenmean-factors.json"
        cls.c24 = ROOT / "data" / "24-constant.json"
        cls.p24 = ROOT / "data" / "24-pi.json"

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def check_schema(self, doc):
        name = doc["schema"].split("/")[1]
        if jsonschema is None:
            self.skipTest("jsonschema not installed")
        schema = json.loads((ROOT / "schemas" / f"{name}.schema.json").read_text())
        jsonschema.validate(doc, schema)

    def run_json(self, *args, env=None):
        r = run(*args, env=env)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        self.check_schema(doc)
        return doc

    def test_fibonacci_complexity_csv(self):
        r = run("complexity", "--params", self.fib, "--level", 12, "--nmax", 50, "--out", "csv")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = r.stdout.strip().splitlines()
        self.assertEqual(lines[0], "n,p")
        rows = [tuple(map(int, line.split(","))) for line in lines[1:]]
        self.assertEqual(len(rows), 50)
        self.assertEqual(rows, [(n, n + 1) for n in range(1, 51)])

    def test_complexity_json_matches_naive_count(self):
        doc = self.run_json("complexity", "--params", self.c24, "--nmax", 40)
        x = generate("0", "1", [2], [4], 20000)
        naive = [len({x[i:i + n] for i in range(len(x) - n + 1)}) for n in range(1, 41)]
        self.assertEqual(doc["p"], naive)

    def test_complexity_to_file(self):
        out = self.dir / "p.csv"
        r = run("complexity", "--params", self.fib, "--nmax", 10, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout, "")
        self.assertTrue(out.read_text().startswith("n,p\n1,2\n"))

    def test_golden_mean_rauzy_dot(self):
        r = run("rauzy", "--params", self.golden, "--n", 3, "--out", "dot")
        self.assertEqual(r.returncode, 0, r.stderr)
        nodes = [l for l in r.stdout.splitlines() if l.strip().endswith(";") and "->" not in l and l.strip().startswith('"')]
        edges = [l for l in r.stdout.splitlines() if "->" in l]
        self.assertTrue(r.stdout.startswith("digraph"))
        self.assertEqual(len(nodes), 5)
        self.assertEqual(len(edges), 8)
        self.assertNotIn('"11', r.stdout)

    def test_golden_mean_rauzy_json(self):
        doc = self.run_json("rauzy", "--params", self.golden, "--n", 3, "--out", "json")
        self.assertEqual(sorted(doc["vertices"]), ["000", "001", "010", "100", "101"])
        for e in doc["edges"]:
            self.assertEqual(e["label"][:3], e["from"])
            self.assertEqual(e["label"][1:], e["to"])

    def test_special_words(self):
        doc = self.run_json("special", "--params", self.fib, "--n", 5)
        self.assertEqual(len(doc["right_special"]), 1)
        self.assertEqual(len(doc["left_special"]), 1)

    def test_fibonacci_alpha(self):
        doc = self.run_json("spectrum", "alpha", "--params", self.fib, "--K", 30, "--bits", 256)
        golden = (5 ** 0.5 - 1) / 2
        self.assertAlmostEqual(float(Fraction(doc["alpha"]["exact"])), golden, places=11)
        self.assertLess(Fraction(doc["error_bound"]["exact"]), Fraction(1, 10 ** 12))
        self.assertTrue(doc["alpha"]["decimal"].startswith("0.61803398874"))

    def test_spectrum_probe(self):
        sym = self.dir / "x24.txt"
        sym.write_text(generate("01", "101", [2], [4], 20000) + "\n")
        r = run("spectrum", "probe", "--input", sym, "--freq", "1/3", "--N", 20000, "--out", "csv")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = r.stdout.strip().splitlines()
        self.assertEqual(lines[0], "N,modulus")
        self.assertEqual([int(l.split(",")[0]) for l in lines[1:]], [1000, 10000, 20000])
        doc = self.run_json("spectrum", "probe", "--params", self.p24, "--freq", "0.25", "--N", 5000)
        self.assertEqual(doc["freq"]["exact"], "1/4")

    def test_verify_battery(self):
        doc = self.run_json("sadic", "verify", "--params", self.p24, "--kmax", 6)
        self.assertTrue(doc["all_pass"])
        self.assertIn("closed_form", doc["checks"])

    def test_verify_failure_exit(self):
        bad = self.dir / "bad.json"
        bad.write_text(json.dumps({"pi": {"0": "01", "1": "101"}, "mk": [3], "nk": [9], "repeat": 10}))
        r = run("sadic", "verify", "--params", bad, "--kmax", 4)
        self.assertEqual(r.returncode, 3)
        self.assertEqual(json.loads(r.stdout)["checks"]["admissibility"]["status"], "fail")

    def test_density(self):
        doc = self.run_json("sadic", "density", "--params", self.p24, "--q-from-dk", 3, "--N", 100000)
        self.assertTrue(doc["within_bound"])

    def test_example_build_and_landmarks(self):
        out = self.dir / "example.json"
        r = run("example", "build", "--kmax", 4, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(out.read_text())
        self.check_schema(doc)
        self.assertEqual([int(m) for m in doc["mk"][:3]], [1, 4, 17])
        self.assertEqual([lv["d"] for lv in doc["levels"][:2]], ["5", "89"])
        lm = self.run_json("example", "landmarks", "--params", out, "--K", 4, "--out", "json")
        self.assertTrue(all(row["identity_holds"] for row in lm["rows"]))
        r = run("example", "landmarks", "--params", out, "--K", 4, "--out", "csv")
        self.assertTrue(r.stdout.startswith("k,q,p,ratio"))

    def test_recover(self):
        sym = self.dir / "rec.txt"
        sym.write_text(generate("01", "101", [2], [4], 20000) + "\n")
        out = self.dir / "rec.json"
        r = run("recover", "--input", sym, "--depth", 3, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(out.read_text())
        self.check_schema(doc)
        self.assertEqual(doc["mk"], [2, 2, 2])
        self.assertEqual(doc["nk"], [4, 4, 4])
        self.assertTrue(doc["certificate"]["certified"])

    def test_recover_rejects_high_complexity(self):
        sym = self.dir / "champ.txt"
        digits = "".join(bin(i)[2:] for i in range(1, 4000))
        sym.write_text(digits[:20000])
        r = run("recover", "--input", sym, "--depth", 2)
        self.assertEqual(r.returncode, 3, r.stderr)

    def test_exit_codes(self):
        r = run("complexity", "--params", self.fib, "--level", 3, "--nmax", 50)
        self.assertEqual(r.returncode, 2)
        self.assertIn("insufficient-depth", r.stderr)
        r = run("complexity", "--params", self.fib, "--level", 30, "--nmax", 10, "--max-symbols", 1000)
        self.assertEqual(r.returncode, 4)
        malformed = self.dir / "malformed.json"
        malformed.write_text('{"pi": {"0": "0"}, "mk": [1]}')
        self.assertEqual(run("complexity", "--params", malformed, "--nmax", 5).returncode, 1)
        self.assertEqual(run("complexity", "--params", self.fib, "--nmax", 0).returncode, 1)
        self.assertEqual(run("complexity", "--params", self.fib, "--out", "table.xyz").returncode, 1)
        self.assertEqual(run("frobnicate").returncode, 1)
        short = self.dir / "short.txt"
        short.write_text("0101")
        self.assertEqual(run("recover", "--input", short, "--depth", 1).returncode, 2)

    def test_deterministic_across_runs_and_threads(self):
        args = ("sadic", "verify", "--params", self.p24, "--kmax", 5)
        first = run(*args, env={"SUBSHIFT_LAB_THREADS": "1"})
        self.assertEqual(first.returncode, 0, first.stderr)
        for threads in ("1", "2", "7"):
            again = run(*args, env={"SUBSHIFT_LAB_THREADS": threads})
            self.assertEqual(again.stdout, first.stdout)
        args = ("complexity", "--params", self.c24, "--nmax", 120, "--out", "csv")
        outs = {run(*args, env={"SUBSHIFT_LAB_THREADS": t}).stdout for t in ("1", "3", "8")}
        self.assertEqual(len(outs), 1)


if __name__ == "__main__":
    EXE = sys.argv[1]
    ROOT = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
