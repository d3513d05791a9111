#!/usr/bin/env python3
"""End-to-end checks of the apolar command line.

usage: cli_test.py <apolar binary> <report schema> <fixtures dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI, SCHEMA, FIXTURES = sys.argv[1:4]
del sys.argv[1:4]

with open(SCHEMA) as fh:
    VALIDATOR = jsonschema.Draft202012Validator(json.load(fh))


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("APOLAR_RANK_SEED", None)
    if env:
        e.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=e, timeout=600)


def analyze_json(*args, seed="1"):
    p = run("analyze", "--format", "json", "--seed", seed, *args)
    assert p.returncode == 0, p.stderr
    report = json.loads(p.stdout)
    VALIDATOR.validate(report)
    return report


class Analyze(unittest.TestCase):
    def test_xyz(self):
        r = analyze_json("--sig", "[3]", "--poly", "x1*x2*x3")
        self.assertEqual(r["best"]["lower"], 4)
        self.assertEqual(r["best"]["upper"], 4)
        self.assertEqual(r["best"]["status"], "rank determined = 4")

    def test_det3_file(self):
        r = analyze_json("--sig", "[9]", "--poly", "@" + os.path.join(FIXTURES, "det3.poly"))
        self.assertEqual(r["best"]["lower"], 14)
        self.assertEqual(r["best"]["lower_provenance"], "singular-locus")
        self.assertEqual(r["best"]["status"], "14 ≤ r ≤ 20")

    def test_signature_from_file_header(self):
        r = analyze_json("--poly", "@" + os.path.join(FIXTURES, "det3.poly"))
        self.assertEqual(r["input"]["signature"], [9])

    def test_bihomogeneous_rs_multi(self):
        r = analyze_json("--sig", "[2,2]", "--poly", "x1_1*x1_2*x2_1*x2_2")
        self.assertEqual(r["best"]["lower"], 4)
        self.assertEqual(r["best"]["target"], "multihomogeneous")
        rs = [b for b in r["bounds"] if b["provenance"] == "ranestad-schreyer-multi"]
        self.assertEqual([b["value"] for b in rs], [4])

    def test_every_fixture_validates(self):
        for name in sorted(os.listdir(FIXTURES)):
            if name.endswith(".poly") and name != "bi.poly":
                with self.subTest(fixture=name):
                    analyze_json("--poly", "@" + os.path.join(FIXTURES, name), "--strategy", "modp")

    def test_determinism(self):
        args = ("--sig", "[9]", "--poly", "@" + os.path.join(FIXTURES, "det3.poly"), "--strategy", "modp")
        a = run("analyze", "--format", "json", "--seed", "99", *args)
        b = run("analyze", "--format", "json", "--seed", "99", *args)
        self.assertEqual(a.returncode, 0)
        self.assertEqual(a.stdout, b.stdout)

    def test_seed_from_environment(self):
        args = ("analyze", "--format", "json", "--sig", "[3]", "--poly", "x1^3 + x2^3 + x1*x2*x3")
        env = run(*args, env={"APOLAR_RANK_SEED": "4242"})
        self.assertEqual(json.loads(env.stdout)["meta"]["seed"], 4242)
        flag = run(*args, "--seed", "7", env={"APOLAR_RANK_SEED": "4242"})
        self.assertEqual(json.loads(flag.stdout)["meta"]["seed"], 7)

    def test_text_format(self):
        p = run("analyze", "--seed", "1", "--sig", "[3]", "--poly", "x1*x2*x3")
        self.assertEqual(p.returncode, 0)
        self.assertIn("rank determined = 4", p.stdout)

    def test_dump_matrices(self):
        with tempfile.TemporaryDirectory() as d:
            p = run("analyze", "--seed", "1", "--sig", "[3]", "--poly", "x1*x2*x3", "--dump-matrices", d)
            self.assertEqual(p.returncode, 0, p.stderr)
            files = sorted(os.listdir(d))
            self.assertTrue(files)
            with open(os.path.join(d, files[0])) as fh:
                self.assertTrue(fh.readline().startswith("%%MatrixMarket"))


class ExitCodes(unittest.TestCase):
    def test_parse_error(self):
        p = run("analyze", "--sig", "[3]", "--poly", "x1*+x2")
        self.assertEqual(p.returncode, 1)
        self.assertIn("position", p.stderr)

    def test_bad_signature_and_missing_file(self):
        self.assertEqual(run("analyze", "--sig", "[3;2]", "--poly", "x1").returncode, 1)
        self.assertEqual(run("analyze", "--sig", "[3]", "--poly", "@/nonexistent/file").returncode, 1)
        self.assertEqual(run("analyze", "--sig", "[2]", "--poly", "x1 + x2^2").returncode, 1)

    def test_unknown_family_and_flag(self):
        self.assertEqual(run("decompose", "nosuch").returncode, 1)
        self.assertEqual(run("analyze", "--no-such-flag").returncode, 1)

    def test_profile_guard(self):
        p = run("analyze", "--sig", "[1,1,1,1]", "--poly", "x1_1^9*x2_1^9*x3_1^9*x4_1^9", "--max-cells", "100")
        self.assertEqual(p.returncode, 2)

    def test_groebner_budget_guard(self):
        p = run("analyze", "--seed", "1", "--poly", "@" + os.path.join(FIXTURES, "det3.poly"), "--gb-budget", "5")
        self.assertEqual(p.returncode, 2)


class Decompose(unittest.TestCase):
    def decompose(self, *args):
        p = run("decompose", *args)
        self.assertEqual(p.returncode, 0, p.stderr)
        return p.stdout

    def test_counts(self):
        self.assertIn("# verified: true (4 terms)", self.decompose("glynn", "--k", "3"))
        self.assertIn("# verified: true (8 terms)", self.decompose("monomial", "--n", "4"))
        self.assertIn("# verified: true (5 terms)", self.decompose("derksen-det3"))
        self.assertIn("# verified: true (7 terms)", self.decompose("ryser", "--k", "3"))
        self.assertIn("# verified: true (16 terms)", self.decompose("glynn", "--k", "3", "--waring"))
        self.assertIn("# verified: true (20 terms)", self.decompose("derksen-det3", "--waring"))

    def test_json(self):
        d = json.loads(self.decompose("bihomog", "--a", "2", "--b", "3", "--format", "json"))
        self.assertEqual(d["length"], 8)
        self.assertTrue(d["verified"])

    def test_round_trip_through_check_apolar(self):
        cases = [
            ("glynn", ["--k", "3"], "per3-rows"),
            ("derksen-det3", [], "det3-rows"),
            ("monomial", ["--n", "3"], "xyz"),
            ("glynn", ["--k", "3", "--waring"], "per3"),
        ]
        for family, args, fixture in cases:
            with self.subTest(family=family, args=args):
                text = self.decompose(family, *args)
                with tempfile.NamedTemporaryFile("w", suffix=".pts", delete=False) as fh:
                    fh.write(text)
                    pts = fh.name
                poly = run("fixture", fixture)
                self.assertEqual(poly.returncode, 0)
                with tempfile.NamedTemporaryFile("w", suffix=".poly", delete=False) as fh:
                    fh.write(poly.stdout)
                    src = fh.name
                ok = run("check-apolar", "--poly", "@" + src, "--points", pts)
                self.assertEqual(ok.returncode, 0, ok.stderr)
                self.assertTrue(ok.stdout.startswith("true"))
                # dropping one point breaks the decomposition
                lines = [l for l in text.splitlines() if l and not l.startswith("#")]
                with open(pts, "w") as fh:
                    fh.write("\n".join(lines[:-1]) + "\n")
                bad = run("check-apolar", "--poly", "@" + src, "--points", pts)
                self.assertTrue(bad.stdout.startswith("false"))
                os.unlink(pts)
                os.unlink(src)


class CheckApolar(unittest.TestCase):
    def check(self, sig, poly, points):
        with tempfile.NamedTemporaryFile("w", suffix=".pts", delete=False) as fh:
            fh.write(points)
            name = fh.name
        try:
            p = run("check-apolar", "--sig", sig, "--poly", poly, "--points", name)
            self.assertEqual(p.returncode, 0, p.stderr)
            return p.stdout
        finally:
            os.unlink(name)

    def test_xyz(self):
        out = self.check("[3]", "x1*x2*x3", "1,1,1\n1,1,-1\n1,-1,1\n1,-1,-1\n")
        self.assertTrue(out.startswith("true"))
        self.assertIn("1/24", out)

    def test_xy(self):
        self.assertTrue(self.check("[2]", "x1*x2", "1,0\n0,1\n").startswith("false"))

    def test_malformed_points(self):
        with tempfile.NamedTemporaryFile("w", suffix=".pts", delete=False) as fh:
            fh.write("1,2,3\n")
            name = fh.name
        p = run("check-apolar", "--sig", "[2]", "--poly", "x1*x2", "--points", name)
        os.unlink(name)
        self.assertEqual(p.returncode, 1)


class Groebner(unittest.TestCase):
    def dim(self, sig, gens):
        p = run("groebner", "--sig", sig, "--gens", gens)
        self.assertEqual(p.returncode, 0, p.stderr)
        return int(p.stdout.strip().splitlines()[-1].split()[-1])

    def test_examples(self):
        minors = []
        x = [[f"x{3 * i + j + 1}" for j in range(3)] for i in range(3)]
        for r1 in range(3):
            for r2 in range(r1 + 1, 3):
                for c1 in range(3):
                    for c2 in range(c1 + 1, 3):
                        minors.append(f"{x[r1][c1]}*{x[r2][c2]} - {x[r1][c2]}*{x[r2][c1]}")
        self.assertEqual(self.dim("[9]", "; ".join(minors)), 5)
        self.assertEqual(self.dim("[2]", "x1^2; x2^2"), 0)
        self.assertEqual(self.dim("[2]", "1"), -1)


class Fixtures(unittest.TestCase):
    def test_list_and_print(self):
        p = run("fixture", "--list")
        self.assertEqual(p.returncode, 0)
        self.assertIn("stanley", p.stdout.split())
        shipped = run("fixture", "det3")
        with open(os.path.join(FIXTURES, "det3.poly")) as fh:
            self.assertEqual(
                [l for l in shipped.stdout.splitlines() if not l.startswith("#")],
                [l for l in fh.read().splitlines() if not l.startswith("#")],
            )


if __name__ == "__main__":
    unittest.main(verbosity=2)
