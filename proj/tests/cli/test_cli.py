"""End-to-end checks of the z2norm command line tool.

Usage: test_cli.py <path-to-z2norm> <analyze-schema.json>
"""
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

Z2NORM = ""
SCHEMA = ""


def run(*args, check=True):
    proc = subprocess.run([Z2NORM, *map(str, args)], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    return proc


def run_json(*args):
    return json.loads(run(*args).stdout)


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return str(self.dir / name)

    def test_construct_lst(self):
        out = run_json("construct", "lst", "--p", 1, "--q", 3, "--out", self.path("t.tri"))
        self.assertEqual(out["tet_count"], 2)
        self.assertEqual(out["homology"]["betti"], 1)
        text = run("construct", "lst", "--p", 1, "--q", 3).stdout
        self.assertTrue(text.startswith("tri 2\n"))
        self.assertEqual(Path(self.path("t.tri")).read_text(), text)

    def test_fold_lst12_on_q(self):
        out = run_json("construct", "fold", "--p", 1, "--q", 2, "--edge", "q", "--out", self.path("l41.tri"))
        self.assertEqual(out["homology"]["order"], 4)
        run("construct", "lst", "--p", 1, "--q", 2, "--out", self.path("lst.tri"))
        again = run_json("construct", "fold", "--input", self.path("lst.tri"), "--edge", "2",
                         "--out", self.path("l41b.tri"))
        self.assertEqual(again["homology"]["order"], 4)
        positional = run_json("construct", "fold", self.path("lst.tri"), "--edge", "q", "--out", self.path("l41c.tri"))
        self.assertEqual(positional["homology"]["order"], 4)

    def test_analyze_m111(self):
        run("construct", "family", "--tag", "M", "--k", 1, "--m", 1, "--n", 1, "--out", self.path("m.tri"))
        report = run_json("analyze", self.path("m.tri"), "--json", "--family", "M")
        self.assertEqual(report["tet_count"], 8)
        self.assertEqual(report["z2_rank"], 1)
        self.assertEqual(report["homology"]["invariant_factors"], [3, 18])
        cls = report["classes"][0]["bound_report"]
        self.assertEqual(cls["identity_lhs"], cls["identity_rhs"])
        import jsonschema
        jsonschema.validate(report, json.loads(Path(SCHEMA).read_text()))

    def test_analyze_is_deterministic(self):
        run("construct", "family", "--tag", "P", "--k", 2, "--out", self.path("p.tri"))
        a = run("analyze", self.path("p.tri"), "--json").stdout
        b = run("analyze", self.path("p.tri"), "--json").stdout
        self.assertEqual(a, b)

    def test_moves_and_promote(self):
        run("construct", "family", "--tag", "M", "--k", 1, "--m", 1, "--n", 1, "--out", self.path("m.tri"))
        moved = run_json("moves", self.path("m.tri"), "--kind", "move23", "--target", 0, "--out", self.path("m2.tri"))
        self.assertEqual(moved["tet_count_after"], 9)
        back = run_json("moves", self.path("m2.tri"), "--kind", "move32", "--target", moved["new_edge"],
                        "--out", self.path("m3.tri"))
        self.assertEqual(back["tet_count_after"], 8)
        promoted = run_json("promote", self.path("m.tri"), "--out", self.path("mp.tri"))
        self.assertEqual(promoted["supportive_remaining"], 0)
        self.assertEqual(len(promoted["flips"]), 1)

    def test_bounds_surface_colourings(self):
        run("construct", "loop", "--n", 4, "--twisted", "--out", self.path("q.tri"))
        bounds = run_json("bounds", self.path("q.tri"))
        self.assertEqual(len(bounds["reports"]), 3)
        surf = run_json("surface", self.path("q.tri"), "--class", 2)
        self.assertEqual(len(surf["surfaces"]), 1)
        col = run_json("colourings", self.path("q.tri"))
        self.assertEqual(len(col["classes"]), 3)

    def test_lgraph_and_enumeration(self):
        self.assertEqual(len(run_json("lgraph", "--depth", 4)["nodes"]), 15)
        self.assertTrue(run_json("enumerate-lens", "--depth", 4)["lens_spaces"])

    def test_exit_codes(self):
        self.assertEqual(run(check=False).returncode, 2)
        self.assertEqual(run("construct", "lst", "--p", 1, check=False).returncode, 2)
        self.assertEqual(run("construct", "lst", "--p", 2, "--q", 4, check=False).returncode, 1)
        self.assertEqual(run("analyze", self.path("missing.tri"), check=False).returncode, 1)
        self.assertEqual(run("--help", check=False).returncode, 0)

    def test_corrupted_file_is_pinpointed(self):
        run("construct", "lst", "--p", 2, "--q", 3, "--out", self.path("ok.tri"))
        lines = Path(self.path("ok.tri")).read_text().splitlines()
        lines[2] = lines[2].replace(":", ":9", 1)
        Path(self.path("bad.tri")).write_text("\n".join(lines) + "\n")
        proc = run("analyze", self.path("bad.tri"), check=False)
        self.assertEqual(proc.returncode, 1)
        self.assertIn("bad.tri: line 3:", proc.stderr)
        proc = run("verify", "--only", "lst", "--input", self.path("bad.tri"), check=False)
        self.assertEqual(proc.returncode, 1)
        self.assertIn("line 3:", proc.stdout)

    def test_non_involutive_gluing(self):
        run("construct", "lst", "--p", 2, "--q", 3, "--out", self.path("ok.tri"))
        text = Path(self.path("ok.tri")).read_text().replace("1:0231", "1:0213", 1)
        Path(self.path("inv.tri")).write_text(text)
        proc = run("verify", "--only", "lst", "--input", self.path("inv.tri"), check=False)
        self.assertEqual(proc.returncode, 1)
        self.assertIn("inv.tri: line 2: non-involutive gluing", proc.stdout)
        report = json.loads(run("verify", "--only", "lst", "--input", self.path("inv.tri"), "--json",
                                check=False).stdout)
        self.assertFalse(report["passed"])
        self.assertFalse(report["inputs"][0]["passed"])

    def test_verify_single_check(self):
        proc = run("verify", "--only", "chi")
        self.assertRegex(proc.stdout, r"PASS\s+5 chi")
        out = run_json("verify", "--only", "chi", "--only", "lst", "--json")
        self.assertTrue(out["passed"])
        self.assertEqual([c["name"] for c in out["checks"]], ["lst", "chi"])
        self.assertEqual(run("verify", "--only", "nope", check=False).returncode, 1)


if __name__ == "__main__":
    Z2NORM, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
