import json
import os
import tempfile
from unittest import mock

from test_case import TestCase
from uqg import harness
from uqg.constructions import build
from uqg.formula_catalog import DISCREPANCIES, VERIFIED
from uqg.geometry import NotAPrimePower
from uqg.group_engine import pgu_order, write_generator_file

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "fixtures")


class TestTables(TestCase):
    def test_small_tables(self):
        for q in (2, 3, 4, 7):
            with self.subTest(q=q):
                report = harness.run_table(q)
                self.assertTrue(report.ok)
                self.assertEqual(report.counts["reproduced"], len(report.rows))
                self.assertEqual(report.constructed, 1)

    def test_erratum(self):
        report = harness.run_table(5)
        self.assertEqual(
            report.counts,
            {"reproduced": 5, "erratum": 1, "mismatch": 0, "unconstructed": 0, "failed": 0},
        )
        row = next(r for r in report.rows if r.status == "erratum")
        self.assertEqual((row.g_expected, row.order_expected), (1, 3))
        self.assertEqual((row.genus, row.order), (2, 3))
        self.assertIn("erratum (engine g = 2, |G| = 3)", report.render())
        self.assertTrue(report.ok)

    def test_threads(self):
        serial = harness.run_table(7)
        threaded = harness.run_table(7, threads=4)
        self.assertEqual(
            [r.to_json() for r in serial.rows], [r.to_json() for r in threaded.rows]
        )

    def test_no_table(self):
        with self.assertRaises(NotAPrimePower):
            harness.run_table(6)
        with self.assertRaises(harness.NoTable):
            harness.run_table(31)

    def test_json(self):
        d = harness.run_table(3).to_json()
        self.assertEqual(d["q"], 3)
        self.assertEqual(len(d["rows"]), 3)
        self.assertEqual(d["rows"][1]["structure"], "C2 (A)")
        json.dumps(d)


class TestFixtures(TestCase):
    def test_materialize_and_run(self):
        with tempfile.TemporaryDirectory() as root:
            paths = harness.materialize_fixtures(4, root)
            self.assertEqual(len(paths), 5)
            with open(os.path.join(root, "q04", "manifest.json")) as f:
                manifest = json.load(f)
            self.assertEqual([r["fixture"] for r in manifest["rows"]][0], "row0.json")
            report = harness.run_table(4, root)
            for row in report.rows:
                self.assertEqual(row.status, "reproduced")
                self.assertEqual(row.fixture, harness.fixture_path(root, 4, row.index))

    def test_committed_fixtures(self):
        for q in (2, 3, 4, 5, 7):
            with self.subTest(q=q):
                with open(os.path.join(FIXTURES, "q{:02d}".format(q), "manifest.json")) as f:
                    manifest = json.load(f)
                report = harness.run_table(q, FIXTURES)
                self.assertTrue(report.ok)
                for row, entry in zip(report.rows, manifest["rows"]):
                    self.assertEqual(row.structure, entry["structure"])
                    self.assertEqual(row.recipe, entry["recipe"])
                    self.assertEqual(row.fixture is None, entry["fixture"] is None)

    def test_fixture_overrides_recipe(self):
        with tempfile.TemporaryDirectory() as root:
            os.makedirs(os.path.join(root, "q03"))
            model, gens = build(3, "elation")
            write_generator_file(harness.fixture_path(root, 3, 1), model, gens)
            report = harness.run_table(3, root)
        row = report.rows[1]
        self.assertEqual(row.status, "mismatch")
        self.assertEqual((row.genus, row.order), (0, 3))
        self.assertFalse(report.ok)

    def test_fixtures_root(self):
        self.assertEqual(harness.fixtures_root("here"), "here")
        with mock.patch.dict(os.environ, {harness.FIXTURES_ENV: "elsewhere"}):
            self.assertEqual(harness.fixtures_root(), "elsewhere")
        with mock.patch.dict(os.environ, {harness.FIXTURES_ENV: ""}):
            self.assertEqual(harness.fixtures_root(), "fixtures")

    def test_fixture_path(self):
        self.assertEqual(
            harness.fixture_path("root", 7, 3), os.path.join("root", "q07", "row3.json")
        )


class TestRegistry(TestCase):
    def test_verified_entry(self):
        entry = VERIFIED[0]
        check = harness.check_entry(entry, True)
        self.assertTrue(check.match)
        self.assertTrue(check.ok)
        self.assertEqual(check.engine_value, 9)

    def test_discrepancy_entry(self):
        entry = next(e for e in DISCREPANCIES if e.formula.name == "s3" and e.q == 3)
        check = harness.check_entry(entry, False)
        self.assertFalse(check.match)
        self.assertTrue(check.ok)
        self.assertEqual(check.engine_value, 0)
        self.assertEqual(check.to_json()["formula_value"], "-1/2")


class TestScan(TestCase):
    def test_class_sizes(self):
        self.assertEqual(
            harness.class_sizes(2),
            {"A": 24, "B1": 8, "B2": 0, "B3": 48, "C": 9, "D": 54, "E": 72},
        )
        for q in (2, 3, 4, 5, 7, 8):
            self.assertEqual(sum(harness.class_sizes(q).values()), pgu_order(q) - 1)

    def test_full_scan_q2(self):
        report = harness.full_scan(2)
        self.assertEqual(report.order, 216)
        self.assertTrue(report.sizes_ok)
        self.assertTrue(report.cyclic_ok)
        self.assertEqual(
            [(c["type"], c["order"]) for c in report.cyclic],
            [("A", 3), ("B1", 3), ("B3", 3), ("C", 2), ("D", 4), ("E", 6)],
        )
        self.assertIn("PGU(3, 2): 216 elements", report.render())

    def test_threads(self):
        serial = harness.full_scan(2)
        threaded = harness.full_scan(2, threads=4)
        self.assertEqual(serial.to_json(), threaded.to_json())

    def test_limits(self):
        with self.assertRaises(harness.ScanTooLarge):
            harness.full_scan(7)
        with self.assertRaises(NotAPrimePower):
            harness.full_scan(6)
