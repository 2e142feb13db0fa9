"""
Long-running checks: exhaustive scans, the published tables, the formula
registries and whole-group classification sweeps. Run with ``tox -e acceptance``.
"""
import json
import logging
import os

import numpy as np
from test_case import TestCase
from uqg import harness
from uqg._internal.debug_check_helpers import DebugLevel
from uqg.classifier import Classifier, classify, tame_oracle
from uqg.constructions import pgu_generators, sample_subgroups, type_representatives
from uqg.genus_engine import quotient_genus
from uqg.geometry import fixed_points
from uqg.group_engine import batch_signatures, closure, conjugate, proj_order

logger = logging.getLogger("uqg")

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "fixtures")


def classify_all(classifier, elements):
    model = elements[0].model
    sigs = batch_signatures(model, np.array([g.mat for g in elements], dtype=np.int64))
    return [classifier.classify(g, sig) for g, sig in zip(elements, sigs)]


class TestFullScans(TestCase):
    def test_scans(self):
        for q in (3, 4, 5):
            with self.subTest(q=q):
                report = harness.full_scan(q, threads=4)
                logger.info(report.render())
                self.assertTrue(report.sizes_ok)
                self.assertTrue(report.cyclic_ok)


class TestTables(TestCase):
    def test_tables(self):
        for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
            with self.subTest(q=q):
                report = harness.run_table(q, FIXTURES, threads=4)
                self.assertEqual(report.counts["mismatch"], 0)
                self.assertEqual(report.counts["failed"], 0)

    def test_committed_fixtures_are_used(self):
        for folder in sorted(os.listdir(FIXTURES)):
            q = int(folder[1:])
            with open(os.path.join(FIXTURES, folder, "manifest.json")) as f:
                manifest = json.load(f)
            report = harness.run_table(q, FIXTURES)
            for row, entry in zip(report.rows, manifest["rows"]):
                with self.subTest(q=q, row=row.index):
                    if entry["fixture"] is not None:
                        self.assertEqual(
                            row.fixture, os.path.join(FIXTURES, folder, entry["fixture"])
                        )
                    self.assertIn(row.status, ("reproduced", "erratum"))


class TestRegistry(TestCase):
    def test_registry(self):
        checks = harness.run_registry()
        for check in checks:
            with self.subTest(formula=check.entry.formula):
                self.assertTrue(check.ok)


class TestOracle(TestCase):
    def test_tame_elements(self):
        classifier = Classifier(debug_check_level=DebugLevel.HIGH)
        for q in (3, 4, 5, 7):
            for g in type_representatives(q):
                if proj_order(g) % g.model.p == 0:
                    continue
                with self.subTest(q=q, g=g):
                    self.assertEqual(tame_oracle(g), classifier.classify(g).i)
                    self.assertEqual(classify(g), classifier.classify(g))

    def test_whole_group(self):
        # one oracle evaluation per signature covers every element sharing it
        for q in (3, 4, 5):
            classifier = Classifier()
            _, gens = pgu_generators(q)
            group = closure(gens)
            oracle = {}
            tame = 0
            for g, sig in zip(group, group.signatures()):
                if g.is_identity():
                    continue
                cls = classifier.classify(g, sig)
                if cls.order % group.model.p == 0:
                    continue
                if sig not in oracle:
                    oracle[sig] = tame_oracle(g)
                tame += 1
                with self.subTest(q=q, sig=sig):
                    self.assertEqual(oracle[sig], cls.i)
            sizes = harness.class_sizes(q)
            self.assertEqual(tame, sum(sizes[t] for t in ("A", "B1", "B2", "B3")))


class TestInvariance(TestCase):
    def test_inverse_and_conjugates(self):
        for q in (2, 3, 4):
            with self.subTest(q=q):
                classifier = Classifier()
                _, gens = pgu_generators(q)
                group = closure(gens)
                elements = [g for g in group if not g.is_identity()]
                classes = classify_all(classifier, elements)
                inverses = classify_all(classifier, [g.inverse() for g in elements])
                self.assertEqual(classes, inverses)
                for h in gens:
                    conjugates = classify_all(classifier, [conjugate(g, h) for g in elements])
                    self.assertEqual(classes, conjugates)


class TestSampledSubgroups(TestCase):
    def test_integral_genus(self):
        count = 0
        for q in (7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29):
            for group in sample_subgroups(q, 17, seed=q):
                with self.subTest(q=q, order=group.order):
                    report = quotient_genus(group)
                    self.assertLessEqual(0, report.genus_quotient)
                    self.assertLessEqual(report.genus_quotient, q * (q - 1) // 2)
                    self.assertLessEqual(report.delta, (group.order - 1) * (q + 2))
                count += 1
        self.assertGreaterEqual(count, 200)


class TestFixedPoints(TestCase):
    def test_eigen_matches_scan(self):
        classifier = Classifier(debug_check_level=DebugLevel.HIGH)
        for q in (2, 3, 4, 5, 7, 8):
            for g in type_representatives(q):
                with self.subTest(q=q, g=g):
                    self.assertEqual(
                        fixed_points(g, method="eigen"), fixed_points(g, method="scan")
                    )
                    classifier.classify(g)
