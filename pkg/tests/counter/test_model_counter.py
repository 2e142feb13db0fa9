import unittest
from unittest import mock

from uqg.formula_catalog import HypothesisViolated
from uqg.geometry import FieldTooLarge
from uqg.model_counter import (
    LambdaInvalid,
    ModelCount,
    count_named_model,
    count_tipoE,
    lambda_independence,
    lambdas,
)


class TestTypeEModel(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(count_tipoE(8, 3), ModelCount(113, 3, True))
        self.assertEqual(count_tipoE(9, 5), ModelCount(100, 1, True))
        self.assertEqual(count_tipoE(4, 5), ModelCount(17, 0, True))

    def test_lambdas(self):
        self.assertEqual(len(lambdas(8)), 3)
        self.assertEqual(len(lambdas(9)), 2)

    def test_lambda_independence(self):
        report = lambda_independence(9, 5)
        self.assertTrue(report.independent)
        self.assertEqual(set(report.counts.values()), {100})
        self.assertEqual(sorted(report.counts), lambdas(9))

    def test_invalid_lambda(self):
        with self.assertRaises(LambdaInvalid):
            count_tipoE(9, 5, [1])

    def test_hypotheses(self):
        with self.assertRaises(HypothesisViolated):
            count_tipoE(9, 4)

    def test_json(self):
        self.assertEqual(
            count_tipoE(4, 5).to_json(), {"N": 17, "genus": 0, "maximal": True}
        )


class TestNamedModels(unittest.TestCase):
    def test_counts(self):
        self.assertEqual(count_named_model(1, 4), ModelCount(33, 2, True))
        self.assertEqual(count_named_model(5, 4, 15), ModelCount(17, 0, True))
        self.assertEqual(count_named_model(2, 9), ModelCount(298, 12, True))
        self.assertEqual(count_named_model(3, 9, 5), ModelCount(100, 1, True))

    def test_unavailable(self):
        for case in (4, 6, 7, 8):
            with self.subTest(case=case):
                with self.assertRaises(HypothesisViolated):
                    count_named_model(case, 4, 5)
        with self.assertRaises(HypothesisViolated):
            count_named_model(2, 4)
        with self.assertRaises(HypothesisViolated):
            count_named_model(5, 4, 7)

    def test_field_limit(self):
        with mock.patch("uqg.model_counter.plane_limit", 10):
            with self.assertRaises(FieldTooLarge):
                count_named_model(1, 4)
