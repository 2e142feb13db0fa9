from fractions import Fraction

from test_case import TestCase
from uqg.constructions import build
from uqg.formula_catalog import (
    DESCRIPTIONS,
    DISCREPANCIES,
    VERIFIED,
    Formula,
    FormulaId,
    HypothesisViolated,
    b1_divisor_triples,
    crosscheck,
    cyclic_case,
    eval_formula,
    explain,
    pgu_subfield_delta,
)
from uqg.genus_engine import quotient_genus
from uqg.group_engine import closure


class TestFormulaId(TestCase):
    def test_parse(self):
        self.assertEqual(
            FormulaId.parse("borel:q=9,pk=3,d=1"), FormulaId("borel", q=9, pk=3, d=1)
        )
        fid = FormulaId.parse("cyclic:case=6,q=5,d=2,r=1/2/3")
        self.assertEqual(fid.params["r"], (1, 2, 3))
        fid = FormulaId.parse("torus_semidirect:q=9,d=1,m=2,commuting=true")
        self.assertIs(fid.params["commuting"], True)

    def test_unknown_formula(self):
        with self.assertRaises(ValueError):
            FormulaId("nope", q=3)

    def test_every_formula_is_described(self):
        self.assertEqual(set(DESCRIPTIONS), set(Formula))

    def test_json(self):
        self.assertEqual(
            FormulaId("a4", q=13).to_json(), {"formula": "a4", "params": {"q": 13}}
        )


class TestEvaluation(TestCase):
    def test_values(self):
        cases = [
            (FormulaId("borel", q=9, pk=3, d=1), 9),
            (FormulaId("torus_semidirect", q=9, d=1, m=2, commuting=True), 16),
            (FormulaId("cn_c3", q=13, n=7), 4),
            (FormulaId("sl2_subfield", qbar=3, q=9), 0),
            (FormulaId("a4", q=13), Fraction(27, 4)),
            (FormulaId("s3", q=3), Fraction(-1, 2)),
            (FormulaId("cyclic", case=1, q=4), 2),
            (FormulaId("cyclic", case=5, q=5, d=4), 2),
            (FormulaId("cyclic", case=3, q=5, d=2), 0),
            (FormulaId("pgu_subfield", qbar=2, q=8, delta=0), 0),
            (FormulaId("pgu_subfield", qbar=2, q=8), Fraction(-1, 3)),
        ]
        for fid, expected in cases:
            with self.subTest(formula=fid):
                self.assertFractionEqual(eval_formula(fid), expected)

    def test_values_are_exact(self):
        self.assertIsInstance(eval_formula(FormulaId("a4", q=13)), Fraction)

    def test_trace(self):
        value, trace = explain(FormulaId("borel", q=9, pk=3, d=1))
        self.assertEqual(value, 9)
        self.assertIn("q = 3^2", trace)
        self.assertIn("d | q-1", trace)

    def test_branch_in_trace(self):
        _, trace = explain(FormulaId("torus_semidirect", q=11, d=1, m=3, commuting=True))
        self.assertTrue(any(t.startswith("branch 4") for t in trace))

    def test_hypotheses(self):
        bad = [
            FormulaId("borel", q=9, pk=2, d=1),
            FormulaId("borel", q=9, pk=3, d=3),
            FormulaId("borel", q=9, pk=3),
            FormulaId("a4", q=9),
            FormulaId("cyclic", case=2, q=4),
            FormulaId("cyclic", case=8, q=4),
            FormulaId("sl2_5", q=7),
            FormulaId("tl2_subfield", qbar=3, q=27),
            FormulaId("cn_c3", q=12, n=13),
        ]
        for fid in bad:
            with self.subTest(formula=fid):
                with self.assertRaises(HypothesisViolated):
                    eval_formula(fid)

    def test_pgu_subfield_delta(self):
        self.assertEqual(pgu_subfield_delta(2, 8), 3)
        with self.assertRaises(HypothesisViolated):
            pgu_subfield_delta(2, 4)


class TestCyclicHelpers(TestCase):
    def test_cyclic_case(self):
        self.assertEqual(cyclic_case("C", 3), 1)
        self.assertEqual(cyclic_case("D", 3), 2)
        self.assertEqual(cyclic_case("D", 2), 7)
        self.assertEqual(cyclic_case("E", 5), 3)
        self.assertEqual(cyclic_case("B3", 5), 4)
        self.assertEqual(cyclic_case("A", 5), 5)
        self.assertIsNone(cyclic_case("B1", 5))

    def test_b1_divisor_triples(self):
        self.assertEqual(b1_divisor_triples(3, 4, 1), [(1, 1, 2)])
        self.assertEqual(b1_divisor_triples(3, 4, 3), [])


class TestCrosscheck(TestCase):
    def test_match(self):
        _, gens = build(9, "qk_semidirect", k=1, d=1)
        result = crosscheck(FormulaId("borel", q=9, pk=3, d=1), gens)
        self.assertTrue(result.match)
        self.assertEqual(result.engine_value, 9)
        self.assertEqual(result.to_json()["formula_value"], "9")

    def test_mismatch(self):
        _, gens = build(13, "a4")
        result = crosscheck(FormulaId("a4", q=13), gens)
        self.assertFalse(result.match)
        self.assertEqual(result.formula_value, Fraction(27, 4))
        self.assertEqual(result.engine_value, 5)

    def test_wrong_q(self):
        _, gens = build(5, "a4")
        with self.assertRaises(HypothesisViolated):
            crosscheck(FormulaId("a4", q=13), gens)

    def test_registries(self):
        for entry in VERIFIED + DISCREPANCIES:
            self.assertEqual(entry.q, entry.formula.params["q"])
            self.assertIn(entry.formula.formula, Formula)

    def test_branch_six_census(self):
        cases = [
            (9, 10, 1, {"A": [5, 10], "B1": [4, 0]}, 50, 2),
            (11, 6, 6, {"A": [3, 12], "B1": [2, 0]}, 36, 7),
        ]
        for q, m, formula_value, census, delta, genus in cases:
            with self.subTest(q=q, m=m):
                f = FormulaId("torus_semidirect", q=q, d=1, m=m, commuting=False)
                self.assertEqual(eval_formula(f), formula_value)
                _, gens = build(q, "cyclic_semidirect", d=1, m=m, commuting=False)
                report = quotient_genus(closure(gens))
                self.assertEqual(report.type_census(), census)
                self.assertEqual((report.delta, report.genus_quotient), (delta, genus))
                entry = next(e for e in DISCREPANCIES if e.formula == f)
                self.assertIn("delta = {}".format(delta), entry.anchor)
                self.assertIn("g = {}".format(genus), entry.anchor)
