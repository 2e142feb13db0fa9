import os
import tempfile

from test_case import TestCase
from uqg.classifier import classify
from uqg.constructions import (
    RECIPES,
    NotFound,
    build,
    mq_generators,
    primitive_recipes,
    sample_subgroups,
    seeded_search,
    singer,
    type_representatives,
)
from uqg.formula_catalog import HypothesisViolated
from uqg.geometry import NotAPrimePower
from uqg.group_engine import closure, generators_from_json, pgu_order, read_generator_file


class TestRecipes(TestCase):
    def test_orders(self):
        cases = [
            (5, "trivial", {}, 1),
            (5, "homology", {"m": 3}, 3),
            (5, "elation", {}, 5),
            (5, "b2_element", {"m": 8}, 8),
            (3, "singer", {}, 7),
            (2, "translation", {}, 4),
            (5, "e_element", {"d": 2}, 10),
            (3, "cyclic", {"etype": "B2", "order": 8}, 8),
            (5, "diagonals", {"entries": [[1, 2, 6]]}, 6),
            (3, "mq", {}, 96),
            (9, "sl2_subfield", {"qbar": 3}, 24),
            (9, "tl2_subfield", {"qbar": 3}, 48),
            (2, "pgu", {}, 216),
            (8, "pgu_subfield", {"qbar": 2}, 216),
            (7, "dihedral", {"n": 3}, 6),
            (5, "dihedral", {"n": 3}, 6),
            (5, "dicyclic", {"n": 3}, 12),
            (7, "dicyclic", {"n": 3}, 12),
            (5, "quaternion", {}, 8),
            (5, "a4", {}, 12),
            (3, "s3", {}, 6),
            (7, "s3", {}, 6),
            (13, "cn_c3", {"n": 7}, 21),
            (5, "cyclic_semidirect", {"d": 3, "m": 2, "family": "fermat"}, 6),
            (
                5,
                "cyclic_semidirect",
                {"d": 3, "m": 2, "commuting": False, "family": "fermat"},
                6,
            ),
            (9, "qk_semidirect", {"k": 1, "d": 1}, 3),
            (9, "qk_semidirect", {"k": 2, "d": 2}, 18),
            (4, "translation_group", {"bs": 1}, 4),
            (3, "translation_group", {"bs": 1, "es": 1}, 9),
        ]
        for q, kind, params, order in cases:
            with self.subTest(q=q, recipe=kind, params=params):
                model, gens = build(q, kind, **params)
                self.assertEqual(model.q, q)
                self.assertEqual(closure(gens).order, order)

    def test_registry(self):
        self.assertIn("trivial", RECIPES)
        self.assertEqual(len(RECIPES), 23)

    def test_hypotheses(self):
        bad = [
            (5, "homology", {"m": 4}),
            (5, "dicyclic", {"n": 4}),
            (4, "quaternion", {}),
            (13, "cn_c3", {"n": 5}),
            (5, "cyclic_semidirect", {"d": 3, "m": 4}),
        ]
        for q, kind, params in bad:
            with self.subTest(q=q, recipe=kind):
                with self.assertRaises(HypothesisViolated):
                    build(q, kind, **params)

    def test_unknown(self):
        with self.assertRaises(ValueError):
            build(5, "nope")
        with self.assertRaises(NotAPrimePower):
            build(6, "homology")

    def test_primitive_recipes(self):
        d = primitive_recipes(5, "homology", m=3)
        self.assertEqual(d["q"], 5)
        self.assertEqual(d["model"], "fermat")
        self.assertEqual(d["provenance"], {"recipe": "homology", "params": {"m": 3}})
        model, gens, _ = generators_from_json(d)
        self.assertEqual(closure(gens).order, 3)


class TestGenerators(TestCase):
    def test_mq_fixes_origin(self):
        model, gens = mq_generators(3)
        self.assertEqual(model.tag, "m3")
        self.assertEqual(closure(gens).order, 96)
        for g in gens:
            self.assertEqual((g.mat[2], g.mat[5]), (0, 0))
            self.assertNotEqual(g.mat[8], 0)

    def test_singer_powers_are_not_diagonal(self):
        for q in (3, 4):
            g = singer(q)
            self.assertEqual(closure([g]).order, q * q - q + 1)
            for k in range(1, q * q - q + 1):
                mat = (g**k).mat
                with self.subTest(q=q, k=k):
                    self.assertTrue(any(mat[i] for i in (1, 2, 3, 5, 6, 7)))


class TestRepresentatives(TestCase):
    def test_types(self):
        etypes = {classify(g).etype for g in type_representatives(3, bound=4)}
        self.assertEqual(etypes, {"A", "B1", "C", "D"})

    def test_all_types_at_q5(self):
        etypes = {classify(g).etype for g in type_representatives(5)}
        self.assertEqual(etypes, {"A", "B1", "B2", "B3", "C", "D", "E"})


class TestSearch(TestCase):
    def test_sample_is_deterministic(self):
        first = [g.order for g in sample_subgroups(3, 5, seed=1)]
        second = [g.order for g in sample_subgroups(3, 5, seed=1)]
        self.assertEqual(first, second)
        for order in first:
            self.assertEqual(pgu_order(3) % order, 0)

    def test_seeded_search(self):
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "found.json")
            group = seeded_search(2, 3, seed=0, path=path)
            self.assertEqual(group.order, 3)
            _, gens, provenance = read_generator_file(path)
        self.assertEqual(closure(gens).order, 3)
        self.assertEqual(provenance["search"]["target"], 3)

    def test_not_found(self):
        with self.assertRaises(NotFound):
            seeded_search(2, 7, budget=20)
        with self.assertRaises(NotFound):
            seeded_search(2, 3, budget=0)
