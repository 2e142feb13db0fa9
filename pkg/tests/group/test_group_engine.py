import json
import os
import tempfile

from test_case import TestCase
from uqg.constructions import homology, pgu_generators, transvections
from uqg.geometry import get_model
from uqg.group_engine import (
    CapExceeded,
    GroupElem,
    MixedContext,
    NotUnitary,
    SingularMatrix,
    closure,
    conjugate,
    generators_from_json,
    generators_to_json,
    identity,
    is_unitary,
    pgu_order,
    proj_order,
    read_generator_file,
    signature,
    write_generator_file,
)

from .data_path import data_path


class TestGroupElem(TestCase):
    def setUp(self):
        self.g = homology(5, 6)
        self.h = transvections(5, [1])[0]

    def test_inverse_and_powers(self):
        self.assertTrue((self.g * self.g.inverse()).is_identity())
        self.assertEqual(self.g**-1, self.g.inverse())
        self.assertTrue((self.g**6).is_identity())
        self.assertFalse((self.g**3).is_identity())
        self.assertEqual(proj_order(self.g), 6)
        self.assertEqual(proj_order(self.h), 5)

    def test_normalized(self):
        model = get_model("fermat", 3)
        f = model.field
        g = GroupElem.from_flat(model, (2, 0, 0, 0, 2, 0, 0, 0, 2))
        self.assertTrue(g.is_identity())
        self.assertEqual(g, identity(model))
        minus = f.neg(1)
        h = GroupElem.from_flat(model, (minus, 0, 0, 0, 1, 0, 0, 0, 1))
        self.assertEqual(h, GroupElem.from_flat(model, (1, 0, 0, 0, minus, 0, 0, 0, minus)))

    def test_from_rows(self):
        model = get_model("fermat", 2)
        g = GroupElem.from_rows(model, [[[0, 1], 0, 0], [0, 1, 0], [0, 0, 1]])
        self.assertEqual(proj_order(g), 3)
        self.assertEqual(
            g.to_json(),
            [[[0, 1], [0, 0], [0, 0]], [[0, 0], [1, 0], [0, 0]], [[0, 0], [0, 0], [1, 0]]],
        )

    def test_is_unitary(self):
        model = get_model("fermat", 3)
        # 4 encodes t + 1, of order 8 in GF(9)
        self.assertEqual(is_unitary((1, 0, 0, 0, 1, 0, 0, 0, 1), model), (True, 1))
        self.assertEqual(is_unitary((1, 0, 0, 0, 2, 0, 0, 0, 1), model), (True, 1))
        self.assertEqual(is_unitary((1, 0, 0, 0, 4, 0, 0, 0, 1), model), (False, None))
        self.assertEqual(is_unitary((4, 0, 0, 0, 4, 0, 0, 0, 4), model), (True, 2))
        with self.assertRaises(SingularMatrix):
            is_unitary((1, 0, 0, 0, 0, 0, 0, 0, 1), model)

    def test_invalid_matrices(self):
        model = get_model("fermat", 2)
        with self.assertRaises(NotUnitary):
            GroupElem.from_flat(model, (1, 1, 0, 0, 1, 0, 0, 0, 1))
        with self.assertRaises(SingularMatrix):
            GroupElem.from_flat(model, (1, 0, 0, 1, 0, 0, 0, 0, 1))
        with self.assertRaises(ValueError):
            GroupElem.from_flat(model, (1, 0, 0))
        with self.assertRaises(ValueError):
            GroupElem.from_rows(model, [[1, 0], [0, 1]])

    def test_mixed_models(self):
        with self.assertRaises(MixedContext):
            homology(2, 3) * homology(3, 2)
        with self.assertRaises(MixedContext):
            closure([homology(2, 3), homology(3, 2)])

    def test_conjugate(self):
        g = transvections(5, [1])[0]
        h = transvections(5, [2], lower=True)[0]
        c = conjugate(g, h)
        self.assertEqual(c, h.inverse() * g * h)
        self.assertEqual(proj_order(c), 5)
        self.assertNotEqual(signature(g), signature(g * h))


class TestClosure(TestCase):
    def test_pgu_3_2(self):
        _, gens = pgu_generators(2)
        group = closure(gens)
        self.assertEqual(group.order, pgu_order(2))
        self.assertEqual(group.order, 216)
        self.assertTrue(next(iter(group)).is_identity())

    def test_sl2_3(self):
        gens = transvections(3, [1]) + transvections(3, [1], lower=True)
        group = closure(gens)
        self.assertEqual(group.order, 24)
        self.assertCensusEqual(group, {1: 1, 2: 1, 3: 8, 4: 6, 6: 8})
        for g in gens:
            self.assertIn(g, group)
        self.assertNotIn(homology(3, 4), group)

    def test_cyclic(self):
        group = closure([homology(7, 8)])
        self.assertCensusEqual(group, {1: 1, 2: 1, 4: 2, 8: 4})

    def test_deterministic(self):
        gens = transvections(3, [1]) + transvections(3, [1], lower=True)
        self.assertEqual(closure(gens).array.tolist(), closure(gens).array.tolist())

    def test_cap(self):
        _, gens = pgu_generators(2)
        with self.assertRaises(CapExceeded):
            closure(gens, cap=100)
        with self.assertRaises(ValueError):
            closure([])


class TestGeneratorFiles(TestCase):
    def test_read_fixture(self):
        model, gens, provenance = read_generator_file(data_path("homology_q2.json"))
        self.assertEqual(model.key, ("fermat", 2))
        self.assertEqual(len(gens), 1)
        self.assertEqual(provenance, {"recipe": "homology", "params": {"m": 3}})
        self.assertEqual(closure(gens).order, 3)

    def test_write_and_read(self):
        g = homology(4, 5)
        with tempfile.TemporaryDirectory() as folder:
            path = os.path.join(folder, "gens.json")
            write_generator_file(path, g.model, [g], {"recipe": "homology"})
            with open(path) as f:
                self.assertEqual(json.load(f)["q"], 4)
            model, gens, provenance = read_generator_file(path)
        self.assertEqual(model, g.model)
        self.assertEqual(gens, [g])
        self.assertEqual(provenance, {"recipe": "homology"})

    def test_rejects_non_unitary(self):
        d = generators_to_json(get_model("fermat", 2), [identity(get_model("fermat", 2))])
        d["generators"][0][0][1] = [1, 0]
        with self.assertRaises(NotUnitary):
            generators_from_json(d)
