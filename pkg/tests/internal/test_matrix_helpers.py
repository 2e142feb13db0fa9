import unittest

from uqg._internal import matrix_helpers as mh
from uqg._internal.caching import cached
from uqg.finite_field import DivisionByZero, make_field


class TestMatrixHelpers(unittest.TestCase):
    def setUp(self):
        self.field = make_field(5, 1)

    def test_inverse(self):
        a = (1, 2, 0, 0, 1, 3, 0, 0, 1)
        inv = mh.inverse3(self.field, a)
        self.assertEqual(mh.mat_mul(self.field, a, inv), mh.IDENTITY)

    def test_singular(self):
        a = (1, 2, 3, 0, 1, 1, 1, 3, 4)
        self.assertEqual(mh.det3(self.field, a), 0)
        self.assertEqual(mh.rank(self.field, a), 2)
        with self.assertRaises(DivisionByZero):
            mh.inverse3(self.field, a)

    def test_nullspace(self):
        a = (1, 2, 3, 0, 1, 1, 1, 3, 4)
        (v,) = mh.nullspace(self.field, a)
        self.assertEqual(mh.mat_vec(self.field, a, v), (0, 0, 0))

    def test_char_poly(self):
        # diag(1, 2, 3): (x - 1)(x - 2)(x - 3) = x^3 - 6x^2 + 11x - 6
        a = (1, 0, 0, 0, 2, 0, 0, 0, 3)
        self.assertEqual(mh.char_poly(self.field, a), [4, 1, 4, 1])

    def test_normalize(self):
        self.assertEqual(mh.normalize(self.field, (0, 2, 4)), (0, 1, 2))
        with self.assertRaises(ValueError):
            mh.normalize(self.field, (0, 0, 0))


class Counted:
    def __init__(self):
        self.calls = 0

    @cached
    def value(self, key=None):
        self.calls += 1
        return key


class TestCaching(unittest.TestCase):
    def test_cached_per_key(self):
        c = Counted()
        self.assertIsNone(c.value())
        self.assertIsNone(c.value())
        self.assertEqual(c.value(3), 3)
        self.assertEqual(c.value(3), 3)
        self.assertEqual(c.calls, 2)
