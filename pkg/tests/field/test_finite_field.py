import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from uqg.finite_field import (
    CtxMismatch,
    DegreeOutOfRange,
    DegreeTooHigh,
    DivisionByZero,
    FieldCtx,
    FieldElem,
    NotASubfield,
    NotPrime,
    Poly,
    ZeroElement,
    embed,
    embedding,
    field_arith,
    make_field,
    mult_order,
    poly_roots_in,
)

SMALL_FIELDS = [(2, 1), (2, 4), (3, 2), (3, 3), (5, 2), (7, 1), (7, 2)]


@st.composite
def field_and_elements(draw, n=3):
    p, k = draw(st.sampled_from(SMALL_FIELDS))
    field = make_field(p, k)
    values = [draw(st.integers(0, field.order - 1)) for _ in range(n)]
    return field, values


class TestFieldConstruction(unittest.TestCase):
    def test_canonical_modulus(self):
        self.assertEqual(make_field(3, 2).modulus, (1, 0, 1))
        self.assertEqual(make_field(5, 2).modulus, (2, 0, 1))
        self.assertEqual(make_field(2, 2).modulus, (1, 1, 1))

    def test_galois_class_matches_scalars(self):
        field = make_field(3, 2)
        self.assertEqual(field.GF.order, 9)
        self.assertEqual(int(field.GF.primitive_element), field.primitive)
        self.assertEqual(field.order_of(field.primitive), 8)
        els = field.GF.elements
        table = (els[:, None] * els[None, :]).view(np.ndarray).tolist()
        for a in range(9):
            for b in range(9):
                self.assertEqual(table[a][b], field.mul(a, b))
                self.assertEqual(int(field.GF(a) + field.GF(b)), field.add(a, b))

    def test_make_field_is_cached(self):
        self.assertIs(make_field(3, 2), make_field(3, 2))

    def test_invalid_arguments(self):
        with self.assertRaises(NotPrime):
            FieldCtx(4, 1)
        with self.assertRaises(DegreeOutOfRange):
            FieldCtx(2, 0)
        with self.assertRaises(DegreeOutOfRange):
            FieldCtx(2, 19)
        with self.assertRaises(ValueError):
            FieldCtx(3, 2, modulus=(2, 0, 1))

    def test_json(self):
        field = make_field(5, 2)
        self.assertEqual(field.to_json(), {"p": 5, "k": 2, "modulus": [2, 0, 1]})
        self.assertIs(FieldCtx.from_json(field.to_json()), field)

    def test_coerce(self):
        field = make_field(3, 2)
        self.assertEqual(field.coerce(4), 1)
        self.assertEqual(field.coerce([0, 1]), 3)
        self.assertEqual(field.coerce(field.elem([2, 1])), 5)
        with self.assertRaises(CtxMismatch):
            field.coerce(make_field(5, 2).elem(1))
        with self.assertRaises(TypeError):
            field.coerce("t")


class TestFieldArithmetic(unittest.TestCase):
    def setUp(self):
        self.field = make_field(3, 2)
        self.t = self.field.elem([0, 1])

    def test_generator_squared(self):
        # t^2 + 1 = 0
        self.assertEqual(self.t * self.t, 2)
        self.assertEqual(list((self.t * self.t).coeffs), [2, 0])

    def test_orders(self):
        self.assertEqual(mult_order(self.t), 4)
        self.assertEqual(mult_order(self.field.elem(2)), 2)
        self.assertEqual(mult_order(FieldElem(self.field, self.field.primitive)), 8)
        with self.assertRaises(ZeroElement):
            mult_order(self.field.elem(0))

    def test_division_by_zero(self):
        zero = self.field.elem(0)
        with self.assertRaises(DivisionByZero):
            zero.inverse()
        with self.assertRaises(DivisionByZero):
            self.t / zero
        with self.assertRaises(DivisionByZero):
            zero ** -1

    def test_frobenius(self):
        self.assertEqual(self.t.frobenius(), -self.t)
        for x in self.field.elements().tolist():
            a = self.field.elem(x)
            self.assertEqual(a.frobenius(2), a)

    def test_field_arith(self):
        self.assertEqual(field_arith(self.t, 3, "pow"), self.t**3)
        self.assertEqual(field_arith(self.t, 1, "frobenius"), -self.t)
        self.assertEqual(field_arith(self.t, self.t, "div"), 1)
        self.assertEqual(field_arith(self.t, self.t, "sub"), 0)
        with self.assertRaises(ValueError):
            field_arith(self.t, self.t, "xor")
        with self.assertRaises(CtxMismatch):
            field_arith(self.t, make_field(5, 2).elem(1), "add")

    def test_root_of_unity(self):
        field = make_field(2, 4)
        for m in (1, 3, 5, 15):
            self.assertEqual(field.order_of(field.root_of_unity(m)), m)
        with self.assertRaises(ValueError):
            field.root_of_unity(7)

    def test_repr(self):
        self.assertEqual(repr(self.t + 1), "GF(3^2)(t + 1)")


class TestFieldAxioms(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.untabled = FieldCtx(2, 8, table_limit=1)

    @settings(max_examples=200, deadline=None)
    @given(field_and_elements())
    def test_ring_axioms(self, data):
        field, (a, b, c) = data
        a, b, c = (FieldElem(field, v) for v in (a, b, c))
        self.assertEqual(a * (b + c), a * b + a * c)
        self.assertEqual((a + b) - b, a)
        self.assertEqual(a * b, b * a)
        if a:
            self.assertEqual(a * a.inverse(), 1)
            self.assertEqual(a ** (field.order - 1), 1)

    @settings(max_examples=100, deadline=None)
    @given(field_and_elements(n=4))
    def test_vectorized_agrees(self, data):
        field, values = data
        xs = np.array(values, dtype=np.int64)
        ys = values[::-1]
        pairs = list(zip(values, ys))
        self.assertEqual(field.vmul(xs, ys).tolist(), [field.mul(a, b) for a, b in pairs])
        self.assertEqual(field.vadd(xs, ys).tolist(), [field.add(a, b) for a, b in pairs])
        self.assertEqual(field.vpow(xs, 5).tolist(), [field.pow(a, 5) for a in values])

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 255), st.integers(0, 255), st.integers(-20, 300))
    def test_untabled_field_agrees(self, a, b, e):
        tabled = make_field(2, 8)
        plain = self.untabled
        self.assertFalse(plain.tabled)
        self.assertEqual(plain.mul(a, b), tabled.mul(a, b))
        if a:
            self.assertEqual(plain.pow(a, e), tabled.pow(a, e))
            self.assertEqual(plain.inv(a), tabled.inv(a))
            self.assertEqual(plain.order_of(a), tabled.order_of(a))


class TestPolynomials(unittest.TestCase):
    def test_roots_with_multiplicity(self):
        field = make_field(5, 1)
        # (x - 1)^2 (x - 3)
        f = Poly(field, [4, 1]) * Poly(field, [4, 1]) * Poly(field, [2, 1])
        roots = poly_roots_in(f, field)
        self.assertEqual({int(r): m for r, m in roots.items()}, {1: 2, 3: 1})

    def test_roots_in_extension(self):
        base = make_field(3, 1)
        big = make_field(3, 2)
        # x^2 + 1 has no root in GF(3) and two in GF(9)
        f = Poly(base, [1, 0, 1])
        self.assertEqual(poly_roots_in(f, base), {})
        roots = poly_roots_in(f, big)
        self.assertEqual(len(roots), 2)
        for r, m in roots.items():
            self.assertEqual(m, 1)
            self.assertEqual(r * r, 2)

    def test_split_matches_scan(self):
        field = make_field(2, 6)
        f = Poly(field, [field.root_of_unity(7), 0, 0, 1])
        self.assertEqual(poly_roots_in(f, field, "split"), poly_roots_in(f, field, "scan"))

    def test_degree_too_high(self):
        field = make_field(3, 1)
        with self.assertRaises(DegreeTooHigh):
            poly_roots_in(Poly(field, [1, 0, 0, 0, 1]), field)

    def test_divmod(self):
        field = make_field(7, 1)
        f = Poly(field, [3, 0, 2, 1])
        g = Poly(field, [1, 1])
        quotient, remainder = divmod(f, g)
        self.assertEqual(quotient * g + remainder, f)
        self.assertLess(remainder.degree, 1)


class TestEmbedding(unittest.TestCase):
    def test_homomorphism(self):
        sub, sup = make_field(2, 2), make_field(2, 4)
        emb = embedding(sub, sup)
        for a in range(sub.order):
            for b in range(sub.order):
                self.assertEqual(emb.image(sub.mul(a, b)), sup.mul(emb.image(a), emb.image(b)))
                self.assertEqual(emb.image(sub.add(a, b)), sup.add(emb.image(a), emb.image(b)))
            self.assertEqual(emb.restrict(emb.image(a)), a)

    def test_generator_goes_to_root_of_modulus(self):
        sub, sup = make_field(3, 2), make_field(3, 4)
        t = embed(sub, sup, [0, 1])
        self.assertEqual(t * t + 1, 0)

    def test_not_a_subfield(self):
        with self.assertRaises(NotASubfield):
            embedding(make_field(2, 2), make_field(2, 3))
        with self.assertRaises(NotASubfield):
            embedding(make_field(3, 2), make_field(2, 4))
        sub, sup = make_field(2, 2), make_field(2, 4)
        outside = next(b for b in range(sup.order) if sup.pow(b, 4) != b)
        with self.assertRaises(NotASubfield):
            embedding(sub, sup).restrict(outside)
