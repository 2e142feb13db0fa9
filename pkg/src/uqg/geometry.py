"""
Models of the Hermitian curve and the projective plane they live in.

Three models of H_q are supported, each given by a 3x3 Gram matrix G so that
the curve is the set of points P with P^T G P^(q) = 0, where P^(q) raises each
coordinate to the q-th power:

* ``fermat``: X^(q+1) + Y^(q+1) + Z^(q+1) = 0
* ``norm_trace``: X^q Z + X Z^q - Y^(q+1) = 0
* ``m3``: X Y^q - Y X^q + w Z^(q+1) = 0 with w^(q-1) = -1
"""
import logging
from functools import lru_cache

import numpy as np
import sympy

from ._internal import matrix_helpers as mh
from .finite_field import CtxMismatch, NotASubfield, Poly, embedding, make_field, poly_roots_in

logger = logging.getLogger("uqg")

MODELS = ("fermat", "norm_trace", "m3")

#: Largest field order for which fixed points are found by scanning the plane.
fixed_point_scan_limit = 1024

#: Largest field order for which the plane may be enumerated point by point.
plane_limit = 10**6


class FieldMismatch(ValueError):
    pass


class FieldTooLarge(ValueError):
    pass


class NotAPrimePower(ValueError):
    pass


def prime_power(q):
    """Split q = p^n, raising NotAPrimePower otherwise."""
    q = int(q)
    factors = sympy.factorint(q) if q > 1 else {}
    if len(factors) != 1:
        raise NotAPrimePower("{} is not a prime power".format(q))
    ((p, n),) = factors.items()
    return p, n


class ProjPoint:
    """A point of PG(2, F), normalized so that its first nonzero coordinate is 1."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        coords = tuple(field.coerce(c) if not isinstance(c, int) else c for c in coords)
        if len(coords) != 3 or not any(coords):
            raise ValueError("A projective point needs three coordinates, not all zero")
        self.field = field
        self.coords = mh.normalize(field, coords)

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field.key, self.coords))

    def __repr__(self):
        return "({})".format(":".join(repr(self.field.elem(c)) for c in self.coords))

    def to_json(self):
        return [self.field.coeffs(c) for c in self.coords]


class HermitianModel:
    def __init__(self, tag, q):
        if tag not in MODELS:
            raise ValueError("Unknown model '{}', expected one of {}".format(tag, MODELS))
        p, n = prime_power(q)
        self.tag = tag
        self.q = q
        self.p = p
        self.n = n
        self.field = make_field(p, 2 * n)
        self.key = (tag, q)

        field = self.field
        minus_one = field.neg(1)
        self.omega = next(w for w in range(1, field.order) if field.pow(w, q - 1) == minus_one)
        if tag == "fermat":
            self.gram = mh.IDENTITY
        elif tag == "norm_trace":
            self.gram = (0, 0, 1, 0, minus_one, 0, 1, 0, 0)
        else:
            self.gram = (0, 1, 0, minus_one, 0, 0, 0, 0, self.omega)

    def __repr__(self):
        return "HermitianModel('{}', {})".format(self.tag, self.q)

    def __eq__(self, other):
        return isinstance(other, HermitianModel) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @property
    def genus(self):
        return self.q * (self.q - 1) // 2

    @property
    def point_count(self):
        return self.q**3 + 1

    def lift(self, field):
        """Embedding of the model's coefficient field GF(q^2) into ``field``."""
        try:
            return embedding(self.field, field)
        except NotASubfield:
            raise FieldMismatch("{} does not contain {}".format(field, self.field))

    def form(self, u, v, field=None):
        """The sesquilinear form u^T G v^(q) on coordinate tuples over ``field``."""
        field = field or self.field
        gram = self.gram
        if field != self.field:
            gram = tuple(self.lift(field).image(x) for x in gram)
        vq = tuple(field.pow(x, self.q) for x in v)
        terms = (
            field.mul(u[i], field.mul(gram[3 * i + j], vq[j])) for i in range(3) for j in range(3)
        )
        return sum_field(field, terms)

    def evaluate(self, field, x, y, z):
        """The defining polynomial at integer-encoded coordinates over ``field``."""
        q = self.q
        pw, mul, add, sub = field.pow, field.mul, field.add, field.sub
        if self.tag == "fermat":
            return add(add(pw(x, q + 1), pw(y, q + 1)), pw(z, q + 1))
        if self.tag == "norm_trace":
            return sub(add(mul(pw(x, q), z), mul(x, pw(z, q))), pw(y, q + 1))
        omega = self.omega if field == self.field else self.lift(field).image(self.omega)
        return add(sub(mul(x, pw(y, q)), mul(y, pw(x, q))), mul(omega, pw(z, q + 1)))

    def evaluate_all(self, field, x, y, z):
        """Vectorized :meth:`evaluate` over arrays of encodings."""
        q = self.q
        pw, mul, add, sub = field.vpow, field.vmul, field.vadd, field.vsub
        if self.tag == "fermat":
            return add(add(pw(x, q + 1), pw(y, q + 1)), pw(z, q + 1))
        if self.tag == "norm_trace":
            return sub(add(mul(pw(x, q), z), mul(x, pw(z, q))), pw(y, q + 1))
        omega = self.omega if field == self.field else self.lift(field).image(self.omega)
        return add(sub(mul(x, pw(y, q)), mul(y, pw(x, q))), mul(omega, pw(z, q + 1)))


def sum_field(field, values):
    acc = 0
    for v in values:
        acc = field.add(acc, v)
    return acc


@lru_cache(maxsize=None)
def get_model(tag, q):
    return HermitianModel(tag, q)


def on_curve(point, model):
    """Whether ``point`` (over any field containing GF(q^2)) lies on ``model``."""
    if point.field != model.field and (
        point.field.p != model.p or point.field.k % model.field.k
    ):
        raise FieldMismatch("{} does not contain {}".format(point.field, model.field))
    return model.evaluate(point.field, *point.coords) == 0


def _plane_arrays(field):
    els = field.elements()
    n = field.order
    ones = np.ones(n * n, dtype=np.int64)
    x = np.concatenate([ones, np.zeros(n + 1, dtype=np.int64)])
    y = np.concatenate([np.repeat(els, n), np.ones(n, dtype=np.int64), [0]])
    z = np.concatenate([np.tile(els, n), els, [1]])
    return x, y, z


def _iter_plane(field):
    n = field.order
    for y in range(n):
        for z in range(n):
            yield ProjPoint(field, (1, y, z))
    for z in range(n):
        yield ProjPoint(field, (0, 1, z))
    yield ProjPoint(field, (0, 0, 1))


def scan_plane(field):
    """All |F|^2 + |F| + 1 points of PG(2, F) in a fixed order."""
    if field.order > plane_limit:
        raise FieldTooLarge("Refusing to enumerate PG(2, {})".format(field))
    return _iter_plane(field)


def curve_points(model, field=None):
    """The points of the curve over ``field`` (default GF(q^2)), in plane order."""
    field = field or model.field
    if field.order > plane_limit:
        raise FieldTooLarge("Refusing to enumerate PG(2, {})".format(field))
    els = field.elements()
    points = []
    for y in range(field.order):
        ys = np.full(field.order, y, dtype=np.int64)
        vals = model.evaluate_all(field, np.ones(field.order, dtype=np.int64), ys, els)
        points.extend(ProjPoint(field, (1, y, int(z))) for z in np.flatnonzero(vals == 0))
    vals = model.evaluate_all(
        field, np.zeros(field.order, dtype=np.int64), np.ones(field.order, dtype=np.int64), els
    )
    points.extend(ProjPoint(field, (0, 1, int(z))) for z in np.flatnonzero(vals == 0))
    if model.evaluate(field, 0, 0, 1) == 0:
        points.append(ProjPoint(field, (0, 0, 1)))
    return points


def _lifted_matrix(g, field):
    model = g.model
    if field == model.field:
        return g.mat
    emb = model.lift(field)
    return tuple(emb.image(x) for x in g.mat)


def fixed_subspaces(g, field=None):
    """
    The eigenspaces of the matrix of ``g`` over ``field``.

    :returns: list of ``(eigenvalue, basis)`` pairs, eigenvalues ascending.
    """
    model = g.model
    field = field or model.field
    mat = _lifted_matrix(g, field)
    cp = Poly(model.field, mh.char_poly(model.field, g.mat))
    try:
        roots = poly_roots_in(cp, field)
    except (NotASubfield, CtxMismatch):
        raise FieldMismatch("{} does not contain {}".format(field, model.field))
    return [
        (lam.value, mh.nullspace(field, mh.minus_scalar(field, mat, lam.value)))
        for lam in sorted(roots, key=lambda e: e.value)
    ]


def fixed_point_count(g, field=None):
    field = field or g.model.field
    n = field.order
    return sum((n ** len(basis) - 1) // (n - 1) for _, basis in fixed_subspaces(g, field))


def _span_points(field, basis):
    if len(basis) == 1:
        return [ProjPoint(field, basis[0])]
    if len(basis) == 2:
        u, v = basis
        points = [ProjPoint(field, v)]
        for s in range(field.order):
            sv = tuple(field.mul(s, c) for c in v)
            points.append(ProjPoint(field, tuple(field.add(a, b) for a, b in zip(u, sv))))
        return points
    return list(scan_plane(field))


def _scan_fixed_points(g, field):
    if field.order > fixed_point_scan_limit:
        raise FieldTooLarge(
            "Fixed point scan over {} exceeds {}".format(field, fixed_point_scan_limit)
        )
    mat = _lifted_matrix(g, field)
    x, y, z = _plane_arrays(field)
    mul, add, sub = field.vmul, field.vadd, field.vsub
    w = [
        add(add(mul(mat[3 * i], x), mul(mat[3 * i + 1], y)), mul(mat[3 * i + 2], z))
        for i in range(3)
    ]
    c0 = sub(mul(w[1], z), mul(w[2], y))
    c1 = sub(mul(w[2], x), mul(w[0], z))
    c2 = sub(mul(w[0], y), mul(w[1], x))
    hits = np.flatnonzero((c0 == 0) & (c1 == 0) & (c2 == 0))
    return {ProjPoint(field, (int(x[i]), int(y[i]), int(z[i]))) for i in hits}


def fixed_points(g, field=None, method="eigen"):
    """
    The points of PG(2, field) fixed by ``g``.

    ``method`` is ``eigen`` (eigenspaces of the matrix) or ``scan`` (test every
    point, limited to :data:`fixed_point_scan_limit` field elements).
    """
    field = field or g.model.field
    if method == "scan":
        return _scan_fixed_points(g, field)
    if method != "eigen":
        raise ValueError("Unknown fixed point method '{}'".format(method))
    points = set()
    for _, basis in fixed_subspaces(g, field):
        if len(basis) == 3 and field.order > plane_limit:
            raise FieldTooLarge("Refusing to enumerate PG(2, {})".format(field))
        points.update(_span_points(field, basis))
    return points
