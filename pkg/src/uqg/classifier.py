"""
Geometric classification of nontrivial elements of PGU(3, q).

Every nontrivial element falls into one of seven types, decided from its
projective order m and the number N of points of PG(2, q^2) it fixes:

====  ======================================  =====================
type  condition                               contribution ``i``
====  ======================================  =====================
A     p ∤ m, N = q^2 + 2, m | q+1             q + 1
B1    p ∤ m, N = 3, m | q+1, no vertex on H   0
B2    p ∤ m, N = 3, m ∤ q+1, 2 vertices on H  2
B3    p ∤ m, N = 0, m | q^2-q+1               3
C     m = p, N = q^2 + 1                      q + 2
D     m = p, or m in (2, 4) for p = 2, N = 1  2
E     m = p d, d > 1                          1
====  ======================================  =====================

H is the Hermitian curve and the vertices are those of the triangle fixed by
a B1 or B2 element. In characteristic 2 every involution is an elation, so
D elements there have order 4.

The contribution ``i`` is the number of points of the curve fixed by the
element, counted in the ramification formula.
"""
import logging
from collections import namedtuple

import numpy as np

from ._internal.debug_check_helpers import DebugLevel, debug_check
from .finite_field import make_field
from .geometry import (
    FieldTooLarge,
    ProjPoint,
    fixed_points,
    fixed_point_scan_limit,
    fixed_subspaces,
    on_curve,
)
from .group_engine import order_from_signature, proj_order, signature

logger = logging.getLogger("uqg")

ETYPES = ("A", "B1", "B2", "B3", "C", "D", "E")

#: Largest q for which GF(q^6) is built for vertex checks and the oracle.
ORACLE_MAX_Q = 9


class IdentityElement(ValueError):
    pass


class WildElement(ValueError):
    pass


class Unclassifiable(RuntimeError):
    pass


ElementClass = namedtuple("ElementClass", ["etype", "order", "i"])


def contribution(etype, q):
    return {"A": q + 1, "B1": 0, "B2": 2, "B3": 3, "C": q + 2, "D": 2, "E": 1}[etype]


def _fixed_count(sig, field_order):
    _, roots = sig
    return sum((field_order ** (3 - rank) - 1) // (field_order - 1) for _, _, rank in roots)


def vertices_on_curve(g):
    """How many vertices of the triangle fixed by ``g`` lie on the curve."""
    model = g.model
    vertices = [basis[0] for _, basis in fixed_subspaces(g)]
    if len(vertices) != 3:
        raise Unclassifiable("Element {} fixes no triangle".format(g))
    return sum(on_curve(ProjPoint(model.field, v), model) for v in vertices)


def decide(model, sig, order, vertices=None):
    """
    The type of an element from its signature and projective order.

    For elements fixing a triangle, ``vertices`` is the number of its vertices
    on the curve: none for B1 and two for B2. It must agree with the order
    test. The triangle is left unchecked when ``vertices`` is None.
    """
    q, p = model.q, model.p
    n_fixed = _fixed_count(sig, model.field.order)
    m = order

    etype = None
    if m % p == 0:
        if m == p and n_fixed == q**2 + 1:
            etype = "C"
        elif (m in (p, 4) if p == 2 else m == p) and n_fixed == 1:
            etype = "D"
        elif m // p > 1 and (m // p) % p and (q + 1) % (m // p) == 0 and n_fixed == 2:
            etype = "E"
    elif n_fixed == q**2 + 2 and (q + 1) % m == 0:
        etype = "A"
    elif n_fixed == 3:
        if (q + 1) % m == 0:
            etype = "B1"
        elif (q**2 - 1) % m == 0:
            etype = "B2"
        if vertices is not None and etype != {0: "B1", 2: "B2"}.get(vertices):
            raise Unclassifiable(
                "Element of order {} fixes a triangle with {} vertices on the curve".format(
                    m, vertices
                )
            )
    elif n_fixed == 0 and (q**2 - q + 1) % m == 0:
        etype = "B3"

    if etype is None:
        raise Unclassifiable(
            "No type for an element of order {} fixing {} points of PG(2, {}) "
            "(signature {})".format(m, n_fixed, q**2, sig)
        )
    return etype


class Classifier:
    """
    Classifies group elements, memoizing decisions on their signatures.

    Expensive cross-validation runs as debug checks, see
    :mod:`uqg._internal.debug_check_helpers`.
    """

    #: Debug level, or a callable ``(level, qualname) -> bool``, enabling checks.
    debug_check_level = DebugLevel.NONE

    #: Extra keyword arguments per debug check, keyed by qualified name.
    debug_check_options = {}

    _default = None

    def __init__(self, debug_check_level=None, debug_check_options=None):
        self._debug_check_level = (
            self.debug_check_level if debug_check_level is None else debug_check_level
        )
        self._debug_check_options = dict(
            self.debug_check_options if debug_check_options is None else debug_check_options
        )
        self._memo = {}

    @classmethod
    def default(cls):
        if cls._default is None:
            cls._default = cls()
        return cls._default

    def classify(self, g, sig=None):
        if g.is_identity():
            raise IdentityElement("The identity has no type")
        if sig is None:
            sig = signature(g)
        key = (g.model.key, sig)
        hit = self._memo.get(key)
        if hit is None:
            order = order_from_signature(g, sig)
            vertices = None
            if _fixed_count(sig, g.model.field.order) == 3:
                vertices = vertices_on_curve(g)
            hit = (decide(g.model, sig, order, vertices), order)
            self._memo[key] = hit
            logger.debug("Classified signature {} as {} of order {}".format(sig, *hit))
        etype, order = hit
        cls = ElementClass(etype, order, contribution(etype, g.model.q))
        self.check_vertices(g, cls)
        self.check_fixed_points(g)
        return cls

    def classify_group(self, group):
        """Classes of all nontrivial elements of a :class:`GeneratedGroup`, in element order."""
        out = []
        for g, sig in zip(group, group.signatures()):
            if not g.is_identity():
                out.append(self.classify(g, sig))
        return out

    @debug_check(DebugLevel.MEDIUM)
    def check_vertices(self, g, cls):
        """B3 elements fix a triangle over GF(q^6) with all three vertices on the curve."""
        model = g.model
        if cls.etype != "B3" or model.q > ORACLE_MAX_Q:
            return
        big = make_field(model.p, 6 * model.n)
        vertices = [basis[0] for _, basis in fixed_subspaces(g, big)]
        if len(vertices) != 3:
            raise Unclassifiable("B3 element without a fixed triangle: {}".format(g))
        on = sum(on_curve(ProjPoint(big, v), model) for v in vertices)
        if on != 3:
            raise Unclassifiable(
                "Element {} classified {} has {} vertices on the curve".format(g, cls.etype, on)
            )

    @debug_check(DebugLevel.HIGH)
    def check_fixed_points(self, g):
        if g.model.field.order > fixed_point_scan_limit:
            return
        eigen = fixed_points(g, method="eigen")
        scan = fixed_points(g, method="scan")
        if eigen != scan:
            raise Unclassifiable(
                "Eigenspace and scan disagree on the fixed points of {}".format(g)
            )


def classify(g):
    return Classifier.default().classify(g)


def _line_points_on_curve(model, field, u, v):
    els = field.elements()
    mul, add = field.vmul, field.vadd
    xs, ys, zs = (add(u[i], mul(els, v[i])) for i in range(3))
    count = int(np.count_nonzero(model.evaluate_all(field, xs, ys, zs) == 0))
    return count + (model.evaluate(field, *v) == 0)


def tame_oracle(g):
    """
    Count the points of the curve over GF(q^6) fixed by a tame element.

    This is computed independently of :func:`classify` and must equal the
    contribution ``i`` of the element's type.
    """
    model = g.model
    if g.is_identity():
        raise IdentityElement("The identity fixes every point")
    if proj_order(g) % model.p == 0:
        raise WildElement("Element of order divisible by {} is not tame".format(model.p))
    if model.q > ORACLE_MAX_Q:
        raise FieldTooLarge("The oracle builds GF(q^6) only for q <= {}".format(ORACLE_MAX_Q))
    big = make_field(model.p, 6 * model.n)
    count = 0
    for _, basis in fixed_subspaces(g, big):
        if len(basis) == 1:
            count += on_curve(ProjPoint(big, basis[0]), model)
        elif len(basis) == 2:
            count += _line_points_on_curve(model, big, *basis)
        else:
            raise IdentityElement("Scalar matrix passed to the oracle")
    return count
