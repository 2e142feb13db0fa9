"""
Projective unitary matrices and the finite groups they generate.

A :class:`GroupElem` is a 3x3 matrix over GF(q^2), scaled so that its first
nonzero entry is 1, together with the Hermitian model it preserves. Equal
projective transformations therefore have equal representations.
"""
import json
import logging
from collections import Counter

import numpy as np

from ._internal import matrix_helpers as mh
from ._internal.caching import cached
from .finite_field import DivisionByZero, Poly, _roots
from .geometry import NotAPrimePower, get_model, prime_power  # noqa: F401

logger = logging.getLogger("uqg")


class SingularMatrix(ValueError):
    pass


class NotUnitary(ValueError):
    pass


class MixedContext(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


class OrderCapExceeded(RuntimeError):
    pass


def pgu_order(q):
    return (q**3 + 1) * q**3 * (q**2 - 1)


def is_unitary(mat, model):
    """
    Whether ``mat`` (flat tuple of encodings) preserves the form of ``model``
    up to a scalar, i.e. mat^T G mat^(q) = lambda G.

    :returns: ``(unitary, lambda)``, with lambda None when not unitary.
    """
    field = model.field
    if mh.det3(field, mat) == 0:
        raise SingularMatrix("Matrix {} is singular".format(mat))
    left = mh.mat_mul(field, mh.transpose(mat), model.gram)
    lhs = mh.mat_mul(field, left, mh.entrywise_pow(field, mat, model.q))
    i = next(i for i, x in enumerate(model.gram) if x)
    lam = field.div(lhs[i], model.gram[i])
    if lhs == mh.scale(field, model.gram, lam):
        return True, lam
    return False, None


class GroupElem:
    __slots__ = ("model", "mat")

    def __init__(self, model, mat):
        # Trusted constructor: mat is already normalized
        self.model = model
        self.mat = mat

    @classmethod
    def from_flat(cls, model, flat, check=True):
        """Build from nine integer encodings in GF(q^2), row-major."""
        field = model.field
        flat = tuple(int(x) for x in flat)
        if len(flat) != 9:
            raise ValueError("Expected 9 entries, got {}".format(len(flat)))
        if check:
            unitary, _ = is_unitary(flat, model)
            if not unitary:
                raise NotUnitary("Matrix does not preserve the {} form".format(model.tag))
        elif mh.det3(field, flat) == 0:
            raise SingularMatrix("Matrix {} is singular".format(flat))
        return cls(model, mh.normalize(field, flat))

    @classmethod
    def from_rows(cls, model, rows, check=True):
        """
        Build from a 3x3 nested list whose entries are FieldElems, integers of
        the prime field, or coefficient vectors.
        """
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Expected a 3x3 matrix")
        field = model.field
        return cls.from_flat(model, [field.coerce(x) for r in rows for x in r], check=check)

    @property
    def field(self):
        return self.model.field

    def _check(self, other):
        if not isinstance(other, GroupElem) or other.model != self.model:
            raise MixedContext("Cannot combine elements of {} and {}".format(self.model, other))

    def __mul__(self, other):
        self._check(other)
        prod = mh.mat_mul(self.field, self.mat, other.mat)
        return GroupElem(self.model, mh.normalize(self.field, prod))

    def inverse(self):
        try:
            inv = mh.inverse3(self.field, self.mat)
        except DivisionByZero:
            raise SingularMatrix("Matrix {} is singular".format(self.mat))
        return GroupElem(self.model, mh.normalize(self.field, inv))

    def __pow__(self, e):
        base = self if e >= 0 else self.inverse()
        e = abs(int(e))
        result = GroupElem(self.model, mh.IDENTITY)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_identity(self):
        return self.mat == mh.IDENTITY

    def __eq__(self, other):
        return isinstance(other, GroupElem) and self.model == other.model and self.mat == other.mat

    def __hash__(self):
        return hash((self.model.key, self.mat))

    def rows(self):
        f = self.field
        return [[f.elem(self.mat[3 * i + j]) for j in range(3)] for i in range(3)]

    def to_json(self):
        f = self.field
        return [[f.coeffs(self.mat[3 * i + j]) for j in range(3)] for i in range(3)]

    def __repr__(self):
        return "GroupElem({}, {})".format(self.model.tag, self.rows())


def identity(model):
    return GroupElem(model, mh.IDENTITY)


def conjugate(g, h):
    """h^-1 g h."""
    return h.inverse() * g * h


def proj_order(g, cap=None):
    """The least n >= 1 with g^n scalar."""
    q, p = g.model.q, g.model.p
    if cap is None:
        cap = 2 * p * (q**2 - 1)
    power = g
    for n in range(1, cap + 1):
        if power.is_identity():
            return n
        power = power * g
    raise OrderCapExceeded("No order found within {} steps".format(cap))


def _rank_after_shift(field, arr, lam):
    """Vectorized rank of (M - lam I) for rows of an (N, 9) array with det(M - lam I) = 0."""
    a = arr.copy()
    for i in (0, 4, 8):
        a[:, i] = field.vsub(a[:, i], lam)
    zero = np.all(a == 0, axis=1)
    minors_zero = np.ones(len(a), dtype=bool)
    for r0, r1 in ((0, 1), (0, 2), (1, 2)):
        for c0, c1 in ((0, 1), (0, 2), (1, 2)):
            m = field.vsub(
                field.vmul(a[:, 3 * r0 + c0], a[:, 3 * r1 + c1]),
                field.vmul(a[:, 3 * r0 + c1], a[:, 3 * r1 + c0]),
            )
            minors_zero &= m == 0
    return np.where(zero, 0, np.where(minors_zero, 1, 2))


def batch_signatures(model, arr):
    """
    Classification keys for the rows of an (N, 9) array of normalized matrices.

    A signature is the characteristic polynomial together with, for each
    eigenvalue in GF(q^2), its multiplicity and the rank of M - lambda I. Two
    normalized matrices with equal signatures have the same Jordan form, hence
    the same projective order and the same fixed point structure.
    """
    field = model.field
    arr = np.asarray(arr, dtype=np.int64).reshape(-1, 9)
    a = [arr[:, i] for i in range(9)]
    mul, add, sub = field.vmul, field.vadd, field.vsub
    trace = add(add(a[0], a[4]), a[8])
    minors = add(
        add(sub(mul(a[0], a[4]), mul(a[1], a[3])), sub(mul(a[0], a[8]), mul(a[2], a[6]))),
        sub(mul(a[4], a[8]), mul(a[5], a[7])),
    )
    det = add(
        sub(
            mul(a[0], sub(mul(a[4], a[8]), mul(a[5], a[7]))),
            mul(a[1], sub(mul(a[3], a[8]), mul(a[5], a[6]))),
        ),
        mul(a[2], sub(mul(a[3], a[7]), mul(a[4], a[6]))),
    )
    keys = np.stack([det, minors, trace], axis=1)
    uniq, inverse = np.unique(keys, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)

    sigs = [None] * len(arr)
    for u, (d, m, t) in enumerate(uniq.tolist()):
        cp = (field.neg(d), m, field.neg(t), 1)
        roots = _roots(Poly(field, cp))
        members = np.flatnonzero(inverse == u)
        columns = []
        for lam, mult in roots.items():
            if mult == 1:
                ranks = np.full(len(members), 2)
            else:
                ranks = _rank_after_shift(field, arr[members], lam)
            columns.append((lam, mult, ranks))
        for j, idx in enumerate(members.tolist()):
            sigs[idx] = (cp, tuple((lam, mult, int(ranks[j])) for lam, mult, ranks in columns))
    return sigs


def signature(g):
    return batch_signatures(g.model, np.array([g.mat], dtype=np.int64))[0]


_order_memo = {}


def order_from_signature(g, sig=None):
    """Projective order of g, memoized on its signature."""
    if sig is None:
        sig = signature(g)
    key = (g.model.key, sig)
    order = _order_memo.get(key)
    if order is None:
        order = proj_order(g)
        _order_memo[key] = order
    return order


class GeneratedGroup:
    """
    The finite group generated by a set of :class:`GroupElem` of one model.

    Elements are kept as an (N, 9) array of normalized matrices, in the order
    the breadth-first closure discovered them, with the identity first.
    """

    def __init__(self, model, generators, array, index):
        self.model = model
        self.generators = list(generators)
        self.array = array
        self._index = index

    @property
    def order(self):
        return len(self.array)

    def __len__(self):
        return len(self.array)

    def __contains__(self, g):
        return g.model == self.model and g.mat in self._index

    def __iter__(self):
        for row in self.array.tolist():
            yield GroupElem(self.model, tuple(row))

    @property
    def elements(self):
        return list(self)

    @cached
    def signatures(self):
        return batch_signatures(self.model, self.array)

    @cached
    def census(self):
        """Element-order statistics: order -> number of elements."""
        counts = Counter()
        for row, sig in zip(self.array.tolist(), self.signatures()):
            counts[order_from_signature(GroupElem(self.model, tuple(row)), sig)] += 1
        return dict(sorted(counts.items()))

    @cached
    def classes(self):
        """The :class:`~uqg.classifier.ElementClass` of each nontrivial element, in order."""
        from .classifier import Classifier

        return Classifier.default().classify_group(self)

    @cached
    def genus_report(self):
        from .genus_engine import quotient_genus

        return quotient_genus(self)


def closure(generators, cap=10**6):
    """Breadth-first closure of ``generators``, deterministic for a fixed generator order."""
    generators = list(generators)
    if not generators:
        raise ValueError("At least one generator is required")
    model = generators[0].model
    for g in generators[1:]:
        if g.model != model:
            raise MixedContext("Generators over {} and {}".format(model, g.model))
    field = model.field

    mats = []
    for g in generators:
        if g.mat not in mats:
            mats.append(g.mat)

    index = {mh.IDENTITY: 0}
    rows = [mh.IDENTITY]
    frontier = np.array([mh.IDENTITY], dtype=np.int64)
    while len(frontier):
        new = []
        for b in mats:
            products = mh.batch_normalize(field, mh.batch_mul(field, frontier, b))
            for row in map(tuple, products.tolist()):
                if row not in index:
                    index[row] = len(rows)
                    rows.append(row)
                    new.append(row)
                    if len(rows) > cap:
                        raise CapExceeded("Closure exceeds {} elements".format(cap))
        frontier = np.array(new, dtype=np.int64).reshape(-1, 9)
    logger.debug(
        "Closure of {} generators over {}: {} elements".format(len(mats), model, len(rows))
    )
    return GeneratedGroup(model, generators, np.array(rows, dtype=np.int64), index)


def census(group):
    return group.census()


def generators_to_json(model, generators, provenance=None):
    d = {
        "q": model.q,
        "model": model.tag,
        "generators": [g.to_json() for g in generators],
    }
    if provenance is not None:
        d["provenance"] = provenance
    return d


def generators_from_json(d):
    """:returns: ``(model, generators, provenance)``"""
    model = get_model(d["model"], int(d["q"]))
    gens = [GroupElem.from_rows(model, rows) for rows in d["generators"]]
    return model, gens, d.get("provenance")


def read_generator_file(path):
    with open(path) as f:
        return generators_from_json(json.load(f))


def write_generator_file(path, model, generators, provenance=None):
    with open(path, "w") as f:
        json.dump(generators_to_json(model, generators, provenance), f, indent=2, sort_keys=True)
        f.write("\n")
