"""
Explicit subgroups of PGU(3, q).

Elements are built on whichever model makes them simplest to write down:

* ``fermat``: diagonal maps and coordinate permutations,
* ``norm_trace``: the Sylow p-subgroup fixing (1:0:0), tori and the swap of
  (1:0:0) and (0:0:1),
* ``m3``: the maximal subgroup M_q = SL(2, q) x| C_(q+1) fixing (0:0:1).

Every *recipe* is a function ``(q, **params) -> (model, generators)``;
:data:`RECIPES` maps recipe names to them and :func:`primitive_recipes`
turns one into a generator file.
"""
import logging
import random
from functools import lru_cache

import numpy as np
import sympy

from ._internal import matrix_helpers as mh
from .finite_field import Poly, _roots
from .formula_catalog import HypothesisViolated
from .geometry import get_model, prime_power
from .group_engine import (
    CapExceeded,
    GroupElem,
    OrderCapExceeded,
    closure,
    generators_to_json,
    identity,
    proj_order,
    write_generator_file,
)

logger = logging.getLogger("uqg")


class SearchFailed(RuntimeError):
    pass


class NotFound(RuntimeError):
    pass


# Field helpers


def subfield_elements(field, r):
    """Sorted encodings of the subfield GF(r) of ``field``."""
    els = field.elements()
    return [int(x) for x in els[field.vpow(els, r) == els]]


def fp_span(field, gens):
    span = {0}
    for g in gens:
        multiples = [field.mul(c, g) for c in range(field.p)]
        span = {field.add(s, m) for s in span for m in multiples}
    return span


def fp_basis(field, elems):
    """Greedy GF(p)-basis of the span of ``elems``, taken in the given order."""
    basis, span = [], {0}
    for x in elems:
        if x not in span:
            basis.append(x)
            span = fp_span(field, basis)
    return basis


def trace_kernel(model):
    """The c in GF(q^2) with c^q + c = 0, ascending."""
    field, q = model.field, model.q
    els = field.elements()
    return [int(c) for c in np.flatnonzero(field.vadd(field.vpow(els, q), els) == 0)]


def translation_constant(model, b, within=None):
    """The least c with c^q + c = b^(q+1), optionally restricted to the set ``within``."""
    field, q = model.field, model.q
    els = field.elements()
    hits = np.flatnonzero(field.vadd(field.vpow(els, q), els) == field.pow(b, q + 1))
    for c in hits.tolist():
        if within is None or c in within:
            return c
    raise SearchFailed("No c with c^q + c = b^(q+1) for b = {}".format(field.elem(b)))


def _require(condition, message, *args):
    if not condition:
        raise HypothesisViolated(message.format(*args))


def _subfield_order(q, qbar):
    p, n = prime_power(q)
    pb, k = prime_power(qbar)
    _require(pb == p and n % k == 0, "GF({}) is not a subfield of GF({})", qbar, q)
    return n // k


def _elem(model, flat):
    return GroupElem.from_flat(model, flat)


def _diag(model, a, b, c=1):
    return _elem(model, (a, 0, 0, 0, b, 0, 0, 0, c))


# Single elements


def homology(q, m, power=1):
    """diag(z^power, 1, 1) on the fermat model, z of order m | q+1: type A."""
    _require(m > 1 and (q + 1) % m == 0, "Homology order {} must divide q+1 = {}", m, q + 1)
    model = get_model("fermat", q)
    zeta = model.field.root_of_unity(m)
    return _diag(model, model.field.pow(zeta, power), 1)


def diagonal(q, a, b, order):
    """diag(l^a, l^b, 1) on the fermat model, l of order ``order`` | q+1."""
    _require((q + 1) % order == 0, "Order {} must divide q+1 = {}", order, q + 1)
    model = get_model("fermat", q)
    f = model.field
    lam = f.root_of_unity(order)
    return _diag(model, f.pow(lam, a), f.pow(lam, b))


def fermat_swap(q):
    return _elem(get_model("fermat", q), (0, 1, 0, 1, 0, 0, 0, 0, 1))


def fermat_twist(q):
    model = get_model("fermat", q)
    return _elem(model, (0, 1, 0, model.field.neg(1), 0, 0, 0, 0, 1))


def fermat_cycle(q):
    return _elem(get_model("fermat", q), (0, 1, 0, 0, 0, 1, 1, 0, 0))


def elation(q, c=None):
    """[[1,0,c],[0,1,0],[0,0,1]] on the norm-trace model with c^q + c = 0: type C."""
    model = get_model("norm_trace", q)
    if c is None:
        c = trace_kernel(model)[1]
    _require(
        c and model.field.add(model.field.pow(c, q), c) == 0,
        "Elation parameter must be a nonzero root of c^q + c",
    )
    return _elem(model, (1, 0, c, 0, 1, 0, 0, 0, 1))


def translation(q, b=1, c=None):
    """T(b, c) = [[1,b^q,c],[0,1,b],[0,0,1]] on the norm-trace model."""
    model = get_model("norm_trace", q)
    f = model.field
    if c is None:
        c = translation_constant(model, b)
    _require(
        f.add(f.pow(c, q), c) == f.pow(b, q + 1),
        "T(b, c) needs c^q + c = b^(q+1)",
    )
    return _elem(model, (1, f.pow(b, q), c, 0, 1, b, 0, 0, 1))


def torus(q, m, power=1):
    """diag(v^(q+1), v, 1) on the norm-trace model, v of order m | q^2-1."""
    _require((q * q - 1) % m == 0, "Torus order {} must divide q^2-1", m)
    model = get_model("norm_trace", q)
    f = model.field
    v = f.pow(f.root_of_unity(m), power)
    return _diag(model, f.pow(v, q + 1), v)


def norm_trace_swap(q):
    return _elem(get_model("norm_trace", q), (0, 0, 1, 0, 1, 0, 1, 0, 0))


def e_element(q, d):
    """An elation times a commuting homology of order d | q+1: type E of order p d."""
    _require(d > 1 and (q + 1) % d == 0, "E element needs 1 < d | q+1, got d = {}", d)
    model = get_model("norm_trace", q)
    v = model.field.root_of_unity(d)
    return elation(q) * _diag(model, 1, v)


def transvections(q, values, lower=False):
    model = get_model("m3", q)
    if lower:
        return [_elem(model, (1, 0, 0, a, 1, 0, 0, 0, 1)) for a in values]
    return [_elem(model, (1, a, 0, 0, 1, 0, 0, 0, 1)) for a in values]


def m3_diagonal(q, mu):
    """diag(mu, mu^-1, 1) on the m3 model, mu in GF(q)."""
    model = get_model("m3", q)
    return _diag(model, mu, model.field.inv(mu))


def m3_twist(q):
    model = get_model("m3", q)
    return _elem(model, (0, 1, 0, model.field.neg(1), 0, 0, 0, 0, 1))


def mq_complement(q):
    """
    The homology of order q+1 with centre (1:e:0) and axis through (1:e^q:0),
    e primitive in GF(q^2). It generates a complement of SL(2, q) in M_q.
    """
    model = get_model("m3", q)
    f = model.field
    e = f.primitive
    eq = f.pow(e, q)
    mu = f.root_of_unity(q + 1)
    kappa = f.div(f.sub(mu, 1), f.sub(eq, e))
    c = (1, e, 0)
    w = (eq, f.neg(1), 0)
    flat = tuple(
        f.add(mh.IDENTITY[3 * i + j], f.mul(kappa, f.mul(c[i], w[j])))
        for i in range(3)
        for j in range(3)
    )
    return _elem(model, flat)


def mq_alpha(q):
    """
    The complement matrix [[0, e^-1, 0], [-e^q, 1 + e^(q+1), 0], [0, 0, 1]], built
    without a unitarity check. It preserves the form only for q = 3.
    """
    model = get_model("m3", q)
    f = model.field
    e = f.primitive
    flat = (0, f.inv(e), 0, f.neg(f.pow(e, q)), f.add(1, f.pow(e, q + 1)), 0, 0, 0, 1)
    return GroupElem.from_flat(model, flat, check=False)


# Singer cycles


def _first_irreducible_cubic(field):
    big = field.order
    for n in range(big**3):
        c0, c1, c2 = n % big, (n // big) % big, n // big**2
        if not c0:
            continue
        cubic = Poly(field, [c0, c1, c2, 1])
        if not _roots(cubic):
            return cubic
    raise SearchFailed("No irreducible cubic over {}".format(field))


def _coords(poly):
    return tuple(poly.coeffs) + (0,) * (3 - len(poly.coeffs))


def _hermitian_orthonormal_basis(field, q, form):
    """Congruence diagonalization of a nondegenerate Hermitian form to the identity."""

    def comb(u, s, v):
        return tuple(field.add(a, field.mul(s, b)) for a, b in zip(u, v))

    vecs = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    out = []
    while vecs:
        idx = next((i for i, v in enumerate(vecs) if form(v, v)), None)
        if idx is None:
            pairs = (
                (i, comb(vecs[i], s, vecs[j]))
                for i in range(len(vecs))
                for j in range(len(vecs))
                if i != j
                for s in range(1, field.order)
            )
            idx, w = next(((i, w) for i, w in pairs if form(w, w)), (None, None))
            if idx is None:
                raise SearchFailed("Hermitian form is degenerate")
            vecs[idx] = w
        w = vecs.pop(idx)
        hw = form(w, w)
        vecs = [comb(b, field.neg(field.div(form(b, w), hw)), w) for b in vecs]
        # hw lies in GF(q), so its log is a multiple of q+1
        t = field.pow(field.primitive, -(field.log(hw) // (q + 1)))
        out.append(tuple(field.mul(t, x) for x in w))
    return out


@lru_cache(maxsize=None)
def _singer_cycle(q):
    """
    A Singer cycle of projective order q^2-q+1 on the fermat model.

    Multiplication by an element of order q^3+1 in K = GF(q^6), realized as
    GF(q^2)[x]/(c), preserves the trace form Tr(a conj(b)) with conj(b) = b^(q^3).
    An orthonormal basis of that form carries the map to the fermat model.
    """
    model = get_model("fermat", q)
    field = model.field
    cubic = _first_irreducible_cubic(field)
    one = Poly(field, [1])
    big_order = q**3 + 1
    primes = sympy.primefactors(big_order)

    zeta = None
    for a in range(field.order):
        z = Poly(field, [a, 1]).powmod(q**3 - 1, cubic)
        if z.coeffs and all(z.powmod(big_order // r, cubic) != one for r in primes):
            zeta = z
            break
    if zeta is None:
        raise SearchFailed("No element of order {} in the cubic extension".format(big_order))

    x = Poly.x(field)
    powers = [one, x % cubic, (x * x) % cubic]
    conj = [b.powmod(q**3, cubic) for b in powers]

    def trace(u):
        t = u + u.powmod(field.order, cubic) + u.powmod(field.order**2, cubic)
        if t.degree > 0:
            raise SearchFailed("Trace of {} is not in the base field".format(u))
        return t.coeffs[0] if t.coeffs else 0

    gram = [[trace((powers[i] * conj[j]) % cubic) for j in range(3)] for i in range(3)]

    def form(u, v):
        acc = 0
        for i in range(3):
            for j in range(3):
                term = field.mul(u[i], field.mul(gram[i][j], field.pow(v[j], q)))
                acc = field.add(acc, term)
        return acc

    cols = [_coords((zeta * b) % cubic) for b in powers]
    mult = tuple(cols[j][i] for i in range(3) for j in range(3))
    basis = _hermitian_orthonormal_basis(field, q, form)
    change = tuple(basis[j][i] for i in range(3) for j in range(3))
    flat = mh.mat_mul(field, mh.inverse3(field, change), mh.mat_mul(field, mult, change))
    return _elem(model, flat)


def singer(q, power=1):
    return _singer_cycle(q) ** power


# Group recipes, each returning (model, generators)


def mq_generators(q):
    """SL(2, q) transvections on the m3 model together with :func:`mq_complement`."""
    model = get_model("m3", q)
    basis = fp_basis(model.field, subfield_elements(model.field, q))
    gens = transvections(q, basis) + transvections(q, basis, lower=True)
    return model, gens + [mq_complement(q)]


def sl2_subfield(q, qbar):
    """SL(2, qbar) inside M_q, generated by transvections over a GF(p)-basis of GF(qbar)."""
    _subfield_order(q, qbar)
    model = get_model("m3", q)
    basis = fp_basis(model.field, subfield_elements(model.field, qbar))
    return model, transvections(q, basis) + transvections(q, basis, lower=True)


def tl2_subfield(q, qbar):
    """SL(2, qbar) extended by diag(w, w^-1, 1), w = xi^((qbar+1)/2), xi primitive in GF(qbar^2)."""
    r = _subfield_order(q, qbar)
    _require(r % 2 == 0, "TL(2, {}) lies in SL(2, {}) only for even powers", qbar, q)
    _require(qbar % 2 == 1, "TL(2, {}) needs odd characteristic", qbar)
    model, gens = sl2_subfield(q, qbar)
    f = model.field
    xi = f.root_of_unity(qbar * qbar - 1)
    return model, gens + [m3_diagonal(q, f.pow(xi, (qbar + 1) // 2))]


def pgu_subfield(q, qbar):
    """
    PGU(3, qbar) inside PGU(3, q) for q = qbar^r with r odd, on the norm-trace
    model: translations and elations over GF(qbar^2), a torus and the swap.
    """
    r = _subfield_order(q, qbar)
    _require(r % 2 == 1, "PGU(3, {}) embeds in PGU(3, {}) only for odd r", qbar, q)
    model = get_model("norm_trace", q)
    f = model.field
    sub = subfield_elements(f, qbar * qbar)
    within = set(sub)
    gens = []
    for b in fp_basis(f, sub):
        gens.append(translation(q, b, translation_constant(model, b, within)))
    kernel = [c for c in trace_kernel(model) if c in within]
    gens.extend(elation(q, c) for c in fp_basis(f, kernel))
    gens.append(torus(q, qbar * qbar - 1))
    gens.append(norm_trace_swap(q))
    return model, gens


def pgu_generators(q):
    return pgu_subfield(q, q)


def cyclic(q, etype="A", order=None):
    """A cyclic group generated by a representative of ``etype``."""
    builders = {
        "A": lambda: homology(q, order or q + 1),
        "B1": lambda: diagonal(q, 1, 2, order or q + 1),
        "B2": lambda: torus(q, order or q * q - 1),
        "B3": lambda: singer(q, (q * q - q + 1) // (order or q * q - q + 1)),
        "C": lambda: elation(q),
        "D": lambda: translation(q),
        "E": lambda: e_element(q, (order or prime_power(q)[0] * (q + 1)) // prime_power(q)[0]),
    }
    if etype not in builders:
        raise ValueError("Unknown element type '{}'".format(etype))
    g = builders[etype]()
    return g.model, [g]


def diagonals(q, entries):
    """The group generated by fermat diagonals diag(l^a, l^b, 1), one per ``[a, b, order]``."""
    gens = [diagonal(q, a, b, order) for a, b, order in entries]
    return gens[0].model, gens


def dihedral(q, n, family=None):
    """
    D_2n. The ``torus`` family is diag(v^2, v, 1), v in GF(q) of order n | q-1,
    with the norm-trace swap. The ``fermat`` family is diag(l, l^-1, 1), l of
    order n | q+1, with the swap of X and Y.
    """
    if family is None:
        family = "torus" if (q - 1) % n == 0 else "fermat"
    if family == "torus":
        _require((q - 1) % n == 0, "Torus dihedral needs n | q-1, got n = {}", n)
        gens = [torus(q, n), norm_trace_swap(q)]
    elif family == "fermat":
        _require((q + 1) % n == 0, "Fermat dihedral needs n | q+1, got n = {}", n)
        gens = [diagonal(q, 1, -1, n), fermat_swap(q)]
    else:
        raise ValueError("Unknown dihedral family '{}'".format(family))
    return gens[0].model, gens


def dicyclic(q, n):
    """The dicyclic group of order 4n, on fermat when 2n | q+1 and on m3 when 2n | q-1."""
    if (q + 1) % (2 * n) == 0:
        gens = [diagonal(q, 1, -1, 2 * n), fermat_twist(q)]
    elif (q - 1) % (2 * n) == 0:
        f = get_model("m3", q).field
        gens = [m3_diagonal(q, f.root_of_unity(2 * n)), m3_twist(q)]
    else:
        raise HypothesisViolated("Dic({}) needs 2n | q+1 or 2n | q-1".format(n))
    return gens[0].model, gens


def quaternion(q):
    _require(q % 2 == 1, "Q8 needs odd q, got {}", q)
    return dicyclic(q, 2)


def a4(q):
    """A4 on the fermat model: sign changes and the cyclic permutation of coordinates."""
    _require(q % 2 == 1, "A4 needs odd q, got {}", q)
    gens = [diagonal(q, 1, 0, 2), diagonal(q, 0, 1, 2), fermat_cycle(q)]
    return gens[0].model, gens


def s3(q):
    """S3 as coordinate permutations when p = 3, as a dihedral group otherwise."""
    if prime_power(q)[0] == 3:
        gens = [fermat_cycle(q), fermat_swap(q)]
        return gens[0].model, gens
    if (q - 1) % 3 == 0:
        return dihedral(q, 3, "torus")
    return dihedral(q, 3, "fermat")


def cn_c3(q, n, i=None):
    """C_n x| C_3: diag(l, l^i, 1) with i^2 - i + 1 = 0 (mod n), and the coordinate cycle."""
    _require((q + 1) % n == 0, "C_n x| C_3 needs n | q+1, got n = {}", n)
    if i is None:
        i = next((i for i in range(2, n) if (i * i - i + 1) % n == 0), None)
    _require(i is not None and (i * i - i + 1) % n == 0, "No cube root of unity mod {}", n)
    gens = [diagonal(q, 1, i, n), fermat_cycle(q)]
    return gens[0].model, gens


def cyclic_semidirect(q, d, m, commuting=True, family="torus"):
    """
    C_d x| C_m.

    ``torus``: beta = diag(a^2, a, 1) on the norm-trace model, a in GF(q) of
    order d | q-1. A commuting alpha is the homology diag(1, A, 1) of order
    m | q+1; otherwise alpha = [[0,0,A],[0,1,0],[A^-q,0,0]] inverts beta, with
    A^(q-1) of order m/2.

    ``fermat``: beta = diag(l, l^-1, 1) with l of order d | q+1. A commuting
    alpha is diag(1, g, 1) of order m; otherwise alpha swaps X and Y.
    """
    _require((q + 1) % m == 0, "C_m needs m | q+1, got m = {}", m)
    if family == "torus":
        _require((q - 1) % d == 0, "Torus C_d needs d | q-1, got d = {}", d)
        model = get_model("norm_trace", q)
        f = model.field
        beta = torus(q, d)
        if commuting:
            alpha = _diag(model, 1, f.root_of_unity(m))
        else:
            _require(m % 2 == 0, "Inverting alpha has even order, got m = {}", m)
            big = f.pow(f.primitive, 2 * (q + 1) // m)
            alpha = _elem(model, (0, 0, big, 0, 1, 0, f.inv(f.pow(big, q)), 0, 0))
    elif family == "fermat":
        _require((q + 1) % d == 0, "Fermat C_d needs d | q+1, got d = {}", d)
        beta = diagonal(q, 1, -1, d)
        if commuting:
            alpha = diagonal(q, 0, 1, m)
        else:
            _require(m == 2, "Only the swap of X and Y is built as a non-commuting alpha")
            alpha = fermat_swap(q)
    else:
        raise ValueError("Unknown family '{}'".format(family))
    return beta.model, [beta, alpha]


def sl2_borel(q, k, d=1):
    """E_(p^k) x| C_d inside SL(2, q): k transvections and diag(mu, mu^-1, 1) of order d."""
    p, n = prime_power(q)
    _require(1 <= k <= n, "Elementary abelian part needs 1 <= k <= {}", n)
    _require((q - 1) % d == 0, "C_d needs d | q-1, got d = {}", d)
    model = get_model("m3", q)
    f = model.field
    gens = transvections(q, fp_basis(f, subfield_elements(f, q))[:k])
    if d > 1:
        gens.append(m3_diagonal(q, f.root_of_unity(d)))
    return model, gens


def translation_group(q, bs=1, es=0):
    """
    An abelian subgroup of the Sylow p-subgroup: translations T(b, c) for the
    first ``bs`` elements of a GF(p)-basis of GF(q), and ``es`` further
    elations independent of those the translations already generate.
    """
    model = get_model("norm_trace", q)
    f = model.field
    basis = fp_basis(f, subfield_elements(f, q))
    _require(0 <= bs <= len(basis), "At most {} independent translations", len(basis))
    gens, params = [], []
    for b in basis[:bs]:
        gens.append(translation(q, b))
        if model.p == 2:
            params.append(f.pow(b, q + 1))
    span = fp_span(f, params)
    for c in trace_kernel(model):
        if len(gens) == bs + es:
            break
        if c not in span:
            gens.append(elation(q, c))
            params.append(c)
            span = fp_span(f, params)
    _require(len(gens) == bs + es, "Not enough independent elations for es = {}", es)
    return model, gens


RECIPES = {
    "trivial": lambda q, model="fermat": (get_model(model, q), [identity(get_model(model, q))]),
    "homology": lambda q, m=None, power=1: (
        get_model("fermat", q),
        [homology(q, m or q + 1, power)],
    ),
    "elation": lambda q, c=None: (get_model("norm_trace", q), [elation(q, c)]),
    "b2_element": lambda q, m=None, power=1: (
        get_model("norm_trace", q),
        [torus(q, m or q * q - 1, power)],
    ),
    "singer": lambda q, power=1: (get_model("fermat", q), [singer(q, power)]),
    "translation": lambda q, b=1: (get_model("norm_trace", q), [translation(q, b)]),
    "e_element": lambda q, d: (get_model("norm_trace", q), [e_element(q, d)]),
    "cyclic": cyclic,
    "diagonals": diagonals,
    "mq": mq_generators,
    "sl2_subfield": sl2_subfield,
    "tl2_subfield": tl2_subfield,
    "pgu": pgu_generators,
    "pgu_subfield": pgu_subfield,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "quaternion": quaternion,
    "a4": a4,
    "s3": s3,
    "cn_c3": cn_c3,
    "cyclic_semidirect": cyclic_semidirect,
    "qk_semidirect": sl2_borel,
    "translation_group": translation_group,
}


def build(q, kind, **params):
    """:returns: ``(model, generators)`` of the recipe ``kind``."""
    try:
        recipe = RECIPES[kind]
    except KeyError:
        raise ValueError("Unknown recipe '{}', expected one of {}".format(kind, sorted(RECIPES)))
    prime_power(q)
    return recipe(q, **params)


def primitive_recipes(q, kind, **params):
    """The generator file of a recipe, with the recipe as provenance."""
    model, gens = build(q, kind, **params)
    return generators_to_json(model, gens, {"recipe": kind, "params": params})


def type_representatives(q, bound=None):
    """One cyclic generator per element type and admissible order, up to ``bound``."""
    p, _ = prime_power(q)

    def keep(m):
        return bound is None or m <= bound

    for m in sympy.divisors(q + 1):
        if m > 1 and keep(m):
            yield homology(q, m)
    for m in sympy.divisors(q + 1):
        if m > 2 and keep(m):
            for a in range(m):
                for b in range(a + 1, m):
                    if a and sympy.gcd(sympy.gcd(a, b), m) == 1:
                        yield diagonal(q, a, b, m)
    for m in sympy.divisors(q * q - 1):
        if (q + 1) % m and keep(m):
            yield torus(q, m)
    for m in sympy.divisors(q * q - q + 1):
        if m > 1 and keep(m):
            yield singer(q, (q * q - q + 1) // m)
    if keep(p):
        yield elation(q)
    if keep(p if p > 2 else 4):
        yield translation(q)
    for d in sympy.divisors(q + 1):
        if d > 1 and keep(p * d):
            yield e_element(q, d)


# Random subgroups


def _random_element(rng, pool, length):
    g = pool[rng.randrange(len(pool))]
    for _ in range(length - 1):
        g = g * pool[rng.randrange(len(pool))]
    return g


def _random_generators(rng, pool):
    gens = []
    for _ in range(rng.choice((1, 1, 2))):
        g = _random_element(rng, pool, rng.randint(1, 6))
        try:
            order = proj_order(g)
        except OrderCapExceeded:
            continue
        divisors = sympy.divisors(order)
        g = g ** divisors[rng.randrange(len(divisors))]
        if not g.is_identity():
            gens.append(g)
    return gens


def sample_subgroups(q, count, seed=0, cap=2000):
    """
    Yield ``count`` subgroups of PGU(3, q) generated by random words in the
    norm-trace generators, skipping groups larger than ``cap``. Deterministic
    for a fixed seed.
    """
    _, pool = pgu_generators(q)
    rng = random.Random(seed)
    produced = 0
    attempts = 0
    while produced < count:
        attempts += 1
        if attempts > 100 * count:
            raise SearchFailed("Only {} of {} subgroups found".format(produced, count))
        gens = _random_generators(rng, pool)
        if not gens:
            continue
        try:
            group = closure(gens, cap=cap)
        except CapExceeded:
            continue
        produced += 1
        yield group


def seeded_search(q, target, seed=0, budget=200, census=None, path=None):
    """
    Search for a subgroup of order ``target`` (and element-order ``census``,
    when given) among random subgroups. The first hit is written to ``path``
    as a generator file when a path is given.

    :returns: the :class:`~uqg.group_engine.GeneratedGroup` found.
    :raises NotFound: when ``budget`` attempts give no match.
    """
    model, pool = pgu_generators(q)
    rng = random.Random(seed)
    for attempt in range(budget):
        gens = _random_generators(rng, pool)
        if not gens:
            continue
        try:
            group = closure(gens, cap=target)
        except CapExceeded:
            continue
        if group.order != target:
            continue
        if census is not None and group.census() != census:
            continue
        logger.info(
            "Found a group of order {} over {} at attempt {}".format(target, model, attempt)
        )
        if path is not None:
            provenance = {"search": {"seed": seed, "attempt": attempt, "target": target}}
            write_generator_file(path, model, gens, provenance)
        return group
    raise NotFound(
        "No subgroup of order {} in PGU(3, {}) within {} attempts (seed {})".format(
            target, q, budget, seed
        )
    )
