"""
Point counts of plane models of cyclic quotients H_q / <s> over GF(q^2).

Each model is either a Kummer cover y^m = f(x) or an additive cover
L(y) = f(x) of the x-line. The affine part is counted for all x at once with
numpy; places over the singular fibres and at infinity are added explicitly.
A model is maximal when N = q^2 + 1 + 2 g q.
"""
import logging
from collections import namedtuple
from math import gcd

import numpy as np

from .finite_field import FieldElem
from .formula_catalog import FormulaId, HypothesisViolated, eval_formula
from .geometry import FieldTooLarge, get_model, plane_limit, prime_power

logger = logging.getLogger("uqg")


class LambdaInvalid(ValueError):
    pass


class ModelCount(namedtuple("ModelCount", ["N", "genus", "maximal"])):
    __slots__ = ()

    def to_json(self):
        return {"N": self.N, "genus": self.genus, "maximal": self.maximal}


LambdaReport = namedtuple("LambdaReport", ["counts", "independent"])


def _field(q):
    p, h = prime_power(q)
    field = get_model("norm_trace", q).field
    if field.order > plane_limit:
        raise FieldTooLarge(
            "Counting over GF({}) exceeds the limit of {} elements".format(field.order, plane_limit)
        )
    return field, p, h


def _maximal(q, n, genus):
    return n == q * q + 1 + 2 * genus * q


def _additive_sum(field, xs, coefficients, q, p, h):
    """sum_i c_i x^(q/p^i) for i = 1..h, evaluated on an array."""
    total = np.zeros(len(xs), dtype=np.int64)
    for i, c in zip(range(1, h + 1), coefficients):
        total = field.vadd(total, field.vmul(c, field.vpow(xs, q // p**i)))
    return total


def _kummer_affine(field, m, values):
    """Number of affine points of y^m = v summed over an array of values v."""
    order = field.order
    g = gcd(m, order - 1)
    nonzero = values[values != 0]
    powers = field.vpow(nonzero, (order - 1) // g)
    return int(np.count_nonzero(values == 0) + g * np.count_nonzero(powers == 1))


def _additive_affine(field, image, values):
    """Number of affine points of L(y) = v, where ``image`` holds L on every element."""
    hist = np.bincount(image, minlength=field.order)
    return int(hist[values].sum())


def _roots_of(field, e, c):
    """Number of u in the field with u^e = c."""
    return int(np.count_nonzero(field.vpow(field.elements(), e) == c))


def lambdas(q):
    """All lambda in GF(q^2) with lambda^h = -1."""
    field, _, h = _field(q)
    els = field.elements()
    return [int(a) for a in els[field.vpow(els, h) == field.neg(1)]]


def _lambda(field, q, h, lam):
    if lam is None:
        found = lambdas(q)
        if not found:
            raise LambdaInvalid("No lambda in {} with lambda^{} = -1".format(field, h))
        return found[0]
    lam = field.coerce(lam)
    if field.pow(lam, h) != field.neg(1):
        raise LambdaInvalid(
            "lambda = {} does not satisfy lambda^{} = -1".format(FieldElem(field, lam), h)
        )
    return lam


def count_tipoE(q, d, lam=None):
    """
    Count y^((q+1)/d) = sum_i lambda^(i-1) x^(q/p^i), the quotient by an
    element of type E and order p d.

    :param lam: lambda with lambda^h = -1. The first such element is used when None.
    """
    field, p, h = _field(q)
    if d < 1 or (q + 1) % d:
        raise HypothesisViolated("tipoE: requires d | q+1, got d = {}".format(d))
    lam = _lambda(field, q, h, lam)
    m = (q + 1) // d
    coefficients = [field.pow(lam, i - 1) for i in range(1, h + 1)]
    values = _additive_sum(field, field.elements(), coefficients, q, p, h)
    # gcd(m, q/p) = 1: one rational place at infinity
    n = _kummer_affine(field, m, values) + 1
    genus = (m - 1) * (p ** (h - 1) - 1) // 2
    result = ModelCount(n, genus, _maximal(q, n, genus))
    logger.info(
        "tipoE q = {}, d = {}, lambda = {}: {}".format(q, d, FieldElem(field, lam), result)
    )
    return result


def lambda_independence(q, d):
    """Count the type-E model for every admissible lambda and compare the counts."""
    field, _, h = _field(q)
    found = lambdas(q)
    if not found:
        raise LambdaInvalid("No lambda in {} with lambda^{} = -1".format(field, h))
    counts = {lam: count_tipoE(q, d, FieldElem(field, lam)).N for lam in found}
    independent = len(set(counts.values())) == 1
    if not independent:
        logger.warning(
            "tipoE count at q = {}, d = {} depends on lambda: {}".format(
                q, d, sorted(set(counts.values()))
            )
        )
    return LambdaReport(counts, independent)


def _count_case_1(q):
    field, p, h = _field(q)
    omega = get_model("norm_trace", q).omega
    els = field.elements()
    image = _additive_sum(field, els, [1] * h, q, p, h)
    values = field.vneg(field.vmul(omega, field.vpow(els, q + 1)))
    return _additive_affine(field, image, values) + 1


def _count_case_2(q):
    field, p, h = _field(q)
    if p < 3:
        raise HypothesisViolated("case 2: requires p >= 3")
    els = field.elements()
    image = field.vadd(field.vpow(els, q), els)
    s = _additive_sum(field, els, [1] * h, q, p, h)
    return _additive_affine(field, image, field.vmul(s, s)) + 1


def _count_case_5(q, d):
    field, _, _ = _field(q)
    if d <= 1 or (q * q - 1) % d:
        raise HypothesisViolated("case 5: requires 1 < d | q^2-1, got d = {}".format(d))
    m = (q * q - 1) // d
    els = field.elements()
    minus_one = field.neg(1)
    generic = els[(els != 0) & (els != minus_one)]
    values = field.vmul(generic, field.vpow(field.vadd(generic, 1), q - 1))
    n = _kummer_affine(field, m, values)
    # x = 0 is a simple zero, x = -1 a zero of order q-1, infinity has gcd(m, q) = 1
    g = gcd(m, q - 1)
    n += 1 + _roots_of(field, g, minus_one) + 1
    return n


def count_named_model(case, q, d=None):
    """
    Count the plane model of a cyclic quotient by case:

    1. sum_i y^(q/p^i) + omega x^(q+1) = 0, an element of order p;
    2. y^q + y = (sum_i x^(q/p^i))^2, an element of order p with p odd;
    5. y^((q^2-1)/d) = x (x+1)^(q-1), an element of order d | q^2-1.

    No model is known for the remaining cases.
    """
    if case == 1:
        n = _count_case_1(q)
    elif case == 2:
        n = _count_case_2(q)
    elif case == 5:
        n = _count_case_5(q, d)
    elif case in (4, 6, 7):
        raise HypothesisViolated("case {}: no plane model available".format(case))
    elif case == 3:
        return count_tipoE(q, d)
    else:
        raise HypothesisViolated("case {}: not a counted model".format(case))
    params = {"case": case, "q": q}
    if d is not None:
        params["d"] = d
    genus = int(eval_formula(FormulaId("cyclic", **params)))
    result = ModelCount(n, genus, _maximal(q, n, genus))
    logger.info("Case {} model at q = {}, d = {}: {}".format(case, q, d, result))
    return result
