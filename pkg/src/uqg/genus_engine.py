"""
Genus of quotient curves H_q / G by the Riemann-Hurwitz formula.

For a subgroup G of PGU(3, q),

    2 g(H_q) - 2 = |G| (2 g(H_q / G) - 2) + sum_{1 != s in G} i(s),

where i(s) is the contribution of the type of s (see :mod:`uqg.classifier`).
"""
import logging
from collections import Counter
from fractions import Fraction

from .classifier import ETYPES, Classifier, contribution
from .geometry import prime_power
from .group_engine import closure

logger = logging.getLogger("uqg")


class NonIntegralGenus(ArithmeticError):
    def __init__(self, message, census):
        super().__init__(message)
        self.census = census


class GenusReport:
    """The ramification data and genera of one quotient H_q / G."""

    def __init__(self, q, group_order, census, delta, genus_top, genus_quotient):
        self.q = q
        self.group_order = group_order
        self.census = census
        self.delta = delta
        self.genus_top = genus_top
        self.genus_quotient = genus_quotient

    def __repr__(self):
        return "GenusReport(q={}, |G|={}, delta={}, genus={})".format(
            self.q, self.group_order, self.delta, self.genus_quotient
        )

    def type_census(self):
        """Type -> [number of elements, contribution i], for the types present."""
        counts = Counter()
        for (etype, _), count in self.census.items():
            counts[etype] += count
        return {
            etype: [counts[etype], contribution(etype, self.q)] for etype in ETYPES if counts[etype]
        }

    def to_json(self):
        return {
            "q": self.q,
            "order": self.group_order,
            "census": self.type_census(),
            "orders": {
                "{}:{}".format(etype, order): count
                for (etype, order), count in sorted(self.census.items())
            },
            "delta": self.delta,
            "genus": self.genus_quotient,
        }


def _census_by_class(classes):
    return dict(sorted(Counter((c.etype, c.order) for c in classes).items()))


def genus_from_classes(q, group_order, classes):
    """
    Apply Riemann-Hurwitz to the classes of the nontrivial elements of a group.

    :raises NonIntegralGenus: when the formula does not produce an integer in
        ``[0, g(H_q)]``. This means the class list cannot come from a subgroup.
    """
    census = _census_by_class(classes)
    delta = sum(c.i for c in classes)
    genus_top = q * (q - 1) // 2
    genus = 1 + Fraction(2 * genus_top - 2 - delta, 2 * group_order)
    if genus.denominator != 1 or not 0 <= genus <= genus_top:
        raise NonIntegralGenus(
            "Riemann-Hurwitz gives genus {} for |G| = {} and delta = {}".format(
                genus, group_order, delta
            ),
            census,
        )
    return GenusReport(q, group_order, census, delta, genus_top, int(genus))


def quotient_genus(group, classifier=None):
    classifier = classifier or Classifier.default()
    classes = classifier.classify_group(group)
    report = genus_from_classes(group.model.q, group.order, classes)
    logger.debug("{} for a group over {}".format(report, group.model))
    return report


def cyclic_spectrum(q, bound=None):
    """
    Genera of the quotients of H_q by cyclic groups of every type and order.

    :returns: sorted, deduplicated ``(order, etype, genus)`` triples, for
        orders up to ``bound`` (all orders when None).
    """
    from .constructions import type_representatives

    prime_power(q)
    classifier = Classifier.default()
    out = set()
    for gen in type_representatives(q, bound):
        group = closure([gen])
        cls = classifier.classify(gen)
        report = genus_from_classes(q, group.order, classifier.classify_group(group))
        out.add((cls.order, cls.etype, report.genus_quotient))
    return sorted(out, key=lambda t: (t[0], ETYPES.index(t[1]), t[2]))
