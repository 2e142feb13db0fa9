"""
Reproduction of the published genus tables, the formula registries and
exhaustive scans of small PGU(3, q).

Every table row gets one of the statuses in :data:`STATUSES`:

* ``reproduced``: the engine gives the printed genus and group order,
* ``erratum``: the engine disagrees, and the row is a known misprint whose
  engine values are recorded in :data:`uqg._tables.ERRATA`,
* ``mismatch``: the engine disagrees with an unregistered row,
* ``unconstructed``: no fixture and no recipe realize the row,
* ``failed``: the construction or the genus computation raised.
"""
import json
import logging
import os
from collections import Counter, namedtuple
from concurrent.futures import ThreadPoolExecutor

from . import constructions
from ._tables import ERRATA, STRUCTURE_NOTES, TABLES
from .classifier import ETYPES, Classifier
from .formula_catalog import (
    DISCREPANCIES,
    VERIFIED,
    FormulaId,
    HypothesisViolated,
    b1_divisor_triples,
    crosscheck,
    cyclic_case,
    eval_formula,
)
from .genus_engine import genus_from_classes, quotient_genus
from .geometry import prime_power
from .group_engine import closure, pgu_order, read_generator_file, write_generator_file

logger = logging.getLogger("uqg")

STATUSES = ("reproduced", "erratum", "mismatch", "unconstructed", "failed")

#: Largest q for which :func:`full_scan` enumerates PGU(3, q).
SCAN_MAX_Q = 5

#: Environment variable naming the fixture root.
FIXTURES_ENV = "UQG_FIXTURES"


class NoTable(ValueError):
    pass


class ScanTooLarge(ValueError):
    pass


def fixtures_root(path=None):
    """The fixture root: ``path``, else ``$UQG_FIXTURES``, else ``./fixtures``."""
    if path:
        return path
    return os.environ.get(FIXTURES_ENV) or "fixtures"


def fixture_path(root, q, index):
    return os.path.join(root, "q{:02d}".format(q), "row{}.json".format(index))


def _parallel_map(fn, items, threads):
    """``[fn(x) for x in items]``, evaluated by ``threads`` workers when threads > 1."""
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(fn, items))
    return [fn(x) for x in items]


def table_rows(q):
    prime_power(q)
    try:
        return TABLES[q]
    except KeyError:
        raise NoTable(
            "No published table for q = {}, expected one of {}".format(q, sorted(TABLES))
        )


# Tables


_ROW_FIELDS = [
    "q",
    "index",
    "g_expected",
    "order_expected",
    "structure",
    "fixture",
    "status",
    "recipe",
    "params",
    "genus",
    "order",
    "note",
]


class TableRow(namedtuple("TableRow", _ROW_FIELDS)):
    __slots__ = ()

    def to_json(self):
        return dict(self._asdict())


def _evaluate_row(q, index, row, root, classifier):
    g, order, structure, recipe, params = row
    key = (q, g, order)
    fixture = None
    if root is not None and os.path.exists(fixture_path(root, q, index)):
        fixture = fixture_path(root, q, index)

    def result(status, genus=None, got=None, note=""):
        return TableRow(
            q, index, g, order, structure, fixture, status, recipe, params, genus, got, note
        )

    if fixture is None and recipe is None:
        return result("unconstructed")
    try:
        if fixture is not None:
            _, gens, _ = read_generator_file(fixture)
        else:
            _, gens = constructions.build(q, recipe, **params)
        report = quotient_genus(closure(gens), classifier)
    except (ValueError, RuntimeError, ArithmeticError) as e:
        logger.error("q = {}, row {} ({}): {}".format(q, index, structure, e))
        return result("failed", note=str(e))

    genus, got = report.genus_quotient, report.group_order
    if (genus, got) == (g, order):
        return result("reproduced", genus, got, STRUCTURE_NOTES.get(key, ""))
    erratum = ERRATA.get(key)
    if erratum is not None and (erratum["genus"], erratum["order"]) == (genus, got):
        return result("erratum", genus, got, erratum["note"])
    logger.warning(
        "q = {}, row {} ({}): printed g = {}, |G| = {}; engine g = {}, |G| = {}".format(
            q, index, structure, g, order, genus, got
        )
    )
    return result("mismatch", genus, got)


class TableReport:
    """Per-row outcomes of one published table."""

    def __init__(self, q, rows):
        self.q = q
        self.rows = rows

    @property
    def counts(self):
        counts = Counter(row.status for row in self.rows)
        return {status: counts[status] for status in STATUSES}

    @property
    def constructed(self):
        """Fraction of rows realized by a fixture or a recipe."""
        return 1 - self.counts["unconstructed"] / len(self.rows)

    @property
    def ok(self):
        return not (self.counts["mismatch"] or self.counts["failed"])

    def to_json(self):
        return {
            "q": self.q,
            "rows": [row.to_json() for row in self.rows],
            "counts": self.counts,
            "constructed": round(self.constructed, 4),
        }

    def render(self):
        lines = ["{:>5}  {:>5}  {:<28}  {}".format("g", "|G|", "structure", "status")]
        for row in self.rows:
            status = row.status
            if status in ("erratum", "mismatch"):
                status = "{} (engine g = {}, |G| = {})".format(status, row.genus, row.order)
            lines.append(
                "{:>5}  {:>5}  {:<28}  {}".format(
                    row.g_expected, row.order_expected, row.structure, status
                )
            )
        lines.append(
            ", ".join("{} {}".format(n, status) for status, n in self.counts.items() if n)
        )
        return "\n".join(lines)


def run_table(q, fixtures_root=None, threads=1, classifier=None):
    """
    Recompute every row of the published table for ``q``.

    :param fixtures_root: directory holding ``q<nn>/row<k>.json`` generator
        files. Rows without a file fall back to their recipe.
    :param threads: rows evaluated concurrently.

    :raises NotAPrimePower: when q is not a prime power.
    :raises NoTable: when no table is published for q.
    """
    rows = table_rows(q)
    classifier = classifier or Classifier.default()

    def evaluate(item):
        index, row = item
        return _evaluate_row(q, index, row, fixtures_root, classifier)

    results = _parallel_map(evaluate, list(enumerate(rows)), threads)

    report = TableReport(q, results)
    logger.info("Table for q = {}: {}".format(q, report.counts))
    return report


def materialize_fixtures(q, root):
    """
    Write the generator file of every row with a recipe to
    ``root/q<nn>/row<k>.json``, and ``root/q<nn>/manifest.json``.

    :returns: the paths written.
    """
    rows = table_rows(q)
    folder = os.path.join(root, "q{:02d}".format(q))
    os.makedirs(folder, exist_ok=True)
    written, manifest = [], []
    for index, (g, order, structure, recipe, params) in enumerate(rows):
        entry = {
            "index": index,
            "genus": g,
            "order": order,
            "structure": structure,
            "recipe": recipe,
            "params": params,
            "fixture": None,
        }
        if recipe is not None:
            try:
                model, gens = constructions.build(q, recipe, **params)
            except (ValueError, RuntimeError) as e:
                logger.error("q = {}, row {}: recipe {} failed: {}".format(q, index, recipe, e))
            else:
                path = fixture_path(root, q, index)
                provenance = {"recipe": recipe, "params": params, "genus": g, "order": order}
                write_generator_file(path, model, gens, provenance)
                entry["fixture"] = os.path.basename(path)
                written.append(path)
        manifest.append(entry)
    path = os.path.join(folder, "manifest.json")
    with open(path, "w") as f:
        json.dump({"q": q, "rows": manifest}, f, indent=2, sort_keys=True)
        f.write("\n")
    written.append(path)
    logger.info("Wrote {} fixtures for q = {} to {}".format(len(written) - 1, q, folder))
    return written


# Formula registries


class RegistryCheck(
    namedtuple("RegistryCheck", ["entry", "formula_value", "engine_value", "match", "expected"])
):
    """A registry entry crosschecked. ``expected`` is whether the formula should match."""

    __slots__ = ()

    @property
    def ok(self):
        return self.match == self.expected

    def to_json(self):
        return {
            "formula": self.entry.formula.to_json(),
            "recipe": self.entry.recipe,
            "params": self.entry.params,
            "anchor": self.entry.anchor,
            "formula_value": None if self.formula_value is None else str(self.formula_value),
            "engine_value": self.engine_value,
            "match": self.match,
            "expected": self.expected,
            "ok": self.ok,
        }


def check_entry(entry, expected, classifier=None):
    _, gens = constructions.build(entry.q, entry.recipe, **entry.params)
    try:
        result = crosscheck(entry.formula, gens, classifier)
    except HypothesisViolated as e:
        logger.warning("{}: {}".format(entry.formula, e))
        engine = quotient_genus(closure(gens), classifier).genus_quotient
        return RegistryCheck(entry, None, engine, False, expected)
    return RegistryCheck(
        entry, result.formula_value, result.engine_value, result.match, expected
    )


def run_registry(classifier=None):
    """Crosscheck every entry of the verified and discrepancy registries."""
    checks = [check_entry(e, True, classifier) for e in VERIFIED]
    checks += [check_entry(e, False, classifier) for e in DISCREPANCIES]
    bad = [c for c in checks if not c.ok]
    if bad:
        logger.warning("{} registry entries changed outcome".format(len(bad)))
    return checks


# Exhaustive scans


def class_sizes(q):
    """Number of elements of each type in PGU(3, q)."""
    return {
        "A": q * (q**4 - q**3 + q**2),
        "B1": q**4 * (q - 1) ** 2 * (q * q - q + 1) // 6,
        "B2": (q * q - q - 2) * (q**3 + 1) * q**3 // 2,
        "B3": (q * q - q) * (q**6 + q**5 - q**4 - q**3) // 3,
        "C": (q - 1) * (q**3 + 1),
        "D": (q**3 - q) * (q**3 + 1),
        "E": (q - 1) * q * (q**3 + 1) * q**2,
    }


class ScanReport:
    def __init__(self, q, order, sizes, cyclic):
        self.q = q
        self.order = order
        self.sizes = sizes
        self.expected_sizes = class_sizes(q)
        self.cyclic = cyclic

    @property
    def sizes_ok(self):
        return self.sizes == self.expected_sizes

    @property
    def cyclic_ok(self):
        return all(c["agree"] for c in self.cyclic)

    @property
    def ok(self):
        return self.sizes_ok and self.cyclic_ok

    def to_json(self):
        return {
            "q": self.q,
            "order": self.order,
            "sizes": self.sizes,
            "expected_sizes": self.expected_sizes,
            "cyclic": self.cyclic,
            "ok": self.ok,
        }

    def render(self):
        lines = ["PGU(3, {}): {} elements".format(self.q, self.order)]
        lines.append("{:<5}  {:>10}  {:>10}".format("type", "count", "expected"))
        for etype in ETYPES:
            lines.append(
                "{:<5}  {:>10}  {:>10}".format(
                    etype, self.sizes[etype], self.expected_sizes[etype]
                )
            )
        lines.append("{:<5}  {:>5}  {:>5}  {}".format("type", "order", "genus", "agrees"))
        for c in self.cyclic:
            lines.append(
                "{:<5}  {:>5}  {:>5}  {}".format(c["type"], c["order"], c["genus"], c["agree"])
            )
        return "\n".join(lines)


def _cyclic_check(q, p, etype, order, genus):
    case = cyclic_case(etype, p)
    out = {"type": etype, "order": order, "genus": genus, "case": case}
    if case is None:
        triples = b1_divisor_triples(q, order, genus)
        out["triples"] = [list(t) for t in triples]
        out["agree"] = bool(triples)
        return out
    params = {"case": case, "q": q}
    if case == 3:
        params["d"] = order // p
    elif case in (4, 5):
        params["d"] = order
    value = eval_formula(FormulaId("cyclic", **params))
    out["formula_value"] = str(value)
    out["agree"] = value == genus
    return out


def full_scan(q, classifier=None, threads=1):
    """
    Classify every element of PGU(3, q), compare the number of elements of
    each type with :func:`class_sizes`, and check the cyclic quotient by one
    element of every type and order against the closed forms.

    :param threads: workers classifying elements and checking cyclic quotients.
    """
    p, _ = prime_power(q)
    if q > SCAN_MAX_Q:
        raise ScanTooLarge("PGU(3, q) is enumerated only for q <= {}".format(SCAN_MAX_Q))
    classifier = classifier or Classifier.default()
    _, gens = constructions.pgu_generators(q)
    group = closure(gens)
    if group.order != pgu_order(q):
        raise RuntimeError(
            "Generators of PGU(3, {}) close to {} elements, expected {}".format(
                q, group.order, pgu_order(q)
            )
        )
    logger.info("Classifying {} elements of PGU(3, {})".format(group.order, q))
    nontrivial = [(g, sig) for g, sig in zip(group, group.signatures()) if not g.is_identity()]
    classes = _parallel_map(lambda item: classifier.classify(*item), nontrivial, threads)
    counts = Counter(c.etype for c in classes)
    sizes = {etype: counts[etype] for etype in ETYPES}

    representatives = {}
    for (g, _), cls in zip(nontrivial, classes):
        representatives.setdefault((cls.etype, cls.order), g)

    def check(item):
        (etype, order), g = item
        sub = closure([g])
        report = genus_from_classes(q, sub.order, classifier.classify_group(sub))
        return _cyclic_check(q, p, etype, order, report.genus_quotient)

    keys = sorted(
        representatives.items(), key=lambda item: (ETYPES.index(item[0][0]), item[0][1])
    )
    cyclic = _parallel_map(check, keys, threads)

    report = ScanReport(q, group.order, sizes, cyclic)
    if not report.ok:
        logger.warning("Scan of PGU(3, {}) disagrees with the closed forms".format(q))
    return report
