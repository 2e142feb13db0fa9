import unittest
from fractions import Fraction

from uqg.genus_engine import GenusReport, quotient_genus
from uqg.group_engine import GeneratedGroup


class TestCase(unittest.TestCase):
    def assertCensusEqual(self, group_or_census, expected):
        census = group_or_census
        if isinstance(census, GeneratedGroup):
            census = census.census()
        if dict(census) != dict(expected):
            raise AssertionError(
                "\n".join(["Element-order census differs.", repr(census), repr(expected)])
            )

    def assertGenus(self, report_or_group, genus):
        report = report_or_group
        if isinstance(report, GeneratedGroup):
            report = quotient_genus(report)
        if not isinstance(report, GenusReport):
            raise TypeError("Expected a GenusReport or a GeneratedGroup")
        if report.genus_quotient != genus:
            raise AssertionError(
                "\n".join(
                    [
                        "Quotient genus {} != {}.".format(report.genus_quotient, genus),
                        repr(report),
                        repr(report.census),
                    ]
                )
            )

    def assertFractionEqual(self, a, b):
        if Fraction(a) != Fraction(b):
            raise AssertionError("{} != {}".format(Fraction(a), Fraction(b)))
