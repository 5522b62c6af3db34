"""
Cross-product suites on width-two posets, and the fixed values of the
small examples the library is calibrated against.
"""

from fractions import Fraction

from ..errors import WidthError
from ..inequalities import (
    Witness,
    check_cpc,
    check_qcpc,
    classify_cpc_equality,
    cpc_equality_cases,
    cpc_index_pairs,
    first_positive_term,
    scan_gcpc,
    triples,
    xyz_gap,
    xyz_quadrant_terms,
)
from ..oracle import correlation_table, extension_count, kahn_saks_vector, one_third_statistic
from ..posets import (
    ElementTriple,
    Poset,
    disjoint_sum,
    enumerate_posets,
    enumerate_width_two_posets,
)
from .base_suite import BaseSuite


def _failures(verdicts, p, d):
    return [v.located(poset=p, decomposition=d).witness for v in verdicts if not v]


class CpcSuite(BaseSuite):
    """ F(k, l) F(k+1, l+1) <= F(k, l+1) F(k+1, l) for every triple; with --q also on F_q. """

    size_cap = 9

    def instances(self):
        return self.width_two(min_n=3)

    def check(self, item):
        p, d = item
        verdicts = []
        for t in triples(p.n):
            table = correlation_table(p, d if self._config.q else None, t)
            for k, l in cpc_index_pairs(p.n):
                verdicts.append(check_cpc(table, k, l))
                if self._config.q:
                    verdicts.append(check_qcpc(table, k, l))
        return _failures(verdicts, p, d), {"checks": len(verdicts)}


class QcpcSuite(BaseSuite):
    """ Coefficient-wise q-CPC, and its value at q = 1 agrees with the plain check. """

    size_cap = 8

    def instances(self):
        return self.width_two(min_n=3)

    def check(self, item):
        p, d = item
        verdicts = []
        for t in triples(p.n):
            table = correlation_table(p, d, t)
            for k, l in cpc_index_pairs(p.n):
                verdicts.append(check_qcpc(table, k, l))
                verdicts.append(check_cpc(table, k, l))
        return _failures(verdicts, p, d), {"checks": len(verdicts)}


class GcpcSuite(BaseSuite):
    """
    Generalized cross-product inequalities in offset form, and in signed form
    on the sign patterns where it holds for width two.
    """

    size_cap = 7

    def instances(self):
        return self.width_two(min_n=3)

    def check(self, item):
        p, d = item
        verdicts = []
        for t in triples(p.n):
            signed = correlation_table(p, None, t, signed=True)
            verdicts.append(scan_gcpc(signed.unsigned()))
            verdicts.append(scan_gcpc(signed))
        return _failures(verdicts, p, d), {"checks": len(verdicts)}


class EqualitySuite(BaseSuite):
    """ Cross-product equality happens exactly in the degenerate cases, with and without q. """

    size_cap = 8

    def instances(self):
        return self.width_two(min_n=3)

    def check(self, item):
        p, d = item
        verdicts = []
        info = {"checks": 0, "equalities": 0}
        for t in triples(p.n):
            for k, l in cpc_index_pairs(p.n):
                cases, v = classify_cpc_equality(p, d, t, k, l)
                verdicts.append(v)
                info["checks"] += 1
                info["equalities"] += int(bool(cases))
        return _failures(verdicts, p, d), info


def width_three_example():
    """ C4 + C4 + C1 with the triple (alpha_1, gamma, beta_4). """
    p = disjoint_sum(Poset.chain(4), Poset.chain(4), Poset.chain(1))
    return p, ElementTriple(0, 8, 7)


ISOMORPHISM_CLASSES = [1, 1, 2, 5, 16, 63, 318, 2045]


class KnownValuesSuite(BaseSuite):
    """ Fixed values of small examples; each instance is the name of one example. """

    size_cap = 7

    def instances(self):
        return [
            "width-three-table",
            "width-three-equality",
            "width-three-xyz",
            "kahn-saks-values",
            "labelled-counts",
            "isomorphism-classes",
            "one-third",
        ]

    def check(self, item):
        method = getattr(self, "_" + item.replace("-", "_"))
        failures = method()
        return [Witness(None, None, None, (), item, str(f)) for f in failures], {
            "checks": 1
        }

    def _width_three_table(self):
        p, t = width_three_example()
        F = correlation_table(p, None, t)
        return [
            (i, j, F(i, j))
            for i in range(1, 5)
            for j in range(1, 6 - i)
            if F(i, j) != 2 ** (i + j - 2)
        ]

    def _width_three_equality(self):
        p, t = width_three_example()
        failures = []
        F = correlation_table(p, None, t)
        for k, l in ((1, 1), (1, 2), (2, 1)):
            v = check_cpc(F, k, l)
            if not v or F(k, l) * F(k + 1, l + 1) != F(k, l + 1) * F(k + 1, l):
                failures.append(("strict", k, l))
            if cpc_equality_cases(p, t, k, l):
                failures.append(("case", k, l))
        try:
            classify_cpc_equality(p, None, t, 1, 1)
            failures.append("width three accepted")
        except WidthError:
            pass
        return failures

    def _width_three_xyz(self):
        p, t = width_three_example()
        # the triple (z1, z2, z3) reads as (y, x, z)
        y, x, z = t
        e = extension_count(p)
        failures = []
        if not xyz_gap(p, x, y, z) > 0:
            failures.append("gap")
        terms = dict(xyz_quadrant_terms(p, x, y, z))
        if terms.get((-1, -1, 2, 2)) != Fraction(-3, e * e):
            failures.append(("term", terms.get((-1, -1, 2, 2))))
        if first_positive_term(p, x, y, z) is None:
            failures.append("no positive term")
        return failures

    def _kahn_saks_values(self):
        p = disjoint_sum(Poset.chain(2), Poset.chain(2))
        v = kahn_saks_vector(p, None, 0, 1)
        values = [v(k) for k in (1, 2, 3)]
        return [] if values == [3, 2, 1] else [values]

    def _labelled_counts(self):
        counts = [
            len(list(enumerate_width_two_posets(1, 1))),
            len(list(enumerate_width_two_posets(2, 1))),
            len(list(enumerate_width_two_posets(1, 1, up_to_isomorphism=True))),
            len(list(enumerate_width_two_posets(2, 1, up_to_isomorphism=True))),
        ]
        return [] if counts == [3, 6, 2, 4] else [counts]

    def _isomorphism_classes(self):
        top = min(self.max_n, len(ISOMORPHISM_CLASSES) - 1)
        counts = [len(list(enumerate_posets(n))) for n in range(top + 1)]
        return [] if counts == ISOMORPHISM_CLASSES[: top + 1] else [counts]

    def _one_third(self):
        p = disjoint_sum(Poset.chain(2), Poset.chain(1))
        _, delta = one_third_statistic(p)
        return [] if delta == Fraction(1, 3) else [delta]
