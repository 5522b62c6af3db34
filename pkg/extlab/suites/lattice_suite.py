"""
Suites for the lattice-path route: the bijection with linear extensions,
the path-swapping injections and the G_q/H_q decomposition of F_q.
"""

from collections import Counter

from ..inequalities import Witness, triples
from ..lattice import (
    LatticeDecomposition,
    all_paths,
    count_paths,
    decomposition_table,
    equality_dichotomy_holds,
    extension_of_path,
    injection_defects,
    kappa_horizontal,
    kappa_inequality,
    kappa_vertical,
    path_of_extension,
    path_weight,
    region_of,
    relabel_for_decomposition,
)
from ..oracle import ZERO, QPolynomial, correlation_table, extension_count, extensions, weight
from .base_suite import BaseSuite


class BijectionSuite(BaseSuite):
    """ Extensions and in-region paths correspond, with weights shifted by a(a+1)/2. """

    size_cap = 8

    def instances(self):
        return self.width_two(min_n=1)

    def check(self, item):
        p, d = item
        r = region_of(p, d)
        shift = d.a * (d.a + 1) // 2
        violations = []

        total = count_paths(r, (0, 0), (d.a, d.b), q=False).at_one()
        if total != extension_count(p):
            violations.append(Witness(p, d, None, (), total, extension_count(p)))
        for boundary in (r.upper, r.lower):
            if not r.contains_path(boundary):
                violations.append(Witness(p, d, None, (), str(boundary), "boundary"))

        weights = Counter()
        for index, l in enumerate(extensions(p)):
            path = path_of_extension(l, d)
            if not r.contains_path(path) or extension_of_path(path, d, r) != l:
                violations.append(Witness(p, d, None, (index,), str(path), "round trip"))
            if path_weight(path) != weight(l, d) - shift:
                violations.append(Witness(p, d, None, (index,), path_weight(path), weight(l, d) - shift))
            weights[weight(l, d)] += 1

        generating = count_paths(r, (0, 0), (d.a, d.b)).shift(shift)
        if generating != QPolynomial(dict(weights)):
            violations.append(Witness(p, d, None, (), generating, QPolynomial(dict(weights))))
        return violations, {"checks": 3 + 2 * len(weights), "extensions": total}


def vertical_quadruples(r):
    """ (A, B, C, D, case) with A over B in one column and C over D in a column further right. """
    for h in range(r.a + 1):
        lo, hi = r.column(h)
        for h2 in range(h + 1, r.a + 1):
            lo2, hi2 = r.column(h2)
            for a2 in range(lo, hi + 1):
                for b2 in range(lo, a2 + 1):
                    for c2 in range(lo2, hi2 + 1):
                        for d2 in range(lo2, c2 + 1):
                            if a2 - b2 == c2 - d2:
                                continue
                            case = "a" if a2 - b2 > c2 - d2 else "b"
                            yield (h, a2), (h, b2), (h2, c2), (h2, d2), case


def horizontal_quadruples(r):
    """ (A, B, C, D, case) with B right of A in one row and D over C in a column not left of B. """
    points = r.points()
    rows = {}
    for x, y in points:
        rows.setdefault(y, []).append(x)
    for y, xs in sorted(rows.items()):
        for a1 in xs:
            for b1 in (x for x in xs if x >= a1):
                for h in range(b1, r.a + 1):
                    lo, hi = r.column(h)
                    for c2 in range(max(lo, y), hi + 1):
                        for d2 in range(c2, hi + 1):
                            A, B, C, D = (a1, y), (b1, y), (h, c2), (h, d2)
                            if b1 > a1:
                                yield A, B, C, D, "a"
                            if d2 > c2:
                                yield A, B, C, D, "b"


class KappaSuite(BaseSuite):
    """
    The path-swapping maps are injective, keep the total weight and land in
    the target sets; equality of the vertical counts forces the dichotomy.
    """

    size_cap = 8
    max_chain = 4

    def instances(self):
        for p, d in self.width_two(min_n=2):
            if d.a <= self.max_chain and d.b <= self.max_chain:
                yield p, d

    def _check_one(self, p, d, r, build, A, B, C, D, case, orientation):
        injection = build(r, A, B, C, D, case)
        failures = [(msg, None) for msg in injection_defects(r, injection)]
        target, source = kappa_inequality(r, A, B, C, D, orientation, case)
        if not target.dominates(source):
            failures.append((target, source))
        if orientation == "vertical" and not equality_dichotomy_holds(r, A, B, C, D, case):
            failures.append(("dichotomy", case))
        indices = A + B + C + D
        return [Witness(p, d, None, indices, lhs, rhs) for lhs, rhs in failures]

    def check(self, item):
        p, d = item
        r = region_of(p, d)
        violations = []
        checks = 0
        for A, B, C, D, case in vertical_quadruples(r):
            violations += self._check_one(p, d, r, kappa_vertical, A, B, C, D, case, "vertical")
            checks += 1
        for A, B, C, D, case in horizontal_quadruples(r):
            if not (all_paths(r, A, C) and all_paths(r, B, D)):
                continue
            violations += self._check_one(p, d, r, kappa_horizontal, A, B, C, D, case, "horizontal")
            checks += 1
        return violations, {"checks": checks}


class DecompositionSuite(BaseSuite):
    """
    The G_q/H_q decomposition reproduces F_q, GCP_q >= 0 >= HCP_q for points in
    one column, and the cross-product expansion is nonpositive.
    """

    size_cap = 8

    def instances(self):
        return self.width_two(min_n=3)

    def check(self, item):
        p, d = item
        violations = []
        checks = 0
        for t in triples(p.n):
            normalized = t.normalize(p)
            if normalized is None:
                continue
            table = correlation_table(p, d, t)
            assembled = decomposition_table(normalized, d, t)
            if assembled != table:
                violations.append(Witness(p, d, t, (), "assembled", "oracle"))
            checks += 1

            relabeled, _ = relabel_for_decomposition(d, t)
            lattice = LatticeDecomposition(normalized, relabeled, t)
            Fq = correlation_table(normalized, relabeled, t)
            points = [lattice.point(u) for u in lattice.positions()]
            for i in range(1, p.n - 1):
                for x, Y in enumerate(points):
                    for V in points[x + 1 :]:
                        if not lattice.gcp_q(i, Y, V).is_nonnegative():
                            violations.append(Witness(p, relabeled, t, (i,) + Y + V, "GCP", 0))
                        if not ZERO.dominates(lattice.hcp_q(i, Y, V)):
                            violations.append(Witness(p, relabeled, t, (i,) + Y + V, "HCP", 0))
                        checks += 2
                for j in range(1, p.n - i):
                    expansion = lattice.cross_product_expansion(i, j)
                    direct = Fq.poly(i, j) * Fq.poly(i + 1, j + 1) - Fq.poly(i + 1, j) * Fq.poly(i, j + 1)
                    if expansion != direct or not ZERO.dominates(expansion):
                        violations.append(Witness(p, relabeled, t, (i, j), expansion, direct))
                    checks += 1
        return violations, {"checks": checks}
