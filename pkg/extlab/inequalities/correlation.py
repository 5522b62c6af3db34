"""
Positive-correlation inequalities under the uniform measure on linear extensions:
GYY for forward events, XYZ and the 1/3-2/3 balance statistic.
"""

from fractions import Fraction
from itertools import combinations

from ..errors import WidthError
from ..oracle import (
    correlation_table,
    extension_count,
    extension_table,
    extensions,
    forward_event,
    one_third_statistic,
)
from .verdict import HOLDS, Verdict, Witness, verdict


def _require_width_two(p, what):
    if p.width() > 2:
        raise WidthError("%s needs a poset of width two, got width %d" % (what, p.width()))


def atomic_events(d):
    return [(i, j) for i in range(1, d.a + 1) for j in range(1, d.b + 1)]


def forward_events(d, max_atoms=2):
    """ Every forward event with at most @max_atoms atoms, the empty event first. """
    atoms = atomic_events(d)
    for size in range(max_atoms + 1):
        for pairs in combinations(atoms, size):
            yield forward_event(d, pairs)


def check_gyy(p, d, event_a, event_b):
    """ P[A and B] >= P[A] P[B] as exact fractions. """
    _require_width_two(p, "GYY")
    n_a = n_b = n_ab = 0
    for l in extensions(p):
        in_a, in_b = event_a(l), event_b(l)
        n_a += in_a
        n_b += in_b
        n_ab += in_a and in_b
    e = extension_count(p)
    lhs, rhs = Fraction(n_ab, e), Fraction(n_a * n_b, e * e)
    # atoms of A, a 0 separator, atoms of B
    indices = [v for pair in event_a.pairs for v in pair] + [0]
    indices += [v for pair in event_b.pairs for v in pair]
    return verdict(lhs >= rhs, None, indices, lhs, rhs, poset=p, decomposition=d)


def _xyz_counts(p, x, y, z):
    table = extension_table(p)
    xy = table[:, x] < table[:, y]
    xz = table[:, x] < table[:, z]
    return int(xy.sum()), int(xz.sum()), int((xy & xz).sum()), table.shape[0]


def xyz_gap(p, x, y, z):
    """ P[x<y, x<z] - P[x<y] P[x<z] """
    n_xy, n_xz, n_both, e = _xyz_counts(p, x, y, z)
    return Fraction(n_both, e) - Fraction(n_xy * n_xz, e * e)


def check_xyz(p, x, y, z, strict_if_antichain=False):
    """
    P[L(x) < L(y), L(x) < L(z)] >= P[L(x) < L(y)] P[L(x) < L(z)], strictly when
    {x, y, z} is an antichain and @strict_if_antichain is set.
    """
    n_xy, n_xz, n_both, e = _xyz_counts(p, x, y, z)
    lhs, rhs = Fraction(n_both, e), Fraction(n_xy * n_xz, e * e)
    antichain = not (p.comparable(x, y) or p.comparable(x, z) or p.comparable(y, z))
    holds = lhs > rhs if strict_if_antichain and antichain else lhs >= rhs
    return verdict(holds, (x, y, z), (), lhs, rhs, poset=p)


def xyz_quadrant_terms(p, x, y, z):
    """
    Terms (F(i, l) F(k, j) - F(i, j) F(k, l)) / e^2 over i, j < 0 < k, l of the
    signed table of (y, x, z); they add up to the XYZ gap. Sorted by indices.
    """
    F = correlation_table(p, None, (y, x, z), signed=True)
    e = extension_count(p)
    negative_rows = [i for i in F.rows() if i < 0]
    positive_rows = [k for k in F.rows() if k > 0]
    negative_cols = [j for j in F.cols() if j < 0]
    positive_cols = [l for l in F.cols() if l > 0]
    terms = []
    for i in negative_rows:
        for j in negative_cols:
            for k in positive_rows:
                for l in positive_cols:
                    value = F(i, l) * F(k, j) - F(i, j) * F(k, l)
                    if value:
                        terms.append(((i, j, k, l), Fraction(value, e * e)))
    return terms


def first_positive_term(p, x, y, z):
    """ Indices and value of the first strictly positive quadrant term, or None. """
    for indices, value in xyz_quadrant_terms(p, x, y, z):
        if value > 0:
            return indices, value
    return None


def xyz_from_gcpc_decomposition(p, x, y, z):
    """
    Every quadrant term is a signed cross-product difference, so it is
    nonnegative on width-two posets, and the terms add up to the direct gap.
    """
    _require_width_two(p, "the XYZ decomposition")
    terms = xyz_quadrant_terms(p, x, y, z)
    for indices, value in terms:
        if value < 0:
            return Verdict(False, Witness(p, None, (y, x, z), indices, value, 0))
    total = sum((value for _, value in terms), Fraction(0))
    direct = xyz_gap(p, x, y, z)
    if total != direct:
        return Verdict(False, Witness(p, None, (y, x, z), (), total, direct))
    return HOLDS


def check_one_third(p):
    """ delta(P) >= 1/3 for a width-two poset that is not a chain. """
    _require_width_two(p, "the 1/3-2/3 check")
    pair, delta = one_third_statistic(p)
    return verdict(delta >= Fraction(1, 3), None, pair, delta, Fraction(1, 3), poset=p)
