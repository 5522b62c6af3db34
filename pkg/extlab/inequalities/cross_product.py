"""
Cross-product inequalities on correlation tables and the equality classifier.

Every check reads the table through count(i, j) or poly(i, j), so absent
entries behave as zeros.
"""

import numpy as np

from ..errors import PreconditionError, WidthError
from ..oracle import correlation_table, extension_table, r_table
from ..posets import ElementTriple
from ..utils.logger import logger
from .verdict import HOLDS, first_failure, verdict


def check_cpc(table, k, l):
    """ F(k, l) F(k+1, l+1) <= F(k, l+1) F(k+1, l) at q = 1. """
    if k < 1 or l < 1:
        raise PreconditionError("cross-product indices must be positive, got (%d, %d)" % (k, l))
    lhs = table(k, l) * table(k + 1, l + 1)
    rhs = table(k, l + 1) * table(k + 1, l)
    return verdict(lhs <= rhs, table.triple, (k, l), lhs, rhs)


def signed_gcpc_applies(i, j, k, l):
    """
    Sign patterns of i <= k, j <= l on which the signed form holds for width
    two: all four indices positive, all four negative, or i < 0 < k with j < 0 < l.
    """
    return (i > 0 and j > 0) or (k < 0 and l < 0) or (i < 0 < k and j < 0 < l)


def check_gcpc(table, i, j, k, l, signed=False):
    """
    Unsigned form: F(k, l) F(k+i, l+j) <= F(k, l+j) F(k+i, l) for i, j, k, l >= 1.
    Signed form: F(i, j) F(k, l) <= F(i, l) F(k, j) for i <= k and j <= l,
    restricted to the sign patterns of signed_gcpc_applies.
    """
    if signed:
        if i > k or j > l:
            raise PreconditionError("signed form needs i <= k and j <= l, got %s" % ((i, j, k, l),))
        if not signed_gcpc_applies(i, j, k, l):
            raise PreconditionError("no signed form on the sign pattern of %s" % ((i, j, k, l),))
        lhs = table(i, j) * table(k, l)
        rhs = table(i, l) * table(k, j)
    else:
        if min(i, j, k, l) < 1:
            raise PreconditionError("unsigned form needs positive indices, got %s" % ((i, j, k, l),))
        lhs = table(k, l) * table(k + i, l + j)
        rhs = table(k, l + j) * table(k + i, l)
    return verdict(lhs <= rhs, table.triple, (i, j, k, l), lhs, rhs)


def check_qcpc(table, k, l):
    """ F_q(k, l+1) F_q(k+1, l) - F_q(k, l) F_q(k+1, l+1) has nonnegative coefficients. """
    if k < 1 or l < 1:
        raise PreconditionError("cross-product indices must be positive, got (%d, %d)" % (k, l))
    lhs = table.poly(k, l) * table.poly(k + 1, l + 1)
    rhs = table.poly(k, l + 1) * table.poly(k + 1, l)
    return verdict(rhs.dominates(lhs), table.triple, (k, l), lhs, rhs)


def cpc_index_pairs(n):
    """ (k, l) with k, l >= 1 and k + l <= n - 1; outside this range every term vanishes. """
    return [(k, l) for k in range(1, n - 1) for l in range(1, n - k)]


def _has_fixed_position(p, x):
    column = extension_table(p)[:, x]
    return bool((column == column[0]).all())


def cpc_equality_cases(p, t, k, l):
    """
    Subset of "abcd" describing which degenerate cases hold at (k, l):
    (a) equal rows, (b) equal columns, (c) a vanishing right-hand side,
    (d) z2 sits at one position in every extension with z1 < z2 < z3.
    """
    F = correlation_table(p, None, t)
    cases = []
    if F(k, l) == F(k + 1, l) and F(k, l + 1) == F(k + 1, l + 1):
        cases.append("a")
    if F(k, l) == F(k, l + 1) and F(k + 1, l) == F(k + 1, l + 1):
        cases.append("b")
    if F(k + 1, l) * F(k, l + 1) == 0:
        cases.append("c")
    normalized = ElementTriple(*t).normalize(p)
    if normalized is not None and _has_fixed_position(normalized, t[1]):
        cases.append("d")
    return "".join(cases)


def classify_cpc_equality(p, d, t, k, l):
    """
    Returns (cases, verdict). The verdict holds iff equality at (k, l) is
    equivalent both to some case applying and to the q-equality
    F_q(k, l) F_q(k+1, l+1) = F_q(k, l+1) F_q(k+1, l).
    """
    if p.width() > 2:
        raise WidthError("equality cases are classified for width two only, got width %d" % p.width())
    if not (1 <= k <= p.n - 1 and 1 <= l <= p.n - 1):
        raise PreconditionError("need 1 <= k, l <= %d, got (%d, %d)" % (p.n - 1, k, l))

    cases = cpc_equality_cases(p, t, k, l)
    F = correlation_table(p, None, t)
    lhs = F(k, l) * F(k + 1, l + 1)
    rhs = F(k, l + 1) * F(k + 1, l)
    equal = lhs == rhs

    Fq = correlation_table(p, d, t)
    q_left = Fq.poly(k, l) * Fq.poly(k + 1, l + 1)
    q_equal = q_left == Fq.poly(k, l + 1) * Fq.poly(k + 1, l)
    displayed_equal = q_left == Fq.poly(k, l + 1) * Fq.poly(k + 1, l + 1)
    if displayed_equal != q_equal:
        logger.warning(
            "q-equality forms disagree on %s, triple %s at (%d, %d)",
            p.to_text(),
            t,
            k,
            l,
        )

    holds = equal == bool(cases) and equal == q_equal
    return cases, verdict(holds, t, (k, l), lhs, rhs, poset=p, decomposition=d)


def check_r_table(p, x, z, reverse=False):
    """
    R(i, j) R(k, l) >= R(i, l) R(k, j) for all i <= k, j <= l, or <= with
    @reverse. With a global minimum y adjoined, R is the signed table of
    (x, y, z) on rows i, k < 0 and columns j, l > 0. Neither direction holds
    on every width-two poset; the r-table search reports where they fail.
    """
    R = r_table(p, x, z)
    positions = range(1, p.n + 1)

    def instances():
        for i in positions:
            for k in positions[i - 1 :]:
                for j in positions:
                    for l in positions[j - 1 :]:
                        lhs = R.get((i, j), 0) * R.get((k, l), 0)
                        rhs = R.get((i, l), 0) * R.get((k, j), 0)
                        holds = lhs <= rhs if reverse else lhs >= rhs
                        yield verdict(holds, (x, None, z), (i, j, k, l), lhs, rhs, poset=p)

    return first_failure(instances())


def telescoping_record(table, i, j, k, l):
    """
    Whether F(k+i, m) / F(k, m) can be written as a telescoping product of CPC
    ratios for every m between l and l+j: lists the vanishing factors F(r, m).
    """
    zeros = [
        (r, m)
        for r in range(k, k + i + 1)
        for m in range(l, l + j + 1)
        if table(r, m) == 0
    ]
    return {
        "indices": (i, j, k, l),
        "zeros": zeros,
        "telescopes": not zeros,
        "gcpc_holds": check_gcpc(table, i, j, k, l).holds,
    }


def gcpc_quadruples(n):
    """ (i, j, k, l), all >= 1, with k + i + l + j <= n - 1 so that F(k+i, l+j) can be nonzero. """
    return [
        (i, j, k, l)
        for k in range(1, n)
        for l in range(1, n - k)
        for i in range(1, n - k - l)
        for j in range(1, n - k - l - i)
    ]


def _dense_counts(table):
    rows, cols = table.rows(), table.cols()
    if not rows:
        return None
    m = np.zeros((rows[-1] - rows[0] + 1, cols[-1] - cols[0] + 1), dtype=object)
    for (i, j), poly in table.items():
        m[i - rows[0], j - cols[0]] = poly.at_one()
    return m, rows[0], cols[0]


def _sign_mask(i, k, cols):
    """ Column pairs (j, l) that signed_gcpc_applies to together with rows i < k. """
    if i > 0:
        return np.outer(cols > 0, cols > 0)
    if k < 0:
        return np.outer(cols < 0, cols < 0)
    if i < 0 < k:
        return np.outer(cols < 0, cols > 0)
    return np.zeros((len(cols), len(cols)), dtype=bool)


def positive_minors(table, applies_only=True):
    """
    Yields every (i, j, k, l) with i < k, j < l and F(i, j) F(k, l) > F(i, l) F(k, j),
    rows first, then columns, in increasing order. On a signed table
    @applies_only keeps the sign patterns of signed_gcpc_applies.
    """
    dense = _dense_counts(table)
    if dense is None:
        return
    m, r0, c0 = dense
    cols = np.arange(m.shape[1]) + c0
    upper = np.triu(np.ones((len(cols), len(cols)), dtype=bool), k=1)
    for a in range(m.shape[0]):
        for b in range(a + 1, m.shape[0]):
            i, k = a + r0, b + r0
            mask = upper & _sign_mask(i, k, cols) if table.signed and applies_only else upper
            # minors[j, l] = F(i, j) F(k, l) - F(k, j) F(i, l)
            minors = np.outer(m[a], m[b]) - np.outer(m[b], m[a])
            for jj, ll in np.argwhere(mask & (minors > 0).astype(bool)):
                yield i, int(jj) + c0, k, int(ll) + c0


def scan_gcpc(table):
    """
    Every generalized cross-product instance of @table at once. Signed tables
    are read in the signed form, unsigned ones in the offset form. Returns
    the first failing verdict or HOLDS.
    """
    for i, j, k, l in positive_minors(table):
        if table.signed:
            return check_gcpc(table, i, j, k, l, signed=True)
        return check_gcpc(table, k - i, l - j, i, j)
    return HOLDS
