"""
G/H matrices of a triple, the factorization of F_P through them, and minor scans.
"""

from itertools import combinations, permutations

import numpy as np

from ..oracle import correlation_table, extension_table
from .banded import build_identity, build_S


def g_matrix(p, t):
    """
    G(i, t') = |{L : L(z1) = t' - i, L(z2) = t'}|, stored at [i - 1, t' - 1]
    for 1 <= i, t' <= n.
    """
    table = extension_table(p)
    z1, z2, _ = t
    g = np.zeros((p.n, p.n), dtype=object)
    for pos1, pos2 in zip(table[:, z1].tolist(), table[:, z2].tolist()):
        if pos2 > pos1:
            g[pos2 - pos1 - 1, pos2 - 1] += 1
    return g


def h_matrix(p, t):
    """ H(j, t') = |{L : L(z3) = t' + j, L(z2) = t'}|, stored at [j - 1, t' - 1]. """
    table = extension_table(p)
    _, z2, z3 = t
    h = np.zeros((p.n, p.n), dtype=object)
    for pos2, pos3 in zip(table[:, z2].tolist(), table[:, z3].tolist()):
        if pos3 > pos2:
            h[pos3 - pos2 - 1, pos2 - 1] += 1
    return h


def split_at_middle(p, t):
    """
    Q is induced on the elements not above z2, R on the elements not below z2.
    Returns (Q, triple in Q, R, triple in R, less(z2)); @p must satisfy z1 < z2 < z3.
    """
    z1, z2, z3 = t
    q_ids = [x for x in range(p.n) if not p.less(z2, x)]
    r_ids = [x for x in range(p.n) if not p.less(x, z2)]
    q, r = p.restrict(q_ids), p.restrict(r_ids)
    tq = (q_ids.index(z1), q_ids.index(z2), None)
    tr = (None, r_ids.index(z2), r_ids.index(z3))
    return q, tq, r, tr, p.less_count(z2)


def _padded(m, dim):
    out = np.zeros((dim, dim), dtype=object)
    out[: m.shape[0], : m.shape[1]] = m
    return out


def factorized_f(p, t):
    """ F_P = G_Q S^c H_R^T as an n x n array at [i - 1, j - 1], with c = less(z2). """
    q, tq, r, tr, c = split_at_middle(p, t)
    shift = build_identity(p.n)
    for _ in range(c):
        shift = shift @ build_S(p.n)
    gq, hr = _padded(g_matrix(q, tq), p.n), _padded(h_matrix(r, tr), p.n)
    return gq.dot(shift.data).dot(hr.T)


def f_matrix(p, t):
    """ Unsigned correlation counts F(i, j), i, j >= 1, as an n x n array. """
    f = np.zeros((p.n, p.n), dtype=object)
    for (i, j), poly in correlation_table(p, None, t).items():
        f[i - 1, j - 1] = poly.at_one()
    return f


def factorization_check(p, t):
    """ True iff the G/H factorization reproduces F_P; @t is normalized first. """
    normalized = t.normalize(p)
    if normalized is None:
        return True
    return bool((factorized_f(normalized, t) == f_matrix(normalized, t)).all())


def minor(m, i, j, k, l):
    return m[i, j] * m[k, l] - m[i, l] * m[k, j]


def minor_sign_scan(m, expected):
    """
    First (i, j, k, l) with i < k, j < l, in lexicographic order, whose 2x2
    minor has the wrong sign, or None. @expected is +1 (minors >= 0) or -1.
    """
    assert expected in (1, -1), "expected sign must be +1 or -1"
    rows, cols = m.shape
    for i in range(rows):
        for j in range(cols):
            for k in range(i + 1, rows):
                for l in range(j + 1, cols):
                    if expected * minor(m, i, j, k, l) < 0:
                        return i, j, k, l
    return None


def _determinant(m):
    """ Leibniz expansion over exact integers. """
    size = len(m)
    total = 0
    for perm in permutations(range(size)):
        inversions = sum(1 for a, b in combinations(perm, 2) if a > b)
        term = -1 if inversions % 2 else 1
        for row, col in enumerate(perm):
            term *= m[row][col]
            if not term:
                break
        total += term
    return total


def total_nonnegativity_scan(m, size):
    """ First (rows, cols, det) with a negative size x size minor, or None. """
    assert size in (2, 3), "only 2x2 and 3x3 minors are scanned"
    n_rows, n_cols = m.shape
    for rows in combinations(range(n_rows), size):
        for cols in combinations(range(n_cols), size):
            det = _determinant([[m[r, c] for c in cols] for r in rows])
            if det < 0:
                return rows, cols, det
    return None
