"""
Log-concavity of single-gap and single-position statistics.
"""

from ..charmatrix import build_S, cc_leq, first_cc_violation
from ..errors import PreconditionError
from ..oracle import correlation_table, kahn_saks_vector, r_vector
from .cross_product import check_cpc
from .verdict import HOLDS, Verdict, Witness, first_failure, verdict


def check_kahn_saks(v, k, q_mode=False):
    """ F(k)^2 >= F(k-1) F(k+1), coefficient-wise on F_q in @q_mode. """
    if k <= 1:
        raise PreconditionError("Kahn-Saks needs k > 1, got %d" % k)
    if q_mode:
        lhs = v.poly(k) * v.poly(k)
        rhs = v.poly(k - 1) * v.poly(k + 1)
        holds = lhs.dominates(rhs)
    else:
        lhs = v(k) * v(k)
        rhs = v(k - 1) * v(k + 1)
        holds = lhs >= rhs
    return verdict(holds, v.pair, (k,), lhs, rhs)


def cpc_to_ks_reduction(p, x, z):
    """
    Adjoins an element y incomparable to everything and checks
    F_P(k + l - 1; x, z) = F_Q(k, l; x, y, z) for all k, l >= 1, then derives
    Kahn-Saks on P at k from the cross-product inequality on Q at (k - 1, 1).
    """
    if x == z:
        raise PreconditionError("the reduction needs two distinct elements")
    q, y = p.adjoin_incomparable()
    t = (x, y, z)
    F_p = kahn_saks_vector(p, None, x, z)
    F_q = correlation_table(q, None, t)

    for k in range(1, q.n):
        for l in range(1, q.n - k + 1):
            if F_p(k + l - 1) != F_q(k, l):
                return Verdict(False, Witness(p, None, t, (k, l), F_p(k + l - 1), F_q(k, l)))

    def implied():
        for k in range(2, p.n):
            cpc = check_cpc(F_q, k - 1, 1)
            ks = check_kahn_saks(F_p, k)
            if cpc.holds and not ks.holds:
                yield ks.located(poset=p)

    return first_failure(implied())


def _dense(q):
    if isinstance(q, dict):
        top = max(q) if q else 0
        return [q.get(i, 0) for i in range(top + 2)]
    return list(q)


def check_stanley(q):
    """ q(i)^2 >= q(i-1) q(i+1) for a position histogram, dict or dense list. """
    seq = _dense(q)
    for i in range(1, len(seq) - 1):
        lhs, rhs = seq[i] * seq[i], seq[i - 1] * seq[i + 1]
        if lhs < rhs:
            return Verdict(False, Witness(None, None, None, (i,), lhs, rhs))
    return HOLDS


def check_stanley_equality(q):
    """ For q(i) > 0: q(i)^2 = q(i-1) q(i+1) only when q(i-1) = q(i) = q(i+1). """
    seq = _dense(q)
    for i in range(1, len(seq) - 1):
        if not seq[i]:
            continue
        lhs, rhs = seq[i] * seq[i], seq[i - 1] * seq[i + 1]
        if lhs == rhs and not seq[i - 1] == seq[i] == seq[i + 1]:
            return Verdict(False, Witness(None, None, None, (i,), lhs, rhs))
    return HOLDS


def _r_dense(p, d, k, l, t, dim):
    counts = r_vector(p, d, k, l, t)
    return [counts.get(i, 0) for i in range(1, dim + 1)]


def check_r_vectors(p, d, k, l):
    """ r_t <=cc S r_m for every 1 <= t, m <= n with t - 1 <= m. """
    if not 1 <= k <= l <= d.b:
        raise PreconditionError("need 1 <= k <= l <= %d, got (%d, %d)" % (d.b, k, l))
    dim = p.n + 2
    S = build_S(dim)
    vectors = {t: _r_dense(p, d, k, l, t, dim) for t in range(1, p.n + 1)}
    shifted = {m: S.apply(v) for m, v in vectors.items()}
    for t in range(1, p.n + 1):
        for m in range(max(1, t - 1), p.n + 1):
            if not cc_leq(vectors[t], shifted[m]):
                i, j = first_cc_violation(vectors[t], shifted[m])
                lhs = vectors[t][i] * shifted[m][j]
                rhs = vectors[t][j] * shifted[m][i]
                return Verdict(False, Witness(p, d, None, (t, m, i + 1, j + 1), lhs, rhs))
    return HOLDS
