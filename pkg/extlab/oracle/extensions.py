"""
Brute-force statistics of linear extensions.

Every quantity here is counted directly from the list of linear extensions,
which makes this module the ground truth the fast paths are tested against.
"""

from collections import Counter, namedtuple
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import comb

from ..config import extension_cap
from ..errors import CapError, EmptyError, TotalOrderError
from .qpoly import QPolynomial, ZERO


class LinearExtension(namedtuple("LinearExtension", ["labels"])):
    """ labels[x] is the position L(x) in 1..n. """

    __slots__ = ()

    @classmethod
    def from_order(cls, order):
        labels = [0] * len(order)
        for pos, x in enumerate(order, start=1):
            labels[x] = pos
        return cls(tuple(labels))

    def __call__(self, x):
        return self.labels[x]

    @property
    def order(self):
        """ order[i - 1] is the element at position i. """
        order = [0] * len(self.labels)
        for x, pos in enumerate(self.labels):
            order[pos - 1] = x
        return tuple(order)

    def is_extension_of(self, p):
        return all(
            self.labels[x] < self.labels[y]
            for x in range(p.n)
            for y in range(p.n)
            if p.less(x, y)
        )


def _greedy_chains(p):
    chains = []
    for x in sorted(range(p.n), key=lambda x: (p.less_count(x), x)):
        for chain in chains:
            if p.less(chain[-1], x):
                chain.append(x)
                break
        else:
            chains.append([x])
    return chains


def extension_bound(p):
    """ n! / prod |C|! over a greedy chain partition; an upper bound on e(P). """
    bound, placed = 1, 0
    for chain in _greedy_chains(p):
        placed += len(chain)
        bound *= comb(placed, len(chain), exact=True)
    return bound


def _check_cap(p):
    cap = extension_cap()
    bound = extension_bound(p)
    if bound > cap:
        raise CapError(
            "poset %s may have up to %d linear extensions (cap %d)" % (p.to_text(), bound, cap)
        )


def enumerate_extensions(p):
    """
    Streams every linear extension of @p exactly once, backtracking over the
    currently minimal elements in increasing id order.
    """
    _check_cap(p)
    n = p.n
    rel = p.rel
    pending = [int(c) for c in rel.sum(axis=0)]
    used = [False] * n
    order = []

    def backtrack():
        if len(order) == n:
            yield LinearExtension.from_order(order)
            return
        for x in range(n):
            if used[x] or pending[x]:
                continue
            used[x] = True
            order.append(x)
            above = np.nonzero(rel[x])[0]
            for y in above:
                pending[y] -= 1
            yield from backtrack()
            for y in above:
                pending[y] += 1
            order.pop()
            used[x] = False

    yield from backtrack()


@lru_cache(maxsize=256)
def extension_table(p):
    """ Read-only (e(P), n) array of labels, rows in enumeration order. """
    rows = [l.labels for l in enumerate_extensions(p)]
    table = np.array(rows, dtype=np.int64).reshape(len(rows), p.n)
    table.setflags(write=False)
    return table


def extensions(p):
    return [LinearExtension(tuple(int(v) for v in row)) for row in extension_table(p)]


def extension_count(p):
    """ e(P) """
    return extension_table(p).shape[0]


def weight(l, d):
    """ wgt(L) = sum of L(x) over x in C1. """
    return sum(l(x) for x in d.c1)


def _weights(p, d):
    table = extension_table(p)
    if d is None or not d.a:
        return np.zeros(table.shape[0], dtype=np.int64)
    return table[:, list(d.c1)].sum(axis=1)


def _polys(keys, weights):
    """ Groups extensions by key into sum of q^wgt polynomials. """
    counts = Counter(zip(keys, weights))
    coeffs = {}
    for (key, w), c in counts.items():
        coeffs.setdefault(key, {})[w] = c
    return {key: QPolynomial(c) for key, c in coeffs.items()}


class CorrelationTable(object):
    """
    F_q(i, j) for a triple (z1, z2, z3): the sum of q^wgt(L) over extensions
    with L(z2) - L(z1) = i and L(z3) - L(z2) = j. Zero entries are absent.
    """

    def __init__(self, triple, entries, signed=True):
        self.triple = triple
        self.signed = signed
        self._entries = {k: v for k, v in entries.items() if v}

    def poly(self, i, j):
        return self._entries.get((i, j), ZERO)

    def count(self, i, j):
        return self.poly(i, j).at_one()

    __call__ = count

    def unsigned(self):
        return CorrelationTable(
            self.triple,
            {(i, j): v for (i, j), v in self._entries.items() if i >= 1 and j >= 1},
            signed=False,
        )

    def rows(self):
        return sorted({i for i, _ in self._entries})

    def cols(self):
        return sorted({j for _, j in self._entries})

    def items(self):
        return sorted(self._entries.items())

    def total(self):
        return sum(v.at_one() for v in self._entries.values())

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return (
            isinstance(other, CorrelationTable)
            and self.triple == other.triple
            and self._entries == other._entries
        )

    def to_json(self):
        return {"%d,%d" % key: value.to_text() for key, value in self.items()}

    @classmethod
    def from_json(cls, triple, data, signed=True):
        entries = {}
        for key, text in data.items():
            i, j = key.split(",")
            entries[(int(i), int(j))] = QPolynomial.from_text(text)
        return cls(triple, entries, signed=signed)


def correlation_table(p, d, t, signed=False):
    """
    Correlation table of triple @t. Weights use the chain C1 of @d
    (all weights are 0 when @d is None). The unsigned table keeps i, j >= 1,
    i.e. the extensions of the poset with z1 < z2 < z3 imposed.
    """
    table = extension_table(p)
    z1, z2, z3 = t
    i = (table[:, z2] - table[:, z1]).tolist()
    j = (table[:, z3] - table[:, z2]).tolist()
    entries = _polys(list(zip(i, j)), _weights(p, d).tolist())
    result = CorrelationTable(t, entries, signed=True)
    return result if signed else result.unsigned()


class KahnSaksVector(object):
    """ F_q(k) for a pair (x, y): sum of q^wgt(L) over L with L(y) - L(x) = k. """

    def __init__(self, pair, entries):
        self.pair = pair
        self._entries = {k: v for k, v in entries.items() if v}

    def poly(self, k):
        return self._entries.get(k, ZERO)

    def count(self, k):
        return self.poly(k).at_one()

    __call__ = count

    def keys(self):
        return sorted(self._entries)

    def items(self):
        return sorted(self._entries.items())

    def total(self):
        return sum(v.at_one() for v in self._entries.values())

    def to_json(self):
        return {"%d" % k: v.to_text() for k, v in self.items()}


def kahn_saks_vector(p, d, x, y):
    assert x != y, "kahn_saks_vector needs two distinct elements"
    table = extension_table(p)
    gaps = (table[:, y] - table[:, x]).tolist()
    return KahnSaksVector((x, y), _polys(gaps, _weights(p, d).tolist()))


def r_table(p, x, z):
    """ R(i, j) = |{L : L(x) = i, L(z) = j}| """
    assert x != z, "r_table needs two distinct elements"
    table = extension_table(p)
    return dict(Counter(zip(table[:, x].tolist(), table[:, z].tolist())))


def q_vector(p, x):
    """ q_x(i) = |{L : L(x) = i}| """
    return dict(Counter(extension_table(p)[:, x].tolist()))


def stanley_sequence(p, x):
    """ Dense q_x(0), ..., q_x(n + 1); both ends are zero. """
    counts = q_vector(p, x)
    return [counts.get(i, 0) for i in range(p.n + 2)]


def r_vector(p, d, k, l, t):
    """ r_t(i) = |{L : L(beta_k) = i, L(beta_l) = t}| """
    assert k <= l, "r_vector needs k <= l"
    bk, bl = d.beta(k), d.beta(l)
    table = extension_table(p)
    hits = table[table[:, bl] == t]
    return dict(Counter(hits[:, bk].tolist()))


class ForwardEvent(object):
    """ The event L(alpha_i) < L(beta_j) for every listed pair (i, j). """

    def __init__(self, d, pairs):
        self.pairs = tuple((int(i), int(j)) for i, j in pairs)
        self._elements = [(d.alpha(i), d.beta(j)) for i, j in self.pairs]

    def __call__(self, l):
        return all(l(x) < l(y) for x, y in self._elements)

    def __repr__(self):
        return "ForwardEvent(%s)" % (self.pairs,)


def forward_event(d, pairs):
    return ForwardEvent(d, pairs)


def event_count(p, event):
    return sum(1 for l in extensions(p) if event(l))


def event_probability(p, event):
    """ |{L : event(L)}| / e(P) as an exact fraction. """
    total = extension_count(p)
    if total == 0:
        raise EmptyError("poset %s has no linear extensions" % p.to_text())
    return Fraction(event_count(p, event), total)


def one_third_statistic(p):
    """
    Returns ((x, y), delta) maximizing min(Pr[L(x) < L(y)], Pr[L(y) < L(x)])
    over incomparable pairs; ties keep the lexicographically first pair.
    """
    if p.is_chain():
        raise TotalOrderError("poset %s is a total order" % p.to_text())
    table = extension_table(p)
    total = table.shape[0]
    best, best_pair = None, None
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if p.comparable(x, y):
                continue
            below = int((table[:, x] < table[:, y]).sum())
            delta = Fraction(min(below, total - below), total)
            if best is None or delta > best:
                best, best_pair = delta, (x, y)
    return best_pair, best
