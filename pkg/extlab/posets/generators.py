"""
Poset generators for exhaustive and randomized sweeps.
"""

from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from ..config import POSET_CAP
from ..errors import CapError, PosetError
from .poset import ChainDecomposition, Poset, _close


def canonical_form(p):
    """
    Isomorphism-invariant key of @p.

    Elements are grouped by (down-set size, up-set size); the key is the
    lexicographically least packed relation table over every relabelling that
    lists the groups in sorted order.
    """
    invariant = lambda x: (p.less_count(x), p.greater_count(x))
    groups = {}
    for x in range(p.n):
        groups.setdefault(invariant(x), []).append(x)
    classes = [groups[key] for key in sorted(groups)]

    best = None
    for parts in product(*(permutations(c) for c in classes)):
        order = [x for part in parts for x in part]
        key = np.packbits(p.rel[np.ix_(order, order)]).tobytes()
        if best is None or key < best:
            best = key
    return (p.n, best if best is not None else b"")


def _monotone_sequences(length, low, high):
    """ Nondecreasing integer sequences of @length with entries in [low, high]. """
    if length == 0:
        yield ()
        return
    for first in range(low, high + 1):
        for rest in _monotone_sequences(length - 1, first, high):
            yield (first,) + rest


def enumerate_width_two_posets(a, b, up_to_isomorphism=False):
    """
    Yields every poset whose elements split into chains C1 = (0..a-1) and
    C2 = (a..a+b-1), together with that decomposition.

    alpha_h is described by up(h), the least k with alpha_h < beta_k
    (b+1 if none), and down(h), the largest k with beta_k < alpha_h (0 if none).
    Valid posets are exactly the pairs of nondecreasing sequences with
    down(h) < up(h); every such relation set is already transitively closed.
    """
    if a < 0 or b < 0:
        raise PosetError("chain sizes must be nonnegative, got a=%d, b=%d" % (a, b))
    if a + b > POSET_CAP:
        raise CapError("a+b=%d exceeds the poset cap %d" % (a + b, POSET_CAP))

    n = a + b
    d = ChainDecomposition(range(a), range(a, n))
    seen = set()
    for ups in _monotone_sequences(a, 1, b + 1):
        for downs in _monotone_sequences(a, 0, b):
            if any(down >= up for up, down in zip(ups, downs)):
                continue
            rel = np.zeros((n, n), dtype=bool)
            rel[:a, :a] = np.triu(np.ones((a, a), dtype=bool), k=1)
            rel[a:, a:] = np.triu(np.ones((b, b), dtype=bool), k=1)
            for h in range(a):
                rel[h, a + ups[h] - 1 :] = True
                rel[a : a + downs[h], h] = True
            p = Poset(rel)

            key = canonical_form(p) if up_to_isomorphism else p
            if key in seen:
                continue
            seen.add(key)
            yield p, d


def width_two_instances(max_n, chains=None):
    """
    Deterministic stream of (poset, decomposition) over all chain sizes
    a+b <= @max_n, or only the sizes given by @chains = (a, b).
    """
    if chains:
        sizes = [tuple(chains)]
    else:
        sizes = [(a, n - a) for n in range(1, max_n + 1) for a in range(n, -1, -1)]
    for a, b in sizes:
        for p, d in enumerate_width_two_posets(a, b):
            yield p, d


def _down_sets(p):
    for size in range(p.n + 1):
        for subset in combinations(range(p.n), size):
            members = set(subset)
            if all(y in members for x in subset for y in np.nonzero(p.rel[:, x])[0]):
                yield subset


@lru_cache(maxsize=None)
def _poset_classes(n):
    if n == 0:
        return (Poset.antichain(0),)
    classes = {}
    for base in _poset_classes(n - 1):
        for below in _down_sets(base):
            rel = np.zeros((n, n), dtype=bool)
            rel[: n - 1, : n - 1] = base.rel
            rel[list(below), n - 1] = True
            p = Poset(rel)
            classes.setdefault(canonical_form(p), p)
    return tuple(classes[key] for key in sorted(classes))


def enumerate_posets(n):
    """ One representative of every isomorphism class of posets on @n elements. """
    if not 0 <= n <= POSET_CAP:
        raise CapError("n=%d exceeds the poset cap %d" % (n, POSET_CAP))
    return iter(_poset_classes(n))


def random_poset(n, edge_prob, seed):
    """ Transitive closure of a random DAG on the topological order 0 < 1 < ... < n-1. """
    assert 0 <= edge_prob <= 1, "edge_prob must lie in [0, 1]"
    rng = np.random.RandomState(seed)
    draws = rng.random_sample((n, n)) < edge_prob
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n) if draws[x, y]]
    return Poset(_close(n, pairs))
