"""
Immutable finite posets, two-chain decompositions and element triples.

Elements are the integers 0..n-1. A poset stores its strict order as a
read-only boolean table ``rel`` with ``rel[x, y]`` True iff x < y.
"""

from collections import namedtuple
from itertools import product

import numpy as np
import networkx as nx

from ..errors import (
    ChainIndexError,
    CycleError,
    PosetError,
    PosetParseError,
    WidthError,
)


def _close(n, pairs):
    """ Returns the transitive closure of @pairs on range(n) as a boolean table. """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise PosetError("relation %d<%d is out of range for n=%d" % (x, y, n))
        if x == y:
            raise CycleError("relation %d<%d violates irreflexivity" % (x, y))
        graph.add_edge(x, y)

    if not nx.is_directed_acyclic_graph(graph):
        cycle = nx.find_cycle(graph)
        raise CycleError("relations contain the cycle %s" % cycle)

    rel = np.zeros((n, n), dtype=bool)
    for x, y in nx.transitive_closure_dag(graph).edges():
        rel[x, y] = True
    return rel


class Poset(object):
    """
    Hashable, immutable finite strict partial order.

    Equality and hashing use the labelled relation table; isomorphic posets
    with different labels are different values (see canonical_form).
    """

    def __init__(self, rel):
        rel = np.array(rel, dtype=bool)
        assert rel.ndim == 2 and rel.shape[0] == rel.shape[1], "relation table must be square"
        n = rel.shape[0]
        assert not rel.diagonal().any(), "relation must be irreflexive"
        assert not (rel & rel.T).any(), "relation must be antisymmetric"
        if n:
            composed = rel.astype(np.int64) @ rel.astype(np.int64) > 0
            assert not (composed & ~rel).any(), "relation must be transitively closed"
        rel.setflags(write=False)
        self._rel = rel
        self._key = (n, np.packbits(rel).tobytes())

    @classmethod
    def from_relations(cls, n, relations):
        """ Transitive closure of @relations (pairs x<y); raises CycleError on cycles. """
        return cls(_close(n, relations))

    @classmethod
    def chain(cls, n):
        return cls(np.triu(np.ones((n, n), dtype=bool), k=1))

    @classmethod
    def antichain(cls, n):
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def from_text(cls, text, lineno=None):
        """ Parses the one-line format ``n;x<y,x<y,...`` (0-indexed cover relations). """
        head, sep, body = text.strip().partition(";")
        if not sep:
            raise PosetParseError("expected 'n;x<y,...', got %r" % text.strip(), lineno)
        try:
            n = int(head)
        except ValueError:
            raise PosetParseError("element count %r is not an integer" % head, lineno)
        if n < 0:
            raise PosetParseError("element count must be nonnegative", lineno)

        pairs = []
        for token in body.split(","):
            token = token.strip()
            if not token:
                continue
            left, _, right = token.partition("<")
            try:
                pairs.append((int(left), int(right)))
            except ValueError:
                raise PosetParseError("bad relation %r" % token, lineno)
        try:
            return cls.from_relations(n, pairs)
        except PosetError as e:
            raise PosetParseError(str(e), lineno)

    @property
    def n(self):
        return self._rel.shape[0]

    @property
    def rel(self):
        return self._rel

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Poset) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return "Poset(%s)" % self.to_text()

    def __getstate__(self):
        return {"rel": np.array(self._rel)}

    def __setstate__(self, state):
        self.__init__(state["rel"])

    def less(self, x, y):
        return bool(self._rel[x, y])

    def comparable(self, x, y):
        return x == y or bool(self._rel[x, y] or self._rel[y, x])

    def incomparable(self, x, y):
        return not self.comparable(x, y)

    def less_count(self, x):
        """ |{y : y < x}| """
        return int(self._rel[:, x].sum())

    def greater_count(self, x):
        return int(self._rel[x, :].sum())

    def inc_count(self, x):
        """ |{y != x : y incomparable to x}| """
        return self.n - 1 - self.less_count(x) - self.greater_count(x)

    def is_chain(self):
        return all(self.comparable(x, y) for x in range(self.n) for y in range(x + 1, self.n))

    def covers(self):
        """ Cover relations (transitive reduction) in lexicographic order. """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(zip(*np.nonzero(self._rel)))
        return sorted((int(x), int(y)) for x, y in nx.transitive_reduction(graph).edges())

    def to_text(self):
        return "%d;%s" % (self.n, ",".join("%d<%d" % c for c in self.covers()))

    def width(self):
        """ Size of a largest antichain, via Dilworth and a maximum bipartite matching. """
        if self.n == 0:
            return 0
        graph = nx.Graph()
        left = [("lo", x) for x in range(self.n)]
        graph.add_nodes_from(left)
        graph.add_nodes_from(("hi", y) for y in range(self.n))
        for x, y in zip(*np.nonzero(self._rel)):
            graph.add_edge(("lo", int(x)), ("hi", int(y)))
        matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
        return self.n - len(matching) // 2

    def dual(self):
        return Poset(self._rel.T)

    def restrict(self, subset):
        """ Induced order on @subset, re-indexed in increasing id order. """
        ids = sorted(set(subset))
        if ids and not (0 <= ids[0] and ids[-1] < self.n):
            raise PosetError("subset %s is not contained in range(%d)" % (ids, self.n))
        return Poset(self._rel[np.ix_(ids, ids)])

    def with_relations(self, relations):
        """ Adds @relations and closes; raises CycleError if they contradict the order. """
        pairs = [(int(x), int(y)) for x, y in zip(*np.nonzero(self._rel))]
        return Poset.from_relations(self.n, pairs + list(relations))

    def adjoin_incomparable(self):
        """ Returns (poset, y) where y = n is a new element incomparable to all others. """
        rel = np.zeros((self.n + 1, self.n + 1), dtype=bool)
        rel[: self.n, : self.n] = self._rel
        return Poset(rel), self.n

    def adjoin_global_min(self):
        """ Returns (poset, y) where y = n is a new element below every other element. """
        rel = np.zeros((self.n + 1, self.n + 1), dtype=bool)
        rel[: self.n, : self.n] = self._rel
        rel[self.n, : self.n] = True
        return Poset(rel), self.n

    def incomparability_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for x in range(self.n):
            for y in range(x + 1, self.n):
                if not self.comparable(x, y):
                    graph.add_edge(x, y)
        return graph


def poset_from_cover_relations(n, covers):
    return Poset.from_relations(n, covers)


def disjoint_sum(*posets):
    """ Disjoint union; the k-th summand's elements follow those of earlier summands. """
    n = sum(p.n for p in posets)
    rel = np.zeros((n, n), dtype=bool)
    offset = 0
    for p in posets:
        rel[offset : offset + p.n, offset : offset + p.n] = p.rel
        offset += p.n
    return Poset(rel)


class ChainDecomposition(namedtuple("ChainDecomposition", ["c1", "c2"])):
    """
    Ordered partition (C1, C2) of a width-two poset into chains.
    c1 lists alpha_1 < ... < alpha_a and c2 lists beta_1 < ... < beta_b.
    """

    __slots__ = ()

    def __new__(cls, c1, c2):
        return super().__new__(cls, tuple(int(x) for x in c1), tuple(int(x) for x in c2))

    @property
    def a(self):
        return len(self.c1)

    @property
    def b(self):
        return len(self.c2)

    def alpha(self, h):
        """ alpha_h, 1-indexed. """
        if not 1 <= h <= self.a:
            raise ChainIndexError("alpha_%d is out of range (a=%d)" % (h, self.a))
        return self.c1[h - 1]

    def beta(self, k):
        """ beta_k, 1-indexed. """
        if not 1 <= k <= self.b:
            raise ChainIndexError("beta_%d is out of range (b=%d)" % (k, self.b))
        return self.c2[k - 1]

    def chain_of(self, x):
        if x in self.c1:
            return 1
        if x in self.c2:
            return 2
        raise ChainIndexError("element %d is in neither chain" % x)

    def rank(self, x):
        """ 1-indexed position of @x inside its own chain. """
        chain = self.c1 if self.chain_of(x) == 1 else self.c2
        return chain.index(x) + 1

    def swapped(self):
        return ChainDecomposition(self.c2, self.c1)

    def is_valid_for(self, p):
        if sorted(self.c1 + self.c2) != list(range(p.n)):
            return False
        for chain in (self.c1, self.c2):
            for lo, hi in zip(chain, chain[1:]):
                if not p.less(lo, hi):
                    return False
        return True

    def to_text(self):
        return "%s|%s" % (",".join(map(str, self.c1)), ",".join(map(str, self.c2)))


def _sorted_chain(p, chain):
    return tuple(sorted(chain, key=p.less_count))


def chain_decomposition_width_two(p):
    """
    Deterministic partition of a width-two poset into chains.

    The incomparability graph of a width-two poset is bipartite. Each connected
    component is 2-coloured with its smallest element in C1; elements of
    different components are comparable, so each colour class is a chain.
    """
    graph = p.incomparability_graph()
    try:
        colors = nx.bipartite.color(graph)
    except nx.NetworkXError:
        raise WidthError("poset %s has width %d > 2" % (p.to_text(), p.width()))

    c1, c2 = [], []
    for component in sorted(nx.connected_components(graph), key=min):
        root = min(component)
        for x in component:
            (c1 if colors[x] == colors[root] else c2).append(x)

    d = ChainDecomposition(_sorted_chain(p, c1), _sorted_chain(p, c2))
    assert d.is_valid_for(p), "invalid chain decomposition %s" % (d,)
    return d


def chain_decompositions(p):
    """
    Yields every ordered two-chain partition of a width-two poset: 2^c of them,
    c counting every connected component of the incomparability graph,
    isolated elements included.
    """
    graph = p.incomparability_graph()
    try:
        colors = nx.bipartite.color(graph)
    except nx.NetworkXError:
        raise WidthError("poset %s has width %d > 2" % (p.to_text(), p.width()))

    components = sorted((sorted(c) for c in nx.connected_components(graph)), key=min)
    for flips in product((False, True), repeat=len(components)):
        c1, c2 = [], []
        for flip, component in zip(flips, components):
            root = component[0]
            for x in component:
                in_c1 = (colors[x] == colors[root]) != flip
                (c1 if in_c1 else c2).append(x)
        yield ChainDecomposition(_sorted_chain(p, c1), _sorted_chain(p, c2))


class ElementTriple(namedtuple("ElementTriple", ["z1", "z2", "z3"])):
    __slots__ = ()

    def __new__(cls, z1, z2, z3):
        if len({z1, z2, z3}) != 3:
            raise PosetError("triple elements must be distinct, got (%d, %d, %d)" % (z1, z2, z3))
        return super().__new__(cls, int(z1), int(z2), int(z3))

    def normalize(self, p):
        """ @p with z1 < z2 < z3 imposed, or None when that contradicts @p. """
        try:
            return p.with_relations([(self.z1, self.z2), (self.z2, self.z3)])
        except CycleError:
            return None

    def to_text(self):
        return "%d,%d,%d" % self
