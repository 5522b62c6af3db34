"""
Splitting F_q(i, j) at the East step above z2.

With z2 = alpha_l in C1 and Y<u> = (l - 1, u - l), every extension with
L(z2) = u, L(z2) - L(z1) = i and L(z3) - L(z2) = j is a path that takes the
step Y -> Y + e1. Its first half is counted by G_q(i, Y) and its second half
by H_q(j, Y), so

    F_q(i, j) = q^(a(a+1)/2) * sum_u q^(u - l) G_q(i, Y<u>) H_q(j, Y<u>).

When z2 lies in C2 the chains are exchanged first and the table is mapped
back with q -> 1/q, since the two weights of an extension add up to n(n+1)/2.
"""

from ..errors import GeometryError
from ..oracle import CorrelationTable, ZERO
from .region import E1, E2, add, count_paths, region_of, sub


def relabel_for_decomposition(d, t):
    """ Returns (decomposition with z2 in C1, whether the chains were exchanged). """
    if d.chain_of(t[1]) == 1:
        return d, False
    return d.swapped(), True


class LatticeDecomposition(object):
    """ G_q and H_q of a triple on the region of a decomposition with z2 in C1. """

    def __init__(self, p, d, t):
        assert d.chain_of(t[1]) == 1, "z2 must lie in C1"
        self.poset, self.decomposition, self.triple = p, d, t
        self.region = region_of(p, d)
        self.ell = d.rank(t[1])
        self._g, self._h = {}, {}

    def point(self, u):
        """ Y<u> = (l - 1, u - l) """
        return (self.ell - 1, u - self.ell)

    def positions(self):
        return range(self.ell, self.ell + self.decomposition.b + 1)

    def _offset(self, z, size, Y, before):
        d = self.decomposition
        rank = d.rank(z)
        y1, y2 = Y
        if d.chain_of(z) == 1:
            if before:
                return (y1 - rank + 1, size - y1 + rank - 1), E1
            return (rank - y1 - 1, size + y1 - rank + 1), E1
        if before:
            return (size - y2 + rank - 1, y2 - rank + 1), E2
        return (size + y2 - rank + 1, rank - y2 - 1), E2

    def g_q(self, i, Y):
        """ Paths (0, 0) -> Y through Y - I and Y - I + U1. """
        key = (i, tuple(Y))
        if key not in self._g:
            offset, step = self._offset(self.triple[0], i, Y, before=True)
            corner = sub(Y, offset)
            head = count_paths(self.region, (0, 0), corner)
            tail = count_paths(self.region, add(corner, step), Y)
            if step == E1:
                head = head.shift(corner[1])
            self._g[key] = head * tail
        return self._g[key]

    def h_q(self, j, Y):
        """ Paths Y + e1 -> (a, b) through Y + J and Y + J + U3. """
        key = (j, tuple(Y))
        if key not in self._h:
            offset, step = self._offset(self.triple[2], j, Y, before=False)
            corner = add(Y, offset)
            head = count_paths(self.region, add(Y, E1), corner)
            tail = count_paths(self.region, add(corner, step), (self.region.a, self.region.b))
            if step == E1:
                head = head.shift(corner[1])
            self._h[key] = head * tail
        return self._h[key]

    def gcp_q(self, i, Y, V):
        """ G_q(i, Y) G_q(i+1, V) - G_q(i+1, Y) G_q(i, V) for Y weakly below V in one column. """
        _check_column(Y, V)
        return self.g_q(i, Y) * self.g_q(i + 1, V) - self.g_q(i + 1, Y) * self.g_q(i, V)

    def hcp_q(self, j, Y, V):
        _check_column(Y, V)
        return self.h_q(j, Y) * self.h_q(j + 1, V) - self.h_q(j + 1, Y) * self.h_q(j, V)

    def f_q(self, i, j):
        """ F_q(i, j) for this decomposition, assembled from G_q and H_q. """
        a = self.decomposition.a
        total = ZERO
        for u in self.positions():
            Y = self.point(u)
            total = total + (self.g_q(i, Y) * self.h_q(j, Y)).shift(u - self.ell)
        return total.shift(a * (a + 1) // 2)

    def cross_product_expansion(self, i, j):
        """
        F_q(i,j) F_q(i+1,j+1) - F_q(i+1,j) F_q(i,j+1) as
        q^(a(a+1)) sum_{u < w} q^(u + w - 2l) GCP_q(i, Y<u>, Y<w>) HCP_q(j, Y<u>, Y<w>).
        """
        a = self.decomposition.a
        total = ZERO
        us = list(self.positions())
        for x, u in enumerate(us):
            for w in us[x + 1 :]:
                Y, V = self.point(u), self.point(w)
                term = self.gcp_q(i, Y, V) * self.hcp_q(j, Y, V)
                if term:
                    total = total + term.shift(u + w - 2 * self.ell)
        return total.shift(a * (a + 1))


def _check_column(Y, V):
    if Y[0] != V[0] or Y[1] > V[1]:
        raise GeometryError("%s and %s must share a column with the first below" % (Y, V))


def decomposition_table(p, d, t):
    """
    Unsigned F_q table of triple @t assembled from the lattice decomposition,
    in the weights of @d.
    """
    relabeled, swapped = relabel_for_decomposition(d, t)
    lattice = LatticeDecomposition(p, relabeled, t)
    total = p.n * (p.n + 1) // 2
    entries = {}
    for i in range(1, p.n):
        for j in range(1, p.n - i + 1):
            poly = lattice.f_q(i, j)
            if poly:
                entries[(i, j)] = poly.reciprocal(total) if swapped else poly
    return CorrelationTable(t, entries, signed=False)
