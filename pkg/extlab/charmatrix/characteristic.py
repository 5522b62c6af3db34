"""
Characteristic matrices of a width-two poset and the N_P product formula.

N_P(i, j) counts linear extensions with L(beta_1) = i and
L(beta_b) = j + less(beta_b). The product M_1 ... M_d of the characteristic
matrices reproduces it, where d = L_min(beta_b) and L_min is the linear
extension placing every element of C2 as early as possible.
"""

from collections import namedtuple

import numpy as np

from ..errors import DimError, EmptyChainError
from ..oracle import LinearExtension, extension_table
from .banded import BandedMatrix, build_S, build_T, build_W, build_identity


CharSequence = namedtuple("CharSequence", ["matrices", "kinds", "length"])


def default_dim(p):
    return p.n + 2


def minimal_extension(p, d):
    """ Places the next element of C2 whenever it is available, otherwise the next of C1. """
    order = []
    placed = set()
    h = k = 0
    while h < d.a or k < d.b:
        if k < d.b and all(y in placed for y in np.nonzero(p.rel[:, d.c2[k]])[0]):
            x = d.c2[k]
            k += 1
        else:
            x = d.c1[h]
            h += 1
        order.append(x)
        placed.add(x)
    l = LinearExtension.from_order(order)
    assert l.is_extension_of(p), "minimal extension of %s is not linear" % p.to_text()
    return l


def characteristic_sequence(p, d, dim=None):
    """
    M_i for i = 1..L_min(beta_b), with x = L_min^{-1}(i):
    S if x is in C1, W_{inc(x)+1} T if x is in C2 below beta_b, W_{inc(x)+1} for beta_b.
    """
    if d.b == 0:
        raise EmptyChainError("characteristic matrices need a nonempty chain C2")
    dim = dim or default_dim(p)
    lmin = minimal_extension(p, d)
    top = d.beta(d.b)
    S, T = build_S(dim), build_T(dim)

    matrices, kinds = [], []
    for x in lmin.order[: lmin(top)]:
        if d.chain_of(x) == 1:
            matrices.append(S)
            kinds.append("S")
            continue
        k = p.inc_count(x) + 1
        if x == top:
            m = build_W(k, dim)
            kinds.append("W%d" % k)
        else:
            m = BandedMatrix((build_W(k, dim) @ T).data, banded=True)
            kinds.append("W%dT" % k)
        matrices.append(m)
    return CharSequence(tuple(matrices), tuple(kinds), len(matrices))


def n_matrix_product(seq):
    """ N_P = M_1 M_2 ... M_d """
    dims = {m.dim for m in seq.matrices}
    if len(dims) != 1:
        raise DimError("characteristic matrices have mixed truncations %s" % sorted(dims))
    result = build_identity(dims.pop())
    for m in seq.matrices:
        result = result @ m
    return result


def n_matrix_bruteforce(p, d, dim=None):
    """ N_P counted directly from the linear extensions. """
    if d.b == 0:
        raise EmptyChainError("N_P needs a nonempty chain C2")
    dim = dim or default_dim(p)
    first, top = d.beta(1), d.beta(d.b)
    shift = p.less_count(top)
    table = extension_table(p)

    data = np.zeros((dim, dim), dtype=object)
    for i, pos in zip(table[:, first].tolist(), table[:, top].tolist()):
        j = pos - shift
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise DimError("N_P(%d, %d) falls outside truncation %d" % (i, j, dim))
        data[i - 1, j - 1] += 1
    return BandedMatrix(data)
