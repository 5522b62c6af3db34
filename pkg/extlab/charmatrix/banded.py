"""
Truncated exact-integer matrices and the generators S, T, U and W_k.

Rows and columns are 1-indexed in docstrings and 0-indexed in storage.
"""

import numpy as np

from ..errors import DimError


class BandedMatrix(object):
    """
    N x N matrix of Python ints (numpy object dtype).

    With banded=True the entries below the first subdiagonal are asserted
    to be zero; products are built unchecked.
    """

    def __init__(self, data, banded=False):
        data = np.array(data, dtype=object)
        assert data.ndim == 2 and data.shape[0] == data.shape[1], "matrix must be square"
        if banded:
            assert not np.tril(data != 0, k=-2).any(), "nonzero entry below the first subdiagonal"
        data.setflags(write=False)
        self.data = data

    @classmethod
    def zeros(cls, dim):
        return cls(np.zeros((dim, dim), dtype=object))

    @property
    def dim(self):
        return self.data.shape[0]

    def entry(self, i, j):
        """ 1-indexed entry, 0 outside the truncation. """
        if 1 <= i <= self.dim and 1 <= j <= self.dim:
            return self.data[i - 1, j - 1]
        return 0

    def __matmul__(self, other):
        if self.dim != other.dim:
            raise DimError("cannot multiply %dx%d by %dx%d" % (self.dim, self.dim, other.dim, other.dim))
        return BandedMatrix(self.data.dot(other.data))

    def block(self, size):
        """ Leading size x size block. """
        return BandedMatrix(self.data[:size, :size])

    def apply(self, v):
        """ Matrix times a vector of length dim. """
        if len(v) != self.dim:
            raise DimError("vector of length %d against dimension %d" % (len(v), self.dim))
        return tuple(int(x) for x in self.data.dot(np.array(v, dtype=object)))

    def is_banded(self):
        return not np.tril(self.data != 0, k=-2).any()

    def __eq__(self, other):
        return (
            isinstance(other, BandedMatrix)
            and self.dim == other.dim
            and bool((self.data == other.data).all())
        )

    def __hash__(self):
        return hash(tuple(int(x) for x in self.data.flat))

    def tolist(self):
        return [[int(x) for x in row] for row in self.data]

    def to_json(self):
        return matrix_to_json(self.data)

    def __repr__(self):
        return "BandedMatrix(%s)" % self.tolist()


def matrix_to_json(m):
    """ Array of arrays of decimal strings. """
    return [[str(int(x)) for x in row] for row in np.asarray(m, dtype=object)]


def _zeros(dim):
    return np.zeros((dim, dim), dtype=object)


def build_S(dim):
    """ s(i, j) = 1 iff i - j = 1 """
    data = _zeros(dim)
    for i in range(1, dim):
        data[i, i - 1] = 1
    return BandedMatrix(data, banded=True)


def build_T(dim):
    """ t(i, j) = 1 iff i <= j """
    data = _zeros(dim)
    data[np.triu_indices(dim)] = 1
    return BandedMatrix(data, banded=True)


def build_W(k, dim):
    """ Diagonal ones in rows 1..k; W_0 is the zero matrix. """
    assert k >= 0, "W_k needs k >= 0"
    data = _zeros(dim)
    for i in range(min(k, dim)):
        data[i, i] = 1
    return BandedMatrix(data, banded=True)


def build_identity(dim):
    return build_W(dim, dim)


def build_U(dim):
    """ U = I - W_1 """
    return BandedMatrix(build_identity(dim).data - build_W(1, dim).data, banded=True)
