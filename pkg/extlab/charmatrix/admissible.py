"""
Admissible vectors and the cross-product relation between them.
"""

from ..errors import DimError


def support(v):
    """ (first, last) 0-based indices of the nonzero entries, or None. """
    nonzero = [i for i, x in enumerate(v) if x]
    if not nonzero:
        return None
    return nonzero[0], nonzero[-1]


def is_admissible(v):
    """ Nonnegative entries whose support is an interval (possibly empty). """
    if any(x < 0 for x in v):
        return False
    bounds = support(v)
    if bounds is None:
        return True
    lo, hi = bounds
    return all(v[i] > 0 for i in range(lo, hi + 1))


def cc_leq(v, w):
    """ v <=cc w: v(i) w(j) - v(j) w(i) >= 0 for every i <= j. """
    if len(v) != len(w):
        raise DimError("vectors of lengths %d and %d" % (len(v), len(w)))
    n = len(v)
    return all(v[i] * w[j] - v[j] * w[i] >= 0 for i in range(n) for j in range(i + 1, n))


def first_cc_violation(v, w):
    """ First (i, j), i < j, with v(i) w(j) - v(j) w(i) < 0, or None. """
    if len(v) != len(w):
        raise DimError("vectors of lengths %d and %d" % (len(v), len(w)))
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i] * w[j] - v[j] * w[i] < 0:
                return i, j
    return None


def _convolve(u, v):
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            out[i + j] += x * y
    return out


def random_cc_pair(rng, length, max_factors=3, max_coeff=4):
    """
    Random admissible v <=cc w of the given length, drawn from @rng
    (a numpy RandomState).

    v is the coefficient list of a product of linear factors with positive
    coefficients, so it is log-concave without internal zeros; w = v * f for
    a nonnegative f, which keeps w / v nondecreasing. Supports stay within
    the first length - 2 entries so that shifts by S remain in the truncation.
    """
    room = length - 2
    assert room >= 1, "length must be at least 3"
    factors = rng.randint(0, min(max_factors, room - 1) + 1)
    v = [int(rng.randint(1, max_coeff + 1))]
    for _ in range(factors):
        v = _convolve(v, [int(rng.randint(1, max_coeff + 1)), int(rng.randint(1, max_coeff + 1))])
    f_len = rng.randint(1, room - len(v) + 2)
    f = [int(rng.randint(1, max_coeff + 1)) for _ in range(f_len)]
    w = _convolve(v, f)

    offset = rng.randint(0, room - len(w) + 1)
    pad = lambda u: [0] * offset + u + [0] * (length - offset - len(u))
    return pad(v), pad(w)
