"""
Path-swapping injections between pairs of lattice paths.

A pair (gamma, zeta) in K(A, C) x K(B, D) is mapped by translating zeta by a
vector v, cutting both paths at their first (or last) common vertex with the
translate, exchanging the pieces and translating back.
"""

from collections import namedtuple

from ..errors import GeometryError, PreconditionError
from .region import E1, E2, add, all_paths, count_paths, path_weight, sub


KappaInjection = namedtuple("KappaInjection", ["pairs", "sources", "targets"])


def _common_vertex(gamma, other, last):
    others = set(other.vertices())
    shared = [v for v in gamma.vertices() if v in others]
    if not shared:
        raise GeometryError("paths %s and %s never meet" % (gamma, other))
    return shared[-1] if last else shared[0]


def swap_at_intersection(gamma, zeta, v, last=False):
    """
    With zeta' = zeta + v and E the first (last) common vertex of gamma and zeta':
    first: (zeta'(..E) gamma(E..), gamma(..E) zeta'(E..) - v)
    last:  (gamma(..E) zeta'(E..), zeta'(..E) gamma(E..) - v)
    """
    moved = zeta.translate(v)
    meet = _common_vertex(gamma, moved, last)
    if not last:
        new_gamma = moved.head(meet).join(gamma.tail(meet))
        new_zeta = gamma.head(meet).join(moved.tail(meet))
    else:
        new_gamma = gamma.head(meet).join(moved.tail(meet))
        new_zeta = moved.head(meet).join(gamma.tail(meet))
    return new_gamma, new_zeta.translate((-v[0], -v[1]))


def _vertical_plan(A, B, C, D, case):
    if not (A[0] == B[0] and A[1] >= B[1]):
        raise PreconditionError("A=%s must lie on or above B=%s in one column" % (A, B))
    if not (C[0] == D[0] and C[1] >= D[1] and C[0] > A[0]):
        raise PreconditionError("C=%s, D=%s must be a column right of A, C on top" % (C, D))
    ab, cd = A[1] - B[1], C[1] - D[1]
    if case == "a":
        if not ab > cd:
            raise PreconditionError("case (a) needs |AB| > |CD|, got %d <= %d" % (ab, cd))
        return (0, ab - 1), False, ((sub(A, E2), C), (add(B, E2), D))
    if case == "b":
        if not cd > ab:
            raise PreconditionError("case (b) needs |CD| > |AB|, got %d <= %d" % (cd, ab))
        return (0, cd - 1), True, ((A, sub(C, E2)), (B, add(D, E2)))
    raise ValueError("case %s is not supported" % case)


def _horizontal_plan(A, B, C, D, case):
    if not (A[1] == B[1] and A[0] <= B[0]):
        raise PreconditionError("A=%s must lie left of B=%s in one row" % (A, B))
    if not (C[0] == D[0] and C[1] <= D[1] and C[1] >= A[1]):
        raise PreconditionError("C=%s, D=%s must be a column above row of A, D on top" % (C, D))
    if case == "a":
        if not B[0] > A[0]:
            raise PreconditionError("case (a) needs |AB| > 0")
        return (A[0] - B[0] + 1, 0), False, ((add(A, E1), C), (sub(B, E1), D))
    if case == "b":
        if not D[1] > C[1]:
            raise PreconditionError("case (b) needs |CD| > 0")
        return (0, C[1] - D[1] + 1), True, ((A, add(C, E2)), (B, sub(D, E2)))
    raise ValueError("case %s is not supported" % case)


def _kappa(r, A, B, C, D, plan):
    v, last, targets = plan
    pairs = {}
    for gamma in all_paths(r, A, C):
        for zeta in all_paths(r, B, D):
            pairs[(gamma, zeta)] = swap_at_intersection(gamma, zeta, v, last=last)
    return KappaInjection(pairs, ((A, C), (B, D)), targets)


def kappa_vertical(r, A, B, C, D, case):
    """ K(A, C) x K(B, D) into K(A-e2, C) x K(B+e2, D) (case a) or K(A, C-e2) x K(B, D+e2) (case b). """
    A, B, C, D = map(tuple, (A, B, C, D))
    return _kappa(r, A, B, C, D, _vertical_plan(A, B, C, D, case))


def kappa_horizontal(r, A, B, C, D, case):
    """ K(A, C) x K(B, D) into K(A+e1, C) x K(B-e1, D) (case a) or K(A, C+e2) x K(B, D-e2) (case b). """
    A, B, C, D = map(tuple, (A, B, C, D))
    return _kappa(r, A, B, C, D, _horizontal_plan(A, B, C, D, case))


def injection_defects(r, injection):
    """ Human-readable list of failures of injectivity, weight or target membership. """
    defects = []
    (ta, tc), (tb, td) = injection.targets
    images = list(injection.pairs.values())
    if len(set(images)) != len(images):
        defects.append("not injective")
    for (gamma, zeta), (new_gamma, new_zeta) in sorted(injection.pairs.items()):
        if path_weight(gamma) + path_weight(zeta) != path_weight(new_gamma) + path_weight(new_zeta):
            defects.append("weight changes on %s, %s" % (gamma, zeta))
        if not (new_gamma.start == ta and new_gamma.end == tc and r.contains_path(new_gamma)):
            defects.append("%s is outside K%s" % (new_gamma, (ta, tc)))
        if not (new_zeta.start == tb and new_zeta.end == td and r.contains_path(new_zeta)):
            defects.append("%s is outside K%s" % (new_zeta, (tb, td)))
    return defects


def kappa_inequality(r, A, B, C, D, orientation, case):
    """ (target product, source product) of K_q polynomials; the first dominates the second. """
    plan = (_vertical_plan if orientation == "vertical" else _horizontal_plan)(
        tuple(A), tuple(B), tuple(C), tuple(D), case
    )
    (ta, tc), (tb, td) = plan[2]
    target = count_paths(r, ta, tc) * count_paths(r, tb, td)
    source = count_paths(r, A, C) * count_paths(r, B, D)
    return target, source


def equality_dichotomy_holds(r, A, B, C, D, case):
    """
    For the vertical geometry: equal target and source counts force either both
    to vanish, or (case a) K(A-e2,C) = K(A,C) and K(B+e2,D) = K(B,D) = K(A,D),
    or (case b) K(A,C-e2) = K(A,C) = K(A,D) and K(B,D+e2) = K(B,D).

    Quadruples with ||AB| - |CD|| = 1 are exempt: the translate of zeta then
    already runs between the endpoints of the first target set, and equal
    counts do not force the dichotomy (the antichain on two elements with
    A=(0,1), B=(0,0), C=D=(1,1) is the smallest instance).
    """
    A, B, C, D = map(tuple, (A, B, C, D))
    _vertical_plan(A, B, C, D, case)
    if abs((A[1] - B[1]) - (C[1] - D[1])) == 1:
        return True
    K = lambda s, e: count_paths(r, s, e, q=False).at_one()
    ac, bd, ad = K(A, C), K(B, D), K(A, D)
    if case == "a":
        left, right = K(sub(A, E2), C), K(add(B, E2), D)
        if left * right != ac * bd:
            return True
        return ac * bd == 0 or (left == ac and right == bd == ad)
    left, right = K(A, sub(C, E2)), K(B, add(D, E2))
    if left * right != ac * bd:
        return True
    return ac * bd == 0 or (left == ac == ad and right == bd)
