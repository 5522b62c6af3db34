"""
The lattice region of a width-two poset and the NE paths inside it.

A vertex (h, k) records that alpha_1..alpha_h and beta_1..beta_k have been
placed. A linear extension becomes the path from (0, 0) to (a, b) whose t-th
step is East iff the t-th element lies in C1.
"""

from collections import namedtuple

from ..charmatrix import minimal_extension
from ..errors import OutOfRegionError
from ..oracle import LinearExtension, QPolynomial, ZERO


E1 = (1, 0)
E2 = (0, 1)


def add(u, v):
    return (u[0] + v[0], u[1] + v[1])


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1])


class LatticePath(namedtuple("LatticePath", ["start", "steps"])):
    """ Monotone path from @start; @steps is a string over "E" and "N". """

    __slots__ = ()

    def __new__(cls, start, steps):
        assert set(steps) <= {"E", "N"}, "steps must be E or N"
        return super().__new__(cls, tuple(start), str(steps))

    def vertices(self):
        x, y = self.start
        points = [(x, y)]
        for step in self.steps:
            if step == "E":
                x += 1
            else:
                y += 1
            points.append((x, y))
        return points

    @property
    def end(self):
        return (
            self.start[0] + self.steps.count("E"),
            self.start[1] + self.steps.count("N"),
        )

    def translate(self, v):
        return LatticePath(add(self.start, v), self.steps)

    def index_of(self, point):
        """ Number of steps taken when the path reaches @point. """
        return self.vertices().index(tuple(point))

    def head(self, point):
        """ The part of the path from its start up to @point. """
        return LatticePath(self.start, self.steps[: self.index_of(point)])

    def tail(self, point):
        """ The part of the path from @point to its end. """
        return LatticePath(point, self.steps[self.index_of(point) :])

    def join(self, other):
        assert self.end == tuple(other.start), "paths do not meet"
        return LatticePath(self.start, self.steps + other.steps)

    def __str__(self):
        return "%s:%s" % (self.start, self.steps or "-")


def path_weight(path):
    """ Number of unit boxes below the path: the sum of heights of its East steps. """
    y = path.start[1]
    total = 0
    for step in path.steps:
        if step == "E":
            total += y
        else:
            y += 1
    return total


def path_of_extension(l, d):
    return LatticePath((0, 0), "".join("E" if d.chain_of(x) == 1 else "N" for x in l.order))


class LatticeRegion(object):
    """
    Vertices reachable by paths of linear extensions: (h, k) lies in the region
    iff neither alpha_{h+1} < beta_k nor beta_{k+1} < alpha_h. Every column is
    an interval of heights bounded by the two boundary paths.
    """

    def __init__(self, p, d):
        self.poset = p
        self.decomposition = d
        self.a, self.b = d.a, d.b
        self._points = set()
        for h in range(self.a + 1):
            for k in range(self.b + 1):
                blocked = (h < self.a and k >= 1 and p.less(d.alpha(h + 1), d.beta(k))) or (
                    k < self.b and h >= 1 and p.less(d.beta(k + 1), d.alpha(h))
                )
                if not blocked:
                    self._points.add((h, k))

        self.upper = path_of_extension(minimal_extension(p, d), d)
        swapped = minimal_extension(p, d.swapped())
        self.lower = path_of_extension(swapped, d)

    def contains(self, point):
        return tuple(point) in self._points

    __contains__ = contains

    def points(self):
        return sorted(self._points)

    def column(self, h):
        """ (lowest, highest) height of the region at x = h. """
        heights = [k for x, k in self._points if x == h]
        return min(heights), max(heights)

    def forbidden_squares(self):
        """
        Unit squares [h-1, h] x [k-1, k] (centre (h - 1/2, k - 1/2)) cut out of the
        rectangle: "upper" when alpha_h < beta_k, "lower" when beta_k < alpha_h.
        """
        p, d = self.poset, self.decomposition
        squares = []
        for h in range(1, self.a + 1):
            for k in range(1, self.b + 1):
                if p.less(d.alpha(h), d.beta(k)):
                    squares.append((h, k, "upper"))
                elif p.less(d.beta(k), d.alpha(h)):
                    squares.append((h, k, "lower"))
        return squares

    def contains_path(self, path):
        return all(v in self._points for v in path.vertices())

    def render(self, path=None):
        """
        One character per vertex, rows from y = b down to y = 0: '#' outside
        the region, '.' inside, '*' on @path.
        """
        on_path = set(path.vertices()) if path is not None else set()
        rows = []
        for k in range(self.b, -1, -1):
            row = []
            for h in range(self.a + 1):
                if (h, k) in on_path:
                    row.append("*")
                elif (h, k) in self._points:
                    row.append(".")
                else:
                    row.append("#")
            rows.append("".join(row))
        return "\n".join(rows)


def region_of(p, d):
    return LatticeRegion(p, d)


def extension_of_path(path, d, region=None):
    """ Inverse of path_of_extension; raises OutOfRegionError for paths outside @region. """
    if tuple(path.start) != (0, 0) or path.end != (d.a, d.b):
        raise OutOfRegionError("path %s does not run from (0, 0) to (%d, %d)" % (path, d.a, d.b))
    if region is not None and not region.contains_path(path):
        raise OutOfRegionError("path %s leaves the region" % (path,))
    h = k = 0
    order = []
    for step in path.steps:
        if step == "E":
            order.append(d.c1[h])
            h += 1
        else:
            order.append(d.c2[k])
            k += 1
    return LinearExtension.from_order(order)


def count_paths(r, start, end, q=True):
    """
    K_q(start, end): sum of q^weight over in-region NE paths, by a column sweep.
    Returns the zero polynomial when an endpoint is outside the region or
    unreachable. With q=False every weight is 0 and the result is the count.
    """
    start, end = tuple(start), tuple(end)
    if start not in r or end not in r:
        return ZERO
    if end[0] < start[0] or end[1] < start[1]:
        return ZERO

    table = {}
    for x in range(start[0], end[0] + 1):
        for y in range(start[1], end[1] + 1):
            if (x, y) not in r:
                continue
            if (x, y) == start:
                table[(x, y)] = QPolynomial.constant(1)
                continue
            total = table.get((x, y - 1), ZERO)
            west = table.get((x - 1, y), ZERO)
            if west:
                total = total + (west.shift(y) if q else west)
            if total:
                table[(x, y)] = total
    return table.get(end, ZERO)


def all_paths(r, start, end):
    """ Every in-region NE path from @start to @end, in lexicographic step order. """
    start, end = tuple(start), tuple(end)
    if start not in r or end not in r:
        return []
    found = []

    def walk(point, steps):
        if point == end:
            found.append(LatticePath(start, "".join(steps)))
            return
        for step, move in (("E", E1), ("N", E2)):
            nxt = add(point, move)
            if nxt[0] <= end[0] and nxt[1] <= end[1] and nxt in r:
                steps.append(step)
                walk(nxt, steps)
                steps.pop()

    walk(start, [])
    return found
