"""
Correlation suites: GYY on forward events, XYZ with its quadrant
decomposition, and the 1/3-2/3 statistic of width-two posets.
"""

from itertools import combinations_with_replacement, permutations

from ..inequalities import (
    Witness,
    atomic_events,
    check_gyy,
    check_one_third,
    check_xyz,
    forward_events,
    xyz_from_gcpc_decomposition,
)
from ..oracle import extensions, forward_event
from .base_suite import BaseSuite


# events with up to two atoms are swept only up to this size
COMPOUND_EVENT_SIZE = 6


class GyySuite(BaseSuite):
    """
    Forward events are positively correlated, and the atomic event
    L(alpha_r) < L(beta_s) is the threshold L(alpha_r) < r + s.
    """

    size_cap = 7

    def instances(self):
        return self.width_two(min_n=2)

    def _threshold_failures(self, p, d):
        failures = []
        for r, s in atomic_events(d):
            event, alpha = forward_event(d, [(r, s)]), d.alpha(r)
            for l in extensions(p):
                if event(l) != (l(alpha) < r + s):
                    failures.append(Witness(p, d, None, (r, s), l(alpha), r + s))
                    break
        return failures

    def check(self, item):
        p, d = item
        if p.n <= COMPOUND_EVENT_SIZE:
            events = list(forward_events(d, max_atoms=2))
        else:
            events = [forward_event(d, [pair]) for pair in atomic_events(d)]
        verdicts = [check_gyy(p, d, a, b) for a, b in combinations_with_replacement(events, 2)]
        violations = [v.witness for v in verdicts if not v]
        violations += self._threshold_failures(p, d)
        return violations, {"checks": len(verdicts) + d.a * d.b, "events": len(events)}


class XyzSuite(BaseSuite):
    """
    XYZ on every poset and triple, strict on antichains; on width two the gap
    also splits into nonnegative signed cross-product terms.
    """

    size_cap = 6

    def instances(self):
        return self.all_posets(min_n=3)

    def check(self, item):
        p = item
        width_two = p.width() <= 2
        verdicts = []
        for x, y, z in permutations(range(p.n), 3):
            if y > z:
                continue
            verdicts.append(check_xyz(p, x, y, z, strict_if_antichain=True))
            if width_two:
                verdicts.append(xyz_from_gcpc_decomposition(p, x, y, z))
        return [v.witness for v in verdicts if not v], {"checks": len(verdicts)}


class OneThirdSuite(BaseSuite):
    """ delta(P) >= 1/3 on width-two posets that are not chains. """

    size_cap = 8

    def instances(self):
        for p, d in self.width_two(min_n=2):
            if not p.is_chain():
                yield p, d

    def check(self, item):
        p, d = item
        v = check_one_third(p)
        violations = [] if v else [v.located(decomposition=d).witness]
        return violations, {"checks": 1}
