"""
Log-concavity suites: Kahn-Saks on gaps, Stanley on positions, and the
position vectors of pairs in one chain.
"""

from ..inequalities import (
    check_kahn_saks,
    check_r_vectors,
    check_stanley,
    check_stanley_equality,
    cpc_to_ks_reduction,
)
from ..oracle import kahn_saks_vector, stanley_sequence
from .base_suite import BaseSuite


# the one-element extension Q of P is swept up to this size of P
REDUCTION_SIZE = 6


class KahnSaksSuite(BaseSuite):
    """
    F(k)^2 >= F(k-1) F(k+1) on all posets, and the reduction from CPC on the
    poset with an extra incomparable element. The q-analogue is scanned by the
    q-kahn-saks search.
    """

    size_cap = 7

    def instances(self):
        return self.all_posets(min_n=2)

    def check(self, p):
        failures = []
        checks = 0
        for x in range(p.n):
            for y in range(p.n):
                if x == y:
                    continue
                v = kahn_saks_vector(p, None, x, y)
                for k in range(2, p.n):
                    failures.append(check_kahn_saks(v, k))
                checks += p.n - 2
                if p.n <= REDUCTION_SIZE:
                    failures.append(cpc_to_ks_reduction(p, x, y))
                    checks += 1
        violations = [f.located(poset=p).witness for f in failures if not f]
        return violations, {"checks": checks}


class StanleySuite(BaseSuite):
    """
    Position histograms are log-concave with equality only on flat stretches;
    on width-two posets r_t <=cc S r_m for t - 1 <= m.
    """

    size_cap = 7

    def instances(self):
        for p in self.all_posets(min_n=1):
            yield "poset", p, None
        for p, d in self.width_two(min_n=2):
            yield "width-two", p, d

    def check(self, item):
        kind, p, d = item
        failures = []
        if kind == "poset":
            for x in range(p.n):
                seq = stanley_sequence(p, x)
                for v in (check_stanley(seq), check_stanley_equality(seq)):
                    failures.append(v if v.witness is None else v._replace(
                        witness=v.witness._replace(triple=(x,))
                    ))
        else:
            for k in range(1, d.b + 1):
                for l in range(k, d.b + 1):
                    failures.append(check_r_vectors(p, d, k, l))
        violations = [f.located(poset=p, decomposition=d).witness for f in failures if not f]
        return violations, {"checks": len(failures)}
