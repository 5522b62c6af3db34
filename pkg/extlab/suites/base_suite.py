from ..posets import enumerate_posets, width_two_instances


class BaseSuite(object):
    """ Base class for acceptance suites run by `verify`. """

    # largest poset size this suite sweeps, whatever --max-n says
    size_cap = None

    def __init__(self, config):
        self._config = config

    @property
    def max_n(self):
        max_n = self._config.max_n
        if self.size_cap is not None:
            max_n = min(max_n, self.size_cap)
        return max_n

    def width_two(self, min_n=0):
        """ (poset, decomposition) pairs of the width-two sweep. """
        chains = self._config.chains
        if chains and sum(chains) > self.max_n:
            return
        for p, d in width_two_instances(self.max_n, chains):
            if p.n >= min_n:
                yield p, d

    def all_posets(self, min_n=0, cap=None):
        """ One poset per isomorphism class, n from @min_n up to the size cap. """
        top = self.max_n if cap is None else min(self.max_n, cap)
        for n in range(min_n, top + 1):
            for p in enumerate_posets(n):
                yield p

    def instances(self):
        """ Deterministic stream of picklable items. """
        raise NotImplementedError()

    def check(self, item):
        """ Returns (list of Witness for every failure, info dict). """
        raise NotImplementedError()
