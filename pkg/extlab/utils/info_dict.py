from collections import defaultdict

import numpy as np


class Info(object):
    """ Per-instance statistics of a run, collected as lists and reduced on demand. """

    def __init__(self, info=None):
        self._info = defaultdict(list)
        if info:
            self.add(info)

    def add(self, info):
        if info is None:
            return
        if isinstance(info, Info):
            for k, v in info._info.items():
                self._info[k].extend(v)
        elif isinstance(info, dict):
            for k, v in info.items():
                if isinstance(v, list):
                    self._info[k].extend(v)
                else:
                    self._info[k].append(v)
        else:
            raise ValueError("info should be dict or Info (%s)" % info)

    def get_dict(self, reduction="sum", only_scalar=False):
        """
        Reduces every numeric key with @reduction ("sum", "mean" or "max");
        keys ending in "_mean" are always averaged.
        """
        ret = {}
        for k, v in self._info.items():
            if not v:
                continue
            if isinstance(v[0], (bool, int, float, np.integer, np.floating)):
                if "_mean" in k or reduction == "mean":
                    ret[k] = float(np.mean(v))
                elif reduction == "max":
                    ret[k] = max(v)
                else:
                    ret[k] = np.sum(v).item()
            elif not only_scalar:
                ret[k] = list(v)
        return ret

    def __getitem__(self, key):
        return self._info[key]

    def __setitem__(self, key, value):
        self._info[key].append(value)

    def __contains__(self, key):
        return key in self._info

    def items(self):
        return self._info.items()
