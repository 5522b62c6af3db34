"""
Verdicts of inequality checks and the witnesses attached to failures.
"""

from collections import namedtuple
from fractions import Fraction

from ..oracle import QPolynomial


def _value_text(value):
    if isinstance(value, QPolynomial):
        return value.to_text()
    if isinstance(value, Fraction):
        return str(value)
    if value is None or isinstance(value, str):
        return value
    return str(int(value))


class Witness(
    namedtuple("Witness", ["poset", "decomposition", "triple", "indices", "lhs", "rhs"])
):
    """
    Replayable record of one inequality instance. @poset and @decomposition are
    filled in by whoever knows them; table-level checks only see the triple.
    """

    __slots__ = ()

    def located(self, poset=None, decomposition=None):
        return self._replace(
            poset=self.poset if poset is None else poset,
            decomposition=self.decomposition if decomposition is None else decomposition,
        )

    def to_json(self):
        return {
            "poset": self.poset.to_text() if self.poset is not None else None,
            "decomposition": (
                self.decomposition.to_text() if self.decomposition is not None else None
            ),
            "triple": list(self.triple) if self.triple is not None else None,
            "indices": [int(x) for x in self.indices],
            "lhs": _value_text(self.lhs),
            "rhs": _value_text(self.rhs),
        }


class Verdict(namedtuple("Verdict", ["holds", "witness"])):
    __slots__ = ()

    def __new__(cls, holds, witness=None):
        return super().__new__(cls, bool(holds), witness)

    def __bool__(self):
        return self.holds

    def located(self, poset=None, decomposition=None):
        if self.witness is None:
            return self
        return Verdict(self.holds, self.witness.located(poset, decomposition))


HOLDS = Verdict(True)


def verdict(holds, triple, indices, lhs, rhs, poset=None, decomposition=None):
    """ Verdict with a witness attached only when the instance fails. """
    if holds:
        return HOLDS
    return Verdict(False, Witness(poset, decomposition, triple, tuple(indices), lhs, rhs))


def first_failure(verdicts):
    """ First failing verdict of an iterable, or HOLDS. """
    for v in verdicts:
        if not v:
            return v
    return HOLDS
