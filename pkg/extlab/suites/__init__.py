from .charmatrix_suite import AdmissibleSuite, CharMatrixSuite, MinorsSuite
from .lattice_suite import BijectionSuite, DecompositionSuite, KappaSuite
from .cross_product_suite import (
    CpcSuite,
    EqualitySuite,
    GcpcSuite,
    KnownValuesSuite,
    QcpcSuite,
    width_three_example,
)
from .log_concave_suite import KahnSaksSuite, StanleySuite
from .correlation_suite import GyySuite, OneThirdSuite, XyzSuite


# run order of `verify --suite all`
SUITES = {
    "charmatrix": CharMatrixSuite,
    "admissible": AdmissibleSuite,
    "bijection": BijectionSuite,
    "kappa": KappaSuite,
    "decomposition": DecompositionSuite,
    "minors": MinorsSuite,
    "cpc": CpcSuite,
    "qcpc": QcpcSuite,
    "gcpc": GcpcSuite,
    "equality": EqualitySuite,
    "known-values": KnownValuesSuite,
    "kahn-saks": KahnSaksSuite,
    "stanley": StanleySuite,
    "gyy": GyySuite,
    "xyz": XyzSuite,
    "one-third": OneThirdSuite,
}


def get_suite_by_name(name):
    """ Suite classes selected by --suite, in run order. """
    if name == "all":
        return list(SUITES.items())
    if name in SUITES:
        return [(name, SUITES[name])]
    else:
        raise ValueError("--suite %s is not supported" % name)
