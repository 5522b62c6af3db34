from .poset import (
    ChainDecomposition,
    ElementTriple,
    Poset,
    chain_decomposition_width_two,
    chain_decompositions,
    disjoint_sum,
    poset_from_cover_relations,
)
from .generators import (
    canonical_form,
    enumerate_posets,
    enumerate_width_two_posets,
    random_poset,
    width_two_instances,
)
from ..errors import PosetParseError


def read_poset_file(path):
    """ Reads one poset per line; blank lines and lines starting with '#' are skipped. """
    posets = []
    with open(path, "r") as fp:
        for lineno, line in enumerate(fp, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            posets.append(Poset.from_text(line, lineno=lineno))
    if not posets:
        raise PosetParseError("%s contains no posets" % path)
    return posets


def write_poset_file(path, posets):
    with open(path, "w") as fp:
        for p in posets:
            fp.write(p.to_text() + "\n")
