import pytest

from extlab.config import create_parser
from extlab.posets import ChainDecomposition, ElementTriple, Poset, disjoint_sum


@pytest.fixture
def c2c2():
    """ alpha_1 < alpha_2 and beta_1 < beta_2 with no cross relations. """
    return disjoint_sum(Poset.chain(2), Poset.chain(2))


@pytest.fixture
def c2c2_decomposition():
    return ChainDecomposition([0, 1], [2, 3])


@pytest.fixture
def width_three():
    """ C4 + C4 + C1 with the triple (alpha_1, gamma, beta_4). """
    p = disjoint_sum(Poset.chain(4), Poset.chain(4), Poset.chain(1))
    return p, ElementTriple(0, 8, 7)


@pytest.fixture
def make_config():
    """ Parsed `verify` configuration with serial workers; extra flags are appended. """

    def make(*args, command="verify"):
        argv = [command, "--jobs", "1"] + [str(x) for x in args]
        config, unparsed = create_parser().parse_known_args(argv)
        assert not unparsed
        config.is_chef = True
        return config

    return make


@pytest.fixture
def poset_file(tmp_path):
    """ Writes poset lines to a file and returns its path. """

    def write(*lines):
        path = tmp_path / "posets.txt"
        path.write_text("\n".join(lines) + "\n")
        return str(path)

    return write
