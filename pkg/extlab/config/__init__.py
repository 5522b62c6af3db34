""" Define parameters for verification runs. """

import argparse
import os

from ..errors import ConfigError


# largest a+b (or n) accepted by the exhaustive poset generators
POSET_CAP = 10

# default bound on the number of linear extensions a single enumeration may visit
DEFAULT_EXTENSION_CAP = 10 ** 7

SUITE_NAMES = [
    "charmatrix",
    "admissible",
    "bijection",
    "kappa",
    "decomposition",
    "minors",
    "cpc",
    "qcpc",
    "gcpc",
    "equality",
    "known-values",
    "kahn-saks",
    "stanley",
    "gyy",
    "xyz",
    "one-third",
    "all",
]

SEARCH_SCOPES = [
    "general-cpc",
    "q-cpc-decomposition-dependence",
    "tp-minors",
    "telescoping-zeros",
    "signed-gcpc-literal",
    "r-table",
    "q-kahn-saks",
]


def str2bool(v):
    return v.lower() == "true"


def str2intlist(value):
    if not value:
        return value
    else:
        return [int(num) for num in value.split(",")]


def extension_cap():
    """ Enumeration safety cap, overridable through the EXTLAB_CAP environment variable. """
    value = os.environ.get("EXTLAB_CAP")
    if value is None or value == "":
        return DEFAULT_EXTENSION_CAP
    try:
        cap = int(value)
    except ValueError:
        raise ConfigError("EXTLAB_CAP must be an integer, got %r" % value)
    if cap <= 0:
        raise ConfigError("EXTLAB_CAP must be positive, got %d" % cap)
    return cap


class _ArgumentParser(argparse.ArgumentParser):
    """ argparse parser that raises ConfigError instead of exiting. """

    def error(self, message):
        raise ConfigError(message)


def create_parser():
    """
    Creates the argparser.  Use this to add additional arguments
    to the parser later.
    """
    parser = _ArgumentParser(
        "extlab",
        description="Linear-extension statistics and width-two poset inequalities",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    subparsers.required = True

    add_verify_arguments(
        subparsers.add_parser(
            "verify",
            help="run acceptance suites",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
    )
    add_table_arguments(
        subparsers.add_parser(
            "table",
            help="print a correlation table",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
    )
    add_render_arguments(
        subparsers.add_parser(
            "render",
            help="draw the lattice region of a width-two poset",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
    )
    add_search_arguments(
        subparsers.add_parser(
            "search",
            help="search for counterexamples",
            formatter_class=argparse.ArgumentDefaultsHelpFormatter,
        )
    )

    return parser


def add_common_arguments(parser):
    parser.add_argument("--seed", type=int, default=123)
    parser.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker processes per MPI rank; 1 runs serially",
    )
    parser.add_argument(
        "--format", type=str, default="text", choices=["json", "csv", "text"]
    )
    parser.add_argument(
        "--out", type=str, default=None, help="report path; stdout if omitted"
    )
    parser.add_argument(
        "--q", type=str2bool, default=False, help="set it True to enable q-weights"
    )

    # log
    parser.add_argument("--log_root_dir", type=str, default="log")
    parser.add_argument("--run_prefix", type=str, default=None)


def add_size_arguments(parser, max_n):
    parser.add_argument(
        "--max-n", dest="max_n", type=int, default=max_n, help="largest poset size"
    )
    parser.add_argument(
        "--chains",
        type=str2intlist,
        default=None,
        help="restrict width-two sweeps to chain sizes a,b",
    )


def add_verify_arguments(parser):
    add_common_arguments(parser)
    add_size_arguments(parser, max_n=6)
    parser.add_argument("--suite", type=str, default="all")


def add_table_arguments(parser):
    add_common_arguments(parser)
    parser.add_argument("poset_file", type=str, help="file of posets in n;x<y format")
    parser.add_argument(
        "--triple", type=str2intlist, required=True, help="0-indexed elements z1,z2,z3"
    )
    parser.add_argument(
        "--signed", type=str2bool, default=False, help="include negative offsets"
    )


def add_render_arguments(parser):
    add_common_arguments(parser)
    parser.add_argument("poset_file", type=str, help="file of posets in n;x<y format")
    parser.add_argument(
        "--extension",
        type=int,
        default=None,
        help="overlay the k-th linear extension (0-based); -1 overlays the minimal one",
    )


def add_search_arguments(parser):
    add_common_arguments(parser)
    add_size_arguments(parser, max_n=6)
    parser.add_argument("--scope", type=str, default="general-cpc", choices=SEARCH_SCOPES)
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="maximum number of instances to examine; unlimited if omitted",
    )


def validate_config(config):
    """ Raises ConfigError for values outside the module limits. """
    max_n = getattr(config, "max_n", None)
    if max_n is not None and not 0 <= max_n <= POSET_CAP:
        raise ConfigError("--max-n must be within [0, %d], got %d" % (POSET_CAP, max_n))
    chains = getattr(config, "chains", None)
    if chains:
        if len(chains) != 2 or min(chains) < 0 or sum(chains) > POSET_CAP:
            raise ConfigError("--chains expects a,b with a,b >= 0 and a+b <= %d" % POSET_CAP)
    if config.jobs < 1:
        raise ConfigError("--jobs must be positive, got %d" % config.jobs)
    budget = getattr(config, "budget", None)
    if budget is not None and budget < 0:
        raise ConfigError("--budget must be nonnegative, got %d" % budget)
    triple = getattr(config, "triple", None)
    if triple is not None and len(triple) != 3:
        raise ConfigError("--triple expects three elements, got %s" % (triple,))
    suite = getattr(config, "suite", None)
    if suite is not None and suite not in SUITE_NAMES:
        raise ValueError("--suite %s is not supported" % suite)
