""" Launch verification runs, correlation tables, region drawings and searches. """

import sys
import signal
import os
import json
import logging
import shlex
from time import time

import numpy as np

from .config import create_parser, validate_config
from .errors import ConfigError, PosetParseError
from .lattice import path_of_extension, region_of
from .oracle import correlation_table, extensions
from .posets import ElementTriple, chain_decomposition_width_two, read_poset_file
from .utils.logger import logger
from .utils.mpi import mpi_rank, mpi_size, mpi_sync
from .utils.report import (
    make_header,
    make_report,
    region_body,
    region_to_csv,
    table_body,
    table_to_csv,
    table_to_text,
    to_json,
    write_report,
)
from .verifier import Verifier


np.set_printoptions(precision=3)
np.set_printoptions(suppress=True)


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def run(parser=None, args=None):
    """ Parses the command line, runs one command and returns its exit code. """
    if parser is None:
        parser = create_parser()

    try:
        config, unparsed = parser.parse_known_args(args)
        if len(unparsed):
            raise ConfigError("unparsed arguments: %s" % " ".join(unparsed))
        validate_config(config)
    except (ConfigError, ValueError) as e:
        logger.error("Invalid configuration: %s", e)
        return EXIT_CONFIG

    rank = mpi_rank()
    config.rank = rank
    config.is_chef = rank == 0
    config.num_workers = mpi_size()
    set_log_path(config)

    if config.is_chef:
        logger.warning("Run a base worker.")
        if config.out is not None or config.run_prefix is not None:
            make_log_files(config)
    else:
        logger.warning("Run worker %d and disable logger.", config.rank)
        logger.setLevel(logging.CRITICAL)

    # syncronize all processes
    mpi_sync()

    def shutdown(signal, frame):
        logger.warning("Received signal %s: exiting", signal)
        sys.exit(128 + signal)

    signal.signal(signal.SIGHUP, shutdown)
    signal.signal(signal.SIGINT, shutdown)
    signal.signal(signal.SIGTERM, shutdown)

    # every rank walks the same instance stream, so the seed is not offset by rank
    np.random.seed(config.seed)

    try:
        return COMMANDS[config.command](config)
    except (ConfigError, PosetParseError, ValueError) as e:
        logger.error("%s failed: %s", config.command, e)
        return EXIT_CONFIG


def cmd_verify(config):
    """ Runs the selected suites; exit 0 iff every theorem-backed check holds. """
    st_time = time()
    body, passed = Verifier(config).verify()
    if not config.is_chef:
        return EXIT_OK
    header = make_header("verify", (time() - st_time) * 1000)
    write_report(make_report(header, body), config.format, config.out)
    if passed:
        logger.info("Finish verifying: all suites passed")
        return EXIT_OK
    logger.error("Finish verifying: %d violations", len(body["violations"]))
    return EXIT_FAILED


def _first_poset(config):
    p = read_poset_file(config.poset_file)[0]
    logger.info("Read poset %s from %s", p.to_text(), config.poset_file)
    return p


def cmd_table(config):
    """ Prints the correlation table of the first poset in the file. """
    st_time = time()
    p = _first_poset(config)
    if any(not 0 <= x < p.n for x in config.triple):
        raise ConfigError("--triple %s is out of range for n=%d" % (config.triple, p.n))
    t = ElementTriple(*config.triple)
    d = chain_decomposition_width_two(p) if config.q else None
    table = correlation_table(p, d, t, signed=config.signed)

    if config.format == "json":
        header = make_header("table", (time() - st_time) * 1000)
        text = to_json(make_report(header, table_body(p, table, config.q)))
    elif config.format == "csv":
        text = table_to_csv(table, config.q)
    else:
        text = table_to_text(table, config.q)
    _write(text, config.out)
    return EXIT_OK


def cmd_render(config):
    """ Draws Reg(P) of the first poset, optionally with one extension overlaid. """
    st_time = time()
    p = _first_poset(config)
    d = chain_decomposition_width_two(p)
    r = region_of(p, d)

    path = None
    if config.extension == -1:
        path = r.upper
    elif config.extension is not None:
        exts = extensions(p)
        if not 0 <= config.extension < len(exts):
            raise ConfigError(
                "--extension %d is out of range: P has %d linear extensions"
                % (config.extension, len(exts))
            )
        path = path_of_extension(exts[config.extension], d)
    grid = r.render(path)

    if config.format == "json":
        header = make_header("render", (time() - st_time) * 1000)
        text = to_json(make_report(header, region_body(p, d, grid, config.extension)))
    elif config.format == "csv":
        text = region_to_csv(grid)
    else:
        text = grid + "\n"
    _write(text, config.out)
    return EXIT_OK


def cmd_search(config):
    """ Runs one search scope; findings are data, so the exit code is always 0. """
    st_time = time()
    body = Verifier(config).search()
    if config.is_chef:
        header = make_header("search", (time() - st_time) * 1000)
        write_report(make_report(header, body), config.format, config.out)
        logger.info("Finish searching: %d findings", len(body["violations"]))
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "table": cmd_table,
    "render": cmd_render,
    "search": cmd_search,
}


def _write(text, path=None):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fp:
            fp.write(text)


def set_log_path(config):
    """
    Sets paths to log directories. With --out the log files sit next to the
    report, otherwise under --log_root_dir.
    """
    config.run_name = "{}.{}.{}".format(config.command, config.run_prefix, config.seed)
    if config.out is not None:
        config.log_dir = os.path.dirname(os.path.abspath(config.out))
    else:
        config.log_dir = os.path.join(config.log_root_dir, config.run_name)


def make_log_files(config):
    """
    Sets up the log directory and saves the command line and parameters.
    """
    logger.info("Create log directory: %s", config.log_dir)
    os.makedirs(config.log_dir, exist_ok=True)

    # log command line
    cmd_path = os.path.join(config.log_dir, "cmd.sh")
    with open(cmd_path, "w") as fp:
        fp.write("python run.py {}\n".format(" ".join([shlex.quote(arg) for arg in sys.argv[1:]])))

    # log config
    param_path = os.path.join(config.log_dir, "params.json")
    logger.info("Store parameters in %s", param_path)
    with open(param_path, "w") as fp:
        json.dump(config.__dict__, fp, indent=4, sort_keys=True)
