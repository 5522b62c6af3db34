"""
Drives acceptance suites and counterexample searches.
Shards instances over MPI ranks and a local process pool, then gathers
violations on the chef.
"""

import multiprocessing

from tqdm import tqdm

from .inequalities import scan_instance, search_instances
from .suites import SUITES, get_suite_by_name
from .utils.info_dict import Info
from .utils.logger import StopWatch, logger
from .utils.mpi import mpi_gather, mpi_gather_info, mpi_shard


# state of a pool worker, set once by _init_worker
_worker_config = None
_worker_suites = {}


def _init_worker(config):
    global _worker_config
    _worker_config = config
    _worker_suites.clear()


def _get_suite(name):
    if name not in _worker_suites:
        _worker_suites[name] = SUITES[name](_worker_config)
    return _worker_suites[name]


def _check_suite_item(job):
    name, index, item = job
    violations, info = _get_suite(name).check(item)
    return name, index, [w.to_json() for w in violations], info


def _scan_search_item(job):
    scope, index, item = job
    return scope, index, [w.to_json() for w in scan_instance(scope, item)], {}


def _sort_key(violation):
    return violation["index"], violation["indices"]


class Verifier(object):
    """
    Runs `verify` suites and `search` scopes over deterministic instance
    streams. Every rank walks the same stream and keeps its own shard.
    """

    def __init__(self, config):
        self._config = config
        self._is_chef = getattr(config, "is_chef", True)
        self._stop_watch = StopWatch()

    def _map(self, fn, jobs, total=None, desc=None):
        """ Yields fn(job) in order, serially or through a pool of --jobs processes. """
        config = self._config
        pbar = tqdm(total=total, desc=desc, leave=False) if self._is_chef else None
        if config.jobs == 1:
            _init_worker(config)
            results = map(fn, jobs)
            pool = None
        else:
            pool = multiprocessing.Pool(
                config.jobs, initializer=_init_worker, initargs=(config,)
            )
            results = pool.imap(fn, jobs, chunksize=4)
        try:
            for result in results:
                if pbar is not None:
                    pbar.update(1)
                yield result
        finally:
            if pool is not None:
                pool.close()
                pool.join()
            if pbar is not None:
                pbar.close()

    def _run(self, name, fn, items, total=None):
        """ Returns (violations sorted by instance, Info) of this rank's shard. """
        info = Info()
        violations = []
        jobs = ((name, index, item) for index, item in mpi_shard(items))
        for _, index, found, instance_info in self._map(fn, jobs, total=total, desc=name):
            info.add({"instances_checked": 1})
            info.add(instance_info)
            for violation in found:
                violation["index"] = index
                violations.append(violation)
        return violations, info

    def _gather(self, violations, info):
        """ Merges every rank's results on the chef; None elsewhere. """
        buf = mpi_gather(violations)
        info = mpi_gather_info(info)
        if buf is None:
            return None, None
        merged = [v for rank_violations in buf for v in rank_violations]
        merged.sort(key=_sort_key)
        return merged, info

    def verify(self):
        """
        Runs the selected suites and returns (report body, passed) on the chef
        and (None, None) on the other ranks.
        """
        config = self._config
        selected = get_suite_by_name(config.suite)
        body = {"scope": config.suite, "instances_checked": 0, "violations": [], "suites": {}}

        for name, suite_cls in selected:
            items = list(suite_cls(config).instances())
            logger.info("Suite %s: %d instances", name, len(items))
            self._stop_watch.begin(name)
            violations, info = self._gather(
                *self._run(name, _check_suite_item, items, total=len(items))
            )
            elapsed = self._stop_watch.end(name)
            if not self._is_chef:
                continue

            stats = info.get_dict(only_scalar=True)
            checked = stats.get("instances_checked", 0)
            for violation in violations:
                logger.error("Suite %s failed: %s", name, violation)
                violation["suite"] = name
                del violation["index"]
            logger.info(
                "Suite %s: %d instances, %d checks, %d violations in %.2fs",
                name,
                checked,
                stats.get("checks", 0),
                len(violations),
                elapsed,
            )
            body["instances_checked"] += checked
            body["violations"].extend(violations)
            body["suites"][name] = {
                "instances_checked": checked,
                "checks": stats.get("checks", 0),
                "violations": len(violations),
                "passed": not violations,
            }

        if not self._is_chef:
            return None, None
        self._stop_watch.display()
        passed = not body["violations"]
        body["findings"] = not passed
        return body, passed

    def search(self):
        """ Runs one search scope; findings are data, so there is no pass/fail. """
        config = self._config
        items = search_instances(
            config.scope, config.max_n, config.chains, config.seed, config.budget
        )
        self._stop_watch.begin(config.scope)
        violations, info = self._gather(
            *self._run(config.scope, _scan_search_item, items, total=config.budget)
        )
        elapsed = self._stop_watch.end(config.scope)
        if not self._is_chef:
            return None

        checked = info.get_dict(only_scalar=True).get("instances_checked", 0)
        for violation in violations:
            logger.warning("Finding in %s: %s", config.scope, violation)
            del violation["index"]
        logger.info(
            "Search %s: %d instances, %d findings in %.2fs",
            config.scope,
            checked,
            len(violations),
            elapsed,
        )
        return {
            "scope": config.scope,
            "instances_checked": checked,
            "violations": violations,
            "findings": bool(violations),
        }
