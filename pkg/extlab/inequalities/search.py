"""
Counterexample searches.

Each scope is an instance stream plus a scan that turns one instance into a
list of violation records. Scans are pure functions of their instance, so the
verifier may run them in any order across processes.
"""

from itertools import islice, permutations

from ..charmatrix import f_matrix, total_nonnegativity_scan
from ..errors import ConfigError
from ..oracle import correlation_table, kahn_saks_vector
from ..posets import (
    ElementTriple,
    chain_decompositions,
    enumerate_posets,
    random_poset,
    width_two_instances,
)
from ..utils.logger import logger
from .cross_product import (
    check_cpc,
    check_qcpc,
    check_r_table,
    cpc_index_pairs,
    gcpc_quadruples,
    positive_minors,
    telescoping_record,
)
from .kahn_saks import check_kahn_saks
from .verdict import Witness


# posets up to this size are swept exhaustively by general-cpc; larger ones are sampled
EXHAUSTIVE_POSET_SIZE = 7

RANDOM_EDGE_PROB = 0.3


def triples(n):
    return [ElementTriple(*t) for t in permutations(range(n), 3)]


def _general_cpc_instances(max_n, chains, seed):
    for n in range(3, min(max_n, EXHAUSTIVE_POSET_SIZE) + 1):
        for p in enumerate_posets(n):
            yield p, None
    index = 0
    while max_n > EXHAUSTIVE_POSET_SIZE:
        for n in range(EXHAUSTIVE_POSET_SIZE + 1, max_n + 1):
            yield random_poset(n, RANDOM_EDGE_PROB, seed + index), None
            index += 1


def _width_two_instances(max_n, chains, seed):
    for p, d in width_two_instances(max_n, chains):
        if p.n >= 3:
            yield p, d


def _scan_general_cpc(p, d):
    violations = []
    for t in triples(p.n):
        table = correlation_table(p, None, t)
        for k, l in cpc_index_pairs(p.n):
            v = check_cpc(table, k, l)
            if not v:
                violations.append(v.located(poset=p).witness)
    return violations


def _scan_qcpc_decompositions(p, d):
    violations = []
    for partition in chain_decompositions(p):
        for t in triples(p.n):
            table = correlation_table(p, partition, t)
            for k, l in cpc_index_pairs(p.n):
                v = check_qcpc(table, k, l)
                if not v:
                    violations.append(v.located(poset=p, decomposition=partition).witness)
    return violations


def _scan_tp_minors(p, d):
    violations = []
    for t in triples(p.n):
        m = f_matrix(p, t)
        # columns in decreasing order of the second gap
        found = total_nonnegativity_scan(m[:, ::-1], 3)
        if found is not None:
            rows, cols, det = found
            indices = [r + 1 for r in rows] + [p.n - c for c in cols]
            violations.append(Witness(p, d, t, tuple(indices), det, 0))
    return violations


def _scan_telescoping_zeros(p, d):
    violations = []
    for t in triples(p.n):
        table = correlation_table(p, None, t)
        for i, j, k, l in gcpc_quadruples(p.n):
            lhs = table(k, l) * table(k + i, l + j)
            rhs = table(k, l + j) * table(k + i, l)
            if not (lhs and rhs):
                continue
            record = telescoping_record(table, i, j, k, l)
            if not record["telescopes"]:
                violations.append(Witness(p, d, t, (i, j, k, l), lhs, rhs))
    return violations


def _scan_signed_gcpc_literal(p, d):
    # first positive minor of each signed table, whatever its sign pattern
    violations = []
    for t in triples(p.n):
        table = correlation_table(p, None, t, signed=True)
        for i, j, k, l in positive_minors(table, applies_only=False):
            lhs, rhs = table(i, j) * table(k, l), table(i, l) * table(k, j)
            violations.append(Witness(p, d, t, (i, j, k, l), lhs, rhs))
            break
    return violations


def _scan_r_table(p, d):
    violations = []
    for x in range(p.n):
        for z in range(p.n):
            if x == z:
                continue
            v = check_r_table(p, x, z)
            if not v:
                violations.append(v.located(decomposition=d).witness)
    return violations


def _scan_q_kahn_saks(p, d):
    violations = []
    for x in range(p.n):
        for y in range(p.n):
            if x == y:
                continue
            v = kahn_saks_vector(p, d, x, y)
            for k in range(2, p.n):
                found = check_kahn_saks(v, k, q_mode=True)
                if not found:
                    violations.append(found.located(poset=p, decomposition=d).witness)
    return violations


SCOPES = {
    "general-cpc": (_general_cpc_instances, _scan_general_cpc),
    "q-cpc-decomposition-dependence": (_width_two_instances, _scan_qcpc_decompositions),
    "tp-minors": (_width_two_instances, _scan_tp_minors),
    "telescoping-zeros": (_width_two_instances, _scan_telescoping_zeros),
    "signed-gcpc-literal": (_width_two_instances, _scan_signed_gcpc_literal),
    "r-table": (_width_two_instances, _scan_r_table),
    "q-kahn-saks": (_width_two_instances, _scan_q_kahn_saks),
}


def get_scope_by_name(scope):
    if scope in SCOPES:
        return SCOPES[scope]
    else:
        raise ValueError("--scope %s is not supported" % scope)


def search_instances(scope, max_n, chains=None, seed=123, budget=None):
    """ The first @budget instances of @scope (all of them when @budget is None). """
    make_instances, _ = get_scope_by_name(scope)
    stream = make_instances(max_n, chains, seed)
    if budget is None:
        if max_n > EXHAUSTIVE_POSET_SIZE and scope == "general-cpc":
            raise ConfigError("random general-cpc search needs a --budget")
        return stream
    return islice(stream, budget)


def scan_instance(scope, item):
    _, scan = get_scope_by_name(scope)
    p, d = item
    return scan(p, d)


def search_counterexample(scope, max_n, chains=None, seed=123, budget=None):
    """ Serial search; returns the deterministic report body. """
    checked = 0
    violations = []
    for index, item in enumerate(search_instances(scope, max_n, chains, seed, budget)):
        found = scan_instance(scope, item)
        for witness in found:
            logger.warning("Finding in %s: %s", scope, witness.to_json())
        violations.extend((index, w) for w in found)
        checked += 1
    violations.sort(key=lambda iw: (iw[0], iw[1].indices))
    return {
        "scope": scope,
        "instances_checked": checked,
        "violations": [w.to_json() for _, w in violations],
        "findings": bool(violations),
    }

