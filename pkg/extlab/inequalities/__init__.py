from .verdict import HOLDS, Verdict, Witness, first_failure, verdict
from .cross_product import (
    check_cpc,
    check_gcpc,
    check_qcpc,
    check_r_table,
    classify_cpc_equality,
    cpc_equality_cases,
    cpc_index_pairs,
    gcpc_quadruples,
    positive_minors,
    scan_gcpc,
    signed_gcpc_applies,
    telescoping_record,
)
from .kahn_saks import (
    check_kahn_saks,
    check_r_vectors,
    check_stanley,
    check_stanley_equality,
    cpc_to_ks_reduction,
)
from .correlation import (
    atomic_events,
    check_gyy,
    check_one_third,
    check_xyz,
    first_positive_term,
    forward_events,
    xyz_from_gcpc_decomposition,
    xyz_gap,
    xyz_quadrant_terms,
)
from .search import (
    SCOPES,
    get_scope_by_name,
    scan_instance,
    search_counterexample,
    search_instances,
    triples,
)


# checks whose violation is a defect of the implementation
THEOREM_CHECKS = {
    "cpc": check_cpc,
    "gcpc": check_gcpc,
    "qcpc": check_qcpc,
    "equality": classify_cpc_equality,
    "kahn-saks": check_kahn_saks,
    "ks-reduction": cpc_to_ks_reduction,
    "stanley": check_stanley,
    "stanley-equality": check_stanley_equality,
    "r-vectors": check_r_vectors,
    "gyy": check_gyy,
    "xyz": check_xyz,
    "xyz-decomposition": xyz_from_gcpc_decomposition,
    "one-third": check_one_third,
}

CHECKS = {**THEOREM_CHECKS, "r-table": check_r_table, "search": search_counterexample}


def get_check_by_name(name):
    if name in CHECKS:
        return CHECKS[name]
    else:
        raise ValueError("--check %s is not supported" % name)
