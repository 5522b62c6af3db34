from .banded import (
    BandedMatrix,
    build_identity,
    build_S,
    build_T,
    build_U,
    build_W,
    matrix_to_json,
)
from .admissible import cc_leq, first_cc_violation, is_admissible, random_cc_pair, support
from .characteristic import (
    CharSequence,
    characteristic_sequence,
    default_dim,
    minimal_extension,
    n_matrix_bruteforce,
    n_matrix_product,
)
from .factorization import (
    f_matrix,
    factorization_check,
    factorized_f,
    g_matrix,
    h_matrix,
    minor,
    minor_sign_scan,
    split_at_middle,
    total_nonnegativity_scan,
)
