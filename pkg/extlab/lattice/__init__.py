from .region import (
    E1,
    E2,
    LatticePath,
    LatticeRegion,
    all_paths,
    count_paths,
    extension_of_path,
    path_of_extension,
    path_weight,
    region_of,
)
from .injection import (
    KappaInjection,
    equality_dichotomy_holds,
    injection_defects,
    kappa_horizontal,
    kappa_inequality,
    kappa_vertical,
    swap_at_intersection,
)
from .decomposition import LatticeDecomposition, decomposition_table, relabel_for_decomposition
