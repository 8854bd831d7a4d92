from leapers.extremal.halffree import (
    Case,
    HalfFreeDiagnostic,
    SlopeSplit,
    all_splits,
    fundamental_area,
    halffree_bound_report,
    multiplicity_diagnostics,
    slope_split,
)
from leapers.extremal.lattice import (
    LatticeBasis,
    diagonal_lattice,
    hermite_form,
    lattice_intersection,
    partition_count_check,
)
from leapers.extremal.search import (
    SearchLimits,
    SearchResult,
    max_grid_bruteforce,
    max_grid_exact,
    no_perfect_embedding,
    search_table,
)

__all__ = [
    "Case", "HalfFreeDiagnostic", "LatticeBasis", "SearchLimits", "SearchResult", "SlopeSplit",
    "all_splits", "diagonal_lattice", "fundamental_area", "halffree_bound_report",
    "hermite_form", "lattice_intersection", "max_grid_bruteforce", "max_grid_exact",
    "multiplicity_diagnostics", "no_perfect_embedding", "partition_count_check",
    "search_table", "slope_split",
]
