"""Exact combinatorial invariants of quasiflag spaces.

Pure-Python, exact-arithmetic computations: type-A root data, Kostant
partitions, Poincare polynomials via the stratum sum, the closed-form
generating function over the cocharacter lattice, torus fixed-point
cells, filtration counts of torsion quiver representations, and the
associated character identities, all exposed through the ``quasiflags``
CLI together with machine-checked verification suites.
"""

from .charseries import CharSeries, LaurentPoly, geometric_inverse
from .cohomology import (
    generating_function,
    laumon_poincare,
    shifted_poincare,
    stratum_poincare_compact,
    verify_generating_function,
)
from .cells import (
    Cell,
    cell_dimension_conjecture_check,
    conjectured_dim,
    enumerate_cells,
    euler_check,
    fixed_point_datum,
)
from .kostant import (
    KostantPartition,
    kostant_count,
    kostant_partitions,
    lusztig_kostant_poly,
    stats,
)
from .modchar import (
    freeness_consistency_check,
    module_character,
    verma_multiplicity_series,
    weight_space_check,
)
from .quiverfilt import (
    NOT_RIGID,
    TorsionRep,
    commutator_constant,
    count_filtrations,
    pbw_multiplicity,
    serre_alternating_sum,
)
from .rootdata import (
    WeylElement,
    pairing,
    positive_coroots,
    two_rho,
    weyl_elements,
    weyl_poincare,
)

__version__ = "0.1.0"

__all__ = [
    "CharSeries",
    "Cell",
    "KostantPartition",
    "LaurentPoly",
    "NOT_RIGID",
    "TorsionRep",
    "WeylElement",
    "cell_dimension_conjecture_check",
    "commutator_constant",
    "conjectured_dim",
    "count_filtrations",
    "enumerate_cells",
    "euler_check",
    "fixed_point_datum",
    "freeness_consistency_check",
    "generating_function",
    "geometric_inverse",
    "kostant_count",
    "kostant_partitions",
    "laumon_poincare",
    "lusztig_kostant_poly",
    "module_character",
    "pairing",
    "pbw_multiplicity",
    "positive_coroots",
    "serre_alternating_sum",
    "shifted_poincare",
    "stats",
    "stratum_poincare_compact",
    "two_rho",
    "verify_generating_function",
    "verma_multiplicity_series",
    "weight_space_check",
    "weyl_elements",
    "weyl_poincare",
]
