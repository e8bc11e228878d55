"""Sparsity of geometrically non-simple fibers in one-parameter families of abelian varieties.

Submodules:

* :mod:`~nonsimple.heights` -- heights of rationals and projective points
* :mod:`~nonsimple.hyperelliptic` -- point counts and Frobenius polynomials
* :mod:`~nonsimple.classifier` -- certificates of geometric simplicity
* :mod:`~nonsimple.symplectic` -- finite symplectic modules and isotropic subgroups
* :mod:`~nonsimple.bounds` -- the log-space bound chain and level optimizer
* :mod:`~nonsimple.igusa` -- Igusa-Clebsch invariants and j-heights
* :mod:`~nonsimple.harness` -- family scans, caching and reports
"""
from .bounds import (
    FOURTH_POWER,
    PARABOLIC,
    BoundParams,
    CoverCase,
    bck_bound_log,
    cover_degree_log,
    eehk_bound_log,
    height_lift_bound_log,
    moduli_dims,
    optimize_level,
    s_bound_log,
    total_bound_log,
)
from .classifier import (
    CandidateNonSimple,
    Certificate,
    CertifiedSimple,
    Degenerate,
    certify_geometrically_simple,
    classify_parameter,
    is_ordinary,
    quartic_irreducible,
)
from .errors import (
    BadReductionError,
    BelowThresholdError,
    ConsistencyError,
    DegenerateParameterError,
    InvalidInputError,
    ResourceLimitError,
)
from .harness import ScanConfig, ScanRecord, report, run_scan
from .heights import ProjPoint, enumerate_rationals, mult_height, proj_height
from .hyperelliptic import (
    FamilySpec,
    FrobeniusRecord,
    GenusTwoCurve,
    charpoly_power,
    count_points,
    frobenius_charpoly,
    good_reduction,
    specialize,
)
from .igusa import IgusaInvariants, igusa_invariants, j_height
from .symplectic import (
    Subgroup,
    SympModule,
    block_diag_index,
    enumerate_maximal_isotropic,
    induced_mod_ell_pairing,
    isotropic_count,
    pairing,
    sp_order,
    verify_kernel_lemma,
    verify_scaling_identity,
)

__version__ = "0.1.0"
