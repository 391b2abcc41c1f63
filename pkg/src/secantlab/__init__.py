"""Secant varieties, defect ledgers and classification checks, in exact arithmetic."""

from .bounds import (
    BoundReport,
    Check,
    check_extended_ln,
    check_rk_surrogate,
    check_scorza,
    check_step2,
    check_subadditivity,
    detect_k_severi,
    evaluate_bounds,
    is_k_severi,
)
from .catalog import (
    Grassmann,
    Hermitian,
    Modifier,
    Scroll,
    Segre,
    SpecError,
    Spinor,
    VarietySpec,
    Veronese,
    build,
    format_spec,
    parse_spec,
)
from .estimator import SecantAnalyzer, TangentialProjector
from .exactlinalg import GF, QQ, ExactMatrix, annihilator, det, maximal_minors, pfaffian, rank
from .polymap import AnalysisError, MultiPoly, ParamMap, compose_linear, evaluate, jet, join_map, tangent_matrix
from .terracini import (
    DefectLedger,
    LedgerRow,
    contact_gamma,
    defect_ledger,
    gauss_defect,
    join_dim,
    secant_dim,
    secant_gauss_defect,
    tangential_projection,
)

__version__ = "0.1.0"
