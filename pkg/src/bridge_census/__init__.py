"""Exact enumeration and braid-index statistics for 2-bridge knots."""

from .cf import (
    EvenCF,
    KnotInvariants,
    OrbitClass,
    SchubertFraction,
    SymmetryKind,
    cf_to_fraction,
    invariants,
    orbit,
    parse_cf,
    sign_changes,
)
from .enumeration import CensusCounts, EnumFilter, census, enumerate_tuples
from .formulas import (
    DistributionSummary,
    e_closed,
    e_recursive,
    e_total,
    ep_closed,
    ep_recursive,
    ep_total,
    k_closed,
    mean_braid,
    median_braid,
    mode_braid,
    summary,
    tbi,
    tbi2,
    tbi_p,
    tbi_p2,
    variance_braid,
)
from .kernels import BACKEND
from .verify import (
    ConjectureScanResult,
    VerificationReport,
    run_oracle_suite,
    run_theorem_suite,
    scan_median_conjecture,
)

__version__ = "0.1.0"
