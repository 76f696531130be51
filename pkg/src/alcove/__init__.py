"""Exact-arithmetic toolkit for affine root systems and the
classification of spherical weight-lattice pairs."""

from .intlin import (
    IntMatrix,
    LinearConstraintSystem,
    RatVector,
    hermite_normal_form,
    hilbert_basis,
    lattice_basis,
    lattice_contains,
    lattice_member,
    minors_gcd,
    smith_normal_form,
    strict_feasible,
    subset_of_basis,
)
from .rootsys import (
    AffineFunction,
    AffineRootSystem,
    AffineType,
    LocalSystem,
    build,
    change_basis,
    coroot,
    coroot_relation,
    express_in_local_basis,
    local_system,
    vertex,
)
from .spherical import (
    LatticeSpec,
    PairReport,
    SmoothnessReport,
    SphericalRootSet,
    check_spherical_pair,
    critical_support,
    smoothness,
    spherical_roots,
    transport_lattice,
)
from .classify import (
    Bounds,
    CandidateFamily,
    ClassificationResult,
    ExpectedRow,
    candidate_table,
    classify,
    classify_all,
    expected_table,
    instantiate,
    intermediate_sweep,
)
from .cli import parse_lattice

__version__ = "0.1.0"
