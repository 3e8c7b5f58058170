"""Exact integral-lattice toolkit and a machine check of the canonical basis
of H_2 of a Kummer K3 surface."""

from .cycles import BASIS_LABELS, CycleClass, IntersectionForm, gram_of, pairing
from .k3 import (
    CanonicalBasis,
    VerificationReport,
    build_canonical_basis,
    change_of_basis,
    s_cycle,
    sign_variant,
    spherical_decomposition,
    verify_canonical,
)
from .kummer import (
    DirectionPair,
    HalfPeriod,
    are_coplanar,
    fixed_points,
    points_on_plane,
    torus_class_from_directions,
)
from .lattice import (
    ClassificationError,
    IntegralLattice,
    LatticeInvariants,
    direct_sum,
    e8_minus,
    hyperbolic_h,
    invariants,
    k3_lattice,
    milnor_decomposition,
    sublattice_index_from_determinants,
)
from .linalg import (
    Matrix,
    SnfResult,
    congruence_diagonalize,
    determinant,
    permutation_sign,
    signature,
    smith_normal_form,
)

__version__ = "0.1.0"
