"""Exact certificates for the Clifford index and gonality of curves on K3 surfaces
whose Picard lattice is ``ZL + ZE`` with ``L^2 = 2(g-1)``, ``L.E = d``, ``E^2 = 0``."""

from .clifford import (
    BruteForceResult,
    Census,
    CliffordCertificate,
    Contribution,
    brute_force_cliff,
    candidate_classes,
    cliff_of_bundle,
    cliff_value,
    contributes,
    gonality,
    min_cliff,
    safe_radius,
)
from .errors import RangeError, VerificationError
from .lattice import (
    E_CLASS,
    L_CLASS,
    ZERO,
    DivisorClass,
    SurfaceModel,
    chi,
    make_surface,
    pair,
    self_int,
)
from .linsys import (
    UNKNOWN,
    AtLeast,
    BpfCertificate,
    CohomologyProfile,
    Exact,
    NefCertificate,
    RestrictionProfile,
    Side,
    Unknown,
    check_L_bpf,
    check_L_nef,
    effective_side,
    h_profile,
    hyperelliptic_pencils,
    isotropic_classes_of_degree,
    isotropic_rays,
    restriction_profile,
    root_classes,
)
from .theorem import (
    Kind,
    RealizationRow,
    RealizationTable,
    TheoremQuery,
    bn_bounds,
    realize,
    realize_clifford,
    realize_gonality,
    sweep,
)

__version__ = "0.1.0"
