"""Rotational first-kind Frobenius circulant graphs: construction,
enumeration, rotation/fixed-point analysis, and gossip-bound certificates."""

from ._kernels import BACKEND
from .circulant import Circulant, iso_multiplier
from .classifier import (
    FrobeniusClass,
    FrobeniusReport,
    admissible_degrees,
    all_classes,
    construct_h,
    enumerate_classes,
    is_semiregular,
    max_degree_D,
    verify_first_kind_frobenius,
)
from .gamma import (
    GammaReport,
    GammaSpec,
    blocked_path_witness,
    build_gamma,
    gamma_fixed_points,
    verify_theorem_q,
)
from .harts import harts_graph, harts_iso_tl, tl_diameter_check, tl_graph
from .numtheory import (
    Factorization,
    crt_combine,
    euler_phi,
    factorize,
    mod_inverse,
    mod_pow,
    multiplicative_order,
    ord_p,
    primitive_root,
)
from .rotation import (
    GossipCertificate,
    RotationReport,
    cayley_map_embeddable,
    find_all_rotations,
    gossip_certificate,
    is_complete_rotation,
    rotation_report,
)

__all__ = [
    "BACKEND",
    "Circulant",
    "Factorization",
    "FrobeniusClass",
    "FrobeniusReport",
    "GammaReport",
    "GammaSpec",
    "GossipCertificate",
    "RotationReport",
    "admissible_degrees",
    "all_classes",
    "blocked_path_witness",
    "build_gamma",
    "cayley_map_embeddable",
    "construct_h",
    "crt_combine",
    "enumerate_classes",
    "euler_phi",
    "factorize",
    "find_all_rotations",
    "gamma_fixed_points",
    "gossip_certificate",
    "harts_graph",
    "harts_iso_tl",
    "is_complete_rotation",
    "is_semiregular",
    "iso_multiplier",
    "max_degree_D",
    "mod_inverse",
    "mod_pow",
    "multiplicative_order",
    "ord_p",
    "primitive_root",
    "rotation_report",
    "tl_diameter_check",
    "tl_graph",
    "verify_first_kind_frobenius",
    "verify_theorem_q",
]

__version__ = "0.1.0"
