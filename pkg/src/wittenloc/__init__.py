"""Equivariant characteristic-class calculus on complex tori.

The package computes lattice special functions (Eisenstein sums, Dedekind
eta, Weierstrass sigma and its zeta-regularized product), models truncated
cohomology rings with integration tables, and runs the antiholomorphic
equivariant calculus: normalized top Chern classes, Euler classes by the
doubling trick, the fixed-point localization formula with an exactly
solvable two-sphere example, and the regularized infinite-rank class over
the torus mapping space whose reciprocal is the Witten class, integrating
to the Witten genus.
"""

__version__ = "0.1.0"

from .cohomology import (
    CohomClass,
    ManifoldSpec,
    RingSpec,
    TangentData,
    exp_class,
    genus_class,
    integrate,
    newton_power_sums,
    pontryagin_root_power_sums,
    power_sums_from_pontryagin,
    real_witten_class,
    whitney_sum,
    witten_class,
)
from .equivariant import (
    EquivariantClass,
    EulerClass,
    IsotypicBundle,
    IsotypicComponent,
    RealEquivariantBundle,
    S2LocalizationResult,
    WittenGenusResult,
    equivariant_euler_antiholo,
    euler_two_variable,
    first_chern_antiholo,
    graded_witten_class,
    localization_rhs,
    loopspace_regularized_top_chern,
    normalized_top_chern_antiholo,
    s2_example,
    top_chern_antiholo,
    verify_closedness_s2,
    weight_polynomial_antiholo,
    witten_genus,
    witten_genus_symbolic,
)
from .kernels import backend_name
from .lattice import (
    ArgumentChoice,
    Lattice,
    LatticeCharacter,
    character_value,
    dedekind_eta,
    default_radius,
    eisenstein,
    eisenstein_auto,
    g2_regularized,
    g2_via_eta,
    lattice_points,
    lattice_power_sum,
    sigma_direct,
    sigma_series,
    witten_char_series,
    witten_char_series_symbolic,
    zeta_regularized_product,
)
from .manifest import Manifest, ManifestError, load_manifest, loads_manifest
from .scalars import FormalPolynomial, GaussianRational
from .series import ComplexSeries, PowerSeries

__all__ = [
    "ArgumentChoice",
    "CohomClass",
    "ComplexSeries",
    "EquivariantClass",
    "EulerClass",
    "FormalPolynomial",
    "GaussianRational",
    "IsotypicBundle",
    "IsotypicComponent",
    "Lattice",
    "LatticeCharacter",
    "Manifest",
    "ManifestError",
    "ManifoldSpec",
    "PowerSeries",
    "RealEquivariantBundle",
    "RingSpec",
    "S2LocalizationResult",
    "TangentData",
    "WittenGenusResult",
    "backend_name",
    "character_value",
    "dedekind_eta",
    "default_radius",
    "eisenstein",
    "eisenstein_auto",
    "equivariant_euler_antiholo",
    "euler_two_variable",
    "exp_class",
    "first_chern_antiholo",
    "g2_regularized",
    "g2_via_eta",
    "genus_class",
    "graded_witten_class",
    "integrate",
    "lattice_points",
    "lattice_power_sum",
    "load_manifest",
    "loads_manifest",
    "localization_rhs",
    "loopspace_regularized_top_chern",
    "newton_power_sums",
    "normalized_top_chern_antiholo",
    "pontryagin_root_power_sums",
    "power_sums_from_pontryagin",
    "real_witten_class",
    "s2_example",
    "sigma_direct",
    "sigma_series",
    "top_chern_antiholo",
    "verify_closedness_s2",
    "weight_polynomial_antiholo",
    "whitney_sum",
    "witten_char_series",
    "witten_char_series_symbolic",
    "witten_class",
    "witten_genus",
    "witten_genus_symbolic",
    "zeta_regularized_product",
]
