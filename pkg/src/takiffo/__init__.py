"""Exact composition multiplicities for Takiff Lie algebra Verma modules.

The top-level API mirrors the reduction pipeline: build a root system,
reduce the nilpotent-part weight to a standard centralizer Levi, and sum
Levi-Kostant-weighted Kazhdan-Lusztig multiplicities.
"""

from .rootdata import (
    CartanType,
    ParseError,
    RootSystem,
    RootVector,
    Weight,
    build_root_system,
    format_rational,
    pairing,
    parse_cartan_type,
    parse_rational,
    root_to_weight,
    weight_leq,
    weight_sub,
)
from .coxeter import CoxeterGroup, GroupElement
from .weyl import (
    LeviDatum,
    Subsystem,
    WeylElement,
    full_weyl_group,
    is_standard_levi,
    minimal_levi_reduction,
    phi_mu,
)
from .kostant import (
    Character,
    PartitionCache,
    kostant_p,
    kostant_p2,
    simple_character_bgg,
    takiff_verma_character,
    verma_character,
    weyl_character_formula,
)
from .klbgg import (
    KLCache,
    KLPolynomial,
    bgg_mult,
    decomposition_matrix,
    integral_subsystem,
    kl_polynomial,
)
from .takiffmult import (
    MultiplicityReport,
    ParabolicTransport,
    TakiffWeightPair,
    ext_block_predicate,
    parabolic_image,
    takiff_mult,
    takiff_mult_series,
    twisting_image,
)

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "Character",
    "CoxeterGroup",
    "GroupElement",
    "KLCache",
    "KLPolynomial",
    "LeviDatum",
    "MultiplicityReport",
    "ParabolicTransport",
    "ParseError",
    "PartitionCache",
    "RootSystem",
    "RootVector",
    "Subsystem",
    "TakiffWeightPair",
    "Weight",
    "WeylElement",
    "bgg_mult",
    "build_root_system",
    "decomposition_matrix",
    "ext_block_predicate",
    "format_rational",
    "full_weyl_group",
    "integral_subsystem",
    "is_standard_levi",
    "kl_polynomial",
    "kostant_p",
    "kostant_p2",
    "minimal_levi_reduction",
    "pairing",
    "parabolic_image",
    "parse_cartan_type",
    "parse_rational",
    "phi_mu",
    "root_to_weight",
    "simple_character_bgg",
    "takiff_mult",
    "takiff_mult_series",
    "takiff_verma_character",
    "twisting_image",
    "verma_character",
    "weight_leq",
    "weight_sub",
    "weyl_character_formula",
]
