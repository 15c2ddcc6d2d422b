"""
Representations, resolutions, Hom/Ext functors and Auslander-Reiten translations.
"""

from src.homology.covers import (
    InjectiveEnvelope,
    ProjectiveCover,
    injective_dimension_at_most_one,
    injective_envelope,
    is_injective,
    is_projective,
    projective_cover,
    projective_dimension_at_most_one,
)
from src.homology.ext import ExtGroup, dual_regular, ext1, ext_bimodule, ext_dual_regular
from src.homology.functors import (
    HomModule,
    MapSpace,
    hom_from_bimodule,
    hom_to_regular,
    nakayama,
    nakayama_map,
    tensor_module,
)
from src.homology.iso import IsoVerdict, bimodule_iso_check, module_iso_check
from src.homology.phi_psi import PhiMap, PhiPsi, phi_map
from src.homology.radical import is_semisimple, radical, top_dimension_vector
from src.homology.representations import (
    QuiverAlgebras,
    Representation,
    is_locally_projective,
    make_representation,
    module_to_rep,
    quiver_algebras,
    random_representation,
    regular_representation,
    rep_to_module,
    simple_representation,
)
from src.homology.resolution import TwoTermResolution, minimal_presentation, standard_resolution
from src.homology.trace import Adjunction, DualBasis, TracePairing, trace, trace_pairing
from src.homology.translations import (
    TauRoute,
    ar_translate,
    ar_translate_inverse,
    tau_hom,
    tau_inverse_ext,
    tau_inverse_minimal,
    tau_inverse_tensor,
    tau_minimal,
    tau_standard,
)

__all__ = [
    "InjectiveEnvelope",
    "ProjectiveCover",
    "injective_dimension_at_most_one",
    "injective_envelope",
    "is_injective",
    "is_projective",
    "projective_cover",
    "projective_dimension_at_most_one",
    "ExtGroup",
    "dual_regular",
    "ext1",
    "ext_bimodule",
    "ext_dual_regular",
    "HomModule",
    "MapSpace",
    "hom_from_bimodule",
    "hom_to_regular",
    "nakayama",
    "nakayama_map",
    "tensor_module",
    "IsoVerdict",
    "bimodule_iso_check",
    "module_iso_check",
    "PhiMap",
    "PhiPsi",
    "phi_map",
    "is_semisimple",
    "radical",
    "top_dimension_vector",
    "QuiverAlgebras",
    "Representation",
    "is_locally_projective",
    "make_representation",
    "module_to_rep",
    "quiver_algebras",
    "random_representation",
    "regular_representation",
    "rep_to_module",
    "simple_representation",
    "TwoTermResolution",
    "minimal_presentation",
    "standard_resolution",
    "Adjunction",
    "DualBasis",
    "TracePairing",
    "trace",
    "trace_pairing",
    "TauRoute",
    "ar_translate",
    "ar_translate_inverse",
    "tau_hom",
    "tau_inverse_ext",
    "tau_inverse_minimal",
    "tau_inverse_tensor",
    "tau_minimal",
    "tau_standard",
]
