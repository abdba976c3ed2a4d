from .bms import BmsTriple, bms_search, integral_model, relation_r
from .ffield import FfieldInstance, function_field_family
from .frucht import FruchtRecipe, frucht_field_recipe, recipe_graph
from .realize import RealizationCertificate, alt_stem_polynomial, realize
from .schinzel import (
    QQ_BASE,
    Base,
    HilbertModulus,
    SchinzelInstance,
    build_c_and_P,
    build_f,
    compute_H,
    hilbert_modulus,
    local_obstructions,
    make_base,
    residue_set,
    schinzel_search,
    select_a,
    specialize,
    verify_instance,
)

__all__ = [
    "Base", "BmsTriple", "FfieldInstance", "FruchtRecipe", "HilbertModulus", "QQ_BASE",
    "RealizationCertificate", "SchinzelInstance", "alt_stem_polynomial", "bms_search",
    "build_c_and_P", "build_f", "compute_H", "frucht_field_recipe", "function_field_family",
    "hilbert_modulus", "integral_model", "local_obstructions", "make_base", "realize",
    "recipe_graph", "relation_r", "residue_set", "schinzel_search", "select_a", "specialize",
    "verify_instance",
]
