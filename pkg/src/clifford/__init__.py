from src.clifford.forms import (
    dual_basis,
    kappa,
    left_dual_coeff,
    phi_S,
    phi_V,
    phi_s_sign,
    right_dual_coeff,
    sigma,
    super_dimension,
)
from src.clifford.module_word import ModuleWord, letter_dimension, parse_word, spin_rank
from src.clifford.pin import p_factors, p_matrix, p_word
from src.clifford.quadratic import quadratic_ops
from src.clifford.sign_lemma import (
    SignLemmaResult,
    fermion,
    ordered_product,
    selected_subset,
    sign_lemma_check,
)
from src.clifford.so import SoElement, embed_block, leibniz, so_act, so_act_range, so_basis
from src.clifford.spin import (
    SpinVec,
    VecV,
    clifford_act,
    clifford_product,
    e_action,
    e_operator,
    psi_action,
    psi_dag_action,
    spin_generator,
)
from src.clifford.weights import (
    RootVector,
    Weight,
    adapted_change,
    basis_weights,
    casimir_value,
    is_dominant,
    negative_root_basis,
    positive_roots,
    rho,
    root_basis,
    simple_root_vectors,
    to_adapted,
    twist,
    weight_spaces,
    weyl_dimension,
    word_change,
)

__all__ = [
    "ModuleWord",
    "RootVector",
    "SignLemmaResult",
    "SoElement",
    "SpinVec",
    "VecV",
    "Weight",
    "adapted_change",
    "basis_weights",
    "casimir_value",
    "clifford_act",
    "clifford_product",
    "dual_basis",
    "e_action",
    "e_operator",
    "embed_block",
    "fermion",
    "is_dominant",
    "kappa",
    "left_dual_coeff",
    "leibniz",
    "letter_dimension",
    "negative_root_basis",
    "ordered_product",
    "p_factors",
    "p_matrix",
    "p_word",
    "parse_word",
    "phi_S",
    "phi_V",
    "phi_s_sign",
    "positive_roots",
    "psi_action",
    "psi_dag_action",
    "quadratic_ops",
    "rho",
    "selected_subset",
    "right_dual_coeff",
    "root_basis",
    "sigma",
    "sign_lemma_check",
    "simple_root_vectors",
    "so_act",
    "so_act_range",
    "so_basis",
    "spin_generator",
    "spin_rank",
    "super_dimension",
    "to_adapted",
    "twist",
    "weight_spaces",
    "weyl_dimension",
    "word_change",
]
