from src.repthy.barbells import barbell_algebra_dim, barbell_generators, barbell_square_spectrum
from src.repthy.central import CentralOperator, central_diagram, central_element, central_elements
from src.repthy.projectors import projector_checks
from src.repthy.spectrum import (
    IsotypicEntry,
    IsotypicSummary,
    casimir_eigenspace_dimensions,
    commutant_dim,
    commutant_dim_direct,
    highest_weight_vectors,
    isotypic_spectrum,
)

__all__ = [
    "CentralOperator",
    "IsotypicEntry",
    "IsotypicSummary",
    "barbell_algebra_dim",
    "barbell_generators",
    "barbell_square_spectrum",
    "casimir_eigenspace_dimensions",
    "central_diagram",
    "central_element",
    "central_elements",
    "commutant_dim",
    "commutant_dim_direct",
    "highest_weight_vectors",
    "isotypic_spectrum",
    "projector_checks",
]
