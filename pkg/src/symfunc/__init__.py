from src.symfunc.bernoulli import BERNOULLI, BernoulliCache, bernoulli, tanh_check, tanh_coefficients
from src.symfunc.jacobi_trudi import jacobi_trudi
from src.symfunc.symfunc import BASES, SymFunc, convert, hall_pair, power_sum, to_power
from src.symfunc.tables import kostka, power_in_monomial
from src.symfunc.wr import (
    GenerationStep,
    PairingRecord,
    PositivityRow,
    generation_solver,
    pairing_check,
    schur_positivity_scan,
    w_r,
    w_r_oracle,
)

__all__ = [
    "BASES",
    "BERNOULLI",
    "BernoulliCache",
    "GenerationStep",
    "PairingRecord",
    "PositivityRow",
    "SymFunc",
    "bernoulli",
    "convert",
    "generation_solver",
    "hall_pair",
    "jacobi_trudi",
    "kostka",
    "pairing_check",
    "power_in_monomial",
    "power_sum",
    "schur_positivity_scan",
    "tanh_check",
    "tanh_coefficients",
    "to_power",
    "w_r",
    "w_r_oracle",
]
