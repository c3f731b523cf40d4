from src.exactnum.cyclo import (
    I,
    INV_SQRT2,
    ONE,
    SQRT2,
    ZERO,
    ZETA,
    CycloScalar,
    DivisionByZero,
    Rational,
    Scalar,
    cyclo_arith,
)
from src.exactnum.param import (
    D_PARAM,
    EvaluationPole,
    ParamScalar,
    d_PARAM,
    param_arith,
    param_eval,
)

__all__ = [
    "CycloScalar",
    "DivisionByZero",
    "D_PARAM",
    "EvaluationPole",
    "I",
    "INV_SQRT2",
    "ONE",
    "ParamScalar",
    "Rational",
    "SQRT2",
    "Scalar",
    "ZERO",
    "ZETA",
    "cyclo_arith",
    "d_PARAM",
    "param_arith",
    "param_eval",
]
