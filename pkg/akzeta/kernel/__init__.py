from .multizeta import HurwitzStarArgs, ZetaMethod, mhzsv_num, mhzv_num, mzsv_num, mzv_num
from .polylog import polylog_num, polylog_quadrature, validate_inversion
from .quadrature import QuadratureResult, exp_sinh
from .values import NumericValue
from .zeta import gamma_real, hurwitz_num, zeta_num

__all__ = [
    "HurwitzStarArgs",
    "NumericValue",
    "QuadratureResult",
    "ZetaMethod",
    "exp_sinh",
    "gamma_real",
    "hurwitz_num",
    "mhzsv_num",
    "mhzv_num",
    "mzsv_num",
    "mzv_num",
    "polylog_num",
    "polylog_quadrature",
    "validate_inversion",
    "zeta_num",
]
