"""Independent reference values for the series engines."""
from .closed_forms import NAMES as CLOSED_FORM_NAMES, closed_form, somos_direct, zeta_prime_2
from .constants import LITERALS, euler_gamma, literal, validate_literal
from .definition import definition_sum
from .quadrature import QuadratureError, QuadratureSpec, quadrature
from .special import digamma, log_gamma

__all__ = [
    "CLOSED_FORM_NAMES", "closed_form", "somos_direct", "zeta_prime_2", "LITERALS", "euler_gamma",
    "literal", "validate_literal", "definition_sum", "QuadratureError", "QuadratureSpec",
    "quadrature", "digamma", "log_gamma",
]
