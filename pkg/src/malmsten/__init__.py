"""malmsten: numerical certification of log-log integral identities.

The package pairs every catalog identity's integral side (evaluated with a
branch-aware double-exponential quadrature engine) with its closed-form side
(evaluated with a self-contained complex special-function stack) and reports
agreement per tolerance class.
"""

from ._env import USE_NUMBA
from .specfun import (
    ConstantsTable,
    DomainError,
    PoleError,
    RationalExponent,
    constants,
)

__version__ = "0.1.0"

__all__ = [
    "USE_NUMBA",
    "ConstantsTable",
    "DomainError",
    "PoleError",
    "RationalExponent",
    "constants",
    "__version__",
]
