"""besselops: the polynomial sequence of the Bessel operator, its exact
algebraic identities, the moment functional of its dual sequence, and
numerical validation of the Kontorovich-Lebedev integral representations.
"""

from .algebra import Polynomial, PowerSeries, RationalFunction, pochhammer, poly_gcd
from .polyseq import AlphaMode

__version__ = "0.1.0"

__all__ = [
    "AlphaMode",
    "Polynomial",
    "PowerSeries",
    "RationalFunction",
    "pochhammer",
    "poly_gcd",
    "__version__",
]
