"""exactcalc: exact real and complex arithmetic with decidable predicates.

Numbers are elements of fields Q(a_1,...,a_n) generated by symbolically
defined extension numbers.  Arithmetic is exact; equality and ordering
are decided by combining certified algebraic relations with rigorous
ball-arithmetic enclosures, falling back to three-valued answers
(True/False/Unknown) when the configured work limits are exhausted.
"""

from .ball import RealBall, ComplexBall, ball_arith, ball_elementary, separated_from_zero
from .truth import Truth, UnknownTruthError
from .context import Context, ContextOptions
from .number import ExactNumber
from .algebraic import AlgebraicNumber
from .polymat import ExactMatrix, ExactPoly

__all__ = [
    "RealBall", "ComplexBall", "ball_arith", "ball_elementary",
    "separated_from_zero", "Truth", "UnknownTruthError",
    "Context", "ContextOptions", "ExactNumber", "AlgebraicNumber",
    "ExactMatrix", "ExactPoly",
]

__version__ = "0.1.0"
