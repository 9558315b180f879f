"""Fast explicit group law on Jacobians of C_{3,4} curves over prime fields."""

from .curve import AffinePoint, Curve, enumerate_points, eval_f, mk_curve, partials, random_point
from .divisor import DivisorRep, div_eq, from_points, make_divisor, random_typical
from .errors import (Atypical, BadCharacteristic, C34Error, DivisionByZero, Exhausted,
                     IdentityResult, NonPrime, NotSplit, SameDivisor, SingularScreenFailed)
from .field import FieldCtx, OpCount, mk_field
from .jacobian import Jacobian, add, addflip, double, negabinary, negate, scalar_mul

__version__ = "0.1.0"

__all__ = [
    "AffinePoint",
    "Curve",
    "enumerate_points",
    "eval_f",
    "mk_curve",
    "partials",
    "random_point",
    "DivisorRep",
    "div_eq",
    "from_points",
    "make_divisor",
    "random_typical",
    "Atypical",
    "BadCharacteristic",
    "C34Error",
    "DivisionByZero",
    "Exhausted",
    "IdentityResult",
    "NonPrime",
    "NotSplit",
    "SameDivisor",
    "SingularScreenFailed",
    "FieldCtx",
    "OpCount",
    "mk_field",
    "Jacobian",
    "add",
    "addflip",
    "double",
    "negabinary",
    "negate",
    "scalar_mul",
]
