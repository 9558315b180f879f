"""
Arithmetic on the Jacobian of a C34 curve
==========================================

Build a curve over a small prime field, make divisors from points, and
add, double and negate them.
"""

import random

from c34jac import Jacobian, from_points, mk_field
from c34jac.curve import enumerate_points, random_curve

rng = random.Random(2024)
curve = random_curve(mk_field(1009), rng)
print(curve)

# A degree-3 divisor is stored as F = x^2 + a*y + b*x + c and
# G = x*y + d*y + e*x + f, the two lowest-order functions through its points.
points = enumerate_points(curve)
print(len(points), "affine points")

D1 = from_points(curve, *rng.sample(points, 3))
D2 = from_points(curve, *rng.sample(points, 3))
print("D1 =", D1)
print("D2 =", D2)

jac = Jacobian(curve)

###############################################################################
# Addition, doubling and negation return new representations.

S = jac.add(D1, D2)
print("D1 + D2 =", S)
print("2*D1    =", jac.double(D1))
print("-D1     =", jac.negate(D1))

# Subtracting D2 again gets back to D1.
print("(D1 + D2) - D2 == D1:", jac.add(S, jac.negate(D2)) == D1)
