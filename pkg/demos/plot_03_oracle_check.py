"""
Cross-checking against plain linear algebra
============================================

The reference implementation finds the same answer by Gaussian
elimination on coefficient vectors. It is slow but shares no formulas
with the fast path.
"""

import random
import time

from c34jac import jacobian as J
from c34jac import Atypical, mk_field, oracle
from c34jac.curve import random_curve
from c34jac.divisor import random_typical, random_typical_with_points

rng = random.Random(3)
curve = random_curve(mk_field(101), rng)
ctx = curve.ctx.fork()

agree = atypical = 0
t_fast = t_slow = 0.0
for _ in range(200):
    D1, D2 = random_typical(curve, rng), random_typical(curve, rng)
    try:
        t0 = time.perf_counter()
        fast = J.addflip(ctx, curve, D1, D2)
        t_fast += time.perf_counter() - t0
    except Atypical:
        atypical += 1
        continue
    t0 = time.perf_counter()
    slow = oracle.generic_addflip(curve, D1, D2)
    t_slow += time.perf_counter() - t0
    assert fast == slow
    agree += 1

print(f"{agree} agreements, {atypical} atypical inputs skipped")
print(f"fast path {1e6 * t_fast / agree:.0f} us/op, reference {1e6 * t_slow / agree:.0f} us/op")

###############################################################################
# Dimensions of the spaces of functions vanishing on a divisor.

D, pts = random_typical_with_points(curve, rng)
print([oracle.dim_wnd(curve, pts, N) for N in range(12)])
