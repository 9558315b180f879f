"""
Scalar multiplication in base -2
=================================

``addflip`` returns -(D + D'). Writing m in base -2 turns scalar
multiplication into a Horner loop made only of addflips: a 0 digit maps
acc to -2*acc and a 1 digit maps it to -2*acc + D.
"""

import random

from c34jac import Atypical, mk_field, oracle
from c34jac import jacobian as J
from c34jac.curve import random_curve
from c34jac.divisor import random_typical

for m in (3, -1, 6, 11, -13):
    print(f"{m:>4} -> digits {J.negabinary(m)}")

rng = random.Random(11)
curve = random_curve(mk_field(1009), rng)
ctx = curve.ctx.fork()

###############################################################################
# Compare against repeated addition and against double-and-add. Some base
# divisors hit an atypical intermediate on one of the routes; draw another.

scalars = (2, 5, -7, 12)
while True:
    D = random_typical(curve, rng)
    try:
        rows = []
        for m in scalars:
            before = ctx.counter_read()
            fast = J.scalar_mul(ctx, curve, m, D)
            cost = ctx.counter_read() - before
            same = fast == oracle.repeated_add(curve, m, D) == \
                J.scalar_mul_double_add(ctx, curve, m, D)
            rows.append(f"m = {m:>3}: {fast}  [{cost}]  matches: {same}")
    except Atypical as exc:
        print("resampling:", exc)
        continue
    break
print("\n".join(rows))
