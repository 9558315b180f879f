"""
Counting field operations
==========================

Every formula runs a fixed schedule of multiplications, so the count
does not depend on the inputs. This script tallies multiplications and
inversions stage by stage.
"""

import random

from c34jac import jacobian as J
from c34jac import Atypical, mk_field
from c34jac.curve import random_curve
from c34jac.divisor import random_typical

rng = random.Random(7)
curve = random_curve(mk_field(1009), rng)
ctx = curve.ctx.fork()

D1, D2 = random_typical(curve, rng), random_typical(curve, rng)

for label, run in [("add", lambda t: J.add(ctx, curve, D1, D2, t)),
                   ("double", lambda t: J.double(ctx, curve, D1, t))]:
    trace = {}
    before = ctx.counter_read()
    run(trace)
    total = ctx.counter_read() - before
    print(f"{label}: {total}")
    for stage, cnt in trace.items():
        print(f"    {stage:<16} {cnt}")

###############################################################################
# The same totals hold across many random inputs.

totals = set()
for _ in range(200):
    A, B = random_typical(curve, rng), random_typical(curve, rng)
    before = ctx.counter_read()
    try:
        J.add(ctx, curve, A, B)
    except Atypical:
        continue
    totals.add((ctx.counter_read() - before).as_tuple())
print("distinct add counts over 200 pairs:", totals)
