"""Acceptance criteria, one test each.

Every criterion prints a ``[PASS]`` / ``[FAIL]`` line; the lines are also
collected into the terminal summary (see ``conftest.py``). The module can be
run directly with ``python tests/test_acceptance.py``.
"""

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from c34jac import cli  # noqa: E402
from c34jac import jacobian as J  # noqa: E402
from c34jac import oracle  # noqa: E402
from c34jac.curve import enumerate_points  # noqa: E402
from c34jac.divisor import (from_points, mult_matrices, random_typical,  # noqa: E402
                            random_typical_with_points, to_polys)
from c34jac.errors import Atypical, NotSplit  # noqa: E402
from c34jac.linalg import identity, matmul  # noqa: E402
from c34jac.poly import CurvePoly, eval_poly, poly_mul  # noqa: E402

from conftest import make_curve  # noqa: E402

REPORT: list[str] = []

ADD_STAGES = {"build_m_add": (22, 0), "kernel_m": (39, 1), "form_st": (18, 0),
              "reduce_to_mpp": (20, 0), "solve_mpp": (11, 1), "negate": (7, 0)}
DOUBLE_STAGES = {**{k: v for k, v in ADD_STAGES.items() if k != "build_m_add"},
                 "build_m_double": (34, 0)}


def _pair(curve, rng):
    while True:
        D1, D2 = random_typical(curve, rng), random_typical(curve, rng)
        if D1 != D2:
            return D1, D2


def _timed_pairs(curve, rng, n):
    """n pairs for which both add(D1, D2) and double(D1) are typical, with
    the op-count delta and stage trace of each call."""
    ctx = curve.ctx.fork()
    out = []
    while len(out) < n:
        D1, D2 = _pair(curve, rng)
        rec = []
        try:
            for fn, args in ((J.add, (D1, D2)), (J.double, (D1,))):
                trace = {}
                before = ctx.counter_read()
                fn(ctx, curve, *args, trace=trace)
                rec.append(((ctx.counter_read() - before).as_tuple(),
                            {k: v.as_tuple() for k, v in trace.items()}))
        except Atypical:
            continue
        out.append(rec)
    return out


def criterion_1():
    recs = _timed_pairs(make_curve(1009, "acc1"), random.Random(1), 500)
    adds = {r[0][0] for r in recs}
    doubles = {r[1][0] for r in recs}
    assert adds == {(117, 2)}, adds
    assert doubles == {(129, 2)}, doubles
    return "500 add = (117, 2), 500 double = (129, 2)"


def criterion_2():
    curve = make_curve(1009, "acc2")
    recs = _timed_pairs(curve, random.Random(2), 500)
    for (_, add_trace), (_, dbl_trace) in recs:
        assert add_trace == ADD_STAGES, add_trace
        assert dbl_trace == DOUBLE_STAGES, dbl_trace
    ctx = curve.ctx.fork()
    rng = random.Random(22)
    for _ in range(500):
        D = random_typical(curve, rng)
        for want_h, want in ((False, (7, 0)), (True, (10, 0))):
            before = ctx.counter_read()
            J.negate_with_h(ctx, curve, D, want_h)
            assert (ctx.counter_read() - before).as_tuple() == want
    return "every stage delta exact on 500 adds, 500 doubles, 500 negations (7 and 10)"


def criterion_3():
    n_add = n_dbl = 0
    per_prime = {31: 334, 101: 334, 1009: 334}
    for p, target in per_prime.items():
        curve = make_curve(p, "acc3")
        ctx = curve.ctx.fork()
        rng = random.Random(p)
        a = d = 0
        while a < target or d < target:
            D1, D2 = _pair(curve, rng)
            for A, B in ((D1, D2), (D1, D1)):
                if (A == B and d >= target) or (A != B and a >= target):
                    continue
                try:
                    fast = J.addflip(ctx, curve, A, B)
                except Atypical:
                    continue
                slow = oracle.generic_addflip(curve, A, B)
                assert fast == slow, (p, A, B, fast, slow)
                if A == B:
                    d += 1
                else:
                    a += 1
        n_add += a
        n_dbl += d
    assert n_add >= 1000 and n_dbl >= 1000
    return f"{n_add} additions and {n_dbl} doublings equal the oracle over p = 31, 101, 1009"


def criterion_4():
    curve = make_curve(101, "acc4")
    ctx = curve.ctx.fork()
    rng = random.Random(4)
    pts_all = enumerate_points(curve)
    found = 0
    while found < 100:
        (D1, P1), (D2, P2) = (random_typical_with_points(curve, rng) for _ in range(2))
        if set(P1) & set(P2):
            continue
        inter = {}
        try:
            out = J.addflip(ctx, curve, D1, D2, intermediates=inter)
            rest = oracle.residual_points(curve, inter["st"].s, P1, P2)
        except (Atypical, NotSplit):
            continue
        F, G = to_polys(101, out)
        zeros = sorted(P for P in pts_all if eval_poly(F, P) == 0 == eval_poly(G, P))
        assert zeros == rest, (zeros, rest)
        assert from_points(curve, *rest) == out
        found += 1
    return f"{found} split instances at p = 101: residual zeros of s = zeros of (F'', G'')"


def criterion_5():
    curve = make_curve(1009, "acc5")
    p = 1009
    ctx = curve.ctx.fork()
    rng = random.Random(5)
    I3 = identity(3)

    def comb(*terms):
        return [[sum(k * m[r][c] for k, m in terms) % p for c in range(3)] for r in range(3)]

    for _ in range(200):
        D = random_typical(curve, rng)
        tx, ty = mult_matrices(p, D)
        g, h, i = -ty[2][2] % p, -ty[1][2] % p, -ty[0][2] % p
        assert matmul(tx, tx, p) == comb((-D.a, ty), (-D.b, tx), (-D.c, I3))
        assert matmul(tx, ty, p) == comb((-D.d, ty), (-D.e, tx), (-D.f, I3))
        assert matmul(ty, ty, p) == comb((-g, ty), (-h, tx), (-i, I3))
        assert matmul(tx, ty, p) == matmul(ty, tx, p)
    for _ in range(200):
        D = random_typical(curve, rng)
        r = J.negate_with_h(ctx, curve, D, want_h=True)
        F, G = to_polys(p, D)
        G3 = CurvePoly(p, {(1, 1): 1, (0, 1): r.d3, (1, 0): r.e3, (0, 0): r.f3})
        hy, hx, h0 = r.h
        H = CurvePoly(p, {(0, 2): -1, (2, 0): D.a, (0, 1): hy, (1, 0): hx, (0, 0): h0})
        assert (poly_mul(curve, G, G3) + poly_mul(curve, F, H)).is_zero()
    return "T_x/T_y relations on 200 divisors; G G''' + F H = 0 on 200 divisors"


def _oracle_multiples(curve, D, top):
    """{m: m*D} for 0 < |m| <= top by repeated oracle addition."""
    mult = {1: D}
    for k in range(2, top + 1):
        mult[k] = oracle.generic_add(curve, mult[k - 1], D)
    for k in range(1, top + 1):
        mult[-k] = oracle.generic_negate(curve, mult[k])
    return mult


def criterion_6():
    curve = make_curve(1009, "acc6")
    ctx = curve.ctx.fork()
    rng = random.Random(6)
    n = 0
    while n < 500:
        D1, D2 = _pair(curve, rng)
        try:
            assert J.add(ctx, curve, D1, D2) == J.add(ctx, curve, D2, D1)
        except Atypical:
            continue
        n += 1
    n = 0
    while n < 200:
        D1, D2 = _pair(curve, rng)
        D3 = random_typical(curve, rng)
        try:
            left = J.add(ctx, curve, J.add(ctx, curve, D1, D2), D3)
            right = J.add(ctx, curve, D1, J.add(ctx, curve, D2, D3))
        except Atypical:
            continue
        assert left == right
        n += 1
    for _ in range(500):
        D = random_typical(curve, rng)
        assert J.negate(ctx, curve, J.negate(ctx, curve, D)) == D
    bases = resampled = 0
    ms = [m for m in range(-16, 17) if m]
    while bases < 20:
        D = random_typical(curve, rng)
        try:
            slow = _oracle_multiples(curve, D, 16)
            fast = {m: J.scalar_mul(ctx, curve, m, D) for m in ms}
        except Atypical:
            resampled += 1
            continue
        assert fast == slow
        bases += 1
    return (f"commutative x500, associative x200, involution x500, "
            f"scalar_mul = repeated addition for 0 < |m| <= 16 on 20 bases "
            f"({resampled} atypical bases resampled)")


def criterion_7():
    curve = make_curve(1009, "acc7")
    rng = random.Random(7)
    for _ in range(20):
        _, pts = random_typical_with_points(curve, rng)
        got = [oracle.dim_wnd(curve, pts, N) for N in range(18)]
        assert got == [0 if N <= 5 else N - 5 for N in range(18)], got
    return "dim W^N_D = 0 (N <= 5), N - 5 (N >= 5) for N in 0..17 on 20 divisors"


def criterion_8():
    import contextlib
    import io
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(["bench", "--trials", "20", "--seed", "8"])
    assert code == 0
    out = buf.getvalue()
    comments = [ln for ln in out.splitlines() if ln.startswith("#")]
    assert any("NOT measured" in ln for ln in comments)
    assert any("145M, 2I" in ln and "150M, 2I" in ln for ln in comments)
    assert any("167M, 2I" in ln and "174M, 2I" in ln for ln in comments)
    assert not any("%" in ln for ln in out.splitlines())
    return "bench prints prior counts as labelled static context; no speedup is computed"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8]


def _run(k):
    fn = CRITERIA[k - 1]
    try:
        detail = fn()
    except AssertionError as exc:
        line = f"[FAIL] criterion {k}: {exc!r}"
        REPORT.append(line)
        print(line)
        raise
    line = f"[PASS] criterion {k}: {detail}"
    REPORT.append(line)
    print(line)


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k):
    _run(k)


if __name__ == "__main__":
    failed = 0
    for k in range(1, len(CRITERIA) + 1):
        try:
            _run(k)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
