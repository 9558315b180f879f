"""Invariant suites run by ``c34jac selftest``.

Each suite returns a :class:`SuiteResult`; a suite fails on the first
violated check and records which one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import jacobian as J
from . import oracle
from .curve import Curve
from .divisor import mult_matrices, random_typical, random_typical_with_points, to_polys
from .errors import Atypical
from .field import OpCount
from .linalg import identity, matmul, nullspace
from .poly import CurvePoly, poly_mul

STAGE_COUNTS = {
    "build_m_add": (22, 0),
    "build_m_double": (34, 0),
    "kernel_m": (39, 1),
    "form_st": (18, 0),
    "reduce_to_mpp": (20, 0),
    "solve_mpp": (11, 1),
    "negate": (7, 0),
}
ADD_COUNT = (117, 2)
DOUBLE_COUNT = (129, 2)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    skipped: int = 0
    failure: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


class _Fail(Exception):
    pass


def _expect(cond, msg):
    if not cond:
        raise _Fail(msg)


def _pair(curve, rng, retries=50):
    for _ in range(retries):
        D1, D2 = random_typical(curve, rng), random_typical(curve, rng)
        if D1 != D2:
            return D1, D2
    raise _Fail("could not draw two distinct divisors")


def suite_counts(curve: Curve, rng, trials: int) -> SuiteResult:
    res = SuiteResult("op counts")
    ctx = curve.ctx.fork()
    for _ in range(trials):
        D1, D2 = _pair(curve, rng)
        for kind in ("add", "double"):
            trace: dict[str, OpCount] = {}
            before = ctx.counter_read()
            try:
                if kind == "add":
                    J.add(ctx, curve, D1, D2, trace)
                else:
                    J.double(ctx, curve, D1, trace)
            except Atypical:
                res.skipped += 1
                continue
            total = (ctx.counter_read() - before).as_tuple()
            want = ADD_COUNT if kind == "add" else DOUBLE_COUNT
            _expect(total == want, f"{kind} used {total}, expected {want}")
            for stage, cnt in trace.items():
                _expect(cnt.as_tuple() == STAGE_COUNTS[stage],
                        f"{stage} used {cnt.as_tuple()}, expected {STAGE_COUNTS[stage]}")
            res.checks += 1
    return res


def suite_oracle(curve: Curve, rng, trials: int) -> SuiteResult:
    res = SuiteResult("oracle equivalence")
    ctx = curve.ctx.fork()
    for k in range(trials):
        D1, D2 = _pair(curve, rng)
        for A, B in ((D1, D2), (D1, D1)):
            try:
                fast = J.addflip(ctx, curve, A, B)
                slow = oracle.generic_addflip(curve, A, B)
            except Atypical:
                res.skipped += 1
                continue
            kind = "doubling" if A == B else "addition"
            _expect(fast == slow, f"{kind} #{k}: fast {fast} != oracle {slow}")
            res.checks += 1
    return res


def suite_certificates(curve: Curve, rng, trials: int) -> SuiteResult:
    """M'v = 0 and M''v'' = 0 exactly, and s, t vanish on the input points."""
    res = SuiteResult("kernel certificates")
    ctx = curve.ctx.fork()
    p = curve.p
    for _ in range(trials):
        (D1, pts1), (D2, pts2) = (random_typical_with_points(curve, rng) for _ in range(2))
        if D1 == D2:
            continue
        inter: dict = {}
        try:
            out = J.addflip(ctx, curve, D1, D2, intermediates=inter)
        except Atypical:
            res.skipped += 1
            continue
        Mp = J.permute_m(inter["M"])
        for v in (inter["K"].v1, inter["K"].v2):
            _expect(all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in Mp), "M' v != 0")
        for v in ((out.c, out.b, out.a, 1, 0), (out.f, out.e, out.d, 0, 1)):
            _expect(all(sum(a * b for a, b in zip(row, v)) % p == 0 for row in inter["Mpp"]),
                    "M'' v'' != 0")
        s = oracle.s_poly(p, inter["st"].s)
        t = oracle.t_poly(p, inter["st"].t)
        for pt in pts1 + pts2:
            _expect(oracle.eval_poly(s, pt) == 0 and oracle.eval_poly(t, pt) == 0,
                    f"s or t nonzero at {pt}")
        res.checks += 1
    return res


def suite_identities(curve: Curve, rng, trials: int) -> SuiteResult:
    """Relations between the multiplication matrices, and G*G''' + F*H = 0."""
    res = SuiteResult("algebraic identities")
    ctx = curve.ctx.fork()
    p = curve.p
    for _ in range(trials):
        D = random_typical(curve, rng)
        tx, ty = mult_matrices(p, D)
        I = identity(3)
        g, h, i = (-ty[2][2]) % p, (-ty[1][2]) % p, (-ty[0][2]) % p

        def comb(*terms):
            return [[sum(k * m[r][c] for k, m in terms) % p for c in range(3)] for r in range(3)]

        _expect(matmul(tx, ty, p) == matmul(ty, tx, p), "T_x T_y != T_y T_x")
        _expect(matmul(tx, tx, p) == comb((-D.a, ty), (-D.b, tx), (-D.c, I)), "x^2 relation")
        _expect(matmul(tx, ty, p) == comb((-D.d, ty), (-D.e, tx), (-D.f, I)), "xy relation")
        _expect(matmul(ty, ty, p) == comb((-g, ty), (-h, tx), (-i, I)), "y^2 relation")
        r = J.negate_with_h(ctx, curve, D, want_h=True)
        F, G = to_polys(p, D)
        G3 = CurvePoly(p, {(1, 1): 1, (0, 1): r.d3, (1, 0): r.e3, (0, 0): r.f3})
        hy, hx, h0 = r.h
        H = CurvePoly(p, {(0, 2): -1, (2, 0): D.a, (0, 1): hy, (1, 0): hx, (0, 0): h0})
        _expect((poly_mul(curve, G, G3) + poly_mul(curve, F, H)).is_zero(), "G G''' + F H != 0")
        res.checks += 1
    return res


def suite_group(curve: Curve, rng, trials: int) -> SuiteResult:
    res = SuiteResult("group axioms")
    ctx = curve.ctx.fork()
    for _ in range(trials):
        D1, D2 = _pair(curve, rng)
        D3 = random_typical(curve, rng)
        _expect(J.negate(ctx, curve, J.negate(ctx, curve, D1)) == D1, "negate is not an involution")
        try:
            _expect(J.add(ctx, curve, D1, D2) == J.add(ctx, curve, D2, D1), "add not commutative")
            left = J.add(ctx, curve, J.add(ctx, curve, D1, D2), D3)
            right = J.add(ctx, curve, D1, J.add(ctx, curve, D2, D3))
        except Atypical:
            res.skipped += 1
            continue
        _expect(left == right, "add not associative")
        try:
            J.add(ctx, curve, D1, J.negate(ctx, curve, D1))
        except Atypical:
            pass
        else:
            raise _Fail("D + (-D) returned a typical divisor")
        res.checks += 1
    return res


def suite_dimensions(curve: Curve, rng, trials: int) -> SuiteResult:
    res = SuiteResult("dimension table")
    for _ in range(min(trials, 20)):
        _, pts = random_typical_with_points(curve, rng)
        for N in range(18):
            want = max(N - 5, 0)
            got = oracle.dim_wnd(curve, pts, N)
            _expect(got == want, f"dim W^{N}_D = {got}, expected {want}")
        res.checks += 1
    return res


def suite_double_matrix(curve: Curve, rng, trials: int) -> SuiteResult:
    """The doubling matrix and the differential reference have the same kernel."""
    res = SuiteResult("doubling kernel")
    ctx = curve.ctx.fork()
    p = curve.p
    for _ in range(min(trials, 50)):
        D = random_typical(curve, rng)
        fast = [list(r) for r in J.build_m_double(ctx, curve, D)]
        ref = oracle.m_double_reference(curve, D)
        k_fast = nullspace(fast, p)
        k_ref = nullspace(ref, p)
        _expect(sorted(map(tuple, k_fast)) == sorted(map(tuple, k_ref)), "kernels differ")
        res.checks += 1
    return res


SUITES = {
    "op counts": suite_counts,
    "oracle equivalence": suite_oracle,
    "kernel certificates": suite_certificates,
    "algebraic identities": suite_identities,
    "group axioms": suite_group,
    "dimension table": suite_dimensions,
    "doubling kernel": suite_double_matrix,
}


def run_selftest(curve: Curve, trials: int, seed: int, suites=None) -> list[SuiteResult]:
    results = []
    for k, (name, suite) in enumerate((suites or SUITES).items()):
        rng = random.Random(f"{seed}:{k}")
        try:
            results.append(suite(curve, rng, trials))
        except _Fail as exc:
            results.append(SuiteResult(name, failure=str(exc)))
        except Exception as exc:  # a crash is a failed invariant too
            results.append(SuiteResult(name, failure=f"{type(exc).__name__}: {exc}"))
    return results
