"""Explicit group law on the Jacobian of a C_{3,4} curve.

Classes are typical divisors D = (F, G) of degree 3 (see
:mod:`c34jac.divisor`). ``addflip(D, D')`` returns the representation of
-(D + D') and is the primitive everything else is built from:

    build matrix M (3x5)    22M        / 34M  when doubling
    kernel of M             39M, 1I
    s and t                 18M
    matrix M'' (3x5)        20M
    F'' and G''             11M, 1I
    -----------------------------------
    addflip                 110M, 2I   / 122M, 2I
    negate                  7M
    add / double            117M, 2I   / 129M, 2I

These counts are exact and input-independent: no step skips a
multiplication because an operand happens to be 0 or 1.
"""

from __future__ import annotations

from typing import NamedTuple

from .curve import Curve
from .divisor import DivisorRep, div_eq
from .errors import Atypical, IdentityResult, SameDivisor
from .field import FieldCtx, OpCount
from .reduction import GHI, ty_apply, y_reduce_direct

Row5 = tuple[int, int, int, int, int]
Mat3x5 = tuple[Row5, Row5, Row5]


class KernelBasis(NamedTuple):
    """v1 = (alpha, beta, gamma, 1, 0) and v2 = (delta, eps, zeta, 0, 1)."""
    alpha: int
    beta: int
    gamma: int
    delta: int
    eps: int
    zeta: int

    @property
    def v1(self) -> tuple[int, ...]:
        return (self.alpha, self.beta, self.gamma, 1, 0)

    @property
    def v2(self) -> tuple[int, ...]:
        return (self.delta, self.eps, self.zeta, 0, 1)


class STPair(NamedTuple):
    """s = x^3 + s1*y^2 + s2*xy + s3*x^2 + s4*y + s5*x + s6,
    t = x^2y + t1*y^2 + t2*xy + t3*x^2 + t4*y + t5*x + t6."""
    s: tuple[int, int, int, int, int, int]
    t: tuple[int, int, int, int, int, int]


class NegationResult(NamedTuple):
    """G''' = xy + d3*y + e3*x + f3 and, if requested,
    H = -y^2 + a*x^2 + hy*y + hx*x + h0.

    ``la`` (= l * a^{-1}) and ``ab`` (= a*b) are exposed for reuse by doubling.
    """
    d3: int
    e3: int
    f3: int
    h: tuple[int, int, int] | None
    la: int
    ab: int


def columns(M: Mat3x5) -> list[tuple[int, int, int]]:
    return [tuple(row[k] for row in M) for k in range(5)]


def from_columns(cols) -> Mat3x5:
    return tuple(tuple(col[r] for col in cols) for r in range(3))


def strassen2(mul, p, A, B):
    """2x2 by 2x2 product with 7 multiplications."""
    (a11, a12), (a21, a22) = A
    (b11, b12), (b21, b22) = B
    m1 = mul(a11 + a22, b11 + b22)
    m2 = mul(a21 + a22, b11)
    m3 = mul(a11, b12 - b22)
    m4 = mul(a22, b21 - b11)
    m5 = mul(a11 + a12, b22)
    m6 = mul(a21 - a11, b11 + b12)
    m7 = mul(a12 - a22, b21 + b22)
    return (
        ((m1 + m4 - m5 + m7) % p, (m3 + m5) % p),
        ((m2 + m4) % p, (m1 - m2 + m3 + m6) % p),
    )


def tx_pair(ctx: FieldCtx, D: DivisorRep, U, V):
    """(T_x U, T_x V) for two value vectors at D. 11M.

    The first column of T_x is a unit vector, so only the 3x2 block
    [[-c, -f], [-b, -e], [-a, -d]] times [[U1, V1], [U2, V2]] costs anything:
    Strassen on its top 2x2 (7M) and the last row directly (4M).
    """
    mul, p = ctx.mul, ctx.p
    (top1, top2) = strassen2(mul, p, ((D.c, D.f), (D.b, D.e)), ((U[1], V[1]), (U[2], V[2])))
    xu = (-top1[0] % p, (U[0] - top2[0]) % p, (-mul(D.a, U[1]) - mul(D.d, U[2])) % p)
    xv = (-top1[1] % p, (V[0] - top2[1]) % p, (-mul(D.a, V[1]) - mul(D.d, V[2])) % p)
    return xu, xv


def build_m_add(ctx: FieldCtx, D: DivisorRep, D2: DivisorRep) -> Mat3x5:
    """Values at D of F', xF', yF', G', xG' where (F', G') = D2. 22M."""
    if div_eq(D, D2):
        raise SameDivisor()
    p = ctx.p
    bf = ((D2.c - D.c) % p, (D2.b - D.b) % p, (D2.a - D.a) % p)
    bg = ((D2.f - D.f) % p, (D2.e - D.e) % p, (D2.d - D.d) % p)
    if bf == (0, 0, 0):
        raise IdentityResult("build_m_add", "F' = F: operands are negatives or share a point")
    bxf, bxg = tx_pair(ctx, D, bf, bg)
    byf = y_reduce_direct(ctx, D, bf)
    return from_columns([bf, bxf, byf, bg, bxg])


def negate_with_h(ctx: FieldCtx, curve: Curve, D: DivisorRep, want_h: bool) -> NegationResult:
    """Coefficients of G''' (7M), and of H with G*G''' + F*H = 0 as well (10M)."""
    mul, p = ctx.mul, ctx.p
    a, b, c, d, e, f = D.coeffs
    d_b = d - b
    m = e + mul(a, a + curve.p2)
    ell = c + mul(d_b, d)
    la = mul(ell, D.a_inv)
    ab = mul(a, b)
    d3 = -d_b % p
    e3 = -(la + m) % p
    f3 = (mul(m, d) + mul(la + e, d_b) + mul(a, ab - curve.p1) - f) % p
    h = None
    if want_h:
        h0 = (mul(la + m, e) + mul(a, mul(b, b) - c - curve.q2)) % p
        h = (la % p, -ab % p, h0)
    return NegationResult(d3, e3, f3, h, la % p, ab % p)


def negate(ctx: FieldCtx, curve: Curve, D: DivisorRep) -> DivisorRep:
    """-D. F and a^{-1} carry over unchanged. 7M."""
    r = negate_with_h(ctx, curve, D, want_h=False)
    return DivisorRep(D.a, D.b, D.c, r.d3, r.e3, r.f3, D.a_inv)


def build_m_double(ctx: FieldCtx, curve: Curve, D: DivisorRep) -> Mat3x5:
    """Values at D of dF, d(xF), d(yF), dG, d(xG) in units of a generator w
    chosen so that dF = G1*w and dG = -H1*w, where F*H1 + G*G1 = 0. 34M."""
    mul, p = ctx.mul, ctx.p
    a, b, c, d, e, f = D.coeffs
    neg = negate_with_h(ctx, curve, D, want_h=True)                     # 10M
    # the rest of T_y; la = a^{-1}(c + d(d - b)) is already known         5M
    g = (neg.la + e) % p
    h = mul(D.a_inv, mul(e, d) - f)
    i = mul(D.a_inv, mul(e, c) + mul(f, d - b))
    ghi = GHI(g, h, i)
    # G1 - G lies in span{1, x, y}
    bg1 = ((neg.f3 - f) % p, (neg.e3 - e) % p, (neg.d3 - d) % p)
    # H1 + (y^2 + g*y + h*x + i) - a*F lies in span{1, x, y}              2M
    hy, hx, h0 = neg.h
    bh1 = ((h0 + i - mul(a, c)) % p, (hx + h - neg.ab) % p, (hy + g - mul(a, a)) % p)
    bmh1 = tuple(-v % p for v in bh1)
    bxg1, bmxh1 = tx_pair(ctx, D, bg1, bmh1)                           # 11M
    byg1 = ty_apply(ctx, D, ghi, bg1)                                   # 6M
    return from_columns([bg1, bxg1, byg1, bmh1, bmxh1])


def permute_m(M: Mat3x5) -> Mat3x5:
    """Columns (K1, K2, K3, K4, K5) -> (K1, K4, K3 - K5, K2, K5)."""
    return tuple((r[0], r[3], r[2] - r[4], r[1], r[4]) for r in M)


def kernel_m(ctx: FieldCtx, M: Mat3x5) -> KernelBasis:
    """Kernel of the column-permuted matrix, normalised to v1 = (., ., ., 1, 0)
    and v2 = (., ., ., 0, 1). 39M, 1I."""
    mul, p = ctx.mul, ctx.p
    (A1, B1, C1, D1, E1), (A2, B2, C2, D2, E2), (A3, B3, C3, D3, E3) = permute_m(M)
    if A1 % p == 0:
        raise Atypical("kernel_m", "A1")
    # echelon form: R2' = A1 R2 - A2 R1, R3' = d12 R3 - d13 R2 + d23 R1      21M
    d12 = mul(A1, B2) - mul(A2, B1)
    d13 = mul(A1, B3) - mul(A3, B1)
    d23 = mul(A2, B3) - mul(A3, B2)
    sg1 = mul(A1, C2) - mul(A2, C1)
    sg2 = mul(A1, D2) - mul(A2, D1)
    sg3 = mul(A1, E2) - mul(A2, E1)
    U = (mul(d12, C3) - mul(d13, C2) + mul(d23, C1)) % p
    sg4 = mul(d12, D3) - mul(d13, D2) + mul(d23, D1)
    sg5 = mul(d12, E3) - mul(d13, E2) + mul(d23, E1)
    if d12 % p == 0:
        raise Atypical("kernel_m", "D")
    if U == 0:
        raise Atypical("kernel_m", "U")
    # three inverses from one                                              6M, 1I
    q1 = mul(A1, d12)
    q3 = ctx.inv(mul(q1, U))
    u_inv = mul(q1, q3)
    q4 = mul(U, q3)
    d_inv = mul(A1, q4)
    a1_inv = mul(d12, q4)
    # back substitution, gamma/beta/alpha then zeta/eps/delta              12M
    gamma = -mul(sg4, u_inv) % p
    beta = -mul(mul(sg1, gamma) + sg2, d_inv) % p
    alpha = -mul(mul(B1, beta) + mul(C1, gamma) + D1, a1_inv) % p
    zeta = -mul(sg5, u_inv) % p
    eps = -mul(mul(sg1, zeta) + sg3, d_inv) % p
    delta = -mul(mul(B1, eps) + mul(C1, zeta) + E1, a1_inv) % p
    return KernelBasis(alpha, beta, gamma, delta, eps, zeta)


def form_st(ctx: FieldCtx, D2: DivisorRep, K: KernelBasis) -> STPair:
    """s = (alpha + gamma*y)F' + (beta - gamma*x)G' + xF' and
    t = (delta + zeta*y)F' + (eps - zeta*x)G' + xG', expanded. 18M."""
    mul, p = ctx.mul, ctx.p
    a, b, c, d, e, f = D2.coeffs
    b_d = b - d
    a_c = a + c
    e_f = e + f

    def expand(u, v, w):
        # (u + w*y)(a*y + c) and (v - w*x)(e*x + f) by Karatsuba, 3M each
        uc, wa = mul(u, c), mul(w, a)
        ua_wc = mul(u + w, a_c) - uc - wa
        vf, we = mul(v, f), mul(w, e)
        ve_wf = mul(v - w, e_f) - vf + we
        # the remaining cross terms, 3M
        wbd, ub, vd = mul(w, b_d), mul(u, b), mul(v, d)
        return wa, wbd, we, ua_wc + vd, ub + ve_wf, uc + vf

    wa, wbd, we, y1, x1, k1 = expand(K.alpha, K.beta, K.gamma)
    s = (wa % p, (K.beta + a + wbd) % p, (K.alpha - we + b) % p, y1 % p, (x1 + c) % p, k1 % p)
    wa, wbd, we, y1, x1, k1 = expand(K.delta, K.eps, K.zeta)
    t = (wa % p, (K.eps + d + wbd) % p, (K.delta - we + e) % p, y1 % p, (x1 + f) % p, k1 % p)
    return STPair(s, t)


def reduce_to_mpp(ctx: FieldCtx, curve: Curve, st: STPair) -> Mat3x5:
    """Images of t, xt, yt, x^2t, xyt in the quotient of the pole-order-17
    functions by s*(pole order 8) + (pole order 9), as a 3x5 matrix whose
    rows are the coordinates on x^2y, xy^2, x^2y^2. 20M."""
    mul, p = ctx.mul, ctx.p
    s1, s2, s3, s4, s5, s6 = st.s
    t1, t2, t3, t4, t5, t6 = st.t
    p2, p1, q2 = curve.p2, curve.p1, curve.q2
    sp = s2 + p2
    s4p1 = s4 + p1
    s3p2 = mul(s3, p2)                                                  # 1M
    P1 = mul(s1, sp)                                                    # 5M
    P2 = mul(s1, s1)
    P4 = mul(s1, s3)
    P5 = mul(s1, s5 + q2)
    P6 = mul(s1, s4p1)
    # C2 - D8
    al2 = t2 - s3 + P1
    be2 = (t1 - s2 + P2) % p
    # C3 - t1*C7                                                          2M
    al3 = t3 - mul(t1, sp)
    be3 = t2 - mul(t1, s1)
    # C4 - D10 = (m1, m2, m3, m4, m5, 0, 0, 0); one fused product          1M
    m1 = t4 - s5 + P6 + mul(t3 + P4, p2)
    m2 = -s4
    m3 = t3 + P4
    m4, m5 = al2, be2
    # C5 - D11 = (z1, ..., z6, 0, 0), then clear z6 with C9                4M
    z6 = be2
    l1 = t5 + P5 - mul(z6, s4p1 + s3p2)
    l2 = t4 - s5 + P6
    l3 = -s4 - mul(z6, s3)
    l4 = t3 + P4 - mul(z6, sp)
    l5 = t2 - s3 + P1 - mul(z6, s1)
    # subtract m3*C7 + m4*D8 and l3*C7 + l4*D8; only the top 2x2 costs    7M
    (q11, q12), (q21, q22) = strassen2(mul, p, ((sp, s3 - P1), (s1, s2 - P2)),
                                       ((m3, l3), (m4, l4)))
    return (
        (1, al2 % p, al3 % p, (m1 - q11) % p, (l1 - q12) % p),
        (0, be2, be3 % p, (m2 - q21) % p, (l2 - q22) % p),
        (0, 0, 1, m5, l5 % p),
    )


def solve_mpp(ctx: FieldCtx, Mpp: Mat3x5) -> DivisorRep:
    """Kernel of M'' as (c'', b'', a'', 1, 0) and (f'', e'', d'', 0, 1). 11M, 1I."""
    mul, p = ctx.mul, ctx.p
    (_, al2, al3, al4, al5), (_, be2, be3, be4, be5), (_, _, _, ga4, ga5) = Mpp
    if be2 % p == 0:
        raise Atypical("solve_mpp", "beta2")
    if ga4 % p == 0:
        raise Atypical("solve_mpp", "gamma4", "a'' would vanish")
    w = ctx.inv(mul(be2, ga4))                                          # 3M, 1I
    be2_inv = mul(w, ga4)
    ga4_inv = mul(w, be2)
    a = -ga4 % p                                                        # 8M
    b = -mul(mul(be3, a) + be4, be2_inv) % p
    c = -(mul(al2, b) + mul(al3, a) + al4) % p
    d = -ga5 % p
    e = -mul(mul(be3, d) + be5, be2_inv) % p
    f = -(mul(al2, e) + mul(al3, d) + al5) % p
    return DivisorRep(a, b, c, d, e, f, -ga4_inv % p)


def _stage(trace, name, ctx, before):
    if trace is not None:
        trace[name] = ctx.counter_read() - before


def addflip(ctx: FieldCtx, curve: Curve, D: DivisorRep, D2: DivisorRep,
            trace: dict | None = None, intermediates: dict | None = None) -> DivisorRep:
    """-(D + D2). 110M, 2I for distinct operands; 122M, 2I when equal.

    ``trace`` (if given) receives the OpCount of each stage; ``intermediates``
    receives M, the kernel basis, s/t and M''.
    """
    before = ctx.counter_read()
    if div_eq(D, D2):
        M = build_m_double(ctx, curve, D)
        _stage(trace, "build_m_double", ctx, before)
    else:
        M = build_m_add(ctx, D, D2)
        _stage(trace, "build_m_add", ctx, before)
    mark = ctx.counter_read()
    K = kernel_m(ctx, M)
    _stage(trace, "kernel_m", ctx, mark)
    mark = ctx.counter_read()
    st = form_st(ctx, D2, K)
    _stage(trace, "form_st", ctx, mark)
    mark = ctx.counter_read()
    Mpp = reduce_to_mpp(ctx, curve, st)
    _stage(trace, "reduce_to_mpp", ctx, mark)
    mark = ctx.counter_read()
    out = solve_mpp(ctx, Mpp)
    _stage(trace, "solve_mpp", ctx, mark)
    if intermediates is not None:
        intermediates.update(M=M, K=K, st=st, Mpp=Mpp)
    return out


def add(ctx: FieldCtx, curve: Curve, D: DivisorRep, D2: DivisorRep,
        trace: dict | None = None) -> DivisorRep:
    """D + D2 for distinct representations. 117M, 2I."""
    if div_eq(D, D2):
        raise SameDivisor("add")
    r = addflip(ctx, curve, D, D2, trace)
    mark = ctx.counter_read()
    out = negate(ctx, curve, r)
    _stage(trace, "negate", ctx, mark)
    return out


def double(ctx: FieldCtx, curve: Curve, D: DivisorRep, trace: dict | None = None) -> DivisorRep:
    """2D. 129M, 2I."""
    r = addflip(ctx, curve, D, D, trace)
    mark = ctx.counter_read()
    out = negate(ctx, curve, r)
    _stage(trace, "negate", ctx, mark)
    return out


def negabinary(m: int) -> list[int]:
    """Base -2 digits of m, least significant first; [] for 0."""
    digits = []
    while m:
        d = m & 1
        digits.append(d)
        m = (m - d) // -2
    return digits


def scalar_mul(ctx: FieldCtx, curve: Curve, m: int, D: DivisorRep) -> DivisorRep:
    """m*D by Horner over the base -2 digits of m, using addflip.

    A 0 digit maps acc to addflip(acc, acc) = -2*acc. A 1 digit maps acc to
    -2*acc + D, computed as addflip(acc, -(addflip(acc, -D))).
    """
    if m == 0:
        raise IdentityResult("scalar_mul", "0 * D is the zero class")
    digits = negabinary(m)
    nu = negate(ctx, curve, D)
    acc = D
    for digit in reversed(digits[:-1]):
        if digit == 0:
            acc = addflip(ctx, curve, acc, acc)
        elif div_eq(acc, D):
            # -2*D + D = -D; the general route would pass through the zero class
            acc = nu
        else:
            acc = addflip(ctx, curve, acc, negate(ctx, curve, addflip(ctx, curve, acc, nu)))
    return acc


def scalar_mul_double_add(ctx: FieldCtx, curve: Curve, m: int, D: DivisorRep) -> DivisorRep:
    """m*D by left-to-right binary double-and-add with full add/double."""
    if m == 0:
        raise IdentityResult("scalar_mul_double_add", "0 * D is the zero class")
    base = D if m > 0 else negate(ctx, curve, D)
    acc = base
    for bit in bin(abs(m))[3:]:
        acc = double(ctx, curve, acc)
        if bit == "1":
            acc = add(ctx, curve, acc, base) if not div_eq(acc, base) else double(ctx, curve, acc)
    return acc


class Jacobian:
    """Convenience wrapper binding a curve and a counting context."""

    def __init__(self, curve: Curve, ctx: FieldCtx | None = None):
        self.curve = curve
        self.ctx = ctx if ctx is not None else curve.ctx

    def add(self, D, D2):
        return add(self.ctx, self.curve, D, D2)

    def double(self, D):
        return double(self.ctx, self.curve, D)

    def addflip(self, D, D2):
        return addflip(self.ctx, self.curve, D, D2)

    def negate(self, D):
        return negate(self.ctx, self.curve, D)

    def smul(self, m, D):
        return scalar_mul(self.ctx, self.curve, m, D)

    def counted(self, fn, *args) -> tuple[object, OpCount]:
        """Run ``fn`` (a method name or callable) and return (result, op count delta)."""
        f = getattr(self, fn) if isinstance(fn, str) else fn
        before = self.ctx.counter_read()
        out = f(*args)
        return out, self.ctx.counter_read() - before
