"""The 3-dimensional algebra of values at a divisor D = (F, G).

An element alpha*1 + beta*x + gamma*y of R/<F, G> is stored as the tuple
``(alpha, beta, gamma)``. Multiplying by x and y acts through

    T_x = [[0, -c, -f],        T_y = [[0, -f, -i],
           [1, -b, -e],               [0, -e, -h],
           [0, -a, -d]]               [1, -d, -g]]

with g, h, i from :func:`compute_ghi`. Each routine runs a fixed schedule
of counted multiplications regardless of the operand values.
"""

from __future__ import annotations

from typing import NamedTuple

from .divisor import DivisorRep
from .field import FieldCtx

BVec = tuple[int, int, int]


class GHI(NamedTuple):
    g: int
    h: int
    i: int


def compute_ghi(ctx: FieldCtx, D: DivisorRep) -> GHI:
    """y^2 = -g*y - h*x - i modulo <F, G>. 7M."""
    mul, p = ctx.mul, ctx.p
    a_inv, b, c, d, e, f = D.a_inv, D.b, D.c, D.d, D.e, D.f
    d_b = d - b
    g = (mul(a_inv, c + mul(d, d_b)) + e) % p
    h = mul(a_inv, mul(e, d) - f)
    i = mul(a_inv, mul(e, c) + mul(f, d_b))
    return GHI(g, h, i)


def tx_apply(ctx: FieldCtx, D: DivisorRep, B: BVec) -> BVec:
    """T_x @ B. 6M."""
    mul, p = ctx.mul, ctx.p
    al, be, ga = B
    return (
        (-mul(D.c, be) - mul(D.f, ga)) % p,
        (al - mul(D.b, be) - mul(D.e, ga)) % p,
        (-mul(D.a, be) - mul(D.d, ga)) % p,
    )


def ty_apply(ctx: FieldCtx, D: DivisorRep, ghi: GHI, B: BVec) -> BVec:
    """T_y @ B. 6M."""
    mul, p = ctx.mul, ctx.p
    al, be, ga = B
    return (
        (-mul(D.f, be) - mul(ghi.i, ga)) % p,
        (-mul(D.e, be) - mul(ghi.h, ga)) % p,
        (al - mul(D.d, be) - mul(ghi.g, ga)) % p,
    )


def y_reduce_direct(ctx: FieldCtx, D: DivisorRep, B: BVec) -> BVec:
    """B_{yu} from B_u without forming T_y. 11M.

    y*u = alpha*y + beta*xy + gamma*y^2 is first shifted by
    gamma*a^{-1}*(yF - xG), which kills y^2, leaving
    delta*x + eps*y + zeta*x^2 + eta*xy; then zeta*F + eta*G is removed.
    """
    mul, p = ctx.mul, ctx.p
    al, be, ga = B
    a, b, c, d, e, f = D.coeffs
    k = mul(ga, D.a_inv)
    delta = mul(k, f)
    eps = al - mul(k, c)
    zeta = mul(k, e)
    eta = be - mul(k, b - d)
    return (
        (-mul(zeta, c) - mul(eta, f)) % p,
        (delta - mul(zeta, b) - mul(eta, e)) % p,
        (eps - mul(zeta, a) - mul(eta, d)) % p,
    )
