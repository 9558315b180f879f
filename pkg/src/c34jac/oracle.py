"""Slow reference computations that share no formula code with the fast path.

Everything is phrased as linear algebra on coefficient vectors over the
monomial bases of :mod:`c34jac.poly`, solved by plain Gaussian elimination:

* reduction modulo <F, G> is a normal form against an echelonised spanning
  set of the ideal, not the multiplication matrices;
* the sum space for two distinct divisors is the common kernel of both
  residue maps on the pole-order-10 functions;
* for doubling, L must vanish at D together with its differential
  dL = (L_x f_y - L_y f_x) w0;
* the second step solves t*l in s*(pole order 8) on the full 15x11 matrix.
"""

from __future__ import annotations

from functools import lru_cache

from .curve import Curve, enumerate_points
from .divisor import DivisorRep, make_divisor, to_polys
from .errors import Atypical, NotSplit
from .linalg import nullspace, rank, rref
from .poly import (CurvePoly, MonomialBasis, diff_x, diff_y, eval_poly, formal_partials,
                   from_vector, poly_mul, weight)

STAGE = "oracle"


def _mono(p, i, j):
    return CurvePoly(p, {(i, j): 1})


# Generators F*m, G*m' only fill the ideal below pole order N once top
# terms are allowed to cancel (e.g. yF - xG has pole order 8), so work at a
# fixed order comfortably above anything reduced here.
ECHELON_ORDER = 21


@lru_cache(maxsize=4096)
def _ideal_echelon(curve: Curve, coeffs: tuple[int, ...]):
    """Echelon rows of <F, G> up to pole order ECHELON_ORDER, pivoting on the
    highest monomials; the non-pivot monomials must be exactly 1, x, y."""
    p = curve.p
    N = ECHELON_ORDER
    D = make_divisor(p, *coeffs)
    F, G = to_polys(p, D)
    basis = MonomialBasis(N)
    gens = [poly_mul(curve, _mono(p, *m), F) for m in MonomialBasis(N - 6)]
    gens += [poly_mul(curve, _mono(p, *m), G) for m in MonomialBasis(N - 7)]
    rows = [g.vector(basis) for g in gens]
    order = sorted(range(len(basis)), key=lambda k: -weight(basis.monomials[k]))
    R, pivots = rref(rows, p, order)
    free = sorted(set(range(len(basis))) - set(pivots))
    if [basis.monomials[k] for k in free] != [(0, 0), (1, 0), (0, 1)]:
        raise Atypical(STAGE, "residue basis", "quotient not spanned by 1, x, y")
    return basis, R[:len(pivots)], pivots


def residue(curve: Curve, D: DivisorRep, P: CurvePoly) -> tuple[int, int, int]:
    """(alpha, beta, gamma) with P = alpha + beta*x + gamma*y modulo <F, G>."""
    basis, rows, pivots = _ideal_echelon(curve, D.coeffs)
    v = P.vector(basis)
    p = curve.p
    for row, pc in zip(rows, pivots):
        k = v[pc]
        if k:
            v = [(a - k * b) % p for a, b in zip(v, row)]
    return v[0], v[1], v[2]


def differential(curve: Curve, L: CurvePoly) -> CurvePoly:
    """L_x f_y - L_y f_x: the coefficient of dL against the form w0 with dx = f_y w0."""
    fx, fy = formal_partials(curve)
    return poly_mul(curve, diff_x(L), fy) - poly_mul(curve, diff_y(L), fx)


def residue_matrix(curve: Curve, D: DivisorRep, polys) -> list[list[int]]:
    """3 x len(polys) matrix of residues modulo <F, G>."""
    cols = [residue(curve, D, P) for P in polys]
    return [[col[r] for col in cols] for r in range(3)]


def m_double_reference(curve: Curve, D: DivisorRep) -> list[list[int]]:
    """Residues of the differentials of F, xF, yF, G, xG (in units of w0)."""
    p = curve.p
    F, G = to_polys(p, D)
    x, y = _mono(p, 1, 0), _mono(p, 0, 1)
    gens = [F, poly_mul(curve, x, F), poly_mul(curve, y, F), G, poly_mul(curve, x, G)]
    return residue_matrix(curve, D, [differential(curve, L) for L in gens])


def _monic_pair(p, vectors, basis, lead1, lead2, what):
    """Normalise a 2-dim space: row 1 has lead1 = 1, lead2 = 0; row 2 the reverse."""
    i1, i2 = basis.index[lead1], basis.index[lead2]
    order = [i1, i2] + [k for k in range(len(basis)) if k not in (i1, i2)]
    R, pivots = rref(vectors, p, order)
    if pivots != [i1, i2]:
        raise Atypical(STAGE, what, "space does not have the monic shape")
    return R[0], R[1]


def sum_space(curve: Curve, D: DivisorRep, D2: DivisorRep) -> tuple[CurvePoly, CurvePoly]:
    """(s, t): monic basis of the pole-order-10 functions vanishing on D + D2."""
    p = curve.p
    W10 = MonomialBasis(10)
    monos = [_mono(p, *m) for m in W10]
    conditions = residue_matrix(curve, D, monos)
    if D.coeffs == D2.coeffs:
        conditions += residue_matrix(curve, D, [differential(curve, L) for L in monos])
    else:
        conditions += residue_matrix(curve, D2, monos)
    kernel = nullspace(conditions, p, len(W10))
    if len(kernel) != 2:
        raise Atypical(STAGE, "sum space", f"dimension {len(kernel)} instead of 2")
    s_vec, t_vec = _monic_pair(p, kernel, W10, (3, 0), (2, 1), "s/t")
    return from_vector(p, W10, s_vec), from_vector(p, W10, t_vec)


def st_coeffs(s: CurvePoly, t: CurvePoly):
    """Coefficient tuples on (y^2, xy, x^2, y, x, 1), matching jacobian.STPair."""
    order = [(0, 2), (1, 1), (2, 0), (0, 1), (1, 0), (0, 0)]
    return tuple(s[m] for m in order), tuple(t[m] for m in order)


def _quotient(curve: Curve, num: CurvePoly, den: CurvePoly, top: int, what: str):
    """Basis (F, G) of {l in pole order 7 : num * l in den * (pole order top)}."""
    p = curve.p
    W7 = MonomialBasis(7)
    Wt = MonomialBasis(top)
    left = [poly_mul(curve, _mono(p, *m), num) for m in W7]
    right = [poly_mul(curve, _mono(p, *m), den) for m in Wt]
    N = max(P.pole_order() for P in left + right)
    big = MonomialBasis(N)
    cols = [P.vector(big) for P in left] + [(-P).vector(big) for P in right]
    matrix = [list(r) for r in zip(*cols)]
    kernel = nullspace(matrix, p, len(cols))
    ells = [v[:len(W7)] for v in kernel]
    if not ells or rank(ells, p) != 2:
        raise Atypical(STAGE, what, f"solution space has dimension {len(ells)}")
    F_vec, G_vec = _monic_pair(p, ells, W7, (2, 0), (1, 1), what)
    F = from_vector(p, W7, F_vec)
    G = from_vector(p, W7, G_vec)
    if F[(0, 1)] == 0:
        raise Atypical(STAGE, "a", what)
    return make_divisor(p, F[(0, 1)], F[(1, 0)], F[(0, 0)], G[(0, 1)], G[(1, 0)], G[(0, 0)])


def generic_addflip(curve: Curve, D: DivisorRep, D2: DivisorRep,
                    intermediates: dict | None = None) -> DivisorRep:
    """-(D + D2) by plain linear algebra; no op counting, no shared formulas."""
    s, t = sum_space(curve, D, D2)
    if intermediates is not None:
        intermediates.update(s=s, t=t)
    # {l : t*l in s*W^8}, on the full 15 x 11 system
    return _quotient(curve, t, s, 8, "second step")


def generic_negate(curve: Curve, D: DivisorRep) -> DivisorRep:
    """{l : G*l in F*W^8} normalised; its F coincides with D's."""
    F, G = to_polys(curve.p, D)
    return _quotient(curve, G, F, 8, "negation")


def generic_add(curve: Curve, D: DivisorRep, D2: DivisorRep) -> DivisorRep:
    return generic_negate(curve, generic_addflip(curve, D, D2))


def repeated_add(curve: Curve, m: int, D: DivisorRep) -> DivisorRep:
    """m*D as D + D + ... + D (|m| terms), negated for m < 0."""
    if m == 0:
        raise ValueError("0*D is the zero class")
    acc = D
    for _ in range(abs(m) - 1):
        acc = generic_add(curve, acc, D)
    return acc if m > 0 else generic_negate(curve, acc)


def dim_wnd(curve: Curve, points, N: int) -> int:
    """dim of {pole order <= N functions vanishing at the given distinct points}."""
    basis = MonomialBasis(N)
    p = curve.p
    rows = [[pow(x, i, p) * pow(y, j, p) % p for i, j in basis] for x, y in points]
    return len(basis) - rank(rows, p)


def residual_points(curve: Curve, s, D_points, D2_points):
    """Zeros of s on C(F_p) other than the points of D and D2, when there are
    exactly three of them; NotSplit otherwise."""
    if not isinstance(s, CurvePoly):
        s = s_poly(curve.p, s)
    known = set(map(tuple, D_points)) | set(map(tuple, D2_points))
    zeros = [pt for pt in enumerate_points(curve) if eval_poly(s, pt) == 0]
    rest = sorted(pt for pt in zeros if tuple(pt) not in known)
    if len(rest) != 3:
        raise NotSplit(f"{len(rest)} residual rational zeros")
    return rest


def s_poly(p: int, s_coeffs) -> CurvePoly:
    s1, s2, s3, s4, s5, s6 = s_coeffs
    return CurvePoly(p, {(3, 0): 1, (0, 2): s1, (1, 1): s2, (2, 0): s3, (0, 1): s4,
                         (1, 0): s5, (0, 0): s6})


def t_poly(p: int, t_coeffs) -> CurvePoly:
    t1, t2, t3, t4, t5, t6 = t_coeffs
    return CurvePoly(p, {(2, 1): 1, (0, 2): t1, (1, 1): t2, (2, 0): t3, (0, 1): t4,
                         (1, 0): t5, (0, 0): t6})
