"""Typical degree-3 divisors, stored as the pair

    F = x^2 + a*y + b*x + c,     G = x*y + d*y + e*x + f

that spans the functions of pole order <= 7 vanishing on the divisor, plus
the cached inverse of ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curve import Curve, eval_f
from .errors import Atypical, DuplicatePointsUnsupported, Exhausted, InvalidDivisor
from .poly import CurvePoly


@dataclass(frozen=True)
class DivisorRep:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    a_inv: int = field(compare=False, repr=False)

    @property
    def coeffs(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.coeffs)


def make_divisor(p: int, a: int, b: int, c: int, d: int, e: int, f: int) -> DivisorRep:
    """Build a DivisorRep, computing a^{-1} outside any counter."""
    a %= p
    if a == 0:
        raise Atypical("make_divisor", "a")
    return DivisorRep(a, b % p, c % p, d % p, e % p, f % p, pow(a, -1, p))


def div_eq(D1: DivisorRep, D2: DivisorRep) -> bool:
    return D1.coeffs == D2.coeffs


def to_polys(p: int, D: DivisorRep) -> tuple[CurvePoly, CurvePoly]:
    F = CurvePoly(p, {(2, 0): 1, (0, 1): D.a, (1, 0): D.b, (0, 0): D.c})
    G = CurvePoly(p, {(1, 1): 1, (0, 1): D.d, (1, 0): D.e, (0, 0): D.f})
    return F, G


def _det3(m, p):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])) % p


def _cramer(m, rhs, p, det_inv):
    out = []
    for k in range(3):
        mk = [[rhs[r] if col == k else m[r][col] for col in range(3)] for r in range(3)]
        out.append(_det3(mk, p) * det_inv % p)
    return out


def from_points(curve: Curve, P1, P2, P3) -> DivisorRep:
    """The representation of P1 + P2 + P3 for three distinct affine points."""
    p = curve.p
    pts = [(x % p, y % p) for x, y in (P1, P2, P3)]
    for pt in pts:
        if eval_f(curve, pt):
            raise ValueError(f"{pt} is not on the curve")
    if len(set(pts)) < 3:
        raise DuplicatePointsUnsupported("repeated points need tangency conditions")
    # solve [1 x y] (c, b, a)^T = -x^2 and [1 x y] (f, e, d)^T = -x*y
    m = [[1, x, y] for x, y in pts]
    det = _det3(m, p)
    if det == 0:
        raise Atypical("from_points", "det", "points lie on a line")
    det_inv = pow(det, -1, p)
    c, b, a = _cramer(m, [-x * x for x, _ in pts], p, det_inv)
    f, e, d = _cramer(m, [-x * y for x, y in pts], p, det_inv)
    return make_divisor(p, a, b, c, d, e, f)


def random_typical(curve: Curve, rng, retries: int = 100) -> DivisorRep:
    """A divisor built from three distinct random rational points."""
    from .curve import random_point

    for _ in range(retries):
        pts = {random_point(curve, rng) for _ in range(3)}
        if len(pts) < 3:
            continue
        try:
            return from_points(curve, *sorted(pts))
        except Atypical:
            continue
    raise Exhausted(f"no typical divisor after {retries} attempts")


def random_typical_with_points(curve: Curve, rng, retries: int = 100):
    """Like :func:`random_typical` but also returns the three points."""
    from .curve import random_point

    for _ in range(retries):
        pts = sorted({random_point(curve, rng) for _ in range(3)})
        if len(pts) < 3:
            continue
        try:
            return from_points(curve, *pts), pts
        except Atypical:
            continue
    raise Exhausted(f"no typical divisor after {retries} attempts")


def mult_matrices(p: int, D: DivisorRep):
    """(T_x, T_y): multiplication by x and y on span{1, x, y} modulo <F, G>, raw arithmetic."""
    a, b, c, d, e, f = D.coeffs
    ai = D.a_inv
    g = (ai * (c + d * (d - b)) + e) % p
    h = ai * (e * d - f) % p
    i = ai * (e * c + f * (d - b)) % p
    tx = [[0, -c % p, -f % p], [1, -b % p, -e % p], [0, -a % p, -d % p]]
    ty = [[0, -f % p, -i % p], [0, -e % p, -h % p], [1, -d % p, -g % p]]
    return tx, ty


def validate(curve: Curve, D: DivisorRep) -> None:
    """Raise InvalidDivisor unless (F, G) cuts out a degree-3 divisor on the curve.

    With a != 0 the quotient by <F, G> is spanned by 1, x, y; it is exactly
    3-dimensional iff the multiplication matrices commute and satisfy f.
    """
    from .linalg import identity, matmul

    p = curve.p
    if D.a % p == 0 or D.a * D.a_inv % p != 1:
        raise InvalidDivisor("a must be nonzero with a * a_inv = 1")
    tx, ty = mult_matrices(p, D)
    if matmul(tx, ty, p) != matmul(ty, tx, p):
        raise InvalidDivisor("multiplication by x and y do not commute")
    tx2 = matmul(tx, tx, p)
    ty2 = matmul(ty, ty, p)
    terms = [
        (1, matmul(ty2, ty, p)), (-1, matmul(tx2, tx2, p)), (curve.p2, matmul(tx2, ty, p)),
        (curve.p1, matmul(tx, ty, p)), (curve.p0, ty), (curve.q2, tx2), (curve.q1, tx),
        (curve.q0, identity(3)),
    ]
    total = [[sum(k * m[r][s] for k, m in terms) % p for s in range(3)] for r in range(3)]
    if any(any(row) for row in total):
        raise InvalidDivisor("f(T_x, T_y) != 0: not a divisor on this curve")


def parse_divisor(text: str, p: int) -> DivisorRep:
    parts = [s.strip() for s in text.strip().split(",")]
    if len(parts) != 6:
        raise ValueError(f"expected 'a,b,c,d,e,f', got {text!r}")
    return make_divisor(p, *(int(s) for s in parts))


def format_divisor(D: DivisorRep) -> str:
    return str(D)
