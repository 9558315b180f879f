"""Functions on the curve as polynomials in x and y.

A :class:`CurvePoly` stores coefficients of monomials ``x^i y^j`` with
``i <= 3``; the curve equation rewrites every ``x^4`` as

    y^3 + p2*x^2*y + p1*x*y + p0*y + q2*x^2 + q1*x + q0.

With that convention each monomial has a distinct pole order ``3i + 4j`` at
infinity, so the space of functions with pole order at most N has the basis
:func:`monomial_basis` (N). All arithmetic is raw ``% p``; nothing here is
counted and nothing here is used by the fast group law.
"""

from __future__ import annotations

from typing import Iterable, Mapping

Monomial = tuple[int, int]


def weight(mono: Monomial) -> int:
    """Pole order of x^i y^j at the point at infinity."""
    i, j = mono
    return 3 * i + 4 * j


def monomial_basis(N: int) -> list[Monomial]:
    """Reduced monomials of pole order <= N, sorted by pole order."""
    monos = [(i, j) for i in range(4) for j in range(N // 4 + 1) if 3 * i + 4 * j <= N]
    return sorted(monos, key=weight)


class MonomialBasis:
    def __init__(self, N: int):
        self.N = N
        self.monomials = monomial_basis(N)
        self.index = {m: k for k, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __repr__(self) -> str:
        return f"MonomialBasis(N={self.N}, dim={len(self)})"


def basis_dim(N: int) -> int:
    """dim of the pole-order-<=N space, from the closed form rather than enumeration."""
    if N < 0:
        return 0
    if N <= 2:
        return 1
    if N == 3:
        return 2
    if N <= 5:
        return 3
    return N - 2


class CurvePoly:
    """An element of F_p[x, y]/(f) in reduced form (no x^4 or higher)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Mapping[Monomial, int] | None = None):
        self.p = p
        self.coeffs = {}
        for mono, c in (coeffs or {}).items():
            c %= p
            if c:
                self.coeffs[mono] = c

    def __getitem__(self, mono: Monomial) -> int:
        return self.coeffs.get(mono, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, CurvePoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def pole_order(self) -> int:
        """Pole order at infinity; -1 for the zero function."""
        return max((weight(m) for m in self.coeffs), default=-1)

    def __add__(self, other: CurvePoly) -> CurvePoly:
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return CurvePoly(self.p, out)

    def __neg__(self) -> CurvePoly:
        return CurvePoly(self.p, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other: CurvePoly) -> CurvePoly:
        return self + (-other)

    def scale(self, k: int) -> CurvePoly:
        return CurvePoly(self.p, {m: k * c for m, c in self.coeffs.items()})

    def vector(self, basis: MonomialBasis) -> list[int]:
        extra = set(self.coeffs) - set(basis.index)
        if extra:
            raise ValueError(f"monomials {sorted(extra)} fall outside {basis!r}")
        return [self.coeffs.get(m, 0) for m in basis.monomials]

    def __repr__(self) -> str:
        return f"CurvePoly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def from_vector(p: int, basis: MonomialBasis, vec: Iterable[int]) -> CurvePoly:
    return CurvePoly(p, dict(zip(basis.monomials, vec)))


def reduce_mod_curve(curve, raw: Mapping[Monomial, int]) -> CurvePoly:
    """Rewrite x^i y^j with i >= 4 using the curve equation until none remain."""
    p = curve.p
    x4 = {(0, 3): 1, (2, 1): curve.p2, (1, 1): curve.p1, (0, 1): curve.p0,
          (2, 0): curve.q2, (1, 0): curve.q1, (0, 0): curve.q0}
    work = {m: c % p for m, c in raw.items() if c % p}
    while True:
        high = [m for m in work if m[0] >= 4]
        if not high:
            return CurvePoly(p, work)
        mono = max(high, key=weight)
        c = work.pop(mono)
        i, j = mono
        for (a, b), k in x4.items():
            key = (i - 4 + a, j + b)
            work[key] = (work.get(key, 0) + c * k) % p
            if not work[key]:
                del work[key]


def mono(curve, i: int, j: int, c: int = 1) -> CurvePoly:
    return reduce_mod_curve(curve, {(i, j): c})


def poly(curve, coeffs: Mapping[Monomial, int]) -> CurvePoly:
    return reduce_mod_curve(curve, coeffs)


def poly_mul(curve, A: CurvePoly, B: CurvePoly) -> CurvePoly:
    p = curve.p
    raw: dict[Monomial, int] = {}
    for (i1, j1), c1 in A.coeffs.items():
        for (i2, j2), c2 in B.coeffs.items():
            key = (i1 + i2, j1 + j2)
            raw[key] = (raw.get(key, 0) + c1 * c2) % p
    return reduce_mod_curve(curve, raw)


def diff_x(A: CurvePoly) -> CurvePoly:
    """Formal partial derivative in x of the stored representative."""
    return CurvePoly(A.p, {(i - 1, j): i * c for (i, j), c in A.coeffs.items() if i})


def diff_y(A: CurvePoly) -> CurvePoly:
    return CurvePoly(A.p, {(i, j - 1): j * c for (i, j), c in A.coeffs.items() if j})


def curve_equation(curve) -> dict[Monomial, int]:
    """f itself as a raw coefficient map (it reduces to zero on the curve)."""
    return {(0, 3): 1, (4, 0): -1, (2, 1): curve.p2, (1, 1): curve.p1, (0, 1): curve.p0,
            (2, 0): curve.q2, (1, 0): curve.q1, (0, 0): curve.q0}


def formal_partials(curve) -> tuple[CurvePoly, CurvePoly]:
    """(f_x, f_y) obtained by differentiating f term by term."""
    p = curve.p
    f = curve_equation(curve)
    fx = {(i - 1, j): i * c for (i, j), c in f.items() if i}
    fy = {(i, j - 1): j * c for (i, j), c in f.items() if j}
    return CurvePoly(p, fx), CurvePoly(p, fy)


def eval_poly(A: CurvePoly, P) -> int:
    """Evaluate at P = (x, y): Horner in y over Horner-in-x coefficients."""
    x, y = P
    p = A.p
    if A.is_zero():
        return 0
    top = max(j for _, j in A.coeffs)
    rows = [[0, 0, 0, 0] for _ in range(top + 1)]
    for (i, j), c in A.coeffs.items():
        rows[j][i] = c
    total = 0
    for r in reversed(rows):
        total = (total * y + ((r[3] * x + r[2]) * x + r[1]) * x + r[0]) % p
    return total


def eval_naive(A: CurvePoly, P) -> int:
    x, y = P
    p = A.p
    return sum(c * pow(x, i, p) * pow(y, j, p) for (i, j), c in A.coeffs.items()) % p


def _term(c: int, i: int, j: int) -> str:
    parts = [] if (c == 1 and (i or j)) else [str(c)]
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def render(A: CurvePoly) -> str:
    """``c*x^i*y^j + ...`` from highest pole order down; ``0`` for zero."""
    if A.is_zero():
        return "0"
    monos = sorted(A.coeffs, key=weight, reverse=True)
    return " + ".join(_term(A.coeffs[m], *m) for m in monos)
