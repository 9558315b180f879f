"""C_{3,4} curves in normal form

    f(x, y) = y^3 - x^4 + p2*x^2*y + p1*x*y + p0*y + q2*x^2 + q1*x + q0

together with point evaluation, partial derivatives, exhaustive point
enumeration for small fields and random point sampling.

Everything here runs on raw ``% p`` arithmetic and never touches a
:class:`~c34jac.field.FieldCtx` counter.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import Exhausted, FieldTooLarge, SingularScreenFailed
from .field import FieldCtx, mk_field

ENUM_CAP = 1 << 14
COEFF_NAMES = ("p2", "p1", "p0", "q2", "q1", "q0")


class AffinePoint(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Curve:
    p: int
    p2: int
    p1: int
    p0: int
    q2: int
    q1: int
    q0: int
    ctx: FieldCtx = field(compare=False, hash=False, repr=False, default=None)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return (self.p2, self.p1, self.p0, self.q2, self.q1, self.q0)

    def y_cubic(self, x: int) -> tuple[int, int]:
        """(A, B) with f(x, y) = y^3 + A*y + B for this fixed x."""
        p = self.p
        x2 = x * x % p
        a = (self.p2 * x2 + self.p1 * x + self.p0) % p
        b = (-x2 * x2 + self.q2 * x2 + self.q1 * x + self.q0) % p
        return a, b


def mk_curve(ctx: FieldCtx, p2: int, p1: int, p0: int, q2: int, q1: int, q0: int,
             screen: bool = True) -> Curve:
    p = ctx.p
    curve = Curve(p, p2 % p, p1 % p, p0 % p, q2 % p, q1 % p, q0 % p, ctx)
    if screen:
        bad = singular_points(curve)
        if bad:
            raise SingularScreenFailed(f"f, f_x, f_y vanish together at {bad[0]}")
    return curve


def eval_f(curve: Curve, x: int, y: int | None = None) -> int:
    """f at (x, y); also accepts an AffinePoint as the only coordinate argument."""
    if y is None:
        x, y = x
    p = curve.p
    x2 = x * x % p
    return (y * y * y - x2 * x2 + curve.p2 * x2 * y + curve.p1 * x * y + curve.p0 * y
            + curve.q2 * x2 + curve.q1 * x + curve.q0) % p


def partials(curve: Curve, x: int, y: int) -> tuple[int, int]:
    """(f_x, f_y) at (x, y)."""
    p = curve.p
    fx = (-4 * x * x * x + 2 * curve.p2 * x * y + curve.p1 * y + 2 * curve.q2 * x + curve.q1) % p
    fy = (3 * y * y + curve.p2 * x * x + curve.p1 * x + curve.p0) % p
    return fx, fy


@lru_cache(maxsize=32)
def _point_table(curve: Curve) -> tuple[tuple[int, ...], ...]:
    # ys[x] = sorted roots of f(x, .) over F_p
    p = curve.p
    ys = np.arange(p, dtype=np.int64)
    y3 = ys * ys % p * ys % p
    rows = []
    for x in range(p):
        a, b = curve.y_cubic(x)
        vals = (y3 + a * ys + b) % p
        rows.append(tuple(int(v) for v in np.flatnonzero(vals == 0)))
    return tuple(rows)


def enumerate_points(curve: Curve, cap: int = ENUM_CAP) -> list[AffinePoint]:
    """All affine F_p-points, sorted lexicographically."""
    if curve.p > cap:
        raise FieldTooLarge(f"p = {curve.p} exceeds the enumeration cap {cap}")
    table = _point_table(curve)
    return [AffinePoint(x, y) for x in range(curve.p) for y in table[x]]


def singular_points(curve: Curve, cap: int = ENUM_CAP) -> list[AffinePoint]:
    """Affine F_p-points where f, f_x and f_y all vanish (empty above the cap)."""
    if curve.p > cap:
        warnings.warn(f"p = {curve.p} is above {cap}; smoothness screen skipped", stacklevel=3)
        return []
    return [pt for pt in enumerate_points(curve, cap) if partials(curve, *pt) == (0, 0)]


def cubic_roots(a: int, b: int, p: int) -> list[int]:
    """Roots in F_p of y^3 + a*y + b."""
    from sympy.polys.domains import ZZ
    from sympy.polys.galoistools import gf_factor

    _, factors = gf_factor([1, 0, a % p, b % p], p, ZZ)
    return sorted({int(-fac[1]) % p for fac, _ in factors if len(fac) == 2})


def points_over_x(curve: Curve, x: int) -> list[int]:
    if curve.p <= ENUM_CAP:
        return list(_point_table(curve)[x % curve.p])
    return cubic_roots(*curve.y_cubic(x), curve.p)


def random_point(curve: Curve, rng, retries: int = 1000) -> AffinePoint:
    """Pick x uniformly; if f(x, .) has rational roots return one of them uniformly."""
    for _ in range(retries):
        x = rng.randrange(curve.p)
        ys = points_over_x(curve, x)
        if ys:
            return AffinePoint(x, ys[rng.randrange(len(ys))])
    raise Exhausted(f"no rational point found after {retries} x-values")


def random_curve(ctx: FieldCtx, rng, retries: int = 100) -> Curve:
    for _ in range(retries):
        coeffs = [rng.randrange(ctx.p) for _ in COEFF_NAMES]
        try:
            return mk_curve(ctx, *coeffs)
        except SingularScreenFailed:
            continue
    raise Exhausted("no curve passed the smoothness screen")


# -- curve files: one key=value per line, decimal integers -------------------

def format_curve(curve: Curve) -> str:
    lines = [f"p={curve.p}"] + [f"{k}={getattr(curve, k)}" for k in COEFF_NAMES]
    return "\n".join(lines) + "\n"


def parse_curve(text: str, screen: bool = True) -> Curve:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, val = line.partition("=")
        key = key.strip()
        if not sep:
            raise ValueError(f"line {lineno}: expected key=value, got {raw!r}")
        if key not in ("p",) + COEFF_NAMES:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise ValueError(f"line {lineno}: duplicate key {key!r}")
        values[key] = int(val.strip())
    missing = [k for k in ("p",) + COEFF_NAMES if k not in values]
    if missing:
        raise ValueError(f"missing keys: {', '.join(missing)}")
    ctx = mk_field(values["p"])
    return mk_curve(ctx, *(values[k] for k in COEFF_NAMES), screen=screen)


def load_curve(path, screen: bool = True) -> Curve:
    return parse_curve(Path(path).read_text(), screen=screen)


def save_curve(curve: Curve, path) -> None:
    Path(path).write_text(format_curve(curve))
