"""Prime-field arithmetic with a multiplication/inversion counter.

Elements are plain ``int`` residues in ``[0, p)``. Only :meth:`FieldCtx.mul`
and :meth:`FieldCtx.inv` touch the counter; additions, subtractions and
negations are free. Formula code must never route multiplication by the
constants 0, 1, -1 or doubling through ``mul``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import BadCharacteristic, DivisionByZero, NonPrime


@dataclass(frozen=True)
class OpCount:
    muls: int = 0
    invs: int = 0

    def __add__(self, other: OpCount) -> OpCount:
        return OpCount(self.muls + other.muls, self.invs + other.invs)

    def __sub__(self, other: OpCount) -> OpCount:
        return OpCount(self.muls - other.muls, self.invs - other.invs)

    def as_tuple(self) -> tuple[int, int]:
        return (self.muls, self.invs)

    def __str__(self) -> str:
        return f"muls={self.muls} invs={self.invs}"


def is_prime(n: int) -> bool:
    # trial division; contexts are created rarely and p is desk-sized
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


class FieldCtx:
    """Arithmetic modulo ``p`` plus the running tally of counted operations.

    One context is meant for one thread. Oracle and test code that must not
    disturb a tally should work on :meth:`fork` or on raw ``% p`` arithmetic.
    """

    __slots__ = ("p", "muls", "invs")

    def __init__(self, p: int):
        self.p = p
        self.muls = 0
        self.invs = 0

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, muls={self.muls}, invs={self.invs})"

    def __call__(self, x: int) -> int:
        return x % self.p

    def mul(self, x: int, y: int) -> int:
        self.muls += 1
        return x * y % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise DivisionByZero(f"0 has no inverse modulo {self.p}")
        self.invs += 1
        return pow(x, -1, self.p)

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    @property
    def counter(self) -> OpCount:
        return OpCount(self.muls, self.invs)

    def counter_reset(self) -> None:
        self.muls = 0
        self.invs = 0

    def counter_read(self) -> OpCount:
        return OpCount(self.muls, self.invs)

    def fork(self) -> FieldCtx:
        """A fresh context over the same prime with a zeroed counter."""
        return FieldCtx(self.p)


def mk_field(p: int) -> FieldCtx:
    if p in (2, 3):
        raise BadCharacteristic(f"characteristic {p} is not supported")
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    return FieldCtx(p)


# module-level aliases matching the functional surface
def mul(ctx: FieldCtx, x: int, y: int) -> int:
    return ctx.mul(x, y)


def inv(ctx: FieldCtx, x: int) -> int:
    return ctx.inv(x)


def add(ctx: FieldCtx, x: int, y: int) -> int:
    return ctx.add(x, y)


def sub(ctx: FieldCtx, x: int, y: int) -> int:
    return ctx.sub(x, y)


def neg(ctx: FieldCtx, x: int) -> int:
    return ctx.neg(x)


def counter_reset(ctx: FieldCtx) -> None:
    ctx.counter_reset()


def counter_read(ctx: FieldCtx) -> OpCount:
    return ctx.counter_read()
