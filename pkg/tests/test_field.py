import pytest

from c34jac import field as F
from c34jac.errors import BadCharacteristic, DivisionByZero, NonPrime
from c34jac.field import OpCount, is_prime, mk_field


@pytest.mark.parametrize("p", [5, 7, 31, 1009, 2**31 - 1])
def test_valid_primes(p):
    assert mk_field(p).p == p


@pytest.mark.parametrize("p", [2, 3])
def test_bad_characteristic(p):
    with pytest.raises(BadCharacteristic):
        mk_field(p)


@pytest.mark.parametrize("n", [0, 1, 4, 9, 1001, 1024])
def test_non_prime(n):
    with pytest.raises(NonPrime):
        mk_field(n)


def test_is_prime_matches_sieve():
    sieve = [True] * 500
    sieve[0] = sieve[1] = False
    for k in range(2, 500):
        if sieve[k]:
            for m in range(k * k, 500, k):
                sieve[m] = False
    assert [is_prime(n) for n in range(500)] == sieve


def test_mul_counts():
    f31, f7 = mk_field(31), mk_field(7)
    assert F.mul(f31, 5, 7) == 4
    assert F.mul(f31, 0, 9) == 0
    assert f31.counter_read() == OpCount(2, 0)
    assert F.mul(f7, 6, 6) == 1
    assert f7.counter_read().as_tuple() == (1, 0)


def test_inv():
    f7, f31 = mk_field(7), mk_field(31)
    assert F.inv(f7, 3) == 5
    assert F.inv(f31, 1) == 1
    with pytest.raises(DivisionByZero):
        F.inv(f7, 0)
    with pytest.raises(ZeroDivisionError):
        f7.inv(14)


def test_inverse_all_units():
    f = mk_field(101)
    for x in range(1, 101):
        assert x * f.inv(x) % 101 == 1


def test_free_ops():
    f7 = mk_field(7)
    assert F.add(f7, 6, 3) == 2
    assert F.sub(f7, 2, 5) == 4
    assert F.neg(f7, 0) == 0
    for _ in range(100):
        F.add(f7, 1, 2)
    assert F.counter_read(f7) == OpCount(0, 0)


def test_counter_sequence():
    f = mk_field(31)
    F.counter_reset(f)
    f.mul(2, 3)
    f.mul(4, 5)
    f.inv(6)
    assert F.counter_read(f).as_tuple() == (2, 1)
    F.counter_reset(f)
    assert F.counter_read(f).as_tuple() == (0, 0)


def test_fork_is_independent():
    f = mk_field(31)
    f.mul(2, 2)
    g = f.fork()
    g.mul(3, 3)
    assert f.counter_read().muls == 1
    assert g.counter_read().muls == 1 and g.p == 31


def test_opcount_arithmetic():
    a, b = OpCount(117, 2), OpCount(7, 0)
    assert (a - b) == OpCount(110, 2)
    assert (a + b).as_tuple() == (124, 2)
    assert str(a) == "muls=117 invs=2"
