import random
from fractions import Fraction

import pytest

from metaplectic import Mu, PadicContext, is_nth_power, unit_residue, valuation
from metaplectic.errors import RegimeError, ZeroInput
from metaplectic.padic import smallest_primitive_root

C22 = PadicContext(2, 2)
C32 = PadicContext(3, 2)
C52 = PadicContext(5, 2)
C54 = PadicContext(5, 4)
C73 = PadicContext(7, 3)
C136 = PadicContext(13, 6)
ALL = (C22, C32, C52, C54, C73, C136)


def dyadic_square_oracle(a: int, bits: int = 12) -> bool:
    """Is the odd integer a a square in Z_2?  Lift solutions of x^2 = a mod 2^k."""
    assert a % 2 == 1
    sols = {x for x in range(8) if (x * x - a) % 8 == 0}
    if not sols:
        return False
    for k in range(4, bits + 1):
        m = 1 << k
        sols = {x for s in sols for x in (s, s + (m >> 1)) if (x * x - a) % m == 0}
        if not sols:
            return False
    return True


def rand_nonzero(rng, ctx):
    num = rng.randint(1, 40) * rng.choice((1, -1))
    return Fraction(num) * Fraction(ctx.p) ** rng.randint(-5, 5)


def test_valuation_examples():
    assert valuation(50, C52) == 2
    assert valuation(Fraction(3, 4), C22) == -2
    assert valuation(1, PadicContext(7, 3)) == 0


def test_valuation_rejects_zero():
    with pytest.raises(ZeroInput):
        valuation(0, C32)
    with pytest.raises(ZeroInput):
        unit_residue(Fraction(0), 2, C32)
    with pytest.raises(ZeroInput):
        is_nth_power(0, C32)


def test_valuation_additive_on_products():
    rng = random.Random(1001)
    for ctx in ALL:
        for _ in range(300):
            a = rand_nonzero(rng, ctx)
            b = rand_nonzero(rng, ctx)
            assert valuation(a * b, ctx) == valuation(a, ctx) + valuation(b, ctx)


def test_unit_residue_examples():
    assert unit_residue(50, 1, C52) == 2
    assert unit_residue(Fraction(3, 2), 1, C32) == 2
    assert unit_residue(-1, 3, C22) == 7


def test_unit_residue_multiplicative():
    rng = random.Random(1002)
    for ctx in ALL:
        for _ in range(200):
            a = rand_nonzero(rng, ctx)
            b = rand_nonzero(rng, ctx)
            k = rng.randint(1, 4)
            pk = ctx.p**k
            assert (
                unit_residue(a * b, k, ctx)
                == unit_residue(a, k, ctx) * unit_residue(b, k, ctx) % pk
            )


def test_is_nth_power_examples():
    assert is_nth_power(625, C54) is True
    assert is_nth_power(5, C54) is False
    assert is_nth_power(17, C22) is True
    assert dyadic_square_oracle(17) is True


def test_is_nth_power_matches_dyadic_oracle_on_odd_integers():
    for a in range(1, 200, 2):
        assert is_nth_power(a, C22) == dyadic_square_oracle(a), a


def test_nth_powers_detected():
    rng = random.Random(1003)
    for ctx in ALL:
        for _ in range(200):
            a = rand_nonzero(rng, ctx)
            assert is_nth_power(a**ctx.n, ctx)
            if is_nth_power(a, ctx):
                assert is_nth_power(a * Fraction(ctx.p) ** ctx.n, ctx)


def test_mu_is_cyclic_of_order_n():
    for n in (2, 3, 4, 6):
        zeta = Mu(1, n)
        acc = Mu.one(n)
        seen = []
        for _ in range(n):
            seen.append(acc.exp)
            acc = acc * zeta
        assert acc == Mu.one(n)
        assert sorted(seen) == list(range(n))
        for k in range(n):
            assert Mu(k, n).inv().exp == (n - k) % n
            assert (Mu(k, n) * Mu(k, n).inv()).is_one
            assert Mu(k, n) ** 3 == Mu(3 * k, n)


def test_mu_rejects_mixed_orders():
    with pytest.raises(ValueError):
        Mu(1, 2) * Mu(1, 3)


def test_context_regimes():
    with pytest.raises(RegimeError):
        PadicContext(5, 3)  # 3 does not divide 4
    with pytest.raises(RegimeError):
        PadicContext(2, 4)
    with pytest.raises(RegimeError):
        PadicContext(4, 2)
    with pytest.raises(RegimeError):
        PadicContext(3, 1)
    assert C22.mode == "dyadic" and C22.lambda0 == 3
    assert C32.mode == "tame" and C32.lambda0 == 1
    assert PadicContext(5, 2, lambda0=2).lambda0 == 2


def test_residue_generator_is_smallest_primitive_root():
    assert smallest_primitive_root(3) == 2
    assert smallest_primitive_root(5) == 2
    assert smallest_primitive_root(7) == 3
    assert smallest_primitive_root(13) == 2
    for p in (3, 5, 7, 13):
        g = smallest_primitive_root(p)
        assert pow(g, p - 1, p) == 1
        assert all(pow(g, k, p) != 1 for k in range(1, p - 1))
