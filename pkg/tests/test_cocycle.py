import random
from fractions import Fraction

import pytest

from metaplectic import (
    GL2,
    Mu,
    PadicContext,
    cocycle,
    hilbert,
    in_congruence_subgroup,
    kappa,
    mul,
    splitting_s,
    x_invariant,
)
from metaplectic.errors import NotInCongruenceSubgroup

C22 = PadicContext(2, 2)
C32 = PadicContext(3, 2)
C54 = PadicContext(5, 4)
C73 = PadicContext(7, 3)
C136 = PadicContext(13, 6)
ALL = (C22, C32, C54, C73, C136)


def rand_gl2(rng, ctx, height=6):
    while True:
        a, b, c, d = (
            Fraction(rng.randint(-height, height), ctx.p ** rng.randint(0, 3))
            for _ in range(4)
        )
        if a * d - b * c != 0:
            return GL2(a, b, c, d)


def rand_nonzero(rng, ctx):
    num = rng.randint(1, 20) * rng.choice((1, -1))
    return Fraction(num) * Fraction(ctx.p) ** rng.randint(-3, 3)


def test_gl2_basics():
    g = GL2(1, 2, 3, 4)
    assert g.det() == -2
    assert g.trace() == 5
    assert g @ g.inv() == GL2.identity()
    assert g.inv() @ g == GL2.identity()
    with pytest.raises(ValueError):
        GL2(1, 2, 2, 4)


def test_x_invariant():
    assert x_invariant(GL2(1, 2, 3, 4)) == 3
    assert x_invariant(GL2(2, 0, 0, 3)) == 3
    assert x_invariant(GL2(1, 5, 0, 2)) == 2


def test_cocycle_on_scalars():
    rng = random.Random(3001)
    for ctx in ALL:
        for _ in range(60):
            l1 = rand_nonzero(rng, ctx)
            l2 = rand_nonzero(rng, ctx)
            assert cocycle(GL2.scalar(l1), GL2.scalar(l2), ctx) == hilbert(l1, l2, ctx)
            assert cocycle(GL2.diag(l1, -l1), GL2.diag(l2, -l2), ctx) == hilbert(l1, -l2, ctx)


def test_cocycle_with_identity_is_trivial():
    rng = random.Random(3002)
    for ctx in ALL:
        for _ in range(40):
            g = rand_gl2(rng, ctx)
            assert cocycle(GL2.identity(), g, ctx).is_one
            assert cocycle(g, GL2.identity(), ctx).is_one


def test_cocycle_inverse_pair_closed_form():
    rng = random.Random(3003)
    for ctx in ALL:
        for _ in range(100):
            g = rand_gl2(rng, ctx)
            expected = hilbert(g.d, g.a, ctx) if g.c == 0 else Mu.one(ctx.n)
            assert cocycle(g, g.inv(), ctx) == expected
            assert cocycle(g.inv(), g, ctx) == expected


def test_cocycle_identity():
    rng = random.Random(3004)
    for ctx in ALL:
        for _ in range(200):
            g1 = rand_gl2(rng, ctx)
            g2 = rand_gl2(rng, ctx)
            g3 = rand_gl2(rng, ctx)
            lhs = cocycle(g1 @ g2, g3, ctx) * cocycle(g1, g2, ctx)
            rhs = cocycle(g1, g2 @ g3, ctx) * cocycle(g2, g3, ctx)
            assert lhs == rhs


def test_conjugation_bookkeeping():
    rng = random.Random(3005)
    for ctx in ALL:
        for _ in range(150):
            x = rand_gl2(rng, ctx)
            g = rand_gl2(rng, ctx)
            xi = x.inv()
            gi = g.inv()
            lam = cocycle(x @ g, xi, ctx) * cocycle(x, g, ctx) * cocycle(x, xi, ctx).inv()
            beta = (
                cocycle(x, xi, ctx)
                * cocycle(gi @ xi, x, ctx)
                * cocycle(g, xi, ctx).inv()
                * cocycle(x, g @ xi, ctx).inv()
                * cocycle(x, gi @ xi, ctx).inv()
            )
            assert cocycle(x @ gi @ xi, x @ g @ xi, ctx) == cocycle(gi, g, ctx) * beta
            assert lam * beta == cocycle(gi @ xi, x, ctx) * cocycle(x, gi @ xi, ctx).inv()


def test_splitting_map_branches():
    for ctx in ALL:
        p = ctx.p
        assert splitting_s(GL2(1, 5, 0, 2), ctx).is_one  # c = 0
        assert splitting_s(GL2(1, 0, p, 1), ctx).is_one  # <p, 1>
        g = GL2(1, 0, p, 2)
        assert splitting_s(g, ctx) == hilbert(p, 4, ctx)
        assert splitting_s(g, ctx) == hilbert(p, 2, ctx) ** 2
        assert splitting_s(GL2(1, 0, p * p, 2), ctx).is_one  # even valuation
        assert splitting_s(GL2(0, -1, p, 0), ctx).is_one  # d = 0


def test_congruence_membership():
    p = Fraction(3)
    assert in_congruence_subgroup(GL2.identity(), C32, 5)
    assert in_congruence_subgroup(GL2(1 + p, p, p, 1 - p), C32, 1)
    assert not in_congruence_subgroup(GL2(1 + p, p, p, 1 - p), C32, 2)
    assert not in_congruence_subgroup(GL2(2, 0, 0, 2), C32, 1)


def test_kappa_examples():
    assert kappa(GL2.identity(), C32).eps.is_one
    k = GL2(1, 3, 0, 1)  # c = 0 branch of s
    lifted = kappa(k, C32)
    assert lifted.g == k and lifted.eps.is_one
    with pytest.raises(NotInCongruenceSubgroup):
        kappa(GL2(1, 1, 0, 1), C32)


def test_kappa_homomorphism_at_default_depth():
    rng = random.Random(3006)
    for ctx in ALL:
        q = Fraction(ctx.p) ** ctx.lambda0
        for _ in range(200):
            ks = []
            for _ in range(2):
                ks.append(
                    GL2(
                        1 + q * rng.randint(-6, 6),
                        q * rng.randint(-6, 6),
                        q * rng.randint(-6, 6),
                        1 + q * rng.randint(-6, 6),
                    )
                )
            k1, k2 = ks
            assert mul(kappa(k1, ctx), kappa(k2, ctx), ctx) == kappa(k1 @ k2, ctx)


def test_kappa_fails_to_split_shallow_dyadic_level():
    # depth 1 at p = 2 is genuinely too shallow: exhibit one failing pair
    ctx = PadicContext(2, 2, lambda0=1)
    k1 = GL2(1, 0, 2, 1)
    k2 = GL2(1, 2, 2, 5)
    assert mul(kappa(k1, ctx), kappa(k2, ctx), ctx) != kappa(k1 @ k2, ctx)
