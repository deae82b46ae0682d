import random
from fractions import Fraction

import pytest

from metaplectic import (
    GL2,
    MetaElement,
    Mu,
    PadicContext,
    central,
    delta,
    hilbert,
    identity,
    inv,
    is_nth_power,
    lift,
    mul,
    rho_alpha,
    scale,
    sigma,
    sigma_alpha,
    sigma_defining,
    tau,
    u_matrix,
)
from metaplectic.errors import ZeroInput
from metaplectic.sampling import alpha_corpus

C22 = PadicContext(2, 2)
C32 = PadicContext(3, 2)
C54 = PadicContext(5, 4)
C73 = PadicContext(7, 3)
C136 = PadicContext(13, 6)
ALL = (C22, C32, C54, C73, C136)


def rand_meta(rng, ctx, height=6):
    while True:
        a, b, c, d = (
            Fraction(rng.randint(-height, height), ctx.p ** rng.randint(0, 3))
            for _ in range(4)
        )
        if a * d - b * c != 0:
            return MetaElement(GL2(a, b, c, d), Mu(rng.randrange(ctx.n), ctx.n))


def rand_alpha(rng, ctx):
    corpus = alpha_corpus(ctx)
    if rng.random() < 0.5:
        return corpus[rng.randrange(len(corpus))]
    num = rng.randint(1, 20) * rng.choice((1, -1))
    return Fraction(num) * Fraction(ctx.p) ** rng.randint(-3, 3)


def test_tau_examples():
    assert tau(GL2(1, 2, 3, 4)) == GL2(4, 2, 3, 1)
    assert tau(GL2.diag(2, 7)) == GL2.diag(7, 2)
    assert tau(tau(GL2(1, 2, 3, 4))) == GL2(1, 2, 3, 4)


def test_tau_factorization_and_antimultiplicativity():
    rng = random.Random(5001)
    for ctx in ALL:
        for _ in range(80):
            g = rand_meta(rng, ctx).g
            h = rand_meta(rng, ctx).g
            assert tau(g) == (u_matrix(g.det()) @ g.inv()) @ u_matrix(1)
            assert tau(g @ h) == tau(h) @ tau(g)
            assert tau(g).det() == g.det()


def test_sigma_closed_form_on_sections():
    rng = random.Random(5002)
    for ctx in ALL:
        for _ in range(100):
            g = rand_meta(rng, ctx).g
            got = sigma(lift(g, ctx), ctx)
            if g.c != 0:
                assert got == MetaElement(tau(g), hilbert(g.det(), g.c, ctx))
            else:
                assert got == lift(tau(g), ctx)


def test_sigma_inverts_central_elements():
    for ctx in ALL:
        for k in range(ctx.n):
            eps = Mu(k, ctx.n)
            assert sigma(central(eps), ctx) == central(eps.inv())


def test_sigma_agrees_with_defining_formula():
    rng = random.Random(5003)
    for ctx in ALL:
        for _ in range(150):
            h = rand_meta(rng, ctx)
            assert sigma(h, ctx) == sigma_defining(h, ctx)


def test_sigma_is_an_involutive_antiautomorphism_lifting_tau():
    rng = random.Random(5004)
    for ctx in ALL:
        for _ in range(120):
            h1 = rand_meta(rng, ctx)
            h2 = rand_meta(rng, ctx)
            assert sigma(mul(h1, h2, ctx), ctx) == mul(sigma(h2, ctx), sigma(h1, ctx), ctx)
            assert sigma(sigma(h1, ctx), ctx) == h1
            assert sigma(inv(h1, ctx), ctx) == inv(sigma(h1, ctx), ctx)
            assert sigma(h1, ctx).g == tau(h1.g)


def test_sigma_alpha_family():
    rng = random.Random(5005)
    for ctx in ALL:
        for _ in range(120):
            h1 = rand_meta(rng, ctx)
            h2 = rand_meta(rng, ctx)
            alpha = rand_alpha(rng, ctx)
            twisted = sigma_alpha(h1, alpha, ctx)
            assert twisted == scale(hilbert(alpha, delta(h1), ctx), sigma(h1, ctx))
            assert sigma_alpha(sigma_alpha(h1, alpha, ctx), alpha, ctx) == h1
            assert sigma_alpha(mul(h1, h2, ctx), alpha, ctx) == mul(
                sigma_alpha(h2, alpha, ctx), sigma_alpha(h1, alpha, ctx), ctx
            )
            assert twisted.g == tau(h1.g)
            assert delta(twisted) == delta(h1)
            if is_nth_power(delta(h1), ctx):
                assert twisted == sigma(h1, ctx)


def test_character_is_multiplicative():
    rng = random.Random(5006)
    for ctx in ALL:
        for _ in range(100):
            h1 = rand_meta(rng, ctx)
            h2 = rand_meta(rng, ctx)
            alpha = rand_alpha(rng, ctx)
            assert hilbert(alpha, delta(mul(h1, h2, ctx)), ctx) == hilbert(
                alpha, delta(h1), ctx
            ) * hilbert(alpha, delta(h2), ctx)


def test_distinct_twists_differ_somewhere():
    # twist parameters in different classes mod n-th powers give different lifts
    for ctx in (C54, C73, C136, C32):
        g = ctx.residue_generator
        h = lift(GL2.diag(g, 1), ctx)
        assert sigma_alpha(h, Fraction(ctx.p), ctx) != sigma(h, ctx)


def test_rho_alpha_is_an_involutive_automorphism():
    rng = random.Random(5007)
    for ctx in ALL:
        assert rho_alpha(identity(ctx), 1, ctx) == identity(ctx)
        for _ in range(100):
            h1 = rand_meta(rng, ctx)
            h2 = rand_meta(rng, ctx)
            alpha = rand_alpha(rng, ctx)
            assert rho_alpha(rho_alpha(h1, alpha, ctx), alpha, ctx) == h1
            assert rho_alpha(mul(h1, h2, ctx), alpha, ctx) == mul(
                rho_alpha(h1, alpha, ctx), rho_alpha(h2, alpha, ctx), ctx
            )


def test_zero_twist_rejected():
    h = lift(GL2(1, 2, 3, 4), C32)
    with pytest.raises(ZeroInput):
        sigma_alpha(h, 0, C32)
    with pytest.raises(ZeroInput):
        rho_alpha(h, 0, C32)
