"""Deterministic sample streams for the verification suites.

Every draw is a pure function of (seed, context, stream tag, trial index),
so suites can run trials in any order, or in parallel, and still produce
identical reports.  The first entries of the matrix stream form a fixed
hand-built corpus that hits every branch of the X-invariant, the splitting
map, the closed-form involution and the classifier.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .cocycle import GL2
from .group import MetaElement
from .padic import TAME, Mu, PadicContext

DEFAULT_CONTEXT_PARAMS = ((2, 2), (3, 2), (5, 2), (5, 4), (7, 3), (13, 6))


def default_contexts() -> tuple[PadicContext, ...]:
    """Dyadic, tame-quadratic, and two tame covers of degree >= 3."""
    return tuple(PadicContext(p, n) for p, n in DEFAULT_CONTEXT_PARAMS)


@dataclass(frozen=True)
class SampleConfig:
    """Seeded sampling parameters shared by every suite."""

    seed: int
    height: int = 8
    trials: int = 1000
    ctx_list: tuple[PadicContext, ...] = ()

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.height < 2:
            raise ValueError("height must be >= 2")
        if not self.ctx_list:
            object.__setattr__(self, "ctx_list", default_contexts())


def _rng(cfg: SampleConfig, ctx: PadicContext, stream: str, i: int) -> random.Random:
    # blake2b keeps the stream stable across platforms and interpreter runs
    key = f"{cfg.seed}:{ctx.p}:{ctx.n}:{stream}:{i}".encode()
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


_CORPUS_CACHE: dict[int, tuple[GL2, ...]] = {}


def gl2_corpus(ctx: PadicContext) -> tuple[GL2, ...]:
    """Fixed prefix of the matrix stream (branch coverage, then randoms)."""
    cached = _CORPUS_CACHE.get(ctx.p)
    if cached is not None:
        return cached
    p = Fraction(ctx.p)
    mats = (
        GL2.identity(),
        # scalars
        GL2.scalar(2),
        GL2.scalar(-1),
        GL2.scalar(p),
        GL2.scalar(1 / p),
        # diagonal, distinct entries (u(1) included)
        GL2.diag(1, -1),
        GL2.diag(2, 3),
        GL2.diag(p, 1),
        GL2.diag(1 / p, p),
        # upper triangular, distinct diagonal
        GL2(2, 7, 0, 5),
        GL2(1, 1, 0, 2),
        GL2(1, p, 0, 1 / p),
        # upper triangular, equal diagonal (unipotent and Jordan-like)
        GL2(1, 1, 0, 1),
        GL2(2, 9, 0, 2),
        GL2(p, 1, 0, p),
        GL2(1, p, 0, 1),
        # companion forms, including trace zero
        GL2(0, 1, 1, 0),
        GL2(0, p, 1, 0),
        GL2(0, 2, 1, 5),
        GL2(0, -1, 1, 1),
        GL2(0, -1, 1, 0),
        # nonzero lower-left entries of odd and even valuation
        GL2(1, 2, 3, 4),
        GL2(1, 0, p, 1),
        GL2(1, 0, p * p, 1),
        GL2(1, 1 / p, p, 2),
        GL2(p, 1, 1, p),
        GL2(1, 2, 3, 0),
    )
    _CORPUS_CACHE[ctx.p] = mats
    return mats


def sample_gl2(cfg: SampleConfig, ctx: PadicContext, i: int, stream: int = 0) -> GL2:
    """Trial i of the matrix stream; entries are num/p^e with |num| <= height."""
    corpus = gl2_corpus(ctx)
    if i < len(corpus):
        return corpus[(i + 7 * stream) % len(corpus)]
    rng = _rng(cfg, ctx, f"gl2.{stream}", i)
    h = cfg.height
    while True:
        a, b, c, d = (
            Fraction(rng.randint(-h, h), ctx.p ** rng.randint(0, h)) for _ in range(4)
        )
        if a * d - b * c != 0:
            return GL2(a, b, c, d)


_SCALAR_CACHE: dict[tuple[int, int], tuple[Fraction, ...]] = {}


def scalar_corpus(ctx: PadicContext) -> tuple[Fraction, ...]:
    cached = _SCALAR_CACHE.get((ctx.p, ctx.n))
    if cached is not None:
        return cached
    p = Fraction(ctx.p)
    base = [Fraction(1), Fraction(-1), Fraction(2), p, -p, 1 / p, 1 + p, p * p]
    if ctx.mode == TAME:
        g = Fraction(ctx.residue_generator)
        base += [g, p * g]
    else:
        base += [Fraction(3), Fraction(5), Fraction(-5), Fraction(10)]
    out = tuple(base)
    _SCALAR_CACHE[(ctx.p, ctx.n)] = out
    return out


def sample_nonzero(cfg: SampleConfig, ctx: PadicContext, i: int, stream: int = 0) -> Fraction:
    """Nonzero rational p^e * num with |num| <= height and |e| <= height."""
    corpus = scalar_corpus(ctx)
    if i < len(corpus):
        return corpus[(i + 3 * stream) % len(corpus)]
    rng = _rng(cfg, ctx, f"rat.{stream}", i)
    num = rng.randint(1, cfg.height) * rng.choice((1, -1))
    return Fraction(num) * Fraction(ctx.p) ** rng.randint(-cfg.height, cfg.height)


def sample_mu(cfg: SampleConfig, ctx: PadicContext, i: int, stream: int = 0) -> Mu:
    rng = _rng(cfg, ctx, f"mu.{stream}", i)
    return Mu(rng.randrange(ctx.n), ctx.n)


def sample_meta(cfg: SampleConfig, ctx: PadicContext, i: int, stream: int = 0) -> MetaElement:
    return MetaElement(sample_gl2(cfg, ctx, i, stream), sample_mu(cfg, ctx, i, stream))


def sample_congruence(
    cfg: SampleConfig, ctx: PadicContext, i: int, lam: int | None = None, stream: int = 0
) -> GL2:
    """Element of the depth-lam congruence subgroup: 1 + p^lam * (integer matrix)."""
    lam = ctx.lambda0 if lam is None else lam
    q = Fraction(ctx.p) ** lam
    if i == 0:
        return GL2.identity()
    if i == 1:
        return GL2(1, 0, q, 1)
    if i == 2:
        return GL2(1, q, 0, 1)
    rng = _rng(cfg, ctx, f"cong.{lam}.{stream}", i)
    h = cfg.height
    # determinant is 1 mod p^lam, hence automatically nonzero
    return GL2(
        1 + q * rng.randint(-h, h),
        q * rng.randint(-h, h),
        q * rng.randint(-h, h),
        1 + q * rng.randint(-h, h),
    )


def alpha_corpus(ctx: PadicContext) -> tuple[Fraction, ...]:
    """Twist parameters covering distinct classes modulo n-th powers."""
    p = Fraction(ctx.p)
    if ctx.mode == TAME:
        g = Fraction(ctx.residue_generator)
        return (Fraction(1), p, g, p * g, Fraction(-1))
    return (
        Fraction(1),
        Fraction(-1),
        Fraction(2),
        Fraction(-2),
        Fraction(5),
        Fraction(-5),
        Fraction(10),
        Fraction(-10),
    )


def sample_alpha(cfg: SampleConfig, ctx: PadicContext, i: int, stream: int = 0) -> Fraction:
    corpus = alpha_corpus(ctx)
    if i < 2 * len(corpus):
        return corpus[i % len(corpus)]
    return sample_nonzero(cfg, ctx, i, stream + 101)
