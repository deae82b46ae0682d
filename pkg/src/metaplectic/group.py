"""The metaplectic cover of GL(2): pairs (g, eps) with twisted multiplication.

Multiplication inserts the Kubota cocycle,

    (g1, e1) (g2, e2) = (g1 g2, c(g1, g2) e1 e2),

making (I, 1) the identity and (I, eps) central.  The preferred section is
g -> (g, 1); the distinguished elements are z~(lam) = (lam I, 1) and
u~(lam) = (diag(lam, -lam), 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cocycle import GL2, cocycle
from .errors import ZeroInput
from .padic import Mu, PadicContext, as_rational


@dataclass(frozen=True)
class MetaElement:
    g: GL2
    eps: Mu


def delta(h: MetaElement) -> Fraction:
    """Determinant, extended from the base group to the cover."""
    return h.g.det()


def lift(g: GL2, ctx: PadicContext) -> MetaElement:
    """Preferred section g -> (g, 1)."""
    return MetaElement(g, Mu.one(ctx.n))


def identity(ctx: PadicContext) -> MetaElement:
    return lift(GL2.identity(), ctx)


def central(eps: Mu) -> MetaElement:
    return MetaElement(GL2.identity(), eps)


def scale(eps: Mu, h: MetaElement) -> MetaElement:
    """Multiply by the central element (I, eps)."""
    return MetaElement(h.g, eps * h.eps)


def mul(h1: MetaElement, h2: MetaElement, ctx: PadicContext) -> MetaElement:
    return MetaElement(h1.g @ h2.g, cocycle(h1.g, h2.g, ctx) * h1.eps * h2.eps)


def inv(h: MetaElement, ctx: PadicContext) -> MetaElement:
    gi = h.g.inv()
    return MetaElement(gi, cocycle(h.g, gi, ctx).inv() * h.eps.inv())


def conjugate(z: MetaElement, h: MetaElement, ctx: PadicContext) -> MetaElement:
    return mul(mul(z, h, ctx), inv(z, ctx), ctx)


def u_matrix(lam) -> GL2:
    return GL2.diag(lam, -as_rational(lam))


def z_tilde(lam, ctx: PadicContext) -> MetaElement:
    lam = as_rational(lam)
    if lam == 0:
        raise ZeroInput("scalar element needs a nonzero parameter")
    return lift(GL2.scalar(lam), ctx)


def u_tilde(lam, ctx: PadicContext) -> MetaElement:
    lam = as_rational(lam)
    if lam == 0:
        raise ZeroInput("antidiagonal twist needs a nonzero parameter")
    return lift(u_matrix(lam), ctx)


def standard_element(kind: str, lam, ctx: PadicContext) -> MetaElement:
    """Distinguished elements: kind 'z' -> (lam I, 1), kind 'u' -> (diag(lam, -lam), 1)."""
    if kind == "z":
        return z_tilde(lam, ctx)
    if kind == "u":
        return u_tilde(lam, ctx)
    raise ValueError(f"unknown standard element kind {kind!r}")
