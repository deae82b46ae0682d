"""The standard involution on GL(2) and its lifts to the cover.

tau(g) = w0 g^T w0 swaps the diagonal entries and fixes the off-diagonal
ones.  Its distinguished lift is

    sigma(h) = u~(det h) h^-1 u~(1),

an involutive anti-automorphism of the cover projecting to tau.  sigma has
a closed form used as the fast path:

    sigma((g, e)) = (tau(g), <det g, c> e^-1)   if the lower-left entry c != 0,
    sigma((g, e)) = (tau(g), e^-1)              if c = 0;

sigma_defining evaluates the displayed product instead, and the two are
cross-checked against each other in the test suites.  The remaining lifts
form a single family sigma_alpha(h) = <alpha, det h> sigma(h), one for
each nonzero alpha, and rho_alpha(h) = sigma_alpha(h^-1) is the induced
order-two automorphism.
"""

from __future__ import annotations

from fractions import Fraction

from .cocycle import GL2
from .errors import ZeroInput
from .group import MetaElement, delta, inv, mul, scale, u_tilde
from .hilbert import hilbert
from .padic import Mu, PadicContext, as_rational


def tau(g: GL2) -> GL2:
    """Standard involution; anti-multiplicative, determinant-preserving."""
    return GL2(g.d, g.b, g.c, g.a)


def sigma(h: MetaElement, ctx: PadicContext) -> MetaElement:
    """Distinguished lift of tau, closed form."""
    if h.g.c != 0:
        xi = hilbert(h.g.det(), h.g.c, ctx)
    else:
        xi = Mu.one(ctx.n)
    return MetaElement(tau(h.g), xi * h.eps.inv())


def sigma_defining(h: MetaElement, ctx: PadicContext) -> MetaElement:
    """Same lift evaluated from its defining product; equals sigma() everywhere."""
    left = mul(u_tilde(delta(h), ctx), inv(h, ctx), ctx)
    return mul(left, u_tilde(Fraction(1), ctx), ctx)


def sigma_alpha(h: MetaElement, alpha, ctx: PadicContext) -> MetaElement:
    """The lift of tau twisted by the character g -> <alpha, det g>."""
    alpha = as_rational(alpha)
    if alpha == 0:
        raise ZeroInput("twist parameter alpha must be nonzero")
    return scale(hilbert(alpha, delta(h), ctx), sigma(h, ctx))


def rho_alpha(h: MetaElement, alpha, ctx: PadicContext) -> MetaElement:
    """Order-two automorphism h -> sigma_alpha(h^-1)."""
    alpha = as_rational(alpha)
    if alpha == 0:
        raise ZeroInput("twist parameter alpha must be nonzero")
    return sigma_alpha(inv(h, ctx), alpha, ctx)
