"""GL(2) over exact rationals and the Kubota 2-cocycle in simplified form.

The cocycle on a pair of invertible matrices is

    c(g1, g2) = < X(g1 g2) / X(g1),  X(g1 g2) / (X(g2) det(g1)) >

where X picks the lower-left entry when it is nonzero and the lower-right
entry otherwise.  Also here: the splitting map s and the section kappa
over congruence subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import NotInCongruenceSubgroup
from .hilbert import hilbert
from .padic import Mu, PadicContext, as_rational, valuation

if TYPE_CHECKING:  # pragma: no cover
    from .group import MetaElement


@dataclass(frozen=True)
class GL2:
    """2x2 invertible matrix with exact rational entries, row-major."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError(f"matrix {self.entries()} is singular")

    @classmethod
    def identity(cls) -> "GL2":
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, lam) -> "GL2":
        return cls(lam, 0, 0, lam)

    @classmethod
    def diag(cls, x, y) -> "GL2":
        return cls(x, 0, 0, y)

    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Fraction:
        return self.a + self.d

    def __matmul__(self, other: "GL2") -> "GL2":
        return GL2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inv(self) -> "GL2":
        det = self.det()
        return GL2(self.d / det, -self.b / det, -self.c / det, self.a / det)


def x_invariant(m: GL2) -> Fraction:
    """Lower-left entry when nonzero, else lower-right; never zero."""
    return m.c if m.c != 0 else m.d


def cocycle(g1: GL2, g2: GL2, ctx: PadicContext) -> Mu:
    """Kubota 2-cocycle c(g1, g2), evaluated exactly through the symbol."""
    x12 = x_invariant(g1 @ g2)
    return hilbert(x12 / x_invariant(g1), x12 / (x_invariant(g2) * g1.det()), ctx)


def conjugation_factor(x: GL2, g: GL2, ctx: PadicContext) -> Mu:
    """mu_n correction in (x,1)(g,e)(x,1)^-1 = (x g x^-1, factor * e)."""
    xi = x.inv()
    return cocycle(x @ g, xi, ctx) * cocycle(x, g, ctx) * cocycle(x, xi, ctx).inv()


def splitting_s(g: GL2, ctx: PadicContext) -> Mu:
    """Correction <c, d det(g)> when cd != 0 and ord(c) is odd, else 1."""
    if g.c != 0 and g.d != 0 and valuation(g.c, ctx) % 2 != 0:
        return hilbert(g.c, g.d * g.det(), ctx)
    return Mu.one(ctx.n)


def in_congruence_subgroup(k: GL2, ctx: PadicContext, lam: int | None = None) -> bool:
    """Entry-wise test for k = 1 mod p^lam."""
    lam = ctx.lambda0 if lam is None else lam
    for entry in (k.a - 1, k.b, k.c, k.d - 1):
        if entry != 0 and valuation(entry, ctx) < lam:
            return False
    return True


def kappa(k: GL2, ctx: PadicContext, lam: int | None = None) -> "MetaElement":
    """Candidate splitting k -> (k, s(k)) over the congruence subgroup."""
    lam = ctx.lambda0 if lam is None else lam
    if not in_congruence_subgroup(k, ctx, lam):
        raise NotInCongruenceSubgroup(f"matrix is not 1 mod p^{lam}")
    from .group import MetaElement

    return MetaElement(k, splitting_s(k, ctx))
