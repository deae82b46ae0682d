"""Exact p-adic building blocks over rational representatives.

Nonzero rationals stand in for elements of Q_p: every quantity the rest of
the package needs (valuations, unit residues, n-th power detection) is
computable exactly from a reduced fraction, so there is no precision model
and no tolerance anywhere.  Roots of unity are never embedded numerically;
mu_n is kept abstract as exponents of a generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RegimeError, ZeroInput

Rational = Fraction

TAME = "tame"
DYADIC = "dyadic"


def as_rational(x) -> Fraction:
    """Coerce ints, 'num/den' strings and Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def smallest_primitive_root(p: int) -> int:
    """Smallest generator of (Z/p)^x; fixed once so runs are reproducible."""
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise RegimeError(f"no primitive root mod {p}")


class PadicContext:
    """Base prime and cover degree (p, n), plus residue-field powering data.

    Supported regimes are tame (p odd, n dividing p - 1) and dyadic
    (p = 2, n = 2): exactly the cases where Q_p contains n distinct n-th
    roots of unity and the symbol has a classical closed form.  lambda0 is
    the default congruence depth used by the splitting map.
    """

    def __init__(self, p: int, n: int, lambda0: int | None = None):
        if not _is_prime(p):
            raise RegimeError(f"p must be prime, got {p}")
        if n < 2:
            raise RegimeError(f"cover degree n must be >= 2, got {n}")
        if p == 2:
            if n != 2:
                raise RegimeError("p = 2 supports only the double cover n = 2")
            self.mode = DYADIC
            self.residue_generator = None
        else:
            if (p - 1) % n != 0:
                raise RegimeError(f"n must divide p-1 (got p={p}, n={n})")
            self.mode = TAME
            self.residue_generator = smallest_primitive_root(p)
        self.p = p
        self.n = n
        self.lambda0 = lambda0 if lambda0 is not None else (3 if p == 2 else 1)
        if self.lambda0 < 1:
            raise RegimeError("lambda0 must be >= 1")

    def __repr__(self):
        return f"PadicContext(p={self.p}, n={self.n})"

    def __eq__(self, other):
        if not isinstance(other, PadicContext):
            return NotImplemented
        return (self.p, self.n, self.lambda0) == (other.p, other.n, other.lambda0)

    def __hash__(self):
        return hash((self.p, self.n, self.lambda0))


@dataclass(frozen=True)
class Mu:
    """Element of mu_n, stored as the exponent of an abstract generator.

    The group law is addition of exponents mod n; nothing here ever
    touches an embedding into Q_p or C.
    """

    exp: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "exp", self.exp % self.n)

    @classmethod
    def one(cls, n: int) -> "Mu":
        return cls(0, n)

    @property
    def is_one(self) -> bool:
        return self.exp == 0

    def __mul__(self, other: "Mu") -> "Mu":
        if self.n != other.n:
            raise ValueError(f"mixed root-of-unity orders {self.n} and {other.n}")
        return Mu(self.exp + other.exp, self.n)

    def inv(self) -> "Mu":
        return Mu(-self.exp, self.n)

    def __pow__(self, k: int) -> "Mu":
        return Mu(self.exp * k, self.n)


def _int_valuation(m: int, p: int) -> int:
    # caller guarantees m != 0
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def valuation(a, ctx: PadicContext) -> int:
    """p-adic order of a nonzero rational; additive on products."""
    a = as_rational(a)
    if a == 0:
        raise ZeroInput("valuation of zero is undefined")
    return _int_valuation(a.numerator, ctx.p) - _int_valuation(a.denominator, ctx.p)


def unit_residue(a, k: int, ctx: PadicContext) -> int:
    """Class mod p^k of the unit part a * p^(-v(a)).

    Computed exactly from the reduced fraction, inverting the denominator
    mod p^k.
    """
    a = as_rational(a)
    if a == 0:
        raise ZeroInput("zero has no unit part")
    if k < 1:
        raise ValueError("modulus exponent k must be >= 1")
    p = ctx.p
    num = a.numerator
    den = a.denominator
    num //= p ** _int_valuation(num, p)
    den //= p ** _int_valuation(den, p)
    pk = p**k
    return num * pow(den, -1, pk) % pk


def is_nth_power(a, ctx: PadicContext) -> bool:
    """Exact membership test for (Q_p^x)^n in the supported regimes.

    Tame: the valuation must be divisible by n and the unit residue an
    n-th power mod p (units congruent to 1 mod p are uniquely n-divisible
    since p does not divide n).  Dyadic: even valuation and unit part
    congruent to 1 mod 8.
    """
    a = as_rational(a)
    if a == 0:
        raise ZeroInput("zero is not in the unit group")
    if valuation(a, ctx) % ctx.n != 0:
        return False
    if ctx.mode == TAME:
        return pow(unit_residue(a, 1, ctx), (ctx.p - 1) // ctx.n, ctx.p) == 1
    return unit_residue(a, 3, ctx) == 1
