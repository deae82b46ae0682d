"""Exact wire formats shared by the CLI and the suite reports.

Rationals travel as fraction strings ('3/4', '-2'), matrices as row-major
4-arrays of those strings, cover elements as {"g": [...], "eps": k} with
the mu_n exponent as a plain integer.  No floating point anywhere, so
serialization round-trips exactly and output is byte-reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cocycle import GL2
from .group import MetaElement
from .padic import Mu, PadicContext


def format_rational(x: Fraction) -> str:
    return str(x)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def gl2_to_json(g: GL2) -> list[str]:
    return [format_rational(e) for e in g.entries()]


def parse_gl2(text: str) -> GL2:
    """Matrix literal 'a,b;c,d' with rational tokens."""
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise ValueError(f"expected 'a,b;c,d', got {text!r}")
    entries = []
    for row in rows:
        parts = row.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b;c,d', got {text!r}")
        entries.extend(parse_rational(part) for part in parts)
    return GL2(*entries)


def meta_to_json(h: MetaElement) -> dict:
    return {"g": gl2_to_json(h.g), "eps": h.eps.exp}


def format_meta(h: MetaElement) -> str:
    a, b, c, d = (format_rational(e) for e in h.g.entries())
    return f"{a},{b};{c},{d}:{h.eps.exp}"


def parse_meta(text: str, ctx: PadicContext) -> MetaElement:
    """Cover element literal 'a,b;c,d' or 'a,b;c,d:k' (k the mu_n exponent)."""
    body, sep, eps_part = text.strip().partition(":")
    exp = int(eps_part) if sep else 0
    return MetaElement(parse_gl2(body), Mu(exp, ctx.n))


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, compact separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
