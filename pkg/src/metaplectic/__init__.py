"""Exact arithmetic on the n-fold metaplectic cover of GL(2) over Q_p.

Field elements are exact rationals (valuations and unit residues carry all
the p-adic information the formulas need), roots of unity are abstract
exponents mod n, and every identity in the library is checked with exact
equality: Hilbert symbols, the Kubota 2-cocycle and its splitting over
congruence subgroups, the cover's group law, the lifted involutions, and
the constructive conjugacy witnesses that separate the double cover from
the higher ones.
"""

from . import errors
from .cocycle import (
    GL2,
    cocycle,
    conjugation_factor,
    in_congruence_subgroup,
    kappa,
    splitting_s,
    x_invariant,
)
from .group import (
    MetaElement,
    central,
    conjugate,
    delta,
    identity,
    inv,
    lift,
    mul,
    scale,
    standard_element,
    u_matrix,
    u_tilde,
    z_tilde,
)
from .hilbert import hilbert, nondegeneracy_witness
from .involutions import rho_alpha, sigma, sigma_alpha, sigma_defining, tau
from .padic import (
    DYADIC,
    TAME,
    Mu,
    PadicContext,
    Rational,
    as_rational,
    is_nth_power,
    smallest_primitive_root,
    unit_residue,
    valuation,
)
from .sampling import (
    SampleConfig,
    alpha_corpus,
    default_contexts,
    gl2_corpus,
    sample_alpha,
    sample_congruence,
    sample_gl2,
    sample_meta,
    sample_mu,
    sample_nonzero,
)
from .suites import SUITE_NAMES, SuiteReport, run_suite
from .witness import (
    COMPANION,
    DIAGONAL_DISTINCT,
    JORDAN_BLOCK,
    SCALAR,
    CanonicalCase,
    ObstructionReport,
    WitnessReport,
    base_witness,
    centralizer_obstruction,
    classify,
    rho_witness,
    square_map_trivial,
    witness,
    witness_alpha,
)

__all__ = [
    "COMPANION",
    "DIAGONAL_DISTINCT",
    "DYADIC",
    "GL2",
    "JORDAN_BLOCK",
    "CanonicalCase",
    "MetaElement",
    "Mu",
    "ObstructionReport",
    "PadicContext",
    "Rational",
    "SCALAR",
    "SUITE_NAMES",
    "SampleConfig",
    "SuiteReport",
    "TAME",
    "WitnessReport",
    "alpha_corpus",
    "as_rational",
    "base_witness",
    "central",
    "centralizer_obstruction",
    "classify",
    "cocycle",
    "conjugate",
    "conjugation_factor",
    "default_contexts",
    "delta",
    "errors",
    "gl2_corpus",
    "hilbert",
    "identity",
    "in_congruence_subgroup",
    "inv",
    "is_nth_power",
    "kappa",
    "lift",
    "mul",
    "nondegeneracy_witness",
    "rho_alpha",
    "rho_witness",
    "run_suite",
    "sample_alpha",
    "sample_congruence",
    "sample_gl2",
    "sample_meta",
    "sample_mu",
    "sample_nonzero",
    "scale",
    "sigma",
    "sigma_alpha",
    "sigma_defining",
    "smallest_primitive_root",
    "splitting_s",
    "square_map_trivial",
    "standard_element",
    "tau",
    "u_matrix",
    "u_tilde",
    "unit_residue",
    "valuation",
    "witness",
    "witness_alpha",
    "x_invariant",
    "z_tilde",
]
