"""Named verification suites over deterministic sample streams.

Each suite replays one slice of the algebra on seeded samples and records
exact-equality failures as serialized counterexamples.  Suites:

    hilbert        symbol identities and the n-th power kernel
    cocycle        2-cocycle identity and the conjugation bookkeeping
    splitting      kappa as a homomorphism on the congruence subgroup
    group          cover group law, inverses, centrality, z~/u~ relations
    involution     the lifts sigma and sigma_alpha and their closed forms
    witness        conjugacy witnesses for sigma
    witness-alpha  conjugacy witnesses for the twisted lifts
    rho            witnesses for rho_alpha(h) = z (eta^2 h^-1) z^-1
    obstruction    degree >= 3 centralizer scan (not applicable for n = 2)
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .cocycle import GL2, cocycle, kappa, splitting_s
from .errors import UnknownSuite, VerificationFailed
from .group import (
    MetaElement,
    central,
    delta,
    identity,
    inv,
    mul,
    scale,
    u_tilde,
    z_tilde,
)
from .hilbert import hilbert, nondegeneracy_witness
from .involutions import rho_alpha, sigma, sigma_alpha, sigma_defining, tau
from .padic import Mu, PadicContext, is_nth_power
from .sampling import (
    SampleConfig,
    sample_alpha,
    sample_congruence,
    sample_gl2,
    sample_meta,
    sample_nonzero,
)
from .serialize import format_rational, gl2_to_json, meta_to_json
from .witness import centralizer_obstruction, classify, rho_witness, square_map_trivial, witness, witness_alpha

SUITE_NAMES = (
    "hilbert",
    "cocycle",
    "splitting",
    "group",
    "involution",
    "witness",
    "witness-alpha",
    "rho",
    "obstruction",
)

PASSED = "passed"
FAILED = "failed"
NOT_APPLICABLE = "not applicable"


@dataclass
class SuiteReport:
    suite: str
    ctx: PadicContext
    trials: int
    failures: list[dict]
    ms: int
    status: str

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "ctx": {"p": self.ctx.p, "n": self.ctx.n},
            "trials": self.trials,
            "failures": self.failures,
            "ms": self.ms if timing else 0,
            "status": self.status,
        }


def _ser(value):
    if isinstance(value, Mu):
        return value.exp
    if isinstance(value, MetaElement):
        return meta_to_json(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, (tuple, list)):
        return [_ser(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _ser(v) for k, v in value.items()}
    return gl2_to_json(value)


class _Recorder:
    """Collects confirmed counterexamples; a failure is re-run before inclusion."""

    def __init__(self):
        self.failures: list[dict] = []

    def check(self, prop: str, inputs: dict, compute):
        lhs, rhs = compute()
        if lhs == rhs:
            return
        lhs, rhs = compute()
        if lhs == rhs:
            return
        self.failures.append(
            {
                "property": prop,
                "inputs": {k: _ser(v) for k, v in inputs.items()},
                "lhs": _ser(lhs),
                "rhs": _ser(rhs),
            }
        )


def _suite_hilbert(cfg: SampleConfig, ctx: PadicContext):
    rec = _Recorder()
    one = Mu.one(ctx.n)
    powers = (2, 3, 5)
    for i in range(cfg.trials):
        a = sample_nonzero(cfg, ctx, i, 0)
        b = sample_nonzero(cfg, ctx, i, 1)
        c = sample_nonzero(cfg, ctx, i, 2)
        inputs = {"a": a, "b": b, "c": c}
        rec.check("bilinear_left", inputs, lambda: (hilbert(a * b, c, ctx), hilbert(a, c, ctx) * hilbert(b, c, ctx)))
        rec.check("bilinear_right", inputs, lambda: (hilbert(a, b * c, ctx), hilbert(a, b, ctx) * hilbert(a, c, ctx)))
        rec.check("antisymmetric", inputs, lambda: (hilbert(a, b, ctx) * hilbert(b, a, ctx), one))
        if a != 1:
            rec.check("steinberg", inputs, lambda: (hilbert(a, 1 - a, ctx), one))
        m = powers[i % len(powers)]
        rec.check("power_left", {**inputs, "m": m}, lambda: (hilbert(a**m, b, ctx), hilbert(a, b, ctx) ** m))
        rec.check("power_right", {**inputs, "m": m}, lambda: (hilbert(a, b**m, ctx), hilbert(a, b, ctx) ** m))
        rec.check("pairs_with_minus_self", inputs, lambda: (hilbert(a, -a, ctx), one))
        rec.check("pairs_with_square", inputs, lambda: (hilbert(a, a * a, ctx), one))
        rec.check("nth_power_kernel", inputs, lambda: (hilbert(a**ctx.n, b, ctx), one))
        if not is_nth_power(a, ctx):
            rec.check(
                "nondegeneracy_witness",
                inputs,
                lambda: (hilbert(a, nondegeneracy_witness(a, ctx), ctx).is_one, False),
            )
    return cfg.trials, rec.failures


def _suite_cocycle(cfg: SampleConfig, ctx: PadicContext):
    rec = _Recorder()
    for i in range(cfg.trials):
        g1 = sample_gl2(cfg, ctx, i, 0)
        g2 = sample_gl2(cfg, ctx, i, 1)
        g3 = sample_gl2(cfg, ctx, i, 2)
        inputs = {"g1": g1, "g2": g2, "g3": g3}
        rec.check(
            "cocycle_identity",
            inputs,
            lambda: (
                cocycle(g1 @ g2, g3, ctx) * cocycle(g1, g2, ctx),
                cocycle(g1, g2 @ g3, ctx) * cocycle(g2, g3, ctx),
            ),
        )
        # conjugation bookkeeping for the pair (x, g) = (g1, g2)
        x, g = g1, g2
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
        rec.check(
            "conjugated_inverse_pair",
            {"x": x, "g": g},
            lambda: (cocycle(x @ gi @ xi, x @ g @ xi, ctx), cocycle(gi, g, ctx) * beta),
        )
        rec.check(
            "lambda_beta_product",
            {"x": x, "g": g},
            lambda: (lam * beta, cocycle(gi @ xi, x, ctx) * cocycle(x, gi @ xi, ctx).inv()),
        )
    return cfg.trials, rec.failures


def _suite_splitting(cfg: SampleConfig, ctx: PadicContext):
    rec = _Recorder()
    for i in range(cfg.trials):
        k1 = sample_congruence(cfg, ctx, i, stream=0)
        k2 = sample_congruence(cfg, ctx, i, stream=1)
        inputs = {"k1": k1, "k2": k2}
        rec.check(
            "kappa_homomorphism",
            inputs,
            lambda: (mul(kappa(k1, ctx), kappa(k2, ctx), ctx), kappa(k1 @ k2, ctx)),
        )
        rec.check(
            "splitting_coboundary",
            inputs,
            lambda: (
                cocycle(k1, k2, ctx),
                splitting_s(k1 @ k2, ctx) * splitting_s(k1, ctx).inv() * splitting_s(k2, ctx).inv(),
            ),
        )
        g3 = sample_gl2(cfg, ctx, i, 2)
        if g3.a * g3.d != 0:
            upper = GL2(g3.a, g3.b, 0, g3.d)
            rec.check("trivial_on_upper_triangular", {"k": upper}, lambda: (splitting_s(upper, ctx), Mu.one(ctx.n)))
    return cfg.trials, rec.failures


def _suite_group(cfg: SampleConfig, ctx: PadicContext):
    rec = _Recorder()
    e = identity(ctx)
    for i in range(cfg.trials):
        h1 = sample_meta(cfg, ctx, i, 0)
        h2 = sample_meta(cfg, ctx, i, 1)
        h3 = sample_meta(cfg, ctx, i, 2)
        lam1 = sample_nonzero(cfg, ctx, i, 3)
        lam2 = sample_nonzero(cfg, ctx, i, 4)
        eps = Mu(i, ctx.n)
        inputs = {"h1": h1, "h2": h2, "h3": h3, "lam1": lam1, "lam2": lam2}
        rec.check(
            "associativity",
            inputs,
            lambda: (mul(mul(h1, h2, ctx), h3, ctx), mul(h1, mul(h2, h3, ctx), ctx)),
        )
        rec.check("right_inverse", inputs, lambda: (mul(h1, inv(h1, ctx), ctx), e))
        rec.check("left_inverse", inputs, lambda: (mul(inv(h1, ctx), h1, ctx), e))
        rec.check("double_inverse", inputs, lambda: (inv(inv(h1, ctx), ctx), h1))
        rec.check(
            "centrality",
            {**inputs, "eps": eps},
            lambda: (mul(central(eps), h1, ctx), mul(h1, central(eps), ctx)),
        )
        rec.check(
            "scalar_commutation",
            inputs,
            lambda: (
                mul(h1, z_tilde(lam1, ctx), ctx),
                scale(hilbert(delta(h1), lam1, ctx), mul(z_tilde(lam1, ctx), h1, ctx)),
            ),
        )
        rec.check(
            "scalar_product",
            inputs,
            lambda: (
                mul(z_tilde(lam1, ctx), z_tilde(lam2, ctx), ctx),
                scale(hilbert(lam1, lam2, ctx), z_tilde(lam1 * lam2, ctx)),
            ),
        )
        rec.check(
            "twist_product",
            inputs,
            lambda: (
                mul(u_tilde(lam1, ctx), u_tilde(lam2, ctx), ctx),
                scale(hilbert(lam1, -lam2, ctx), z_tilde(lam1 * lam2, ctx)),
            ),
        )
        rec.check("twist_inverse", inputs, lambda: (inv(u_tilde(lam1, ctx), ctx), u_tilde(1 / lam1, ctx)))
        rec.check(
            "twist_scalar_product",
            inputs,
            lambda: (
                mul(u_tilde(lam1, ctx), z_tilde(lam2, ctx), ctx),
                scale(hilbert(lam1, lam2, ctx), u_tilde(lam1 * lam2, ctx)),
            ),
        )
    return cfg.trials, rec.failures


def _suite_involution(cfg: SampleConfig, ctx: PadicContext):
    rec = _Recorder()
    for i in range(cfg.trials):
        h1 = sample_meta(cfg, ctx, i, 0)
        h2 = sample_meta(cfg, ctx, i, 1)
        alpha = sample_alpha(cfg, ctx, i, 0)
        eps = Mu(i + 1, ctx.n)
        inputs = {"h1": h1, "h2": h2, "alpha": alpha}
        rec.check(
            "anti_automorphism",
            inputs,
            lambda: (sigma(mul(h1, h2, ctx), ctx), mul(sigma(h2, ctx), sigma(h1, ctx), ctx)),
        )
        rec.check("central_inversion", {"eps": eps}, lambda: (sigma(central(eps), ctx), central(eps.inv())))
        rec.check("involution", inputs, lambda: (sigma(sigma(h1, ctx), ctx), h1))
        rec.check("inverse_compatible", inputs, lambda: (sigma(inv(h1, ctx), ctx), inv(sigma(h1, ctx), ctx)))
        rec.check("lifts_tau", inputs, lambda: (sigma(h1, ctx).g, tau(h1.g)))
        rec.check("closed_equals_defining", inputs, lambda: (sigma(h1, ctx), sigma_defining(h1, ctx)))
        rec.check(
            "tau_factorization",
            inputs,
            lambda: (tau(h1.g), (u_tilde(h1.g.det(), ctx).g @ h1.g.inv()) @ u_tilde(1, ctx).g),
        )
        rec.check(
            "twisted_anti_automorphism",
            inputs,
            lambda: (
                sigma_alpha(mul(h1, h2, ctx), alpha, ctx),
                mul(sigma_alpha(h2, alpha, ctx), sigma_alpha(h1, alpha, ctx), ctx),
            ),
        )
        rec.check(
            "twisted_involution",
            inputs,
            lambda: (sigma_alpha(sigma_alpha(h1, alpha, ctx), alpha, ctx), h1),
        )
        rec.check("twisted_lifts_tau", inputs, lambda: (sigma_alpha(h1, alpha, ctx).g, tau(h1.g)))
        rec.check(
            "determinant_preserved",
            inputs,
            lambda: (delta(sigma_alpha(h1, alpha, ctx)), delta(h1)),
        )
        rec.check(
            "torsor_action",
            inputs,
            lambda: (
                sigma_alpha(h1, alpha, ctx),
                scale(hilbert(alpha, delta(h1), ctx), sigma(h1, ctx)),
            ),
        )
        rec.check(
            "character_multiplicative",
            inputs,
            lambda: (
                hilbert(alpha, delta(mul(h1, h2, ctx)), ctx),
                hilbert(alpha, delta(h1), ctx) * hilbert(alpha, delta(h2), ctx),
            ),
        )
        if is_nth_power(delta(h1), ctx):
            rec.check(
                "trivial_twist_on_nth_power_det",
                inputs,
                lambda: (sigma_alpha(h1, alpha, ctx), sigma(h1, ctx)),
            )
    return cfg.trials, rec.failures


def _witness_body(cfg: SampleConfig, ctx: PadicContext, flavor: str):
    rec = _Recorder()
    for i in range(cfg.trials):
        h = sample_meta(cfg, ctx, i, 0)
        alpha = sample_alpha(cfg, ctx, i, 1)
        inputs = {"h": h} if flavor == "witness" else {"h": h, "alpha": alpha}

        def run():
            try:
                if flavor == "witness":
                    report = witness(h, ctx)
                elif flavor == "witness-alpha":
                    report = witness_alpha(h, alpha, ctx)
                else:
                    report = rho_witness(h, alpha, ctx)
                return report.verified, True
            except VerificationFailed:
                return False, True

        rec.check(f"{flavor}_verified", inputs, run)
        if flavor == "witness":
            case = classify(h.g)
            if case.conjugator is not None:
                x = case.conjugator
                rec.check(
                    "classifier_conjugates",
                    {"g": h.g},
                    lambda: (x @ h.g @ x.inv(), case.target),
                )
                rec.check(
                    "classifier_preserves_invariants",
                    {"g": h.g},
                    lambda: (
                        (format_rational(case.target.det()), format_rational(case.target.trace())),
                        (format_rational(h.g.det()), format_rational(h.g.trace())),
                    ),
                )
    return cfg.trials, rec.failures


def _suite_witness(cfg, ctx):
    return _witness_body(cfg, ctx, "witness")


def _suite_witness_alpha(cfg, ctx):
    return _witness_body(cfg, ctx, "witness-alpha")


def _suite_rho(cfg: SampleConfig, ctx: PadicContext):
    trials, failures = _witness_body(cfg, ctx, "rho")
    rec = _Recorder()
    rec.failures = failures
    for i in range(min(cfg.trials, 200)):
        h1 = sample_meta(cfg, ctx, i, 0)
        h2 = sample_meta(cfg, ctx, i, 1)
        alpha = sample_alpha(cfg, ctx, i, 1)
        inputs = {"h1": h1, "h2": h2, "alpha": alpha}
        rec.check(
            "rho_is_involution",
            inputs,
            lambda: (rho_alpha(rho_alpha(h1, alpha, ctx), alpha, ctx), h1),
        )
        rec.check(
            "rho_is_multiplicative",
            inputs,
            lambda: (
                rho_alpha(mul(h1, h2, ctx), alpha, ctx),
                mul(rho_alpha(h1, alpha, ctx), rho_alpha(h2, alpha, ctx), ctx),
            ),
        )
    return trials, rec.failures


def _suite_obstruction(cfg: SampleConfig, ctx: PadicContext):
    if ctx.n < 3:
        return 0, [], NOT_APPLICABLE
    report = centralizer_obstruction(ctx, trials=cfg.trials, seed=cfg.seed)
    failures = []
    if not report.all_lambda_trivial:
        failures.append(
            {
                "property": "centralizer_cocycle_trivial",
                "inputs": {"h": meta_to_json(report.h)},
                "lhs": report.lambda_histogram,
                "rhs": {0: report.trials},
            }
        )
    if not report.conjugates_all_differ:
        failures.append(
            {
                "property": "sigma_image_not_conjugate",
                "inputs": {"h": meta_to_json(report.h)},
                "lhs": meta_to_json(report.sigma_h),
                "rhs": "all sampled conjugates",
            }
        )
    if not report.witness_verified:
        failures.append(
            {
                "property": "witness_still_verifies",
                "inputs": {"h": meta_to_json(report.h)},
                "lhs": False,
                "rhs": True,
            }
        )
    if square_map_trivial(ctx.n):
        failures.append(
            {
                "property": "square_map_nontrivial",
                "inputs": {"n": ctx.n},
                "lhs": True,
                "rhs": False,
            }
        )
    return report.trials, failures, None


_SUITES = {
    "hilbert": _suite_hilbert,
    "cocycle": _suite_cocycle,
    "splitting": _suite_splitting,
    "group": _suite_group,
    "involution": _suite_involution,
    "witness": _suite_witness,
    "witness-alpha": _suite_witness_alpha,
    "rho": _suite_rho,
    "obstruction": _suite_obstruction,
}


def _run_one(name: str, cfg: SampleConfig, ctx: PadicContext) -> SuiteReport:
    start = time.perf_counter()
    outcome = _SUITES[name](cfg, ctx)
    trials, failures = outcome[0], outcome[1]
    status = outcome[2] if len(outcome) > 2 and outcome[2] else None
    ms = int((time.perf_counter() - start) * 1000)
    if status is None:
        status = PASSED if not failures else FAILED
    return SuiteReport(name, ctx, trials, failures, ms, status)


def run_suite(name: str, cfg: SampleConfig) -> list[SuiteReport]:
    """Run one suite (or 'all') over every context; reports in canonical order."""
    if name == "all":
        names = list(SUITE_NAMES)
    elif name in _SUITES:
        names = [name]
    else:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or 'all'")
    reports = [_run_one(n, cfg, ctx) for n in names for ctx in cfg.ctx_list]
    reports.sort(key=lambda r: (r.suite, r.ctx.p, r.ctx.n))
    return reports
