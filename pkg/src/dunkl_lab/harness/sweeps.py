"""Dilation sweeps: empirical boundedness verdicts for the estimates.

The constants in the estimates are nonconstructive, so boundedness is
operationalized through dilation scaling: for a family member f and
dilations delta_lam f = f(lam .), the ratio

    ratio(lam) = || T (delta_lam f) ||_q / || delta_lam f ||_p

is evaluated over a dyadic lambda grid.  A pair is reported ``bounded``
when the sup ratio changes by less than 5% as the grid extends from
2^(+-6) to 2^(+-8); ``growing`` verdicts require a pre-registered growth
exponent (from the scaling oracles) predicting a factor >= 2 over a 2^4
dilation step, and assert the observed factor.

Everything is computed in the exact rescaled frame

    ratio(lam) = lam^(D(1/p - 1/q)) * || F^-1[m(lam .) F f] ||_q / || f ||_p

(change of variables; both sides scale identically), which keeps every
quadrature at unit scale: the dilated symbol oscillates at frequency
lam, producing an outgoing shell at radius ~ lam resolved by a
shell-adapted output grid.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..geometry import DunklGeometry, ExponentPair, classify_pair, \
    conjugate_exponent, line_lower_q, line_upper_q, lower_line_interval, \
    upper_line_interval
from ..hankel import _kernel_block
from ..operators import CutoffPsi
from ..quadrature import panel_rule, refine_edges
from ..radial import WeightedMeasure, build_grid, grid_from_nodes, lp_norm, \
    profile_from_samples
from ..rank1 import dunkl_derivative_rank1, lp_norm_rank1, rank1_from_parts
from ..special import scaled_bessel
from . import families, oracles

LAMBDA_EXPONENTS = tuple(range(-8, 9))
SATURATION_LIMIT = 0.05
GROWTH_FACTOR = 2.0
GROWTH_STEP = 16.0  # 2**4

# Pre-registered supercritical probes (growth exponent from the scaling
# oracle must predict at least GROWTH_FACTOR over a GROWTH_STEP dilation).
PROBE_MULTIPLIER = {"n": 3, "gamma": 0.0, "alpha": 1.0, "p": 8.0 / 7.0, "q": 8.0}
PROBE_POWER = {"n": 3, "gamma": 0.0, "t_exp": 1.0, "p": 2.0, "q": 15.0}


@dataclass(frozen=True)
class SweepRow:
    p: float
    q: float
    family: str
    lam: float
    t: float
    ratio: float


@dataclass
class SweepResult:
    name: str
    rows: list[SweepRow] = field(default_factory=list)
    saturation: float = 0.0
    verdict: str = "bounded"
    sup_ratio: float = 0.0
    growth_factor: float | None = None
    predicted_exponent: float | None = None

    def as_json(self) -> dict:
        out = {"sweep": self.name, "saturation": self.saturation,
               "verdict": self.verdict, "sup_ratio": self.sup_ratio}
        if self.growth_factor is not None:
            out["growth_factor"] = self.growth_factor
        if self.predicted_exponent is not None:
            out["predicted_exponent"] = self.predicted_exponent
        return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("DUNKL_LAB_THREADS", "1")))
    except ValueError:
        return 1


def _map_lambdas(fn, lams):
    n = _threads()
    if n <= 1:
        return [fn(lam) for lam in lams]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, lams))


def _shell_grid(center: float, fine: float = 0.08, coarse: float = 0.25,
                pad: float = 12.0):
    """Output grid: fine within +-pad of the shell, coarse in the interior."""
    if center <= 2.0 * pad:
        nodes = np.arange(0.0, center + pad + fine, fine)
    else:
        interior = np.arange(0.0, center - pad, coarse)
        shell = np.arange(center - pad, center + pad + fine, fine)
        nodes = np.concatenate([interior, shell])
    return grid_from_nodes(nodes, panels="nodes")


def _rescaled_output(nu: float, symbol_vals, transform_vals, spectral_radius,
                     out_grid, slope: float):
    """F^-1[ m * G ] on the output grid: direct frequency quadrature."""
    base = np.linspace(0.0, spectral_radius, max(9, int(spectral_radius) + 1))
    edges = refine_edges(base, 2.0 * np.pi / max(slope, 1.0))
    rho, w = panel_rule(edges)
    dens = w * symbol_vals(rho) * transform_vals(rho) * rho ** (2.0 * nu + 1.0)
    vals = _kernel_block(nu, out_grid.nodes, rho) @ dens
    return profile_from_samples(out_grid, vals, tail="rapid")


def _verdict(ratios_by_lam: dict[float, float]) -> tuple[float, float, float]:
    """(sup over all, saturation vs the 2^(+-6) subgrid, growth factor)."""
    lams = sorted(ratios_by_lam)
    sup_all = max(ratios_by_lam[l] for l in lams)
    inner = [ratios_by_lam[l] for l in lams if 2.0 ** -6 - 1e-12 <= l <= 2.0 ** 6 + 1e-12]
    sup_inner = max(inner) if inner else sup_all
    saturation = (sup_all - sup_inner) / sup_inner if sup_inner > 0 else 0.0
    top = ratios_by_lam.get(2.0 ** 8)
    ref = ratios_by_lam.get(2.0 ** 4)
    growth = (top / ref) if (top is not None and ref and ref > 0) else None
    return sup_all, saturation, growth


def sweep_bessel_multiplier(alpha: float, pairs, geom: DunklGeometry,
                            member: families.FamilyMember | None = None,
                            lambda_exponents=LAMBDA_EXPONENTS,
                            expect_growth: bool = False) -> SweepResult:
    """Dilation sweep of the order-alpha Bessel multiplier family.

    ``pairs`` is a list of (p, q).  Inadmissible pairs (per the case
    classifier) are accepted only with ``expect_growth``, and then the
    scaling oracle must predict the registered growth factor.
    """
    member = member or families.gaussian_member(1.0)
    d = geom.homogeneous_dim
    nu = geom.nu
    pairs = [(float(p), float(q)) for p, q in pairs]
    predicted = None
    for p, q in pairs:
        label = classify_pair(alpha, ExponentPair(p, q), geom)
        if label == "none" and not expect_growth:
            raise ValueError(
                f"(p, q) = ({p}, {q}) is not admissible at order {alpha}; "
                "pass expect_growth to run a supercritical probe")
        if expect_growth:
            predicted = oracles.multiplier_growth_exponent(alpha, p, q, geom)
            if predicted * math.log2(GROWTH_STEP) < math.log2(GROWTH_FACTOR):
                raise ValueError(
                    f"scaling oracle predicts growth factor "
                    f"{2 ** (predicted * 4):.3g} < {GROWTH_FACTOR} over a "
                    f"2^4 step; probe at ({p}, {q}) is not pre-registerable")

    base_grid = build_grid(member.support_radius,
                           int(30 * member.support_radius), "uniform")
    f = member.make(base_grid)
    mu = WeightedMeasure(nu)
    base_norms = {p: lp_norm(f, p, mu) for p, _ in pairs}
    mu_order = geom.nu + 1.0 - alpha
    spectral_radius = member.spectral_radius

    def one_lambda(lam: float):
        center = lam  # unit-frequency symbol oscillation -> shell at lam
        out_grid = _shell_grid(center)
        slope = out_grid.r_max + lam
        v = _rescaled_output(
            nu, lambda rho: scaled_bessel(mu_order, lam * rho),
            lambda rho: member.transform(geom, rho),
            spectral_radius, out_grid, slope)
        out = {}
        for p, q in pairs:
            scale = lam ** (d * (1.0 / p - (0.0 if q == math.inf else 1.0 / q)))
            out[(p, q)] = scale * lp_norm(v, q, mu) / base_norms[p]
        return lam, out

    lams = [2.0 ** e for e in lambda_exponents]
    results = dict(_map_lambdas(one_lambda, lams))
    rows = []
    worst_sat = 0.0
    growth = None
    sup_all = 0.0
    for p, q in pairs:
        by_lam = {lam: results[lam][(p, q)] for lam in lams}
        rows.extend(SweepRow(p=p, q=q, family=member.label, lam=lam, t=0.0,
                             ratio=by_lam[lam]) for lam in sorted(by_lam))
        sup_pq, sat, gf = _verdict(by_lam)
        worst_sat = max(worst_sat, sat)
        sup_all = max(sup_all, sup_pq)
        growth = gf if growth is None else max(growth, gf or 0.0)
    if expect_growth:
        verdict = "growing" if (growth or 0.0) >= GROWTH_FACTOR else "bounded"
    else:
        verdict = "bounded" if worst_sat < SATURATION_LIMIT else "growing"
    return SweepResult(name=f"bessel_multiplier alpha={alpha:g} "
                       f"(n={geom.n}, gamma={geom.gamma:g})",
                       rows=rows, saturation=worst_sat, verdict=verdict,
                       sup_ratio=sup_all, growth_factor=growth,
                       predicted_exponent=predicted)


def wave_line_pairs(line: str, geom: DunklGeometry, count: int = 3):
    """(p, q) points on an admissible fixed-time line segment."""
    if line == "upper":
        lo, hi = upper_line_interval(geom)
        fn = line_upper_q
    elif line == "lower":
        lo, hi = lower_line_interval(geom)
        fn = line_lower_q
    else:
        raise ValueError(f"unknown line {line!r}")
    lo = max(lo, 1.0)
    if hi < lo - 1e-12:
        return []
    ps = np.linspace(lo, hi, count)
    pairs = []
    for p in ps:
        try:
            pair = (float(p), float(fn(float(p), geom)))
        except ValueError:
            continue
        if pair not in pairs:
            pairs.append(pair)
    return pairs


def sweep_wave_estimate(p_list, line: str, t_list, geom: DunklGeometry,
                        member: families.FamilyMember | None = None,
                        rank_one_mixed: bool = False,
                        lambda_exponents=LAMBDA_EXPONENTS,
                        expect_growth: bool = False) -> SweepResult:
    """Fixed-time wave ratios along an admissible exponent line.

    Radial sweeps take position data 0 and velocity data from the family;
    ``rank_one_mixed`` (n = 1 only) uses both data and the weighted
    derivative norm in the denominator.  The solution with dilated data
    at time t equals a dilate of the unit-scale solution at time lam * t,
    which is what is actually computed (shell radius lam * t).
    """
    member = member or families.gaussian_member(1.0)
    d = geom.homogeneous_dim
    nu = geom.nu
    line_fn = line_upper_q if line == "upper" else line_lower_q
    pairs = []
    for p in p_list:
        q = float(line_fn(float(p), geom)) if not isinstance(p, tuple) else p[1]
        pairs.append((float(p) if not isinstance(p, tuple) else p[0], q))
    if not pairs:
        raise ValueError("empty exponent list")
    if rank_one_mixed and geom.n != 1:
        raise ValueError("mixed data sweeps require the rank-one geometry")

    base_grid = build_grid(member.support_radius,
                           int(30 * member.support_radius), "uniform")
    f = member.make(base_grid)
    if rank_one_mixed:
        k = geom.gamma
        f1 = rank1_from_parts(f, None, k)
        g1 = rank1_from_parts(member.make(base_grid), None, k)
        dg = dunkl_derivative_rank1(g1)
        base_f = {p: lp_norm_rank1(f1, p) for p, _ in pairs}
        base_dg = {p: lp_norm_rank1(dg, p) for p, _ in pairs}
    else:
        mu = WeightedMeasure(nu)
        base_f = {p: lp_norm(f, p, mu) for p, _ in pairs}
        base_dg = None
    mu_norm = WeightedMeasure(nu)

    def one_case(lam: float, t: float):
        s = lam * t
        out_grid = _shell_grid(s)
        slope = out_grid.r_max + s

        def symbol(rho):
            sin_part = (1.0 / lam) * s * np.sinc(s * rho / np.pi)
            if not rank_one_mixed:
                return sin_part
            return sin_part + np.cos(s * rho)

        v = _rescaled_output(nu, symbol,
                             lambda rho: member.transform(geom, rho),
                             member.spectral_radius, out_grid, slope)
        out = {}
        for p, q in pairs:
            inv_q = 0.0 if q == math.inf else 1.0 / q
            scale = lam ** (d * (1.0 / p - inv_q))
            if rank_one_mixed:
                # Even radial output: the rank-one norm doubles both half
                # lines; numerator and denominator use the same convention.
                num = 2.0 ** inv_q * lp_norm(v, q, mu_norm) if q != math.inf \
                    else lp_norm(v, q, mu_norm)
                den = base_f[p] + lam * base_dg[p]
            else:
                num = lp_norm(v, q, mu_norm)
                den = base_f[p]
            out[(p, q)] = scale * num / den
        return out

    lams = [2.0 ** e for e in lambda_exponents]
    rows = []
    worst_sat = 0.0
    sup_all = 0.0
    growth = None
    for t in t_list:
        results = dict(_map_lambdas(lambda lam: (lam, one_case(lam, float(t))),
                                    lams))
        for p, q in pairs:
            by_lam = {lam: results[lam][(p, q)] for lam in lams}
            rows.extend(SweepRow(p=p, q=q, family=member.label, lam=lam,
                                 t=float(t), ratio=by_lam[lam])
                        for lam in sorted(by_lam))
            sup_pq, sat, gf = _verdict(by_lam)
            worst_sat = max(worst_sat, sat)
            sup_all = max(sup_all, sup_pq)
            growth = gf if growth is None else max(growth, gf or 0.0)
    verdict = "bounded" if worst_sat < SATURATION_LIMIT else "growing"
    kind = "mixed" if rank_one_mixed else "radial"
    return SweepResult(name=f"wave_{line}_line {kind} "
                       f"(n={geom.n}, gamma={geom.gamma:g})",
                       rows=rows, saturation=worst_sat, verdict=verdict,
                       sup_ratio=sup_all, growth_factor=growth)


def sweep_power_multiplier(t_exp: float, p: float, q: float,
                           geom: DunklGeometry,
                           member: families.FamilyMember | None = None,
                           lambda_exponents=LAMBDA_EXPONENTS,
                           expect_growth: bool = False) -> SweepResult:
    """Dilation sweep of the power-decay multiplier min(1, rho^-t)."""
    if not (0.0 < t_exp < geom.homogeneous_dim):
        raise ValueError(f"decay exponent must lie in (0, {geom.homogeneous_dim}), "
                         f"got {t_exp}")
    if q < 2.0 or p > 2.0 or p <= 1.0:
        raise ValueError("the power multiplier sweep needs 1 < p <= 2 <= q")
    member = member or families.gaussian_member(1.0)
    d = geom.homogeneous_dim
    nu = geom.nu
    relation = abs(d * (1.0 / p - 1.0 / q) - t_exp)
    predicted = oracles.power_multiplier_growth_exponent(t_exp, p, q, geom)
    if relation > 1e-9 and not expect_growth:
        raise ValueError(
            f"1/p - 1/q = {1/p - 1/q:.6g} violates the relation t/D = "
            f"{t_exp / d:.6g}; pass expect_growth for a supercritical probe")
    if expect_growth and predicted * 4.0 < math.log2(GROWTH_FACTOR):
        raise ValueError("scaling oracle does not predict the registered "
                         "growth factor at this pair")

    base_grid = build_grid(member.support_radius,
                           int(30 * member.support_radius), "uniform")
    f = member.make(base_grid)
    mu = WeightedMeasure(nu)
    base_norm = lp_norm(f, p, mu)

    def one_lambda(lam: float):
        out_grid = _shell_grid(0.0, fine=0.05, pad=member.support_radius + 4.0)
        slope = out_grid.r_max

        def symbol(rho):
            t = lam * rho
            return np.where(t <= 1.0, 1.0, np.maximum(t, 1e-300) ** (-t_exp))
        v = _rescaled_output(nu, symbol,
                             lambda rho: member.transform(geom, rho),
                             member.spectral_radius, out_grid, slope)
        scale = lam ** (d * (1.0 / p - 1.0 / q))
        return lam, scale * lp_norm(v, q, mu) / base_norm

    lams = [2.0 ** e for e in lambda_exponents]
    by_lam = dict(_map_lambdas(one_lambda, lams))
    rows = [SweepRow(p=p, q=q, family=member.label, lam=lam, t=0.0,
                     ratio=by_lam[lam]) for lam in sorted(by_lam)]
    sup_all, sat, growth = _verdict(by_lam)
    if expect_growth:
        verdict = "growing" if (growth or 0.0) >= GROWTH_FACTOR else "bounded"
    else:
        verdict = "bounded" if sat < SATURATION_LIMIT else "growing"
    return SweepResult(name=f"power_multiplier t={t_exp:g} "
                       f"(n={geom.n}, gamma={geom.gamma:g})",
                       rows=rows, saturation=sat, verdict=verdict,
                       sup_ratio=sup_all, growth_factor=growth,
                       predicted_exponent=predicted)


def sweep_highpass_potential(geom: DunklGeometry, p: float,
                             member: families.FamilyMember | None = None,
                             lambda_exponents=tuple(range(-6, 7)),
                             psi: CutoffPsi | None = None) -> SweepResult:
    """Sup-norm over Lp ratios of the high-pass potential under dilation.

    The hypothesis requires p > D; below it a range error is raised.
    """
    d = geom.homogeneous_dim
    if p <= d:
        raise ValueError(f"the high-pass potential bound requires p > D = {d}, "
                         f"got p = {p}")
    member = member or families.gaussian_member(1.0)
    nu = geom.nu
    psi = psi or CutoffPsi()
    base_grid = build_grid(member.support_radius,
                           int(30 * member.support_radius), "uniform")
    f = member.make(base_grid)
    mu = WeightedMeasure(nu)
    base_norm = lp_norm(f, p, mu)

    def one_lambda(lam: float):
        out_grid = _shell_grid(0.0, fine=0.05, pad=member.support_radius + 4.0)

        def symbol(rho):
            t = lam * rho
            live = t > psi.a
            out = np.zeros_like(np.asarray(rho, dtype=float))
            out[live] = psi(t[live]) / t[live]
            return out
        v = _rescaled_output(nu, symbol,
                             lambda rho: member.transform(geom, rho),
                             member.spectral_radius, out_grid,
                             out_grid.r_max)
        # A(delta_lam f)(x) = v(lam x) after the frequency substitution, so
        # the sup norm of the left side equals sup |v|.
        ratio = lp_norm(v, math.inf, mu) / (lam ** (-d / p) * base_norm)
        return lam, ratio

    lams = [2.0 ** e for e in lambda_exponents]
    by_lam = dict(_map_lambdas(one_lambda, lams))
    rows = [SweepRow(p=p, q=math.inf, family=member.label, lam=lam, t=0.0,
                     ratio=by_lam[lam]) for lam in sorted(by_lam)]
    lams_sorted = sorted(by_lam)
    sup_all = max(by_lam.values())
    inner = [by_lam[l] for l in lams_sorted if 2.0 ** -4 <= l <= 2.0 ** 4]
    sat = (sup_all - max(inner)) / max(inner)
    verdict = "bounded" if sat < SATURATION_LIMIT else "growing"
    return SweepResult(name=f"highpass_potential p={p:g} "
                       f"(n={geom.n}, gamma={geom.gamma:g})",
                       rows=rows, saturation=sat, verdict=verdict,
                       sup_ratio=sup_all)


def check_riesz_and_highpass(geom: DunklGeometry, p_list=(1.5, 2.0, 3.0)):
    """Riesz-transform ratio records plus the high-pass potential verdicts.

    Returns (reports, sweep): ratio extras carry the observed operator
    norms; the high-pass sweep runs at p = D + 1/2.  Asking for the
    potential bound at p <= D raises the hypothesis range error.
    """
    from ..rank1 import riesz_rank1
    from ..radial import dilate, profile_from_samples as _pfs
    from .checks import CheckReport, _sampled_rank1
    from . import families as fam

    if geom.n != 1:
        raise ValueError("the Riesz/high-pass check runs in the rank-one "
                         "geometry")
    k = geom.gamma
    grid = build_grid(16.0, 520, "uniform")
    ratios = {}
    worst = 0.0
    # The sign symbol is homogeneous of degree zero, so the ratio is
    # exactly dilation invariant; the lambda grid shrinks the support
    # (cheap direction) and records the observed constancy.
    for member in (fam.gaussian_member(1.0), fam.hermite_member()):
        base_prof = member.make(grid)
        for parity in ("even", "odd"):
            for lam in (1.0, 2.0, 4.0):
                prof = dilate(base_prof, lam)
                f = rank1_from_parts(prof, None, k) if parity == "even" \
                    else rank1_from_parts(None, prof, k, grid=prof.grid)
                rf = _sampled_rank1(riesz_rank1(f))
                for p in p_list:
                    r = lp_norm_rank1(rf, p) / lp_norm_rank1(f, p)
                    key = (member.label, parity, p)
                    ratios[key] = max(ratios.get(key, 0.0), r)
                    worst = max(worst, r)
    finite = all(math.isfinite(v) for v in ratios.values())
    report = CheckReport(
        "riesz_ratio_bounded", 0.0 if finite else math.inf, 0.5,
        grid_descriptor=f"p in {tuple(p_list)}, dilations {{1/2, 1, 2}}",
        extras={"max_ratio": worst,
                "ratios": {f"{m}/{par}/p={p:g}": round(v, 6)
                           for (m, par, p), v in sorted(ratios.items())}})
    sweep = sweep_highpass_potential(geom, geom.homogeneous_dim + 0.5)
    return [report], sweep
