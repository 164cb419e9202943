"""Self-verification suite: every primary correctness criterion in one place.

Each check compares a numerical result against an independent expectation
(closed form, quadrature oracle, or second pipeline) at a pinned tolerance.
The CLI `qvdp verify` prints one line per check; the test suite asserts them.
"""
from __future__ import annotations

import math
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from . import analytic, observables, presets, spectrum, sweep
from .errors import DistortionBoundError
from .liouvillian import SystemParams, solve_steady


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: str
    expected: str
    detail: str = ""


#: Tolerance profiles.  "loose" widens every band by the given factor.
PROFILES = {"default": 1.0, "loose": 2.0}


def _tol(profile: str, value: float) -> float:
    try:
        return value * PROFILES[profile]
    except KeyError:
        raise ValueError(f"unknown tolerance profile {profile!r}; "
                         f"valid: {sorted(PROFILES)}") from None


def check_undriven_deep_quantum(profile="default") -> CheckResult:
    tol = _tol(profile, 1e-3)
    st = solve_steady(SystemParams(gamma2=1e4))
    p = st.populations
    N = observables.amplitude(st.rho)
    ok = (abs(p[0] - 2 / 3) < tol and abs(p[1] - 1 / 3) < tol
          and abs(N - 1 / 3) < tol)
    return CheckResult(
        "undriven-deep-quantum-limit", ok,
        f"pops=({p[0]:.6f},{p[1]:.6f}) N={N:.6f}",
        f"(2/3,1/3), N=1/3 within {tol:g}")


def check_noise_amplitude(profile="default") -> CheckResult:
    tol = _tol(profile, 0.005)
    worst = 0.0
    for k in (0.5, 1.0, 2.0, 5.0):
        st = solve_steady(SystemParams(gamma2=1e4, kappa=k))
        N = observables.amplitude(st.rho)
        ref = 1.0 / (3.0 + k)
        worst = max(worst, abs(N - ref) / ref)
    return CheckResult(
        "noise-dependence-of-amplitude", worst < tol,
        f"max rel err {worst:.2e}", f"N0 = 1/(3+kappa) within {tol:.3g}")


AMPLITUDE_GRID = np.logspace(-2, 3, 26)


def _amplitude_errors(method: str, lo: float, hi: float) -> float:
    worst = 0.0
    for g2 in AMPLITUDE_GRID:
        if not lo <= g2 <= hi:
            continue
        p = SystemParams(gamma2=float(g2))
        N = observables.amplitude(solve_steady(p).rho)
        worst = max(worst, abs(N - analytic.amplitude_closed(p, method)) / N)
    return worst


def check_amplitude_regimes_semiclassical(profile="default") -> CheckResult:
    tol = _tol(profile, 0.10)
    sse = _amplitude_errors("sse", 0.0, 0.1)
    mf = _amplitude_errors("mean-field", 0.0, 0.02)
    return CheckResult(
        "amplitude-regimes-semiclassical", sse <= tol and mf <= tol,
        f"worst rel err: sse {sse:.3f} (g2<=0.1), mean-field {mf:.3f} (g2<=0.02)",
        f"both <= {tol:.2f}")


def check_amplitude_regimes_ansatz(profile="default") -> CheckResult:
    # Known red: the three-level ansatz truncation error at gamma2/gamma1 = 10
    # is ~7%, decaying like 1/gamma2; it drops below 2% only near 45.
    tol = _tol(profile, 0.02)
    worst = _amplitude_errors("undriven", 10.0, math.inf)
    return CheckResult(
        "amplitude-regime-deep-quantum", worst <= tol,
        f"worst rel err {worst:.3f} over g2/g1 >= 10",
        f"<= {tol:.2f}",
        detail="closed-form truncation error exceeds the band near g2/g1 = 10")


def check_arnold_slices(profile="default") -> CheckResult:
    slice_tol = _tol(profile, 0.10)
    region_tol = _tol(profile, 0.12)
    worst_slice = 0.0
    for g2 in (100.0, 1000.0):
        for W in (0.1, 0.3, 0.5):
            for d in np.linspace(-2, 2, 21):
                p = SystemParams(gamma2=g2, delta=float(d), Omega=W)
                S, _ = observables.sync_measure(solve_steady(p).rho)
                Sa, _ = analytic.sync_closed(p, "noiseless")
                worst_slice = max(worst_slice, abs(S - Sa) / Sa)
    # worst case inside the eps = 0.1 distortion region at gamma2/gamma1 = 100
    N0 = observables.amplitude(solve_steady(SystemParams(gamma2=100.0)).rho)
    worst_region = 0.0
    for W in np.linspace(0.1, 1.5, 15):
        for d in np.linspace(0.0, 2.0, 11):
            p = SystemParams(gamma2=100.0, delta=float(d), Omega=float(W))
            st = solve_steady(p)
            if abs(observables.amplitude(st.rho) - N0) / N0 > 0.1:
                continue
            S, _ = observables.sync_measure(st.rho)
            Sa, _ = analytic.sync_closed(p, "noiseless")
            worst_region = max(worst_region, abs(S - Sa) / Sa)
    ok = worst_slice <= slice_tol and worst_region <= region_tol
    return CheckResult(
        "arnold-tongue-slices", ok,
        f"slice max {worst_slice:.3f}, eps-region max {worst_region:.3f}",
        f"slices <= {slice_tol:.2f}, eps-region <= {region_tol:.2f}")


def check_sync_bound(profile="default") -> CheckResult:
    bound = 1 / (2 * math.sqrt(2)) + _tol(profile, 0.01)
    Smax, arg = 0.0, None
    for k in np.linspace(0, 10, 11):
        for W in np.linspace(0, 10, 11):
            p = SystemParams(gamma2=1e4, kappa=float(k), Omega=float(W))
            S, _ = observables.sync_measure(solve_steady(p).rho)
            if S > Smax:
                Smax, arg = S, (float(k), float(W))
    return CheckResult(
        "synchronization-bound", Smax <= bound,
        f"max S = {Smax:.4f} at (kappa,Omega)={arg}",
        f"<= 1/(2 sqrt 2) + {bound - 1 / (2 * math.sqrt(2)):.3g}")


def _S_at(g2: float, kappa: float, Omega: float) -> float:
    p = SystemParams(gamma2=g2, kappa=kappa, Omega=Omega)
    return observables.sync_measure(solve_steady(p).rho)[0]


def check_noise_boost(profile="default") -> CheckResult:
    # threshold-compensated drive: S must grow from kappa = 0
    def S_th(kappa):
        p = SystemParams(gamma2=100.0, kappa=kappa)
        return _S_at(100.0, kappa, analytic.threshold_drive(p, 0.1))

    grew = S_th(0.5) > S_th(0.0)

    # fixed drive: finite-difference slope vs the closed-form derivative
    W, h = 0.5, 1e-4
    slope = (_S_at(1e4, h, W) - _S_at(1e4, 0.0, W)) / h
    ref, _ = analytic.boost_analysis(SystemParams(gamma2=1e4, Omega=W))
    rel = abs(slope - ref) / ref
    tol = _tol(profile, 0.05)
    ok = grew and slope > 0 and rel < tol
    return CheckResult(
        "noise-boosts-synchronization", ok,
        f"S(0.5)>S(0): {grew}; dS/dkappa = {slope:.6f} vs {ref:.6f} (rel {rel:.3f})",
        f"growth and slope match within {tol:.2f}")


def check_boost_impossibility(profile="default") -> CheckResult:
    h = 1e-4
    slope = (_S_at(0.5, h, 0.1) - _S_at(0.5, 0.0, 0.1)) / h
    return CheckResult(
        "boost-impossible-below-3/4", slope <= 0,
        f"dS/dkappa = {slope:.3e} at gamma2/gamma1=0.5",
        "<= 0")


def check_threshold_bound(profile="default") -> CheckResult:
    details = []
    ok = True
    for k in (0.0, 2.0):
        p = SystemParams(gamma2=100.0, kappa=k)
        bound = analytic.epsilon_bound(p)
        ref = (1 + k) / (2 * (3 + k))
        ok &= abs(bound - ref) < 1e-12
        try:
            analytic.threshold_drive(p, bound)
            ok = False
            details.append(f"no error at eps=bound (kappa={k})")
        except DistortionBoundError:
            pass
        val = analytic.threshold_drive(p, bound - 1e-9)
        ok &= math.isfinite(val)
    ok &= abs(analytic.epsilon_bound(SystemParams(gamma2=100.0)) - 1 / 6) < 1e-12
    return CheckResult(
        "distortion-threshold-bound", ok,
        "errors exactly at eps >= (g1+kappa)/(2(3 g1+kappa)); kappa=0 bound 1/6",
        "boundary within 1e-12", detail="; ".join(details))


def check_mu_drive_independence(profile="default") -> CheckResult:
    tol = _tol(profile, 1e-2)
    mus = []
    for W in (0.05, 0.5):
        p = SystemParams(gamma2=1e4, delta=1.0, kappa=1.0, Omega=W)
        _, mu = observables.sync_measure(solve_steady(p).rho)
        mus.append(mu)
    ref = analytic.mu_arctan(SystemParams(gamma2=1e4, delta=1.0, kappa=1.0))
    spread = abs(mus[0] - mus[1])
    err = max(abs(m - ref) for m in mus)
    return CheckResult(
        "mean-direction-drive-independence",
        spread < tol and err < tol,
        f"mu = {mus[0]:.4f}, {mus[1]:.4f}; arctan form {ref:.4f}",
        f"spread and offset < {tol:g} rad")


def check_cardioid(profile="default") -> CheckResult:
    tol = _tol(profile, 0.02)
    st = solve_steady(SystemParams(gamma2=1e4, delta=0.5, Omega=0.1))
    S, mu = observables.sync_measure(st.rho)
    ps = observables.phase_distribution(st.rho, 512)
    resid = np.max(np.abs(ps[:, 1] - analytic.cardioid(ps[:, 0], S, mu)))
    rel = resid * 2 * math.pi
    return CheckResult(
        "cardioid-phase-distribution", rel < tol,
        f"max residual {rel:.2e} of 1/2pi", f"< {tol:g}")


def check_mrl_oracle(profile="default") -> CheckResult:
    tol = _tol(profile, 1e-8)
    rng = np.random.default_rng(20240817)
    worst = 0.0
    n_grid = 4096
    for _ in range(50):
        dim = int(rng.choice([4, 8, 16]))
        A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        rho = A @ A.conj().T
        rho /= np.trace(rho).real
        S, _ = observables.sync_measure(rho)
        ps = observables.phase_distribution(rho, n_grid)
        # uniform-grid rectangle rule: exact for trigonometric polynomials
        c = np.sum(np.exp(1j * ps[:, 0]) * ps[:, 1]) * (2 * np.pi / n_grid)
        worst = max(worst, abs(abs(c) - S))
    return CheckResult(
        "mrl-quadrature-oracle", worst < tol,
        f"max |S_subdiag - S_quadrature| = {worst:.2e}", f"< {tol:g}")


def check_squeezing_crossover(profile="default") -> CheckResult:
    cfg = presets.get_preset("fig4e-crossover")
    g2s = cfg.axes[0].values()
    harm, sq = [], []
    for g2 in g2s:
        base = SystemParams(gamma2=float(g2), delta=1.0)
        h = spectrum.power_spectrum(base.replace(Omega=1.1)).delta_rel
        s = spectrum.power_spectrum(base.replace(eta=1.1)).delta_rel
        harm.append(abs(h))
        sq.append(abs(s))
    harm, sq = np.array(harm), np.array(sq)
    flat = harm.max() / harm.min() < _tol(profile, 3.0)
    monotone = bool(np.all(np.diff(sq) <= 1e-4))
    dies = sq[-1] < 0.05 * sq[0]
    diff = sq - harm
    cross = None
    for i in range(len(g2s) - 1):
        if diff[i] >= 0 > diff[i + 1]:
            # log-linear interpolation of the sign change
            t = diff[i] / (diff[i] - diff[i + 1])
            cross = float(np.exp(np.log(g2s[i])
                                 + t * (np.log(g2s[i + 1]) - np.log(g2s[i]))))
    in_band = cross is not None and 8.0 <= cross <= 20.0
    ok = flat and monotone and dies and in_band
    return CheckResult(
        "squeezing-crossover", ok,
        f"harmonic spread x{harm.max() / harm.min():.2f}, squeeze monotone={monotone}, "
        f"tail ratio {sq[-1] / sq[0]:.2e}, crossover at {cross and f'{cross:.1f}'}",
        "flat (<x3), monotone, tail < 0.05, crossover in [8, 20]")


def check_spectrum_crossval(profile="default") -> CheckResult:
    peak_tol = _tol(profile, 0.01)
    sum_tol = _tol(profile, 0.02)
    rng = np.random.default_rng(7)
    worst_pipe, worst_sum = 0.0, 0.0
    for _ in range(10):
        p = SystemParams(
            gamma2=float(10 ** rng.uniform(0, 2)),
            kappa=float(rng.uniform(0, 1)),
            delta=float(rng.uniform(-2, 2)),
            Omega=float(rng.uniform(0, 1)),
            eta=float(rng.uniform(0, 0.5)),
        )
        r = spectrum.power_spectrum(p)
        sub = r.freqs[:: max(1, r.freqs.size // 80)]
        d1 = spectrum.power_spectrum(p, freqs=sub).density
        d2 = spectrum.correlation_spectrum(p, sub)
        worst_pipe = max(worst_pipe, float(np.max(np.abs(d1 - d2)) / np.max(d1)))

        wide = np.linspace(-300, 300, 40001)
        w = spectrum.power_spectrum(p, freqs=wide)
        total = spectrum.spectral_weight(w) / (2 * math.pi)
        worst_sum = max(worst_sum, abs(total - w.incoherent_weight)
                        / max(w.incoherent_weight, 1e-12))
    ok = worst_pipe < peak_tol and worst_sum < sum_tol
    return CheckResult(
        "spectrum-cross-validation", ok,
        f"pipeline diff {worst_pipe:.2e} of peak, sum rule err {worst_sum:.2e}",
        f"pipelines < {peak_tol:g}, sum rule < {sum_tol:g}")


def check_determinism(profile="default") -> CheckResult:
    cfg = presets.get_preset("fig2a")
    with tempfile.TemporaryDirectory() as tmp:
        p1, _ = sweep.run_scenario(cfg, os.path.join(tmp, "a"))
        p2, _ = sweep.run_scenario(cfg, os.path.join(tmp, "b"), workers=2)
        with open(p1, "rb") as f1, open(p2, "rb") as f2:
            same = f1.read() == f2.read()
    return CheckResult(
        "deterministic-csv", same,
        f"byte-identical: {same}", "identical across runs and worker counts")


ALL_CHECKS = [
    check_undriven_deep_quantum,
    check_noise_amplitude,
    check_amplitude_regimes_semiclassical,
    check_amplitude_regimes_ansatz,
    check_arnold_slices,
    check_sync_bound,
    check_noise_boost,
    check_boost_impossibility,
    check_threshold_bound,
    check_mu_drive_independence,
    check_cardioid,
    check_mrl_oracle,
    check_squeezing_crossover,
    check_spectrum_crossval,
    check_determinism,
]


def run_all(profile: str = "default") -> list[CheckResult]:
    return [check(profile) for check in ALL_CHECKS]
