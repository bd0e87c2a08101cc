"""Runtime verification suites behind the command-line `verify` command.

Each suite re-runs a condensed version of the package's correctness
arguments (identities, certified zeros, boundary residuals, oracle
agreement, FD convergence) with a deterministic seed and reports one
named pass/fail entry per check.  These are smoke-level repetitions of
the full test suite, sized to finish in seconds.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import (
    BoundaryCondition,
    FormPoint,
    Polydisc,
    ZeroCache,
    bessel_j,
    bessel_j_prime,
    bessel_j_second,
    bottom,
    brute_force_spectrum,
    dbar_boundary_residual,
    dirichlet_factors,
    enumerate_modes,
    eval_coefficient,
    fd_convergence_report,
    holomorphic_factor,
    j0_bracket,
    laplacian_residual,
    mode_descriptor,
    neumann_factors,
    oracle_bessel_j,
    robin_residual,
)
from .disc_modes import ModeFactor
from .errors import InvalidArgumentError, PolyspecError

__all__ = ["CheckResult", "SUITES", "run_suite", "run_suites"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(results: list[CheckResult], name: str, passed: bool, detail: str) -> None:
    results.append(CheckResult(name, bool(passed), detail))


def suite_bessel(seed: int, cache: ZeroCache) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out: list[CheckResult] = []

    worst = 0.0
    for _ in range(20):
        m = int(rng.integers(0, 40))
        z = float(rng.uniform(0.0, 80.0))
        worst = max(worst, abs(bessel_j(-m, z) - (-1.0) ** m * bessel_j(m, z)))
    _check(out, "parity J_(-m) = (-1)^m J_m", worst == 0.0, f"max abs dev {worst:g}")

    worst = 0.0
    for _ in range(30):
        m = int(rng.integers(0, 31))
        z = float(rng.uniform(1e-3, 60.0))
        res = abs(m * bessel_j(m, z) - 0.5 * z * (bessel_j(m + 1, z) + bessel_j(m - 1, z)))
        worst = max(worst, res)
    _check(out, "three-term recurrence residual < 1e-10", worst < 1e-10, f"max {worst:.3g}")

    worst = 0.0
    for _ in range(30):
        m = int(rng.integers(0, 31))
        z = float(rng.uniform(0.5, 60.0))
        res = abs(
            bessel_j_second(m, z)
            + bessel_j_prime(m, z) / z
            + (1.0 - m * m / (z * z)) * bessel_j(m, z)
        )
        worst = max(worst, res)
    _check(out, "Bessel-equation residual < 1e-9", worst < 1e-9, f"max {worst:.3g}")

    z = 5.0
    worst = 0.0
    for i in range(8):
        t = cmath.exp(2j * math.pi * (i + 0.3) / 8)
        total = sum(t**m * bessel_j(m, z) for m in range(-60, 61))
        worst = max(worst, abs(total - cmath.exp(0.5 * z * (t - 1.0 / t))))
    _check(out, "generating-function identity < 1e-10", worst < 1e-10, f"max {worst:.3g}")

    theta = 2.0 * math.pi * np.arange(2048) / 2048
    worst = 0.0
    for m, z in ((0, 7.0), (3, 12.5), (10, 30.0)):
        quad = float(np.mean(np.cos(m * theta - z * np.sin(theta))))
        worst = max(worst, abs(quad - bessel_j(m, z)))
    _check(out, "integral representation < 1e-9", worst < 1e-9, f"max {worst:.3g}")

    worst = 0.0
    for m, z in ((0, 2.0), (1, 1.0), (5, 1.0), (7, 25.0), (0, 40.0)):
        ref = float(oracle_bessel_j(m, z, 30))
        err = abs(bessel_j(m, z) - ref) / max(abs(ref), 1e-13)
        worst = max(worst, err)
    _check(out, "agreement with arbitrary-precision oracle", worst < 1e-12, f"max rel {worst:.3g}")
    return out


def suite_zeros(seed: int, cache: ZeroCache) -> list[CheckResult]:
    out: list[CheckResult] = []
    ok = True
    for k in range(10):
        lo, hi = j0_bracket(k)
        z = cache.zero(0, k + 1)
        ok = ok and lo < z < hi
    _check(out, "first 10 J_0 zeros inside ((k+1/2)pi,(k+1)pi)", ok, "")

    ok = True
    for m in range(0, 8):
        for j in range(1, 8):
            ok = ok and cache.zero(m, j) < cache.zero(m + 1, j) < cache.zero(m, j + 1)
    _check(out, "interlacing up to order/index 8", ok, "")

    worst = 0.0
    slope = math.inf
    for m in range(0, 8):
        for j in range(1, 8):
            lam = cache.zero(m, j)
            worst = max(worst, abs(bessel_j(m, lam)))
            slope = min(slope, abs(bessel_j_prime(m, lam)))
    _check(out, "|J_m| < 1e-11 at cached zeros", worst < 1e-11, f"max {worst:.3g}")
    _check(out, "zeros are simple (|J'_m| > 1e-3)", slope > 1e-3, f"min {slope:.3g}")
    _check(
        out,
        "negative order reduces to |m|",
        cache.zero(-3, 2) == cache.zero(3, 2),
        "",
    )
    return out


def suite_modes(seed: int, cache: ZeroCache) -> list[CheckResult]:
    out: list[CheckResult] = []
    facs = dirichlet_factors(1.0, 6.0, cache)
    _check(
        out,
        "Dirichlet factors on unit disc below 6",
        len(facs) == 1
        and facs[0].angular_order == 0
        and abs(facs[0].lambda_k - 5.783185962946785) < 1e-10,
        f"got {len(facs)} factors",
    )
    nfac = neumann_factors(1.0, 20.0, cache)
    worst = max(robin_residual(f) for f in nfac)
    _check(out, "Robin residual < 1e-10 at construction", worst < 1e-10, f"max {worst:.3g}")
    f0 = nfac[0]
    perturbed = ModeFactor(f0.kind, f0.angular_order, f0.radial_index, f0.radius, f0.lambda_k * 1.01)
    _check(
        out,
        "Robin residual detects 1% eigenvalue perturbation",
        robin_residual(perturbed) > 1e-3,
        f"residual {robin_residual(perturbed):.3g}",
    )
    try:
        holomorphic_factor(-1, 1.0)
        rejected = False
    except InvalidArgumentError:
        rejected = True
    _check(out, "negative monomial exponent rejected", rejected, "")
    return out


def suite_spectrum_oracle(seed: int, cache: ZeroCache) -> list[CheckResult]:
    out: list[CheckResult] = []
    for radii in ((1.0, 1.0), (1.0, math.sqrt(2.0))):
        P = Polydisc(radii)
        modes = enumerate_modes(P, 1, 10.0, cache)
        ours = sorted((m.value, mode_descriptor(m)) for m in modes)
        oracle = sorted(
            (v, d) for v, d in brute_force_spectrum(P, 1, 10.0, 8, 4, cache)
        )
        same = len(ours) == len(oracle) and all(
            abs(a[0] - b[0]) < 1e-10 and a[1] == b[1] for a, b in zip(ours, oracle)
        )
        _check(
            out,
            f"enumeration equals brute force on radii {radii}",
            same,
            f"{len(ours)} vs {len(oracle)} modes",
        )
        val, J = bottom(P, 1, cache)
        first = min(modes, key=lambda m: m.value)
        _check(
            out,
            f"closed-form bottom matches enumeration on radii {radii}",
            abs(val - first.value) < 1e-12 * val and first.has_holomorphic,
            f"bottom {val:.12g}",
        )
    return out


def suite_forms(seed: int, cache: ZeroCache) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out: list[CheckResult] = []
    P = Polydisc((1.0, 1.0))
    modes = enumerate_modes(P, 1, 8.0, cache)
    worst_pde = 0.0
    worst_dir = 0.0
    worst_dbar = 0.0
    for mode in modes:
        for _ in range(5):
            pt = FormPoint.from_polar(rng.uniform(0.05, 0.95, 2), rng.uniform(0, 2 * math.pi, 2))
            worst_pde = max(worst_pde, laplacian_residual(mode, pt))
        for k in mode.J:
            r = [0.5, 0.5]
            r[k - 1] = 1.0
            pt = FormPoint.from_polar(r, rng.uniform(0, 2 * math.pi, 2))
            worst_dir = max(worst_dir, abs(eval_coefficient(mode, pt)))
        for k in range(1, 3):
            if k not in mode.J:
                worst_dbar = max(
                    worst_dbar, dbar_boundary_residual(mode, k, float(rng.uniform(0, 2 * math.pi)))
                )
    _check(out, "eigenvalue-equation residual < 1e-8", worst_pde < 1e-8, f"max {worst_pde:.3g}")
    _check(out, "Dirichlet boundary values < 1e-11", worst_dir < 1e-11, f"max {worst_dir:.3g}")
    _check(out, "dbar boundary residuals < 1e-10", worst_dbar < 1e-10, f"max {worst_dbar:.3g}")
    return out


def suite_fd(seed: int, cache: ZeroCache) -> list[CheckResult]:
    out: list[CheckResult] = []
    for m in (-1, 0, 1):
        for bc in (BoundaryCondition.DIRICHLET, BoundaryCondition.DBAR_NEUMANN):
            rep = fd_convergence_report(m, bc, 1.0, 2, cache, grid_sizes=(500, 1000, 2000))
            slopes_ok = all(
                abs(s - 2.0) <= 0.3 for e in rep["eigenvalues"] for s in e["slopes"]
            )
            rich_ok = all(e["richardson_rel_error"] < 1e-5 for e in rep["eigenvalues"])
            zero_ok = True
            if bc is BoundaryCondition.DBAR_NEUMANN:
                if m >= 0:
                    zero_ok = rep["zero_mode_expected"] and all(
                        abs(v) < 1e-3 * rep["eigenvalues"][0]["exact"]
                        for v in rep["zero_mode"].values()
                    )
                else:
                    zero_ok = not rep["zero_mode_expected"]
            _check(
                out,
                f"FD convergence m={m} bc={bc.value}",
                slopes_ok and rich_ok and zero_ok,
                "order-2 decay and Richardson agreement",
            )
    return out


SUITES = {
    "bessel": suite_bessel,
    "zeros": suite_zeros,
    "modes": suite_modes,
    "spectrum-oracle": suite_spectrum_oracle,
    "forms": suite_forms,
    "fd": suite_fd,
}


def run_suite(name: str, seed: int = 0, cache: ZeroCache | None = None) -> dict:
    """Run one suite; returns {suite, seed, passed, checks: [...]}."""
    if name not in SUITES:
        raise InvalidArgumentError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if cache is None:
        cache = ZeroCache()
    try:
        checks = SUITES[name](seed, cache)
    except PolyspecError as exc:  # a suite must never die silently
        checks = [CheckResult(f"{name} suite execution", False, f"{type(exc).__name__}: {exc}")]
    return {
        "suite": name,
        "seed": seed,
        "passed": all(c.passed for c in checks),
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks],
    }


def run_suites(names: list[str], seed: int = 0) -> list[dict]:
    cache = ZeroCache()
    return [run_suite(n, seed, cache) for n in names]
