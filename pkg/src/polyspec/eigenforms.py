"""Pointwise evaluation and verification of eigenform coefficients.

Each eigenform has a single dbar_J component; its coefficient is the
product over variables of the separated factors (Bessel profiles times
angular phases, or holomorphic monomials).  This module evaluates that
coefficient and checks, at chosen points,

* the eigenvalue equation: one quarter of the (negated) Laplacian equals
  the eigenvalue times the coefficient;
* the Dirichlet condition (coefficient vanishes where |z_k| = a_k, k in J);
* the dbar condition for k not in J, via the polar Wirtinger derivative
  (e^{i t}/2)(d/dr + (i/r) d/dt) evaluated on the circle.

All derivatives are analytic: radial ones come from the Bessel recurrences
(the second derivative from the first-derivative recurrence applied twice,
so residuals against the Bessel equation stay meaningful), monomial ones
are exact.  No finite differences.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .bessel import (
    DEFAULT_CONFIG,
    EvalConfig,
    bessel_j,
    bessel_j_prime,
    bessel_j_second,
)
from .disc_modes import FactorKind, ModeFactor
from .errors import InvalidArgumentError
from .spectrum import EigenMode

__all__ = [
    "FormPoint",
    "eval_coefficient",
    "laplacian_residual",
    "box_coefficient_value",
    "dbar_boundary_residual",
    "factor_dbar_boundary",
]

_BOUNDARY_FUZZ = 1e-12  # tolerated relative overshoot of |z_k| past a_k


@dataclass(frozen=True)
class FormPoint:
    """A point of the closed polydisc, kept in polar parts per variable."""

    r: tuple[float, ...]
    theta: tuple[float, ...]

    @classmethod
    def from_complex(cls, z) -> "FormPoint":
        zs = tuple(complex(v) for v in z)
        return cls(tuple(abs(v) for v in zs), tuple(cmath.phase(v) for v in zs))

    @classmethod
    def from_polar(cls, r, theta) -> "FormPoint":
        rr = tuple(float(v) for v in r)
        if any(v < 0.0 for v in rr):
            raise InvalidArgumentError("polar radii must be non-negative")
        return cls(rr, tuple(float(v) for v in theta))

    @property
    def z(self) -> tuple[complex, ...]:
        return tuple(rv * cmath.exp(1j * tv) for rv, tv in zip(self.r, self.theta))


def _check_point(mode: EigenMode, p: FormPoint) -> None:
    if len(p.r) != len(mode.factors):
        raise InvalidArgumentError(
            f"point has {len(p.r)} variables, mode has {len(mode.factors)}"
        )
    for rv, f in zip(p.r, mode.factors):
        if rv > f.radius * (1.0 + _BOUNDARY_FUZZ):
            raise InvalidArgumentError(f"point lies outside the closed polydisc (r={rv})")


def _factor_value(f: ModeFactor, r: float, theta: float, cfg: EvalConfig) -> complex:
    m = f.angular_order
    if f.kind is FactorKind.HOLOMORPHIC:
        radial = r**m if m else 1.0
    else:
        s = math.sqrt(f.lambda_k)
        order = abs(m) if f.kind is FactorKind.DIRICHLET else m
        radial = bessel_j(order, s * r, cfg)
    return radial * cmath.exp(1j * m * theta)


def eval_coefficient(mode: EigenMode, p: FormPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """The coefficient of dbar_J at p: the product of all factor values."""
    _check_point(mode, p)
    out = complex(1.0)
    for f, rv, tv in zip(mode.factors, p.r, p.theta):
        out *= _factor_value(f, min(rv, f.radius), tv, cfg)
    return out


def _factor_laplacian(f: ModeFactor, r: float, theta: float, cfg: EvalConfig) -> complex:
    """Per-variable Laplacian of the factor in polar form."""
    m = f.angular_order
    if f.kind is FactorKind.HOLOMORPHIC:
        return 0.0  # monomials z^p are harmonic, exactly
    s = math.sqrt(f.lambda_k)
    order = abs(m) if f.kind is FactorKind.DIRICHLET else m
    x = s * r
    val = bessel_j(order, x, cfg)
    d1 = s * bessel_j_prime(order, x, cfg)
    d2 = s * s * bessel_j_second(order, x, cfg)
    radial = d2 + d1 / r - (m * m) / (r * r) * val
    return radial * cmath.exp(1j * m * theta)


def _value_and_laplacian(
    mode: EigenMode, p: FormPoint, cfg: EvalConfig
) -> tuple[complex, complex]:
    _check_point(mode, p)
    for rv, f in zip(p.r, mode.factors):
        if rv >= f.radius:
            raise InvalidArgumentError("interior point required, got r on or past the boundary")
        if f.kind is not FactorKind.HOLOMORPHIC and rv <= 0.0:
            raise InvalidArgumentError("polar-chart axis r = 0 excluded for oscillatory factors")
    values = [
        _factor_value(f, rv, tv, cfg) for f, rv, tv in zip(mode.factors, p.r, p.theta)
    ]
    laps = [
        _factor_laplacian(f, rv, tv, cfg) for f, rv, tv in zip(mode.factors, p.r, p.theta)
    ]
    u = complex(1.0)
    for v in values:
        u *= v
    lap_u = complex(0.0)
    for k in range(len(values)):
        term = laps[k]
        for k2, v in enumerate(values):
            if k2 != k:
                term *= v
        lap_u += term
    return u, lap_u


def laplacian_residual(mode: EigenMode, p: FormPoint, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Relative residual |(-1/4) Lap(u) - lambda u| / max(1e-30, |lambda u|) at p.

    Requires a strictly interior point with r_k > 0 wherever the factor is
    oscillatory (the polar chart is singular on the coordinate axes).
    """
    u, lap_u = _value_and_laplacian(mode, p, cfg)
    target = mode.value * u
    return abs(-0.25 * lap_u - target) / max(1e-30, abs(target))


def box_coefficient_value(
    mode: EigenMode, p: FormPoint, cfg: EvalConfig = DEFAULT_CONFIG
) -> complex:
    """Pointwise value of -(1/4) Lap applied to the mode's coefficient.

    Computed from the analytic derivatives, not from the eigenvalue, so it
    provides an independent pointwise route to the operator's action.
    """
    _, lap_u = _value_and_laplacian(mode, p, cfg)
    return -0.25 * lap_u


def factor_dbar_boundary(f: ModeFactor, theta: float, cfg: EvalConfig = DEFAULT_CONFIG) -> complex:
    """Polar Wirtinger derivative (e^{it}/2)(d/dr + (i/r) d/dt) at r = a.

    For a factor g(r) e^{imt} this is (e^{i(m+1)t}/2)(g'(a) - (m/a) g(a)).
    Holomorphic monomials give 0; Neumann-positive factors reduce through
    the derivative recurrence to a multiple of J_{m+1} at a zero of J_{m+1},
    hence vanish; Dirichlet profiles generically do not (J' is nonzero at a
    simple zero of J).
    """
    a = f.radius
    m = f.angular_order
    if f.kind is FactorKind.HOLOMORPHIC:
        g = a**m if m else 1.0
        gp = m * a ** (m - 1) if m else 0.0
    else:
        s = math.sqrt(f.lambda_k)
        order = abs(m) if f.kind is FactorKind.DIRICHLET else m
        g = bessel_j(order, s * a, cfg)
        gp = s * bessel_j_prime(order, s * a, cfg)
    return 0.5 * (gp - (m / a) * g) * cmath.exp(1j * (m + 1) * theta)


def dbar_boundary_residual(
    mode: EigenMode, k: int, theta: float, cfg: EvalConfig = DEFAULT_CONFIG
) -> float:
    """|dbar_k of the k-th factor| on the circle |z_k| = a_k, for k not in J."""
    if not (1 <= k <= len(mode.factors)):
        raise InvalidArgumentError(f"variable index {k} out of range")
    if k in set(mode.J):
        raise InvalidArgumentError(f"variable {k} lies in J; the dbar condition applies off J")
    return abs(factor_dbar_boundary(mode.factors[k - 1], theta, cfg))
