"""Separated one-variable modes on a disc of radius a.

Three kinds of factor occur in the product eigenforms:

* Dirichlet: u = 0 on the circle.  Eigenvalues (lambda_{|m|,j}/a)^2 with
  radial profile J_{|m|}(lambda_{|m|,j} r / a) and angular factor e^{im t}.
* Neumann-positive: the dbar-derivative of u vanishes on the circle and the
  eigenvalue is positive.  After separation the radial problem carries the
  Robin condition  x R'(x) - m R(x) = 0  at x = sqrt(lambda) a, which via the
  derivative recurrence is exactly J_{m+1}(sqrt(lambda) a) = 0.  Hence the
  eigenvalues are (lambda_{|m+1|,j}/a)^2 with profile J_m and angular order m.
* Holomorphic: the zero eigenvalue of the dbar-Neumann factor; eigenfunctions
  are the monomials z^p.  Smoothness at the origin forces p >= 0.

Factor identity is (kind, angular_order, radial_index): equal eigenvalues
with different angular orders are distinct modes.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .bessel import DEFAULT_CONFIG, EvalConfig, bessel_j, bessel_j_prime
from .errors import InvalidArgumentError
from .zeros import ZeroCache

__all__ = [
    "FactorKind",
    "ModeFactor",
    "dirichlet_factor",
    "neumann_factor",
    "holomorphic_factor",
    "dirichlet_factors",
    "neumann_factors",
    "robin_residual",
    "radial_profile",
]


class FactorKind(enum.Enum):
    DIRICHLET = "dirichlet"
    NEUMANN_POSITIVE = "neumann"
    HOLOMORPHIC = "holomorphic"


@dataclass(frozen=True, order=True)
class ModeFactor:
    """One separated per-variable mode.

    For HOLOMORPHIC factors `angular_order` doubles as the monomial
    exponent p >= 0 and `radial_index` is None.
    """

    kind: FactorKind
    angular_order: int
    radial_index: int | None
    radius: float
    lambda_k: float

    def __post_init__(self) -> None:
        if not (self.radius > 0.0) or not math.isfinite(self.radius):
            raise InvalidArgumentError("factor radius must be positive and finite")
        if self.kind is FactorKind.HOLOMORPHIC:
            if self.angular_order < 0:
                raise InvalidArgumentError(
                    "holomorphic exponent must be >= 0 (smoothness at the origin)"
                )
            if self.radial_index is not None or self.lambda_k != 0.0:
                raise InvalidArgumentError("holomorphic factors carry lambda_k = 0")
        else:
            if self.radial_index is None or self.radial_index < 1:
                raise InvalidArgumentError("oscillatory factors need a radial index >= 1")
            if not (self.lambda_k > 0.0):
                raise InvalidArgumentError("oscillatory factors carry lambda_k > 0")


def dirichlet_factor(m: int, j: int, a: float, cache: ZeroCache) -> ModeFactor:
    lam = (cache.zero(abs(m), j) / a) ** 2
    return ModeFactor(FactorKind.DIRICHLET, m, j, a, lam)


def neumann_factor(m: int, j: int, a: float, cache: ZeroCache) -> ModeFactor:
    lam = (cache.zero(abs(m + 1), j) / a) ** 2
    return ModeFactor(FactorKind.NEUMANN_POSITIVE, m, j, a, lam)


def holomorphic_factor(p: int, a: float) -> ModeFactor:
    return ModeFactor(FactorKind.HOLOMORPHIC, p, None, a, 0.0)


def _sort_key(f: ModeFactor) -> tuple:
    return (f.lambda_k, f.kind.value, f.angular_order, f.radial_index or 0)


def dirichlet_factors(a: float, lambda_max: float, cache: ZeroCache) -> list[ModeFactor]:
    """Every Dirichlet factor on the disc of radius a with lambda_k <= lambda_max.

    +m and -m are listed as distinct factors for m != 0 (their eigenvalues
    coincide, the modes do not).  Completeness of the truncation relies on
    lambda_{m,1} growing strictly with m (interlacing).
    """
    if not (a > 0.0):
        raise InvalidArgumentError("radius must be positive")
    out: list[ModeFactor] = []
    if lambda_max <= 0.0:
        return out
    m = 0
    while True:
        # compare the contracted quantity (z/a)^2 itself, so no borderline
        # factor is gained or lost to the rounding of a sqrt
        if (cache.zero(m, 1) / a) ** 2 > lambda_max:
            break  # lambda_{m,1} grows strictly with m
        j = 1
        while (cache.zero(m, j) / a) ** 2 <= lambda_max:
            out.append(dirichlet_factor(m, j, a, cache))
            if m != 0:
                out.append(dirichlet_factor(-m, j, a, cache))
            j += 1
        m += 1
    out.sort(key=_sort_key)
    return out


def neumann_factors(a: float, lambda_max: float, cache: ZeroCache) -> list[ModeFactor]:
    """Every Neumann-positive factor with lambda_k <= lambda_max.

    Angular orders m with |m + 1| = nu share the zero order nu: for nu = 0
    that is m = -1 alone, for nu >= 1 both m = nu - 1 and m = -nu - 1.
    Holomorphic (lambda = 0) factors are not included here.
    """
    if not (a > 0.0):
        raise InvalidArgumentError("radius must be positive")
    out: list[ModeFactor] = []
    if lambda_max <= 0.0:
        return out
    nu = 0
    while True:
        if (cache.zero(nu, 1) / a) ** 2 > lambda_max:
            break
        orders = (-1,) if nu == 0 else (nu - 1, -nu - 1)
        j = 1
        while (cache.zero(nu, j) / a) ** 2 <= lambda_max:
            for m in orders:
                out.append(neumann_factor(m, j, a, cache))
            j += 1
        nu += 1
    out.sort(key=_sort_key)
    return out


def robin_residual(f: ModeFactor, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Residual |x J'_m(x) - m J_m(x)| at x = sqrt(lambda_k) * a.

    This is the separated boundary condition of a Neumann-positive factor,
    evaluated at its claimed eigenvalue; by the derivative recurrence it
    equals |x J_{m+1}(x)|, so it vanishes exactly at the construction points.
    """
    if f.kind is not FactorKind.NEUMANN_POSITIVE:
        raise InvalidArgumentError("robin_residual applies to Neumann-positive factors")
    x = math.sqrt(f.lambda_k) * f.radius
    m = f.angular_order
    return abs(x * bessel_j_prime(m, x, cfg) - m * bessel_j(m, x, cfg))


def radial_profile(f: ModeFactor, r: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Radial part of the factor at radius r in [0, a].

    Dirichlet -> J_{|m|}(sqrt(lambda) r); Neumann-positive -> J_m(sqrt(lambda) r)
    (signed order); holomorphic -> r^p.
    """
    if not (0.0 <= r <= f.radius):
        raise InvalidArgumentError(f"r = {r} outside [0, {f.radius}]")
    if f.kind is FactorKind.HOLOMORPHIC:
        return r ** f.angular_order if f.angular_order else 1.0
    s = math.sqrt(f.lambda_k)
    if f.kind is FactorKind.DIRICHLET:
        return bessel_j(abs(f.angular_order), s * r, cfg)
    return bessel_j(f.angular_order, s * r, cfg)
