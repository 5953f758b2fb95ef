"""Lossy planar (Fabry-Perot) cavity: mirror coefficients, mode density,
mode profiles, the perfect-mirror emission staircase and the quality factor.

Conventions: natural units with the atomic transition frequency w0 = c = 1,
so the transition wavelength is lambda0 = 2 pi and the cavity width enters as
the dimensionless product w0*L (first resonance at w0*L = pi; the detuning
parameter is eps = w0*L - pi).  Mirrors are identical and symmetric,
t = i T, r = -R with T = sqrt(1 - R^2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import DomainError

LAMBDA0 = 2.0 * math.pi  # transition wavelength in w0 = c = 1 units

__all__ = [
    "LAMBDA0",
    "CavitySpec",
    "MirrorCoefficients",
    "mode_density",
    "mode_density_printed",
    "mode_profiles",
    "gamma0_perfect",
    "quality_factor",
    "resonance_positions",
    "resonance_width",
]


@dataclass(frozen=True)
class CavitySpec:
    """Mirror reflectivity R in [0, 1) and dimensionless width w0*L."""

    reflectivity: float
    width_omega0L: float

    def __post_init__(self):
        if not (0.0 <= self.reflectivity < 1.0):
            raise DomainError(f"reflectivity must lie in [0, 1), got {self.reflectivity}")
        if not (self.width_omega0L > 0.0):
            raise DomainError(f"w0*L must be positive, got {self.width_omega0L}")

    @property
    def transmission(self):
        return math.sqrt(1.0 - self.reflectivity**2)

    @property
    def epsilon(self):
        """Detuning from the first resonance: w0*L = pi + eps."""
        return self.width_omega0L - math.pi

    @classmethod
    def from_epsilon(cls, reflectivity, epsilon):
        return cls(reflectivity, math.pi + epsilon)

    @classmethod
    def free_space(cls):
        return cls(0.0, math.pi)


@dataclass(frozen=True)
class MirrorCoefficients:
    """Complex reflection/transmission pair of one mirror, unitary by construction."""

    r: complex
    t: complex

    def __post_init__(self):
        if abs(abs(self.r) ** 2 + abs(self.t) ** 2 - 1.0) > 1e-12:
            raise DomainError("mirror coefficients violate |r|^2 + |t|^2 = 1")
        if abs((self.r.conjugate() * self.t + self.r * self.t.conjugate())) > 1e-12:
            raise DomainError("mirror coefficients violate r* t + r t* = 0")

    @classmethod
    def symmetric(cls, R):
        return cls(r=complex(-R, 0.0), t=complex(0.0, math.sqrt(1.0 - R * R)))


def mode_density(kappa, R):
    """Cavity-modified density of transverse field modes rho(kappa), kappa = k_x L.

    Evaluates the algebraically simplified form

        rho = (1 - R^2) / ((1 - R)^2 + 4 R cos^2(kappa/2)),

    identical to the textbook ratio
    [(1+R^2) - 2R cos kappa] / [(1-R^2) + 4R^2 sin^2(kappa)/(1-R^2)]
    (multiply through by (1-R^2) and factor the denominator with the
    half-angle identity).  Near a resonance peak the naive denominator
    1 + R^2 + 2R cos(kappa) is catastrophic cancellation for R -> 1; the
    half-angle form stays accurate because cos(kappa/2) is evaluated near
    its zero, where absolute (not relative) rounding applies.
    Free space (R=0) gives rho = 1 for every kappa.
    """
    if not (0.0 <= R < 1.0):
        raise DomainError(f"mode density requires 0 <= R < 1, got R={R}")
    kappa = np.asarray(kappa, dtype=float)
    c = np.cos(0.5 * kappa)
    out = (1.0 - R * R) / ((1.0 - R) ** 2 + 4.0 * R * c * c)
    return out if out.ndim else float(out)


def mode_density_printed(kappa, R):
    """Reference implementation of the unsimplified mode-density ratio (test oracle)."""
    if not (0.0 <= R < 1.0):
        raise DomainError(f"mode density requires 0 <= R < 1, got R={R}")
    kappa = np.asarray(kappa, dtype=float)
    num = (1.0 + R * R) - 2.0 * R * np.cos(kappa)
    den = (1.0 - R * R) + 4.0 * R * R * np.sin(kappa) ** 2 / (1.0 - R * R)
    out = num / den
    return out if out.ndim else float(out)


def resonance_positions(L, k_max):
    """k_x positions of the mode-density peaks (kappa = odd multiples of pi) below k_max."""
    out = []
    n = 1
    while n * math.pi / L <= k_max:
        out.append(n * math.pi / L)
        n += 2
    return out


def resonance_width(R, L):
    """Half-width of a mode-density peak in k_x: kappa-width (1-R)/sqrt(R), scaled by 1/L."""
    if R <= 0.0:
        return math.inf
    return (1.0 - R) / (math.sqrt(R) * L)


def mode_profiles(x, k_x, spec: CavitySpec):
    """Intracavity spatial mode profiles (U, U') for left/right-incident plane waves.

    U  = t (e^{i k x} + r e^{-i k x + i k L}) / D,
    U' = t (e^{-i k x} + r e^{i k x + i k L}) / D,   D = 1 - r^2 e^{2 i k L},
    with the symmetric-mirror convention r = -R, t = i T.  |x| <= L/2.
    """
    L = spec.width_omega0L
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > L / 2 + 1e-15):
        raise DomainError("position outside the cavity: |x| > L/2")
    m = MirrorCoefficients.symmetric(spec.reflectivity)
    r, t = m.r, m.t
    D = 1.0 - r * r * np.exp(2j * k_x * L)
    U = t * (np.exp(1j * k_x * x) + r * np.exp(-1j * k_x * x + 1j * k_x * L)) / D
    Up = t * (np.exp(-1j * k_x * x) + r * np.exp(1j * k_x * x + 1j * k_x * L)) / D
    return U, Up


def gamma0_perfect(L_over_lambda0):
    """Perfect-mirror (R -> 1) spontaneous-emission staircase.

    Sum over cavity modes n of sin^2(n pi/2) Theta(1 - n lambda0 / 2L), divided
    by L (module units 1/lambda0): only odd n below 2 L/lambda0 contribute, so
    the rate vanishes identically for L < lambda0/2 and jumps at each odd
    half-wavelength.  A mode exactly at threshold (2L = n lambda0) is counted.
    In these units the value coincides with gamma0/gamma_fr of the lossy-cavity
    integral in the R -> 1 limit.
    """
    ell = float(L_over_lambda0)
    if ell <= 0:
        raise DomainError(f"L/lambda0 must be positive, got {ell}")
    n_max = math.floor(2.0 * ell)
    n_odd = (n_max + 1) // 2
    return n_odd / ell


def quality_factor(spec: CavitySpec):
    """Q = 2 pi L sqrt(R) / (lambda0 (1 - R)) = w0 L sqrt(R)/(1 - R)."""
    R = spec.reflectivity
    return spec.width_omega0L * math.sqrt(R) / (1.0 - R)
