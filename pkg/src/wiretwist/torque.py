"""Finite-angle torque of the twisted wire and torque-angle curves.

Virtual work over the section gives the twisting moment at a finite angle
``alpha`` (undeformed section orientation, no large-displacement update):

    T(alpha) = (beta E / alpha) * II  (cos(theta+alpha) - cos(theta))^2
               / (R + rho cos(theta)) * rho^3  d(rho) d(theta)

evaluated with the trig identity
``(cos(theta+alpha) - cos(theta))^2 = 4 sin^2(alpha/2) sin^2(theta + alpha/2)``
which is stable for small twist angles.  The rho-integral is smooth and is
done with a fixed 32-point Gauss rule; the theta-integral uses the adaptive
backend, split at the bite-arc limits where the rho-limit is only C0.

T(0) := 0 by continuity.  The origin stiffness is the Richardson-extrapolated
limit of T(alpha)/alpha; secant stiffnesses are T(+/-alpha_max)/(+/-alpha_max)
and differ for asymmetric (wire-race) sections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import (
    SectionClass,
    WireRing,
    classify_section,
    rho_of_theta,
    theta_limits,
)
from .quadrature import QuadratureSpec, integrate

_INNER_X, _INNER_W = np.polynomial.legendre.leggauss(32)

# Richardson sampling exponents for the origin stiffness: alpha_max / 2^k.
_ORIGIN_LEVELS = range(4, 9)


@dataclass(frozen=True)
class TorqueCurve:
    """Sampled torque-angle curve with derived stiffness constants.

    Attributes:
        alphas: twist angles [rad], sorted ascending, including 0.
        torques: twisting moments [N*mm] matching ``alphas``; T(0) = 0.
        K_origin: Richardson-extrapolated slope at alpha -> 0 [N*mm/rad].
        K_secant_pos: T(+alpha_max)/alpha_max [N*mm/rad].
        K_secant_neg: T(-alpha_max)/(-alpha_max) [N*mm/rad].
    """

    alphas: np.ndarray
    torques: np.ndarray
    K_origin: float
    K_secant_pos: float
    K_secant_neg: float

    @property
    def samples(self) -> list[tuple[float, float]]:
        return [(float(a), float(t)) for a, t in zip(self.alphas, self.torques)]


def delta_length(rho: float, theta: float, alpha: float, ring: WireRing) -> float:
    """Length change of the fibre at (rho, theta) for twist angle alpha [mm].

        delta L = beta * rho * (cos(theta + alpha) - cos(theta))
    """
    return ring.beta * rho * (math.cos(theta + alpha) - math.cos(theta))


def _inner_rho_integral(R: float, theta: float, upper: float) -> float:
    """int_0^upper rho^3 / (R + rho cos(theta)) d(rho), fixed 32-point Gauss."""
    half = 0.5 * upper
    x = half * (_INNER_X + 1.0)
    return half * float(np.sum(_INNER_W * x**3 / (R + x * math.cos(theta))))


def torque_full(ring: WireRing, alpha: float, quad: QuadratureSpec | None = None) -> float:
    """Twisting moment at finite angle ``alpha`` [N*mm]; T(0) = 0 by continuity.

    Requires |alpha| < pi/2 (beyond that the fibre-stretch deformation
    assumption is meaningless).
    """
    if not abs(alpha) < math.pi / 2.0:
        raise ValueError(f"twist angle must satisfy |alpha| < pi/2, got {alpha}")
    if alpha == 0.0:
        return 0.0

    section = ring.section
    R = ring.R
    r = section.r
    half_alpha = 0.5 * alpha
    prefactor = ring.beta * ring.E * 4.0 * math.sin(half_alpha) ** 2 / alpha

    def g_full(theta: float) -> float:
        s = math.sin(theta + half_alpha)
        return s * s * _inner_rho_integral(R, theta, r)

    if classify_section(section) is SectionClass.FULL_CIRCLE:
        value, _ = integrate(g_full, 0.0, 2.0 * math.pi, quad)
        return prefactor * value

    t1, t2 = theta_limits(section)

    def g_bite(theta: float) -> float:
        s = math.sin(theta + half_alpha)
        return s * s * _inner_rho_integral(R, theta, rho_of_theta(section, theta))

    bite, _ = integrate(g_bite, t1, t2, quad)
    outer, _ = integrate(g_full, t2, t1 + 2.0 * math.pi, quad)
    return prefactor * (bite + outer)


def richardson_extrapolate(values: Sequence[float], step_ratio: float = 2.0) -> float:
    """Limit of a sequence f(h), f(h/s), f(h/s^2), ... assuming a power-series error.

    ``values`` ordered from the largest step to the smallest.
    """
    level = list(values)
    order = 1
    while len(level) > 1:
        factor = step_ratio**order
        level = [
            (factor * fine - coarse) / (factor - 1.0)
            for coarse, fine in zip(level[:-1], level[1:])
        ]
        order += 1
    return level[0]


def torque_curve(
    ring: WireRing,
    alpha_max: float,
    n_steps: int = 21,
    quad: QuadratureSpec | None = None,
) -> TorqueCurve:
    """Sample T(alpha) on [-alpha_max, +alpha_max] and derive stiffness constants.

    The grid is uniform and always contains alpha = 0 (an even ``n_steps``
    is rounded up to the next odd count).  K_origin is the Richardson
    extrapolation of T(alpha)/alpha over alpha = alpha_max/2^k, k = 4..8.
    """
    if not (0.0 < alpha_max < math.pi / 2.0):
        raise ValueError(f"alpha_max must lie in (0, pi/2), got {alpha_max}")
    if n_steps < 2:
        raise ValueError(f"n_steps must be >= 2, got {n_steps}")

    n = n_steps if n_steps % 2 == 1 else n_steps + 1
    half = (n - 1) // 2
    positive = np.linspace(0.0, alpha_max, half + 1)
    alphas = np.concatenate([-positive[:0:-1], positive])

    torques = np.array([torque_full(ring, float(a), quad) for a in alphas])

    ratios = [
        torque_full(ring, alpha_max / 2.0**k, quad) / (alpha_max / 2.0**k)
        for k in _ORIGIN_LEVELS
    ]
    k_origin = richardson_extrapolate(ratios, step_ratio=2.0)

    return TorqueCurve(
        alphas=alphas,
        torques=torques,
        K_origin=k_origin,
        K_secant_pos=float(torques[-1] / alphas[-1]),
        K_secant_neg=float(torques[0] / alphas[0]),
    )
