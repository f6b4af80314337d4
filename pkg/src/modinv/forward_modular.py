"""Forward evaluation of the modular invariant through theta nullwerte.

The route is tau -> nome q -> (theta2, theta3, theta4) -> lambda -> j, with j
normalised so that ``j(i) == 1`` (Klein's invariant divided by 1728).  None
of this shares code with the inverse chain, so it serves as the independent
check on every inversion.

Accuracy degrades for ``Im tau`` well below 0.5 because the theta series
then sum many terms of size ~1; reduce to the fundamental domain first.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .complex_numerics import as_complex
from .errors import ConvergenceError, CuspError, DomainError

__all__ = [
    "ThetaConfig",
    "upper_half_point",
    "nome",
    "theta_nullwerte",
    "lambda_from_theta",
    "j_from_lambda",
    "j_paper",
    "j_klein",
]

KLEIN_FACTOR = 1728.0


@dataclass(frozen=True)
class ThetaConfig:
    term_tolerance: float = 1e-18
    max_terms: int = 64

    def __post_init__(self):
        if not 0.0 < self.term_tolerance < 1e-10:
            raise ValueError("term_tolerance must lie in (0, 1e-10)")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")


DEFAULT_THETA = ThetaConfig()


def upper_half_point(tau) -> complex:
    """Validate ``tau`` as a finite point with strictly positive imaginary part."""
    tau = as_complex(tau)
    if not tau.imag > 0:
        raise DomainError(f"tau = {tau} is not in the upper half-plane")
    return tau


def nome(tau) -> complex:
    """q = exp(i*pi*tau)."""
    tau = upper_half_point(tau)
    return cmath.exp(1j * math.pi * tau)


def _series(tau: complex, offset: float, alternating: bool, cfg: ThetaConfig):
    """Sum exp(i*pi*tau*(n+offset)**2) for n >= 0, optionally with (-1)**n.

    Truncation is relative to the leading term so that theta2 keeps full
    relative accuracy high up the imaginary axis where its terms are tiny.
    """
    ipt = 1j * math.pi * tau
    first = cmath.exp(ipt * offset * offset)
    scale = abs(first)
    total = first
    for n in range(1, cfg.max_terms + 1):
        term = cmath.exp(ipt * (n + offset) ** 2)
        if alternating and n % 2:
            term = -term
        if abs(term) < cfg.term_tolerance * scale:
            return total
        total += term
    raise ConvergenceError(
        f"theta series at tau = {tau} did not converge in {cfg.max_terms} terms"
    )


def theta_nullwerte(tau, cfg: ThetaConfig = DEFAULT_THETA):
    """Return ``(theta2, theta3, theta4)`` at argument zero."""
    tau = upper_half_point(tau)
    th2 = 2.0 * _series(tau, 0.5, False, cfg)
    # theta3 = 1 + 2*sum_{n>=1} q^{n^2}; the n = 0 term of the series is 1
    th3 = 2.0 * _series(tau, 0.0, False, cfg) - 1.0
    th4 = 2.0 * _series(tau, 0.0, True, cfg) - 1.0
    return th2, th3, th4


def lambda_from_theta(tau, cfg: ThetaConfig = DEFAULT_THETA) -> complex:
    """Modular lambda ``(theta2/theta3)**4``."""
    th2, th3, _ = theta_nullwerte(tau, cfg)
    return (th2 / th3) ** 4


def _j_from_lambda_pair(lam: complex, mu: complex) -> complex:
    # mu == 1 - lam, supplied separately so it keeps relative accuracy near lam = 1
    if lam == 0 or mu == 0:
        raise CuspError(f"lambda = {lam} is a cusp value")
    num = 1.0 - lam * mu
    return 4.0 * num * num * num / (27.0 * lam * lam * mu * mu)


def j_from_lambda(lam) -> complex:
    """The degree-6 map ``4*(l^2 - l + 1)^3 / (27 * l^2 * (1 - l)^2)``."""
    lam = as_complex(lam)
    return _j_from_lambda_pair(lam, 1.0 - lam)


def j_paper(tau, cfg: ThetaConfig = DEFAULT_THETA) -> complex:
    """Modular invariant normalised to ``j(i) = 1``, ``j(exp(i*pi/3)) = 0``."""
    th2, th3, th4 = theta_nullwerte(tau, cfg)
    if th3 == 0:
        raise CuspError(f"theta3 vanishes at tau = {tau}")
    lam = (th2 / th3) ** 4
    mu = (th4 / th3) ** 4
    if lam == 0 or mu == 0:
        raise CuspError(f"tau = {tau} is numerically at a cusp")
    return _j_from_lambda_pair(lam, mu)


def j_klein(tau, cfg: ThetaConfig = DEFAULT_THETA) -> complex:
    """Modular invariant in Klein's normalisation, ``j(i) = 1728``."""
    return KLEIN_FACTOR * j_paper(tau, cfg)
