"""Complex kernels: principal square root, indexed cube roots and the AGM.

Complex values are plain Python ``complex``.  Every public function rejects
NaN and infinite components and normalises a negative-zero imaginary part to
``+0.0`` so that the argument convention is always ``(-pi, pi]``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

__all__ = [
    "AgmConfig",
    "as_complex",
    "principal_sqrt",
    "cbrt_branch",
    "agm",
    "agm_g",
]


@dataclass(frozen=True)
class AgmConfig:
    max_iterations: int = 64
    rel_tolerance: float = 1e-15

    def __post_init__(self):
        if self.max_iterations < 8:
            raise ValueError("max_iterations must be at least 8")
        if not 0.0 < self.rel_tolerance < 1e-6:
            raise ValueError("rel_tolerance must lie in (0, 1e-6)")


DEFAULT_AGM = AgmConfig()


def as_complex(z) -> complex:
    """Coerce ``z`` to a finite complex number with no negative zeros."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite complex value {z!r}")
    # -0.0 + 0.0 == +0.0; keeps Arg(-1) == +pi
    return complex(z.real + 0.0, z.imag + 0.0)


def principal_sqrt(z) -> complex:
    """Square root with ``Re w >= 0``, and ``Im w >= 0`` when ``Re w == 0``."""
    w = cmath.sqrt(as_complex(z))
    if w.real == 0 and w.imag < 0:
        # real part underflowed for z just below the negative real axis
        return complex(0.0, -w.imag)
    return w


def cbrt_branch(z, branch: int = 0) -> complex:
    """Cube root ``|z|**(1/3) * exp(i*(Arg z + 2*pi*branch)/3)``.

    ``branch`` is 0, 1 or 2; branch 0 is the principal root.
    """
    if branch not in (0, 1, 2):
        raise ValueError(f"cube-root branch must be 0, 1 or 2, got {branch!r}")
    z = as_complex(z)
    if z == 0:
        return 0j
    r = abs(z) ** (1.0 / 3.0)
    theta = (math.atan2(z.imag, z.real) + 2.0 * math.pi * branch) / 3.0
    w = cmath.rect(r, theta)
    # one Newton step tightens the modulus from pow() and rect()
    return w - (w * w * w - z) / (3.0 * w * w)


def _pick_geometric(a1: complex, g: complex) -> complex:
    """Return +g or -g, whichever is the optimal (right) choice next to a1."""
    d_plus = abs(a1 - g)
    d_minus = abs(a1 + g)
    if d_plus < d_minus:
        return g
    if d_minus < d_plus:
        return -g
    # tie: keep the root with Im(b'/a') > 0
    if a1 != 0 and (g / a1).imag > 0:
        return g
    return -g


def agm(a, b, cfg: AgmConfig = DEFAULT_AGM) -> complex:
    """Arithmetic-geometric mean of ``a`` and ``b`` with the optimal sign rule.

    At each step the geometric mean is chosen so that ``|a' - b'| <= |a' + b'|``.
    The iteration stops once ``|a - b| <= rel_tolerance * |a|``.  A zero
    argument gives the degenerate limit 0.
    """
    a = as_complex(a)
    b = as_complex(b)
    if a == 0 and b == 0:
        raise DomainError("agm(0, 0) is undefined")
    if a == 0 or b == 0:
        return 0j
    if a + b == 0:
        raise DomainError(f"agm({a}, {b}): arguments are negatives of each other")

    tol = cfg.rel_tolerance
    for _ in range(cfg.max_iterations):
        if abs(a - b) <= tol * abs(a):
            return 0.5 * (a + b)
        a1 = 0.5 * (a + b)
        b1 = _pick_geometric(a1, cmath.sqrt(a * b))
        a, b = a1, b1
        if b == 0:
            return 0j
    if abs(a - b) <= tol * abs(a):
        return 0.5 * (a + b)
    raise ConvergenceError(
        f"agm did not converge in {cfg.max_iterations} iterations "
        f"(|a-b|/|a| = {abs(a - b) / abs(a):.3e})"
    )


def agm_g(x, cfg: AgmConfig = DEFAULT_AGM) -> complex:
    """``G(x)``: the AGM of 1 and ``x``."""
    return agm(1.0, x, cfg)
