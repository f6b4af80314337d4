"""Closed-form inverse of the modular invariant.

The inverse is the composition ``k0(k1(k2(x)))``:

* ``k3(x) = cbrt(sqrt(x^2 - x^3) - x)``
* ``k2(x) = 3/2 * (x/k3(x) + k3(x)) - 1``  (root of ``4(y+1)^3 = 27 x y``)
* ``k1(y) = (sqrt(y + 4) - sqrt(y)) / 2``   (elliptic modulus, ``lambda = k1^2``)
* ``k0(k) = i * G(sqrt(1 - k^2)) / G(k)``   (period ratio via the AGM)

The map is multivalued; ``k3`` carries the only free choices (the sign of
the inner square root and the cube-root index), exposed as ``BranchChoice``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complex_numerics import DEFAULT_AGM, AgmConfig, agm_g, as_complex, cbrt_branch, principal_sqrt
from .errors import CuspError, DomainError, ModInvError, NoBranchFound
from .forward_modular import DEFAULT_THETA, ThetaConfig, j_paper
from .moduli_reduction import reduce

__all__ = [
    "BranchChoice",
    "InversionResult",
    "BRANCHES",
    "k3",
    "k2",
    "k1",
    "k0",
    "invert_principal",
    "invert_verified",
]


@dataclass(frozen=True)
class BranchChoice:
    inner_sqrt_sign: int = 1
    cbrt_index: int = 0

    def __post_init__(self):
        if self.inner_sqrt_sign not in (1, -1):
            raise ValueError("inner_sqrt_sign must be +1 or -1")
        if self.cbrt_index not in (0, 1, 2):
            raise ValueError("cbrt_index must be 0, 1 or 2")

    def __str__(self):
        return f"({self.inner_sqrt_sign:+d},{self.cbrt_index})"


DEFAULT_BRANCH = BranchChoice()
BRANCHES = tuple(BranchChoice(s, c) for s, c in itertools.product((1, -1), (0, 1, 2)))


@dataclass(frozen=True)
class InversionResult:
    tau: complex
    branch_used: BranchChoice
    residual: float


def k3(x, branch: BranchChoice = DEFAULT_BRANCH) -> complex:
    x = as_complex(x)
    if x == 0:
        return 0j
    x2 = x * x
    x3 = x2 * x
    v = branch.inner_sqrt_sign * principal_sqrt(x2 - x3)
    plus, minus = v + x, v - x
    # (v - x)(v + x) = -x^3; divide instead of subtracting when that is safer
    if abs(plus) > abs(minus):
        radicand = -x3 / plus
    else:
        radicand = minus
    return cbrt_branch(radicand, branch.cbrt_index)


def _polish_cubic_root(x: complex, y: complex, steps: int = 2) -> complex:
    """Newton steps on 4(y+1)^3 - 27xy, kept only while the residual shrinks.

    The root of the cubic near y = 0 (large |x|) comes out of the Cardano
    form as u - 1 with u ~ 1 and has lost ~log10|x| digits; one step
    restores them.  Near the double root (x = 1) the steps are rejected.
    """
    f = 4.0 * (y + 1.0) ** 3 - 27.0 * x * y
    for _ in range(steps):
        if f == 0:
            break
        df = 12.0 * (y + 1.0) ** 2 - 27.0 * x
        if df == 0:
            break
        y_new = y - f / df
        f_new = 4.0 * (y_new + 1.0) ** 3 - 27.0 * x * y_new
        if not abs(f_new) < abs(f):
            break
        y, f = y_new, f_new
    return y


def k2(x, branch: BranchChoice = DEFAULT_BRANCH) -> complex:
    x = as_complex(x)
    if x == 0:
        return -1.0 + 0j
    c = k3(x, branch)
    if c == 0:
        # underflow of a tiny x; the limit is the same as at 0
        return -1.0 + 0j
    return _polish_cubic_root(x, 1.5 * (x / c + c) - 1.0)


def _k1_with_complement(x: complex):
    r4 = principal_sqrt(x + 4.0)
    r0 = principal_sqrt(x)
    plus, minus = r4 + r0, r4 - r0
    if abs(plus) > abs(minus):
        k = 2.0 / plus
    elif minus == 0:
        raise DomainError(f"k1 is singular at x = {x}")
    else:
        k = 0.5 * minus
    # (2k + sqrt x)^2 = x + 4 gives 1 - k^2 = k sqrt(x) with no cancellation
    return k, k * r0


def k1(x) -> complex:
    return _k1_with_complement(as_complex(x))[0]


def k0(x, cfg: AgmConfig = DEFAULT_AGM) -> complex:
    x = as_complex(x)
    return _k0(x, (1.0 - x) * (1.0 + x), cfg)


def _k0(x: complex, one_minus_x2: complex, cfg: AgmConfig) -> complex:
    if x == 0 or one_minus_x2 == 0:
        raise CuspError(f"modulus {x} corresponds to a cusp")
    comp = principal_sqrt(one_minus_x2)
    den = agm_g(x, cfg)
    num = agm_g(comp, cfg)
    if den == 0 or num == 0:
        raise CuspError(f"AGM vanishes at modulus {x}")
    return 1j * num / den


def _chain(x: complex, branch: BranchChoice, cfg: AgmConfig) -> complex:
    k, complement = _k1_with_complement(k2(x, branch))
    return _k0(k, complement, cfg)


def invert_principal(x, cfg: AgmConfig = DEFAULT_AGM) -> complex:
    """``k0(k1(k2(x)))`` on the default branch; not reduced, not verified."""
    return _chain(as_complex(x), DEFAULT_BRANCH, cfg)


def invert_verified(
    x,
    tol: float = 1e-9,
    cfg: AgmConfig = DEFAULT_AGM,
    theta_cfg: ThetaConfig = DEFAULT_THETA,
) -> InversionResult:
    """Find tau in the fundamental domain with ``j_paper(tau) == x``.

    The six branch choices are tried in order, starting with the default.
    A candidate is accepted when it lies in the upper half-plane and its
    relative defect ``|j(tau) - x| / (1 + |x|)`` is at most ``tol``.
    """
    x = as_complex(x)
    if not tol > 0:
        raise ValueError("tol must be positive")
    scale = 1.0 + abs(x)
    cusps = 0
    for branch in BRANCHES:
        try:
            tau = _chain(x, branch, cfg)
        except CuspError:
            cusps += 1
            continue
        if not tau.imag > 0:
            continue
        try:
            tau, _ = reduce(tau)
            residual = abs(j_paper(tau, theta_cfg) - x) / scale
        except ModInvError:
            continue
        if residual <= tol:
            return InversionResult(tau, branch, residual)
    if cusps == len(BRANCHES):
        raise CuspError(f"every branch of the inverse hits a cusp at x = {x}")
    raise NoBranchFound(f"no branch of the inverse reproduces x = {x} within {tol}")
