"""Reduction of upper half-plane points to the standard fundamental domain."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError
from .forward_modular import DEFAULT_THETA, ThetaConfig, j_paper, upper_half_point

__all__ = ["UnimodularMatrix", "reduce", "is_equivalent"]

BOUNDARY_EPS = 1e-12
MAX_STEPS = 10_000


@dataclass(frozen=True)
class UnimodularMatrix:
    """Integer matrix ``[[a, b], [c, d]]`` with ``a*d - b*c == 1``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    @classmethod
    def identity(cls) -> "UnimodularMatrix":
        return cls(1, 0, 0, 1)

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


_S = UnimodularMatrix(0, -1, 1, 0)


def _translation(n: int) -> UnimodularMatrix:
    return UnimodularMatrix(1, n, 0, 1)


def reduce(tau):
    """Map ``tau`` into ``|Re| <= 1/2, |tau| >= 1``.

    Returns ``(tau_reduced, matrix)`` with ``matrix.apply(tau) ~= tau_reduced``.
    On the boundary the representative with ``Re >= 0`` is chosen: the left
    wall is moved onto ``Re = 1/2`` and the left half of the arc is mapped
    onto the right half by S.
    """
    tau = upper_half_point(tau)
    m = UnimodularMatrix.identity()
    for _ in range(MAX_STEPS):
        n = round(tau.real)
        if n:
            tau = tau - n
            m = _translation(-n) @ m
        if abs(tau) < 1.0 - BOUNDARY_EPS:
            tau = -1.0 / tau
            m = _S @ m
            continue
        break
    else:
        raise ConvergenceError(f"reduction did not terminate after {MAX_STEPS} steps")

    if tau.real < -0.5 + BOUNDARY_EPS:
        tau = tau + 1
        m = _translation(1) @ m
    if abs(abs(tau) - 1.0) <= BOUNDARY_EPS and tau.real < 0:
        tau = -1.0 / tau
        m = _S @ m
    return complex(tau.real + 0.0, tau.imag), m


def is_equivalent(t1, t2, tol: float = 1e-9, cfg: ThetaConfig = DEFAULT_THETA) -> bool:
    """True when ``t1`` and ``t2`` lie in the same SL(2, Z) orbit (numerically).

    Reduced points are compared componentwise first; the comparison of j
    values decides the cases where the two points were normalised onto
    opposite sides of a boundary identification.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    r1, _ = reduce(t1)
    r2, _ = reduce(t2)
    if math.isclose(r1.real, r2.real, rel_tol=0, abs_tol=tol) and math.isclose(
        r1.imag, r2.imag, rel_tol=0, abs_tol=tol
    ):
        return True
    j1 = j_paper(r1, cfg)
    j2 = j_paper(r2, cfg)
    return abs(j1 - j2) <= tol * (1.0 + abs(j1))
