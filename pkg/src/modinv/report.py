"""Verification of the special-value table and random round-trip sweeps."""

from __future__ import annotations

import statistics
from collections import Counter
from dataclasses import dataclass, field

from .errors import ModInvError
from .forward_modular import j_paper
from .inverse_chain import invert_verified
from .moduli_reduction import is_equivalent
from .special_values import check_ascending, table

__all__ = ["SplitMix64", "VerifyRow", "verify_table", "RoundTripSummary", "roundtrip_sweep"]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """64-bit splitmix generator; the same seed gives the same stream everywhere."""

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * ((self.next_u64() >> 11) * 2.0 ** -53)


@dataclass
class VerifyRow:
    order_index: int
    label: str
    tau: complex
    expected: float
    forward: complex
    rel_err: float
    roundtrip_ok: bool
    inverse_tau: complex | None = None
    branch: str = ""

    def passed(self, tol: float) -> bool:
        return self.rel_err <= tol and self.roundtrip_ok

    def as_record(self) -> dict:
        return {
            "label": self.label,
            "tau": [self.tau.real, self.tau.imag],
            "expected": self.expected,
            "forward": self.forward.real,
            "forward_imag": self.forward.imag,
            "rel_err": self.rel_err,
            "roundtrip_ok": self.roundtrip_ok,
        }


def verify_table(tol: float = 1e-9):
    """Check every table row against the forward evaluator and the inverse.

    Returns ``(rows, ascending_ok)``.
    """
    entries = table()
    rows = []
    for e in entries:
        fwd = j_paper(e.tau)
        rel = abs(fwd - e.value) / (1.0 + abs(e.value))
        ok = False
        inv_tau = None
        branch = ""
        try:
            res = invert_verified(e.value, tol)
            inv_tau = res.tau
            branch = str(res.branch_used)
            ok = is_equivalent(res.tau, e.tau, tol)
        except ModInvError:
            pass
        rows.append(VerifyRow(e.order_index, e.label, e.tau, e.value, fwd, rel, ok, inv_tau, branch))
    return rows, check_ascending(entries)


@dataclass
class RoundTripSummary:
    samples: int
    failures: int
    max_defect: float
    median_defect: float
    branch_histogram: Counter = field(default_factory=Counter)


def roundtrip_sweep(samples: int, seed: int = 1, tol: float = 1e-8, include_zero: bool = False):
    """Invert ``samples`` pseudo-random x in [-5, 5] x [-5, 5] and measure j(tau) - x.

    Failed inversions count with an infinite defect.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = SplitMix64(seed)
    defects = []
    hist: Counter = Counter()
    failures = 0
    for k in range(samples):
        x = complex(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        if include_zero and k == 0:
            x = 0j
        try:
            res = invert_verified(x, tol)
        except ModInvError:
            failures += 1
            defects.append(float("inf"))
            continue
        defect = abs(j_paper(res.tau) - x) / (1.0 + abs(x))
        defects.append(defect)
        hist[str(res.branch_used)] += 1
    return RoundTripSummary(samples, failures, max(defects), statistics.median(defects), hist)
