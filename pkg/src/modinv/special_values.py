"""The ascending sequence of closed-form values of j at 19 CM points.

Every value is kept as a recipe over its radicals and re-evaluated on
demand.  Subtractions that cancel are replaced by conjugate quotients, e.g.

    33 + 24*sqrt(2) - 4*sqrt(140 + 99*sqrt(2))
        == 1 / (33 + 24*sqrt(2) + 4*sqrt(140 + 99*sqrt(2)))

because the product of the two conjugates is exactly 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

__all__ = ["SpecialValueEntry", "table", "evaluate_entry", "check_ascending"]

SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)


def _quartic_family(a: float) -> float:
    """((4/3) y^2 - 1)^3 / (y^2 - 1) with y = 1 - 2 a^2."""
    a2 = a * a
    y = 1.0 - 2.0 * a2
    num = (4.0 / 3.0) * y * y - 1.0
    # y^2 - 1 == 4 a^2 (a^2 - 1), no cancellation for small a
    return num ** 3 / (4.0 * a2 * (a2 - 1.0))


def _dodecic_family(b: float, three_b_plus_one: float | None = None) -> float:
    """(12 b^2 - 1)^3 / (9 b^2 - 1), optionally with 3b + 1 supplied exactly."""
    if three_b_plus_one is None:
        three_b_plus_one = 3.0 * b + 1.0
    b2 = b * b
    return (12.0 * b2 - 1.0) ** 3 / ((3.0 * b - 1.0) * three_b_plus_one)


def _a_const(sign: int) -> float:
    """33 + 24 sqrt2 +- 4 sqrt(140 + 99 sqrt2)."""
    big = 33.0 + 24.0 * SQRT2 + 4.0 * math.sqrt(140.0 + 99.0 * SQRT2)
    return big if sign > 0 else 1.0 / big


def _c_const(sign: int) -> float:
    """5 + 4 sqrt2 +- 2 sqrt(2 (7 + 5 sqrt2))."""
    big = 5.0 + 4.0 * SQRT2 + 2.0 * math.sqrt(2.0 * (7.0 + 5.0 * SQRT2))
    return big if sign > 0 else 1.0 / big


def _b_const(outer: int, inner: int) -> float:
    """555 + o*16*(20 sqrt3 + i*(8/sqrt3 + 5o) sqrt(26 + 15 o sqrt3)).

    Uses sqrt(26 + 15 o sqrt3) = (3 sqrt3 + 5 o)/sqrt2, so that
    (8/sqrt3 + 5o) * sqrt(26 + 15 o sqrt3) = (49 + o*85 sqrt3/3)/sqrt2.
    """
    s = 85.0 * SQRT3 / 3.0
    if outer > 0:
        r = 49.0 + s
        p = 555.0 + 320.0 * SQRT3
    else:
        # 49^2 - 85^2/3 = -22/3 and 555^2 - 3*320^2 = 825
        r = -(22.0 / 3.0) / (49.0 + s)
        p = 825.0 / (555.0 + 320.0 * SQRT3)
    q = outer * inner * 16.0 * r / SQRT2
    if outer > 0 and inner < 0:
        # p^2 - q^2 = -(1109 + 640 sqrt3)/3 when o = +1
        return -(1109.0 + 640.0 * SQRT3) / (3.0 * (p - q))
    return p + q


def _b_minus_third_gap() -> float:
    """3B + 1 for B = _b_const(1, -1), where 9B^2 - 1 nearly cancels.

    3B + 1 = (392 sqrt2 - 554 + (680/3) sqrt6 - 320 sqrt3) / D with
    D = 555 + 320 sqrt3 + 8 sqrt2 (49 + 85 sqrt3/3); both differences in
    the numerator are rationalised (392^2*2 - 554^2 = 412 and
    (680/3)^2*2 - 320^2 = 3200/9).
    """
    d = 555.0 + 320.0 * SQRT3 + 8.0 * SQRT2 * (49.0 + 85.0 * SQRT3 / 3.0)
    first = 412.0 / (392.0 * SQRT2 + 554.0)
    second = SQRT3 * (3200.0 / 9.0) / ((680.0 / 3.0) * SQRT2 + 320.0)
    return (first + second) / d


def _cube(x: float) -> float:
    return x * x * x


def _imag_quad_181(sign: int) -> float:
    """(181 +- 19 (3/sqrt2)^3)^3; 181^2 - (513 sqrt2/4)^2 = -1081/8."""
    t = 513.0 * SQRT2 / 4.0
    base = 181.0 + t if sign > 0 else -(1081.0 / 8.0) / (181.0 + t)
    return _cube(base)


def _sixths(sign: int) -> float:
    """(5 (19 +- 13 sqrt2) / 6)^3; 19^2 - 2*13^2 = 23."""
    big = 19.0 + 13.0 * SQRT2
    core = big if sign > 0 else 23.0 / big
    return _cube(5.0 * core / 6.0)


def _sixteenths(sign: int) -> float:
    """375 (35010 +- 20213 sqrt3) / 16; 35010^2 - 3*20213^2 = 3993."""
    big = 35010.0 + 20213.0 * SQRT3
    core = big if sign > 0 else 3993.0 / big
    return 375.0 * core / 16.0


@dataclass(frozen=True)
class SpecialValueEntry:
    label: str
    tau: complex
    tau_descriptor: str
    value: float
    order_index: int
    formula: str = ""
    recipe: Callable[[], float] = field(default=lambda: 0.0, repr=False, compare=False)


_ROWS = [
    # (label, tau, descriptor, formula, recipe)
    ("1/2+2i", 0.5 + 2j, "1/2 + 2√−1",
     "F4(1 - 2A²), A = 33+24√2-4√(140+99√2)", lambda: _quartic_family(_a_const(-1))),
    ("1/2+sqrt3 i", complex(0.5, SQRT3), "1/2 + √−3",
     "F12(555+16(20√3-(8/√3+5)√(26+15√3)))", lambda: _dodecic_family(_b_const(1, -1), _b_minus_third_gap())),
    ("1/2+sqrt2 i", complex(0.5, SQRT2), "1/2 + √−2",
     "F4(1 - 2C²), C = 5+4√2-2√(2(7+5√2))", lambda: _quartic_family(_c_const(-1))),
    ("1/2+i", 0.5 + 1j, "1/2 + √−1",
     "(181 - 19(3/√2)³)³", lambda: _imag_quad_181(-1)),
    ("rho", complex(0.5, SQRT3 / 2.0), "(1 + √−3)/2",
     "0", lambda: 0.0),
    ("(1+2sqrt2 i)/3", complex(1.0 / 3.0, 2.0 * SQRT2 / 3.0), "(1 + 2√−2)/3",
     "(5(19-13√2)/6)³", lambda: _sixths(-1)),
    ("(1+4sqrt3 i)/7", complex(1.0 / 7.0, 4.0 * SQRT3 / 7.0), "(1 + 4√−3)/7",
     "F12(555-16(20√3-(8/√3-5)√(26-15√3)))", lambda: _dodecic_family(_b_const(-1, -1))),
    ("i", 1j, "√−1",
     "1", lambda: 1.0),
    ("2i/sqrt3", complex(0.0, 2.0 / SQRT3), "2/√−3",
     "375(35010-20213√3)/16", lambda: _sixteenths(-1)),
    ("sqrt2 i", complex(0.0, SQRT2), "√−2",
     "(5/3)³", lambda: _cube(5.0 / 3.0)),
    ("sqrt3 i", complex(0.0, SQRT3), "√−3",
     "125/4", lambda: 125.0 / 4.0),
    ("2i", 2j, "2√−1",
     "(11/2)³", lambda: _cube(5.5)),
    ("4i/sqrt3", complex(0.0, 4.0 / SQRT3), "4/√−3",
     "F12(555-16(20√3+(8/√3-5)√(26-15√3)))", lambda: _dodecic_family(_b_const(-1, 1))),
    ("2sqrt2 i", complex(0.0, 2.0 * SQRT2), "2√−2",
     "(5(19+13√2)/6)³", lambda: _sixths(1)),
    ("2sqrt3 i", complex(0.0, 2.0 * SQRT3), "2√−3",
     "375(35010+20213√3)/16", lambda: _sixteenths(1)),
    ("4i", 4j, "4√−1",
     "(181 + 19(3/√2)³)³", lambda: _imag_quad_181(1)),
    ("4sqrt2 i", complex(0.0, 4.0 * SQRT2), "4√−2",
     "F4(1 - 2C²), C = 5+4√2+2√(2(7+5√2))", lambda: _quartic_family(_c_const(1))),
    ("4sqrt3 i", complex(0.0, 4.0 * SQRT3), "4√−3",
     "F12(555+16(20√3+(8/√3+5)√(26+15√3)))", lambda: _dodecic_family(_b_const(1, 1))),
    ("8i", 8j, "8√−1",
     "F4(1 - 2A²), A = 33+24√2+4√(140+99√2)", lambda: _quartic_family(_a_const(1))),
]


def evaluate_entry(e: SpecialValueEntry) -> float:
    """Recompute the closed-form value of ``e`` from its radicals."""
    return e.recipe()


def table() -> list[SpecialValueEntry]:
    """All 19 entries, in ascending order of value."""
    entries = []
    for i, (label, tau, desc, formula, recipe) in enumerate(_ROWS, start=1):
        entries.append(
            SpecialValueEntry(label, tau, desc, recipe(), i, formula, recipe)
        )
    return entries


def check_ascending(entries) -> bool:
    ordered = sorted(entries, key=lambda e: e.order_index)
    return all(a.value < b.value for a, b in zip(ordered, ordered[1:]))


def swapped(entries, i: int, j: int) -> list[SpecialValueEntry]:
    """Copy of ``entries`` with the order indices of rows ``i`` and ``j`` exchanged."""
    out = list(entries)
    by_index = {e.order_index: k for k, e in enumerate(out)}
    ki, kj = by_index[i], by_index[j]
    out[ki] = replace(out[ki], order_index=j)
    out[kj] = replace(out[kj], order_index=i)
    return out
