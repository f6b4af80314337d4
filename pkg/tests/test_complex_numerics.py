import cmath
import math
import random
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modinv.complex_numerics import AgmConfig, agm, agm_g, cbrt_branch, principal_sqrt
from modinv.errors import ConvergenceError, DomainError

EPS = sys.float_info.epsilon

# 50-digit mpmath value of agm(1, 1/sqrt(2)), cross-checked by real_agm below
AGM_1_INV_SQRT2 = 0.847213084793979086606499123


def real_agm(a, b, steps=40):
    """Textbook real AGM; the independent oracle for the complex kernel."""
    for _ in range(steps):
        a, b = (a + b) / 2, math.sqrt(a * b)
    return a


finite = st.floats(min_value=-1e100, max_value=1e100, allow_nan=False, allow_infinity=False)
nonzero_complex = st.builds(complex, finite, finite).filter(lambda z: abs(z) > 1e-100)


def test_sqrt_examples():
    assert principal_sqrt(4) == 2
    assert principal_sqrt(-1) == 1j
    assert principal_sqrt(2j) == pytest.approx(1 + 1j, rel=1e-15)


def test_sqrt_negative_zero_imag_uses_upper_branch():
    assert principal_sqrt(complex(-4.0, -0.0)) == 2j


@pytest.mark.parametrize("bad", [float("nan"), complex(1, float("inf")), float("-inf")])
def test_non_finite_rejected(bad):
    with pytest.raises(DomainError):
        principal_sqrt(bad)
    with pytest.raises(DomainError):
        cbrt_branch(bad, 0)


def test_cbrt_examples():
    assert cbrt_branch(8, 0) == 2
    assert cbrt_branch(-1, 0) == pytest.approx(0.5 + math.sqrt(3) / 2 * 1j, abs=1e-15)
    assert cbrt_branch(-1, 1) == pytest.approx(-1, abs=1e-15)
    assert cbrt_branch(0, 2) == 0


def test_cbrt_branches_are_the_three_roots():
    z = 3 - 4j
    roots = [cbrt_branch(z, b) for b in range(3)]
    omega = cmath.exp(2j * math.pi / 3)
    assert roots[1] == pytest.approx(roots[0] * omega, abs=1e-14)
    assert roots[2] == pytest.approx(roots[0] * omega**2, abs=1e-14)
    assert cmath.phase(roots[0]) == pytest.approx(cmath.phase(z) / 3, abs=1e-15)


def test_cbrt_bad_branch():
    with pytest.raises(ValueError):
        cbrt_branch(1, 3)


def test_sqrt_square_within_two_ulps_seeded():
    rng = random.Random(20110530)
    for _ in range(10_000):
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * 10 ** rng.uniform(-8, 8)
        w = principal_sqrt(z)
        assert abs(w * w - z) <= 2 * EPS * abs(z)
        assert w.real >= 0


def test_cbrt_cube_within_four_ulps_seeded():
    rng = random.Random(7)
    for _ in range(10_000):
        z = complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) * 10 ** rng.uniform(-8, 8)
        for b in range(3):
            w = cbrt_branch(z, b)
            assert abs(w * w * w - z) <= 4 * EPS * abs(z)


@given(nonzero_complex)
def test_sqrt_branch_property(z):
    w = principal_sqrt(z)
    assert w.real >= 0
    if w.real == 0:
        assert w.imag >= 0
    assert abs(w * w - z) <= 2 * EPS * abs(z)


@given(nonzero_complex, st.integers(0, 2))
def test_cbrt_property(z, b):
    w = cbrt_branch(z, b)
    assert abs(w * w * w - z) <= 4 * EPS * abs(z)


def test_cbrt_subnormal_angle():
    # atan2 of a subnormal over a large real must not raise
    w = cbrt_branch(complex(90071992548.0, 2.2250738585e-313), 0)
    assert w == pytest.approx(90071992548.0 ** (1 / 3), rel=1e-15)


def test_real_agm_oracle_matches_frozen_constant():
    assert real_agm(1.0, 1 / math.sqrt(2)) == pytest.approx(AGM_1_INV_SQRT2, rel=1e-15)


def test_agm_examples():
    assert agm(1, 1) == 1
    assert agm(1, 0) == 0
    assert agm(1, 1 / math.sqrt(2)) == pytest.approx(AGM_1_INV_SQRT2, abs=1e-10)
    assert agm_g(1) == 1
    assert agm_g(0) == 0
    assert agm_g(1 / math.sqrt(2)).real == pytest.approx(AGM_1_INV_SQRT2, rel=1e-15)


@pytest.mark.parametrize("x", [1e-6, 0.1, 0.5, 0.9, 0.999999])
def test_agm_real_matches_oracle(x):
    g = agm_g(x)
    assert g.imag == 0
    assert g.real == pytest.approx(real_agm(1.0, x), rel=1e-15)
    assert x < g.real < 1


def test_agm_complex_against_mpmath():
    mpmath = pytest.importorskip("mpmath")
    mpmath.mp.dps = 30
    # mpmath's agm follows the same optimal-sign convention on the right half-plane
    for a, b in [(1, 2j), (1, 0.3 - 0.7j), (2 + 1j, 0.5 - 0.1j), (1, -0.5 + 0.1j)]:
        ref = complex(mpmath.agm(a, b))
        assert agm(a, b) == pytest.approx(ref, rel=1e-14)


def test_agm_degenerate_and_errors():
    with pytest.raises(DomainError):
        agm(0, 0)
    with pytest.raises(DomainError):
        agm(1, -1)
    with pytest.raises(ConvergenceError):
        agm(1, 1e-300, AgmConfig(max_iterations=8))


def test_agm_config_validation():
    with pytest.raises(ValueError):
        AgmConfig(max_iterations=4)
    with pytest.raises(ValueError):
        AgmConfig(rel_tolerance=1e-3)


def test_agm_symmetry_seeded():
    rng = random.Random(3)
    for _ in range(1000):
        a = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        b = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        m1, m2 = agm(a, b), agm(b, a)
        assert abs(m1 - m2) <= 1e-14 * abs(m1)


def test_agm_homogeneity_seeded():
    rng = random.Random(4)
    for _ in range(1000):
        a = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        b = complex(rng.uniform(-5, 5), rng.uniform(-5, 5))
        t = 10 ** rng.uniform(-3, 3)
        m = agm(a, b)
        assert abs(agm(t * a, t * b) - t * m) <= 1e-14 * abs(t * m)


@settings(max_examples=200)
@given(st.floats(min_value=1e-12, max_value=1 - 1e-12))
def test_agm_real_between_arguments(x):
    g = agm_g(x)
    assert g.imag == 0
    assert x < g.real < 1


def test_sqrt_underflowed_real_part_keeps_upper_sign():
    z = complex(-1.497949732202853e55, -1.91219983647985e-296)
    w = principal_sqrt(z)
    assert w.real == 0 and w.imag > 0
    assert abs(w * w - z) <= 2 * EPS * abs(z)
