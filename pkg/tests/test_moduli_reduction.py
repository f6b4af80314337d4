import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from modinv.errors import DomainError
from modinv.forward_modular import j_paper
from modinv.moduli_reduction import UnimodularMatrix, is_equivalent, reduce

RHO = complex(0.5, math.sqrt(3) / 2)


def in_domain(tau, eps=1e-12):
    return abs(tau.real) <= 0.5 + eps and abs(tau) >= 1 - eps and tau.imag > 0


def test_reduce_examples():
    assert reduce(0.5 + 2j) == (0.5 + 2j, UnimodularMatrix.identity())
    tau, m = reduce(1 + 1j)
    assert tau == 1j
    assert m == UnimodularMatrix(1, -1, 0, 1)
    tau, m = reduce(0.5j)
    assert tau == 2j
    assert m == UnimodularMatrix(0, -1, 1, 0)


def test_boundary_normalisation():
    tau, _ = reduce(-0.5 + 2j)
    assert tau == pytest.approx(0.5 + 2j)
    tau, _ = reduce(RHO - 1)
    assert tau == pytest.approx(RHO, abs=1e-15)
    left_arc = complex(-1 / 3, 2 * math.sqrt(2) / 3)
    tau, m = reduce(left_arc)
    assert tau == pytest.approx(complex(1 / 3, 2 * math.sqrt(2) / 3), abs=1e-15)
    assert m.apply(left_arc) == pytest.approx(tau, abs=1e-15)


def test_matrix_validation_and_product():
    with pytest.raises(ValueError):
        UnimodularMatrix(1, 1, 1, 1)
    s = UnimodularMatrix(0, -1, 1, 0)
    assert s @ s == UnimodularMatrix(-1, 0, 0, -1)


@pytest.mark.parametrize("tau", [0, -1j, 3 + 0j])
def test_reduce_rejects_lower_half_plane(tau):
    with pytest.raises(DomainError):
        reduce(tau)


upper = st.builds(
    complex,
    st.floats(min_value=-50, max_value=50),
    st.floats(min_value=1e-3, max_value=50),
)


@given(upper)
def test_reduce_lands_in_domain_and_matrix_reproduces(tau):
    red, m = reduce(tau)
    assert in_domain(red)
    assert red.real >= -0.5 + 1e-12
    assert m.a * m.d - m.b * m.c == 1
    assert abs(m.apply(tau) - red) <= 1e-12 * (1 + abs(red)) * max(1.0, 1 / tau.imag)


@given(upper)
def test_reduce_idempotent(tau):
    red, _ = reduce(tau)
    again, m = reduce(red)
    assert abs(again.real - red.real) <= 1e-14
    assert abs(again.imag - red.imag) <= 1e-14


def test_matrix_reproduction_seeded():
    rng = random.Random(21)
    for _ in range(500):
        tau = complex(rng.uniform(-5, 5), rng.uniform(0.05, 3))
        red, m = reduce(tau)
        assert abs(m.apply(tau) - red) <= 1e-12 * (1 + abs(red))


def test_j_is_invariant_under_reduction():
    rng = random.Random(22)
    for _ in range(100):
        tau = complex(rng.uniform(-3, 3), rng.uniform(0.1, 3))
        red, _ = reduce(tau)
        j_red = j_paper(red)
        assert abs(j_paper(tau) - j_red) <= 1e-9 * abs(j_red) + 1e-12


def test_is_equivalent_examples():
    assert is_equivalent(1j, -1 / 1j)
    assert is_equivalent(2j, 0.5j)
    assert not is_equivalent(2j, 1j)
    assert is_equivalent(0.5 + 2j, -0.5 + 2j)


def test_is_equivalent_uses_j_across_seams():
    # two points straddling the arc identification, off by rounding
    a = complex(math.cos(1.2), math.sin(1.2))
    b = complex(-math.cos(1.2), math.sin(1.2) + 1e-13)
    assert is_equivalent(a, b, 1e-9)
    with pytest.raises(ValueError):
        is_equivalent(a, b, 0)
