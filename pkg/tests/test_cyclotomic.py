from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weilcanon.cyclotomic import CycNum, gauss_sum, is_odd_prime, psi, sigma


def small_cyc(p):
    coeff = st.integers(min_value=-4, max_value=4)
    return st.lists(coeff, min_size=p - 1, max_size=p - 1).map(
        lambda cs: CycNum(p, [Fraction(c) for c in cs]))


def test_zeta_power_relation():
    # zeta^p = 1 and 1 + zeta + ... + zeta^{p-1} = 0
    for p in (3, 5, 7):
        assert CycNum.zeta_pow(p, p) == CycNum.one(p)
        total = CycNum.zero(p)
        for k in range(p):
            total = total + CycNum.zeta_pow(p, k)
        assert total.is_zero()


def test_psi_is_a_character():
    for p in (3, 5):
        for a in range(p):
            for b in range(p):
                assert psi(p, a) * psi(p, b) == psi(p, a + b)


def test_psi_pinned_value():
    z = psi(3, 1)
    assert z.coeffs == (Fraction(0), Fraction(1))


def test_sigma_values():
    assert sigma(3, 1) == 1
    assert sigma(3, 2) == -1
    assert sigma(5, 4) == 1
    assert sigma(5, 2) == -1
    with pytest.raises(ValueError):
        sigma(3, 0)


def test_sigma_multiplicative():
    for p in (3, 5, 7, 11):
        for a in range(1, p):
            for b in range(1, p):
                assert sigma(p, a) * sigma(p, b) == sigma(p, a * b % p)


def test_gauss_sum_frozen_p3():
    # sum of psi(2 z^2) over z in F_3: 1 + 2*zeta^2 = -1 - 2*zeta
    assert gauss_sum(3).coeffs == (Fraction(-1), Fraction(-2))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_gauss_sum_identities(p):
    g = gauss_sum(p)
    assert g * g == CycNum.rational(p, sigma(p, (-1) % p) * p)
    assert g * g.conjugate() == CycNum.rational(p, p)


@given(small_cyc(5), small_cyc(5), small_cyc(5))
@settings(max_examples=50)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_cyc(5))
@settings(max_examples=50)
def test_inverse_roundtrip(a):
    if a.is_zero():
        return
    assert a * a.inverse() == CycNum.one(5)


@given(small_cyc(7), small_cyc(7))
@settings(max_examples=50)
def test_conjugation_is_a_ring_map(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert a.conjugate().conjugate() == a


@given(small_cyc(5))
@settings(max_examples=25)
def test_json_roundtrip(a):
    assert CycNum.from_json(a.to_json()) == a


def test_is_odd_prime():
    assert is_odd_prime(3) and is_odd_prime(11)
    assert not is_odd_prime(2) and not is_odd_prime(9)
