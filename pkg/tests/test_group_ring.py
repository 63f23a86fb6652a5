import random
from math import gcd

import pytest

from sdpcert.group_ring import (
    GroupRingElement,
    OrderMismatchError,
    TauData,
    full_norm,
    partial_norm,
)


def random_element(rng, n, span=10):
    return GroupRingElement(n, [rng.randint(-span, span) for _ in range(n)])


def test_add_coefficientwise():
    a = GroupRingElement(3, (1, 0, 0))
    b = GroupRingElement(3, (0, 1, 1))
    assert (a + b).coeffs == (1, 1, 1)


def test_add_identity_and_inverse():
    rng = random.Random(1)
    p = random_element(rng, 6)
    assert p + GroupRingElement.zero(6) == p
    assert GroupRingElement(3, (2, -1, 0)) + GroupRingElement(3, (-2, 1, 0)) == GroupRingElement.zero(3)


def test_add_order_mismatch():
    with pytest.raises(OrderMismatchError):
        GroupRingElement.one(3) + GroupRingElement.one(4)
    with pytest.raises(OrderMismatchError):
        GroupRingElement.one(3) * GroupRingElement.one(5)


def test_mul_exponent_arithmetic():
    s1 = GroupRingElement.sigma_power(3, 1)
    s2 = GroupRingElement.sigma_power(3, 2)
    assert (s1 * s2) == GroupRingElement.one(3)


def test_mul_square_of_sum():
    # (s + s^2)^2 = s^2 + 2 s^3 + s^4 = 2 + s + s^2 since s^3 = 1
    p = GroupRingElement(3, (0, 1, 1))
    assert (p * p).coeffs == (2, 1, 1)


def test_mul_identity():
    rng = random.Random(2)
    p = random_element(rng, 9)
    assert p * GroupRingElement.one(9) == p


def test_partial_norm_definition():
    assert partial_norm(5, 1, 3).coeffs == (1, 1, 1, 0, 0)
    assert partial_norm(7, 2, 0) == GroupRingElement.zero(7)
    assert partial_norm(4, 3, 9).augmentation() == 9


def test_partial_norm_composition_identity():
    lhs = partial_norm(7, 1, 2) * partial_norm(7, 2, 3)
    assert lhs == partial_norm(7, 1, 6)


@pytest.mark.parametrize("seed", range(4))
def test_partial_norm_identity_randomized(seed):
    rng = random.Random(seed)
    for _ in range(60):
        n = rng.randint(2, 24)
        g = rng.randrange(n)
        i = rng.randint(0, 10)
        j = rng.randint(0, 60 // max(i, 1))
        assert partial_norm(n, g, j) * partial_norm(n, (g * j) % n, i) == partial_norm(n, g, i * j)


def test_augmentation_examples():
    assert full_norm(3).augmentation() == 3
    for j in range(7):
        assert partial_norm(5, 1, j).augmentation() == j


def test_augmentation_is_ring_homomorphism():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 24)
        p, q = random_element(rng, n), random_element(rng, n)
        assert (p + q).augmentation() == p.augmentation() + q.augmentation()
        assert (p * q).augmentation() == p.augmentation() * q.augmentation()


def test_tau_sends_sigma_to_sigma_r():
    tau = TauData(3, 2)
    assert GroupRingElement.sigma_power(3, 1).tau_apply(tau) == GroupRingElement.sigma_power(3, 2)


def test_tau_fixes_full_norm():
    tau = TauData(5, 2)
    assert full_norm(5).tau_apply(tau) == full_norm(5)


def test_tau_order_divides_m():
    rng = random.Random(4)
    for n, r in ((3, 2), (5, 2), (7, 3), (8, 5), (15, 2)):
        tau = TauData(n, r)
        p = random_element(rng, n)
        image = p
        for _ in range(tau.m):
            image = image.tau_apply(tau)
        assert image == p


def test_is_tau_fixed():
    tau = TauData(3, 2)
    assert GroupRingElement(3, (0, 1, 1)).is_tau_fixed(tau)
    assert not GroupRingElement.sigma_power(3, 1).is_tau_fixed(tau)
    assert full_norm(5).is_tau_fixed(TauData(5, 2))


def test_ring_laws_randomized():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(2, 24)
        a, b, c = (random_element(rng, n) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_tau_is_ring_automorphism():
    rng = random.Random(6)
    for _ in range(60):
        n = rng.randint(2, 24)
        candidates = [r for r in range(1, n) if gcd(r, n) == 1]
        tau = TauData(n, rng.choice(candidates))
        a, b = random_element(rng, n), random_element(rng, n)
        assert (a + b).tau_apply(tau) == a.tau_apply(tau) + b.tau_apply(tau)
        assert (a * b).tau_apply(tau) == a.tau_apply(tau) * b.tau_apply(tau)
        assert GroupRingElement.one(n).tau_apply(tau) == GroupRingElement.one(n)
        assert a.tau_apply(tau).augmentation() == a.augmentation()


def test_tau_data_validation():
    with pytest.raises(ValueError):
        TauData(6, 2)  # gcd != 1
    with pytest.raises(ValueError):
        TauData(5, 0)
    with pytest.raises(ValueError):
        TauData(5, 5)
    assert TauData(5, 2).m == 4
    assert TauData(7, 6).m == 2
    assert TauData(9, 1).m == 1


def test_exponents_reduced_at_construction():
    assert GroupRingElement.sigma_power(5, 7) == GroupRingElement.sigma_power(5, 2)
    assert GroupRingElement.sigma_power(5, -1) == GroupRingElement.sigma_power(5, 4)
