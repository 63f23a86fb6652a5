import random
from fractions import Fraction

import pytest

from sdpcert.group_ring import GroupRingElement, full_norm, partial_norm
from sdpcert.linalg import rank_rational
from sdpcert.tower import (
    NormSetPoint,
    apply_monomial,
    apply_monomial_point,
    builtin_finite,
    builtin_s3,
    dump_tower,
    load_tower,
    make_norm_point,
    norm,
    phi_k_apply,
    point_is_valid,
    tau_hat,
)


@pytest.fixture(scope="module")
def s3():
    return builtin_s3()


def spanning_points(tw):
    zeta = tw.basis_element(3)
    c_minus_1 = tw.basis_element(1) - tw.one
    units = [
        tw.one,
        zeta,
        c_minus_1,
        zeta * c_minus_1,
        c_minus_1 * c_minus_1,
        zeta * c_minus_1 * c_minus_1,
    ]
    return [make_norm_point(tw, u, 0) for u in units] + [
        make_norm_point(tw, -u, 1) for u in units
    ]


def test_s3_parameters(s3):
    assert (s3.n, s3.m, s3.r, s3.t, s3.s) == (3, 2, 2, 2, 1)
    assert s3.b == s3.scalar(-1)
    assert s3.lam == s3.scalar(-1)
    assert s3.r * s3.t == s3.s * s3.n + 1


def test_s3_conjugation_relation(s3):
    # tau sigma tau^-1 = sigma^2 on every basis element (tau has order 2)
    for i in range(6):
        x = s3.basis_element(i)
        assert s3.tau(s3.sigma(s3.tau(x))) == s3.sigma(s3.sigma(x))


def test_s3_tau_b_relation(s3):
    assert s3.tau(s3.b) == s3.lam**3 * s3.b**2


def test_s3_fixed_subfield_degrees(s3):
    identity = [[int(i == j) for j in range(6)] for i in range(6)]
    sigma_fixed = 6 - rank_rational(
        [[s3.sigma_matrix[i][j] - identity[i][j] for j in range(6)] for i in range(6)]
    )
    tau_fixed = 6 - rank_rational(
        [[s3.tau_matrix[i][j] - identity[i][j] for j in range(6)] for i in range(6)]
    )
    assert sigma_fixed == s3.m
    assert tau_fixed == s3.n


def test_norm_examples(s3):
    assert norm(s3, s3.scalar(-1)) == s3.b
    # c * (zeta c) * (zeta^2 c) = zeta^3 c^3 = 2
    assert norm(s3, s3.basis_element(1)) == s3.scalar(2)


def test_norm_multiplicative_and_sigma_fixed(s3):
    rng = random.Random(0)
    for _ in range(20):
        x = s3.random_element(rng, span=3)
        y = s3.random_element(rng, span=3)
        assert norm(s3, x * y) == norm(s3, x) * norm(s3, y)
        assert s3.sigma(norm(s3, x)) == norm(s3, x)


def test_element_inversion(s3):
    rng = random.Random(1)
    for _ in range(15):
        x = s3.random_element(rng, span=3)
        if not x:
            continue
        assert x * x.inverse() == s3.one
    with pytest.raises(ZeroDivisionError):
        s3.zero.inverse()


def test_apply_monomial_examples(s3):
    x = s3.random_element(random.Random(2), span=2)
    assert apply_monomial(s3, GroupRingElement.one(3), x) == x
    minus_one = s3.scalar(-1)
    assert apply_monomial(s3, GroupRingElement(3, (0, 1, 1)), minus_one) == s3.one
    # the norm element acts as the norm
    pt = make_norm_point(s3, minus_one, 1)
    assert apply_monomial(s3, full_norm(3), pt.x) == s3.b**pt.k


def test_apply_monomial_negative_exponent_requires_unit(s3):
    element = GroupRingElement(3, (-1, 0, 0))
    with pytest.raises(ZeroDivisionError):
        apply_monomial(s3, element, s3.zero)


def test_norm_bookkeeping_on_points(s3):
    rng = random.Random(3)
    points = spanning_points(s3)
    for _ in range(25):
        element = GroupRingElement(3, [rng.randint(-2, 2) for _ in range(3)])
        pt = rng.choice(points)
        image = apply_monomial_point(s3, element, pt)
        assert image.k == pt.k * element.augmentation()
        assert point_is_valid(s3, image)


def test_tau_hat_example(s3):
    pt = make_norm_point(s3, s3.scalar(-1), 1)
    image = tau_hat(s3, pt)
    assert image.x == s3.scalar(-1)
    assert image.k == 1


def test_tau_hat_squares_to_identity(s3):
    for pt in spanning_points(s3):
        twice = tau_hat(s3, tau_hat(s3, pt))
        assert twice.x == pt.x and twice.k == pt.k


def test_tau_hat_preserves_norm_sets(s3):
    for pt in spanning_points(s3):
        assert point_is_valid(s3, tau_hat(s3, pt))


def test_tau_hat_rejects_invalid_points(s3):
    with pytest.raises(ValueError):
        tau_hat(s3, NormSetPoint(s3.scalar(2), 0))


def test_tau_hat_commutes_with_fixed_monomials(s3):
    points = spanning_points(s3)
    for a in range(-2, 3):
        for w in range(-2, 3):
            element = GroupRingElement(3, (a, w, w))
            if element == GroupRingElement.zero(3):
                continue
            for pt in points:
                lhs = tau_hat(s3, apply_monomial_point(s3, element, pt))
                rhs = apply_monomial_point(s3, element, tau_hat(s3, pt))
                assert lhs.x == rhs.x and lhs.k == rhs.k


def test_phi_k_examples(s3):
    pt = make_norm_point(s3, s3.scalar(-1), 1)
    assert phi_k_apply(s3, pt, 0) == pt
    shifted = phi_k_apply(s3, pt, 1)
    assert shifted.x == s3.one
    assert shifted.k == 4
    assert norm(s3, shifted.x) == s3.b**4
    back = phi_k_apply(s3, shifted, -1)
    assert back.x == pt.x and back.k == pt.k


def test_phi_commutes_with_tau_hat(s3):
    for pt in spanning_points(s3):
        for k in range(-3, 4):
            lhs = tau_hat(s3, phi_k_apply(s3, pt, k))
            rhs = phi_k_apply(s3, tau_hat(s3, pt), k)
            assert lhs.x == rhs.x and lhs.k == rhs.k


def test_formal_commutation_matches_points(s3):
    rng = random.Random(4)
    points = spanning_points(s3)
    for _ in range(25):
        element = GroupRingElement(3, [rng.randint(-2, 2) for _ in range(3)])
        k = rng.randint(-2, 2)
        pt = rng.choice(points)
        shift_first = apply_monomial_point(s3, element, phi_k_apply(s3, pt, k))
        monomial_first = phi_k_apply(
            s3, apply_monomial_point(s3, element, pt), element.augmentation() * k
        )
        assert shift_first.x == monomial_first.x
        assert shift_first.k == monomial_first.k


def test_builtin_finite_norm_counts():
    tw = builtin_finite(3, 2, 1)
    points = [x for x in tw.field.elements() if norm(tw, x) == tw.one]
    assert len(points) == 4  # (9 - 1) / (3 - 1)


def test_builtin_finite_frobenius_order():
    for q, n in ((3, 2), (5, 3), (3, 3)):
        tw = builtin_finite(q, n, 1)
        gen = tw.field.generator()
        images = {gen}
        x = gen
        for _ in range(n - 1):
            x = tw.sigma(x)
            images.add(x)
        assert len(images) == n
        assert tw.sigma(x) == gen


def test_builtin_finite_norm_lands_in_base():
    rng = random.Random(5)
    tw = builtin_finite(5, 3, 2)
    for _ in range(20):
        x = tw.random_element(rng)
        assert tw.sigma(norm(tw, x)) == norm(tw, x)


def test_builtin_finite_prime_power_base():
    tw = builtin_finite(4, 2, 1)
    assert tw.field.order == 16
    rng = random.Random(6)
    x, y = tw.random_unit(rng), tw.random_unit(rng)
    assert (x * y) / y == x
    assert norm(tw, x) * norm(tw, y) == norm(tw, x * y)


def test_builtin_finite_rejects_zero_b():
    with pytest.raises(ValueError):
        builtin_finite(3, 2, 0)


def test_make_norm_point_validates():
    tw = builtin_finite(3, 2, 2)
    with pytest.raises(ValueError):
        make_norm_point(tw, tw.one, 1)  # N(1) = 1 != b


def test_partial_norm_monomial_matches_product(s3):
    # evaluating the j'th partial norm as a monomial is the sigma-product
    x = s3.basis_element(1) - s3.one
    from sdpcert.tower import sigma_partial_product

    for j in range(4):
        assert apply_monomial(s3, partial_norm(3, 1, j), x) == sigma_partial_product(s3, x, j)


def test_fixture_round_trip(s3):
    text = dump_tower(s3)
    loaded = load_tower(text)
    assert loaded.table == s3.table
    assert loaded.sigma_matrix == s3.sigma_matrix
    assert loaded.tau_matrix == s3.tau_matrix
    assert loaded.b == loaded.scalar(-1)
    # evaluation agrees on a sample
    x = loaded.element((1, 2, Fraction(1, 2), 0, -1, 3))
    y = s3.element((1, 2, Fraction(1, 2), 0, -1, 3))
    assert loaded.sigma(x).coords == s3.sigma(y).coords
    assert norm(loaded, x).coords == norm(s3, y).coords


def test_loaded_tower_flatten_agrees_with_builtin(s3):
    loaded = load_tower(dump_tower(s3))
    rng = random.Random(7)
    for _ in range(10):
        x = s3.random_element(rng, span=3)
        via_pairs = [e.coords for e in s3.flatten(x)]
        via_generic = [e.coords for e in loaded.flatten(loaded.element(x.coords))]
        assert via_pairs == via_generic
    assert [e.coords for e in loaded.l_basis()] == [e.coords for e in s3.l_basis()]


def test_fixture_rejects_malformed_input():
    with pytest.raises(ValueError):
        load_tower("label 0 x\n")
    with pytest.raises(ValueError):
        load_tower("nonsense 1 2 3\n")


def test_construction_rejects_broken_parameters(s3):
    text = dump_tower(s3).replace("tower dim=6 n=3 m=2 r=2 t=2 s=1",
                                  "tower dim=6 n=3 m=2 r=2 t=2 s=2")
    with pytest.raises(RuntimeError):
        load_tower(text)
