import random

import pytest

from sdpcert.crossed import (
    CrossedProduct,
    SplittingChain,
    chain_from_ideal,
    chain_from_unit,
    cocycle_condition_holds,
    corrupt_chain,
    ideal_from_chain,
    is_splitting_chain,
    norm_element_check,
    random_cyclic_instance,
    standard_cyclic_cocycle,
    tau_action_check,
    tensor_power_check,
)
from sdpcert.linalg import rref
from sdpcert.tower import builtin_finite, builtin_s3, norm


@pytest.fixture(scope="module")
def s3_algebra():
    return CrossedProduct(builtin_s3())


def test_standard_cocycle_n2():
    tw = builtin_finite(3, 2, 2)
    table = standard_cyclic_cocycle(tw)
    assert table[(1, 1)] == tw.b
    assert table[(0, 0)] == tw.one
    assert table[(0, 1)] == tw.one
    assert table[(1, 0)] == tw.one


def test_standard_cocycle_satisfies_condition():
    for q, n in ((3, 2), (5, 3), (3, 3)):
        tw = builtin_finite(q, n, 2)
        assert cocycle_condition_holds(tw, standard_cyclic_cocycle(tw))


def test_standard_cocycle_rejects_bad_b():
    tw = builtin_finite(3, 2, 1)
    with pytest.raises(ValueError):
        standard_cyclic_cocycle(tw, tw.zero)
    with pytest.raises(ValueError):
        standard_cyclic_cocycle(tw, tw.field.generator())  # not sigma-fixed


def test_defining_relations():
    rng = random.Random(0)
    tw = builtin_finite(5, 3, 3)
    algebra = CrossedProduct(tw)
    for _ in range(20):
        x = tw.random_element(rng)
        lhs = algebra.multiply(algebra.u(1), algebra.from_field(x))
        rhs = algebra.multiply(algebra.from_field(tw.sigma(x)), algebra.u(1))
        assert lhs == rhs
    assert algebra.u_power(3) == algebra.from_field(tw.b)


def test_multiplication_is_associative():
    rng = random.Random(1)
    tw = builtin_finite(3, 3, 2)
    algebra = CrossedProduct(tw)
    for _ in range(30):
        x, y, z = (tuple(tw.random_element(rng) for _ in range(3)) for _ in range(3))
        assert algebra.multiply(algebra.multiply(x, y), z) == algebra.multiply(
            x, algebra.multiply(y, z)
        )


def test_corrupted_cocycle_breaks_associativity():
    rng = random.Random(2)
    tw = builtin_finite(3, 3, 2)
    algebra = CrossedProduct(tw)
    corrupted = dict(algebra.cocycle)
    corrupted[(1, 1)] = corrupted[(1, 1)] * tw.field.from_int(2)
    assert not cocycle_condition_holds(tw, corrupted)
    with pytest.raises(ValueError):
        CrossedProduct(tw, corrupted)
    broken = CrossedProduct(tw, corrupted, validate=False)
    failed = False
    for _ in range(60):
        x, y, z = (tuple(tw.random_element(rng) for _ in range(3)) for _ in range(3))
        if broken.multiply(broken.multiply(x, y), z) != broken.multiply(
            x, broken.multiply(y, z)
        ):
            failed = True
            break
    assert failed


def test_partial_norm_chain_splits():
    rng = random.Random(3)
    for q, n in ((3, 2), (5, 2), (3, 3), (5, 3)):
        algebra, chain, y = random_cyclic_instance(q, n, rng)
        assert algebra.tower.b == norm(algebra.tower, y)
        assert chain.values[0] == algebra.tower.one
        assert is_splitting_chain(algebra, chain)


def test_ideal_dimensions():
    rng = random.Random(4)
    for q, n in ((3, 2), (5, 3)):
        algebra, chain, _ = random_cyclic_instance(q, n, rng)
        ideal = ideal_from_chain(algebra, chain)
        assert ideal.dimension == n * n - n
        assert algebra.dimension() - ideal.dimension == n  # quotient has dimension |G|


def test_round_trips_are_mutually_inverse():
    rng = random.Random(5)
    for trial in range(25):
        q = (3, 5)[trial % 2]
        n = (2, 3)[(trial // 2) % 2]
        algebra, chain, _ = random_cyclic_instance(q, n, rng)
        ideal = ideal_from_chain(algebra, chain)
        recovered = chain_from_ideal(algebra, ideal)
        assert recovered.values == chain.values
        assert ideal_from_chain(algebra, recovered) == ideal


def test_corrupted_chain_is_rejected():
    rng = random.Random(6)
    algebra, chain, _ = random_cyclic_instance(3, 3, rng)
    bad = corrupt_chain(algebra, chain)
    assert not is_splitting_chain(algebra, bad)
    with pytest.raises(ValueError):
        ideal_from_chain(algebra, bad)


def test_scaling_by_norm_one_element_gives_another_chain():
    # scaling z_1 by a norm-one scalar produces a different valid chain, a
    # different point of the same variety
    rng = random.Random(7)
    algebra, chain, _ = random_cyclic_instance(3, 2, rng)
    tw = algebra.tower
    scalar = tw.field.from_int(2)  # N(2) = 2^2 = 1 in GF(3)
    values = list(chain.values)
    values[1] = values[1] * scalar
    other = SplittingChain(tuple(values))
    assert is_splitting_chain(algebra, other)
    ideal = ideal_from_chain(algebra, other)
    assert chain_from_ideal(algebra, ideal).values == other.values


def test_ideal_containing_field_part_is_rejected():
    rng = random.Random(8)
    algebra, chain, _ = random_cyclic_instance(3, 2, rng)
    tw = algebra.tower
    field_rows = [algebra.flatten(algebra.from_field(e_b)) for e_b in tw.l_basis()]
    rows, pivots = rref(field_rows, tw.zero)

    class FakeIdeal:
        pass

    fake = FakeIdeal()
    fake.rows = rows
    fake.pivots = pivots
    fake.dimension = len(rows)
    with pytest.raises(ValueError):
        chain_from_ideal(algebra, fake)


def test_norm_element_identity_trivial_case():
    rng = random.Random(9)
    algebra, _, _ = random_cyclic_instance(5, 3, rng)
    x = algebra.tower.random_unit(rng)
    check = norm_element_check(algebra, x, 1)
    assert check.passed


def test_norm_element_identity_finite_sweep():
    rng = random.Random(10)
    algebra, _, _ = random_cyclic_instance(3, 3, rng)
    spanning = algebra.tower.l_basis() + [algebra.tower.random_unit(rng)]
    for x in spanning:
        for i in range(1, 2 * algebra.n + 1):
            assert norm_element_check(algebra, x, i).passed


def test_norm_element_identity_on_s3(s3_algebra):
    c = s3_algebra.tower.basis_element(1)
    for i in range(1, 7):
        assert norm_element_check(s3_algebra, c, i).passed


def test_tau_action_on_s3(s3_algebra):
    checks = tau_action_check(s3_algebra)
    assert all(c.passed for c in checks)
    names = [c.name for c in checks]
    assert "tau(u^n) = tau(b)" in names
    assert "tau^m fixes u" in names


def test_tensor_square_finite():
    rng = random.Random(11)
    algebra, _, _ = random_cyclic_instance(3, 2, rng)
    checks = tensor_power_check(algebra, 2)
    assert all(c.passed for c in checks)
    by_name = {c.name: c for c in checks}
    assert "v^n = b^l" in by_name
    assert "subalgebra has dimension n^2" in by_name


def test_tensor_power_one_is_the_algebra():
    rng = random.Random(12)
    algebra, _, _ = random_cyclic_instance(5, 2, rng)
    checks = tensor_power_check(algebra, 1)
    assert all(c.passed for c in checks)


def test_tensor_power_guard():
    rng = random.Random(13)
    algebra, _, _ = random_cyclic_instance(3, 2, rng)
    with pytest.raises(ValueError):
        tensor_power_check(algebra, 3)


def test_chain_from_unit_values():
    rng = random.Random(14)
    algebra, chain, y = random_cyclic_instance(5, 3, rng)
    tw = algebra.tower
    assert chain == chain_from_unit(algebra, y)
    assert chain.values[1] == y
    assert chain.values[2] == y * tw.sigma(y)


def test_round_trip_over_number_field_points(s3_algebra):
    # the correspondence also runs over the degree-6 tower, where the point
    # field is the sigma-fixed quadratic subfield
    tw = s3_algebra.tower
    chain = chain_from_unit(s3_algebra, tw.scalar(-1))  # N(-1) = b
    assert is_splitting_chain(s3_algebra, chain)
    ideal = ideal_from_chain(s3_algebra, chain)
    assert ideal.dimension == 6
    recovered = chain_from_ideal(s3_algebra, ideal)
    assert recovered.values == chain.values
    assert ideal_from_chain(s3_algebra, recovered) == ideal


def test_crossed_product_over_loaded_fixture_tower():
    from sdpcert.tower import builtin_s3, dump_tower, load_tower

    loaded = load_tower(dump_tower(builtin_s3()))
    algebra = CrossedProduct(loaded)
    c = loaded.basis_element(1)
    for i in range(1, 7):
        assert norm_element_check(algebra, c, i).passed
