import random
from math import gcd

import pytest

from sdpcert.coverage import (
    CoverageReport,
    SearchSpaceTooLargeError,
    coverage_subgroup,
    dihedral_generators,
    exhaustive_fixed_units,
    fixed_unit_generators,
    reduce_to_cyclic,
    subgroup_closure,
    tau_symmetrize,
    unit_witnesses,
    verify_report,
)
from sdpcert.group_ring import TauData
from sdpcert.quotient import SElement, eps_bar, is_unit, lift, tau_apply_s


def valid_r(n):
    return [r for r in range(1, n) if gcd(r, n) == 1]


def test_dihedral_generators_n3():
    gens = dihedral_generators(3)
    assert [g.coeffs for g in gens] == [(-1, 0)]
    assert eps_bar(gens[0]) == 2


def test_dihedral_generators_n5():
    gens = dihedral_generators(5)
    assert gens[0] == SElement.from_exponents(5, (1, 4))
    assert gens[1] == SElement.from_exponents(5, (4, 0, 1))
    assert [eps_bar(g) for g in gens] == [2, 3]


def test_dihedral_generators_are_tau_fixed():
    for n in (3, 5, 7, 9, 11, 13, 15):
        tau = TauData(n, n - 1)
        for g in dihedral_generators(n):
            assert tau_apply_s(g, tau) == g


def test_dihedral_generators_reject_even_n():
    with pytest.raises(ValueError):
        dihedral_generators(4)
    with pytest.raises(ValueError):
        dihedral_generators(2)


def test_dihedral_list_may_contain_non_units():
    # for n = 9 the symmetric sum of length 3 shares a factor with n
    gens = dihedral_generators(9)
    non_units = [g for g in gens if not is_unit(g)]
    assert SElement.from_exponents(9, (8, 0, 1)) in non_units
    # the unit pool filters them out
    pool = fixed_unit_generators(9, 8, depth=1)
    assert all(is_unit(u) for u in pool)
    assert SElement.from_exponents(9, (8, 0, 1)) not in pool


def test_tau_symmetrize_fixed_input_gives_power():
    tau = TauData(5, 2)
    s = SElement.constant(5, -1)
    assert tau_symmetrize(s, tau) == s**tau.m


def test_tau_symmetrize_rho_n5_r2():
    # exponents 1 + 2 + 4 + 3 = 10 = 0 mod 5
    tau = TauData(5, 2)
    assert tau_symmetrize(SElement.rho_power(5, 1), tau) == SElement.one(5)


def test_tau_symmetrize_always_fixed():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(3, 12)
        tau = TauData(n, rng.choice(valid_r(n)))
        s = SElement(n, [rng.randint(-3, 3) for _ in range(n - 1)])
        sym = tau_symmetrize(s, tau)
        assert tau_apply_s(sym, tau) == sym


def test_fixed_unit_generators_contains_minus_one():
    assert SElement.constant(3, -1) in fixed_unit_generators(3, 2, depth=1)


def test_fixed_unit_generators_contains_dihedral_units_n5():
    pool = fixed_unit_generators(5, 4, depth=1)
    assert SElement.from_exponents(5, (1, 4)) in pool  # eps_bar 2
    assert SElement.from_exponents(5, (4, 0, 1)) in pool  # eps_bar 3


def test_fixed_unit_generators_all_unit_and_fixed():
    for n, r in ((3, 1), (5, 2), (7, 6), (8, 7), (9, 4)):
        tau = TauData(n, r)
        pool = fixed_unit_generators(n, r, depth=2)
        assert pool
        for u in pool:
            assert is_unit(u)
            assert lift(u).is_tau_fixed(tau)


def test_coverage_subgroup_dihedral_small():
    assert coverage_subgroup(3, 2).subgroup == (1, 2)
    assert coverage_subgroup(3, 2).is_full
    report = coverage_subgroup(5, 4)
    assert report.subgroup == (1, 2, 3, 4)
    assert report.is_full


def test_coverage_subgroup_trivial_action_contains_partial_norm_residues():
    report = coverage_subgroup(5, 1)
    for j in valid_r(5):
        assert j in report.subgroup


def test_coverage_report_invariants():
    for n, r in ((3, 2), (5, 4), (7, 2), (7, 6), (9, 2)):
        report = coverage_subgroup(n, r)
        assert isinstance(report, CoverageReport)
        assert verify_report(report) == []
        assert report.m == TauData(n, r).m
        assert report.strategy == "generator-based(depth=3)"


def test_exhaustive_n3_r2_bound1_is_exactly_plus_minus_one():
    units = exhaustive_fixed_units(3, 2, 1)
    assert [u.coeffs for u in units] == [(-1, 0), (1, 0)]


def test_exhaustive_contains_dihedral_unit_n5():
    units = exhaustive_fixed_units(5, 4, 1)
    assert SElement.from_exponents(5, (1, 4)) in units


def test_exhaustive_outputs_are_units_and_fixed():
    for n, r in ((5, 2), (7, 6), (8, 3)):
        tau = TauData(n, r)
        for u in exhaustive_fixed_units(n, r, 2):
            assert is_unit(u)
            assert tau_apply_s(u, tau) == u


def test_exhaustive_guard():
    with pytest.raises(SearchSpaceTooLargeError):
        exhaustive_fixed_units(40, 3, 2)


@pytest.mark.parametrize("n", range(2, 10))
def test_oracle_agreement_up_to_nine(n):
    # mutual containment: the generator pool and the bounded oracle generate
    # the same subgroup of (Z/nZ)* for every valid r
    for r in valid_r(n):
        report = coverage_subgroup(n, r, depth=3)
        oracle = exhaustive_fixed_units(n, r, 2)
        oracle_subgroup = subgroup_closure([eps_bar(u) for u in oracle], n)
        assert set(report.subgroup) <= set(oracle_subgroup), (n, r)
        assert set(oracle_subgroup) <= set(report.subgroup), (n, r)


def test_dihedral_coverage_full_up_to_fifteen():
    for n in (3, 5, 7, 9, 11, 13, 15):
        assert coverage_subgroup(n, n - 1).is_full


def test_unit_witnesses_cover_whole_subgroup():
    for n, r in ((5, 4), (7, 6), (7, 2), (9, 8)):
        report = coverage_subgroup(n, r)
        witnesses = unit_witnesses(n, r)
        assert sorted(witnesses) == list(report.subgroup)
        for residue, unit in witnesses.items():
            assert eps_bar(unit) == residue
            assert is_unit(unit)


def test_reduce_to_cyclic_examples():
    assert reduce_to_cyclic(7, [6]) == (2, 6)
    assert reduce_to_cyclic(5, [1]) == (1, 1)
    assert reduce_to_cyclic(7, [2, 4]) == (3, 2)


def test_reduce_to_cyclic_validation():
    with pytest.raises(ValueError):
        reduce_to_cyclic(6, [5])
    with pytest.raises(ValueError):
        reduce_to_cyclic(7, [7])


def test_reduce_to_cyclic_properties():
    rng = random.Random(1)
    for _ in range(40):
        p = rng.choice([3, 5, 7, 11, 13, 17])
        images = [rng.randint(1, p - 1) for _ in range(rng.randint(1, 4))]
        m, r = reduce_to_cyclic(p, images)
        order = 1
        x = r
        while x != 1:
            x = (x * r) % p
            order += 1
        assert order == m
        generated = subgroup_closure([r], p)
        assert len(generated) == m
        assert all(img % p in generated for img in images)


def test_subgroup_closure_rejects_non_units():
    with pytest.raises(ValueError):
        subgroup_closure([2], 4)
