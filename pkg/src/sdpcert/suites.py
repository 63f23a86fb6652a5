"""Seeded property suites behind the CLI verify command, one per module."""

from __future__ import annotations

import random
from math import gcd

from . import coverage as cov
from . import crossed as cp
from . import monomial as mon
from . import tower as tow
from .checks import CheckResult
from .group_ring import GroupRingElement, TauData, full_norm, partial_norm
from .linalg import rank_rational
from .quotient import (
    SElement,
    eps_bar,
    is_unit,
    lift,
    reduce,
    solve_inverse,
    tau_apply_s,
)


def _random_element(rng, n, span=10):
    return GroupRingElement(n, [rng.randint(-span, span) for _ in range(n)])


def _random_tau(rng, n):
    candidates = [r for r in range(1, n) if gcd(r, n) == 1]
    return TauData(n, rng.choice(candidates))


def suite_group_ring(seed=0):
    rng = random.Random(seed)
    checks = []

    ok = True
    for _ in range(60):
        n = rng.randint(2, 24)
        a, b, c = (_random_element(rng, n) for _ in range(3))
        ok &= (a + b) + c == a + (b + c)
        ok &= a * b == b * a
        ok &= (a * b) * c == a * (b * c)
        ok &= a * (b + c) == a * b + a * c
        ok &= a * GroupRingElement.one(n) == a
    checks.append(CheckResult("ring laws on random triples", ok))

    ok = True
    for _ in range(40):
        n = rng.randint(2, 24)
        a, b = _random_element(rng, n), _random_element(rng, n)
        ok &= (a + b).augmentation() == a.augmentation() + b.augmentation()
        ok &= (a * b).augmentation() == a.augmentation() * b.augmentation()
    checks.append(CheckResult("augmentation is a ring homomorphism", ok))

    ok = True
    for _ in range(60):
        n = rng.randint(2, 24)
        g = rng.randrange(n)
        i = rng.randint(0, 8)
        j = rng.randint(0, 8 if i == 0 else 60 // max(i, 1))
        lhs = partial_norm(n, g, j) * partial_norm(n, (g * j) % n, i)
        ok &= lhs == partial_norm(n, g, i * j)
    checks.append(CheckResult("partial-norm identity", ok))

    ok = True
    for _ in range(40):
        n = rng.randint(2, 24)
        tau = _random_tau(rng, n)
        a, b = _random_element(rng, n), _random_element(rng, n)
        ok &= (a + b).tau_apply(tau) == a.tau_apply(tau) + b.tau_apply(tau)
        ok &= (a * b).tau_apply(tau) == a.tau_apply(tau) * b.tau_apply(tau)
        ok &= GroupRingElement.one(n).tau_apply(tau) == GroupRingElement.one(n)
        ok &= a.tau_apply(tau).augmentation() == a.augmentation()
        image = a
        for _ in range(tau.m):
            image = image.tau_apply(tau)
        ok &= image == a
        ok &= full_norm(n).tau_apply(tau) == full_norm(n)
    checks.append(CheckResult("tau acts as a ring automorphism of order dividing m", ok))
    return checks


def _random_fixed_s(rng, n, tau, span=9):
    """A random tau-fixed element of S, from orbit sums with random weights."""
    seen = set()
    acc = GroupRingElement.zero(n)
    for start in range(n):
        if start in seen:
            continue
        orbit = []
        e = start
        while e not in orbit:
            orbit.append(e)
            seen.add(e)
            e = (e * tau.r) % n
        weight = rng.randint(-span, span)
        for e in orbit:
            acc = acc + GroupRingElement.sigma_power(n, e, weight)
    return reduce(acc)


def suite_quotient(seed=0):
    rng = random.Random(seed)
    checks = []

    ok = True
    for _ in range(40):
        n = rng.randint(2, 20)
        c = rng.randint(-20, 20)
        ok &= reduce(c * full_norm(n)) == SElement.zero(n)
        p = _random_element(rng, n)
        if reduce(p) == SElement.zero(n):
            ok &= len(set(p.coeffs)) == 1
        ok &= reduce(lift(reduce(p))) == reduce(p)
    checks.append(CheckResult("reduction kernel is exactly the norm line", ok))

    ok = True
    for _ in range(150):
        n = rng.randint(3, 7)
        s = SElement(n, [rng.randint(-2, 2) for _ in range(n - 1)])
        oracle = solve_inverse(s)
        ok &= is_unit(s) == (oracle is not None)
        if oracle is not None:
            ok &= s * oracle == SElement.one(n)
    checks.append(CheckResult("unit criterion matches the linear-solve oracle", ok))

    ok = True
    for _ in range(60):
        n = rng.randint(2, 20)
        p = _random_element(rng, n)
        ok &= eps_bar(reduce(p)) == p.augmentation() % n
    checks.append(CheckResult("eps-bar commutes with reduction mod n", ok))

    ok = True
    for _ in range(100):
        n = rng.randint(2, 15)
        tau = _random_tau(rng, n)
        s = _random_fixed_s(rng, n, tau)
        ok &= tau_apply_s(s, tau) == s
        ok &= lift(s).is_tau_fixed(tau)
    checks.append(CheckResult("canonical lifts of fixed elements are fixed", ok))

    ok = True
    for _ in range(40):
        n = rng.randint(3, 12)
        tau = _random_tau(rng, n)
        s = SElement.rho_power(n, rng.randrange(n)) * rng.choice([1, -1])
        image = tau_apply_s(s, tau)
        ok &= is_unit(image)
        ok &= eps_bar(image) == eps_bar(s)
        iterate = s
        for _ in range(tau.m):
            iterate = tau_apply_s(iterate, tau)
        ok &= iterate == s
    checks.append(CheckResult("tau preserves units and eps-bar", ok))
    return checks


def suite_coverage(seed=0):
    rng = random.Random(seed)
    checks = []

    ok = True
    for n in range(3, 16, 2):
        report = cov.coverage_subgroup(n, n - 1)
        ok &= report.is_full
        ok &= not cov.verify_report(report)
    checks.append(CheckResult("dihedral coverage is the full unit group for odd n <= 15", ok))

    ok = True
    for _ in range(25):
        n = rng.randint(3, 12)
        tau = _random_tau(rng, n)
        s = SElement(n, [rng.randint(-3, 3) for _ in range(n - 1)])
        sym = cov.tau_symmetrize(s, tau)
        ok &= tau_apply_s(sym, tau) == sym
    checks.append(CheckResult("tau-symmetrization lands in the fixed ring", ok))

    ok = True
    for n, r in ((3, 1), (3, 2), (4, 3), (5, 2), (5, 4), (6, 5), (7, 3), (7, 6), (8, 7), (9, 8)):
        report = cov.coverage_subgroup(n, r)
        oracle = cov.exhaustive_fixed_units(n, r, 2)
        oracle_subgroup = cov.subgroup_closure([eps_bar(u) for u in oracle], n)
        ok &= oracle_subgroup == report.subgroup
    checks.append(CheckResult("generator coverage agrees with the bounded oracle", ok))

    ok = True
    for _ in range(20):
        p = rng.choice([3, 5, 7, 11, 13])
        images = [rng.randint(1, p - 1) for _ in range(rng.randint(1, 3))]
        m, r = cov.reduce_to_cyclic(p, images)
        order = 1
        x = r
        while x != 1:
            x = (x * r) % p
            order += 1
        ok &= order == m
        subgroup = cov.subgroup_closure([r], p)
        ok &= all(img % p in subgroup for img in images)
    checks.append(CheckResult("prime-case reduction returns a generator of the action image", ok))
    return checks


def _random_norm_map(rng, n, source_exp, span=2):
    element = GroupRingElement(n, [rng.randint(-span, span) for _ in range(n)])
    return mon.NormSetMap(element, rng.randint(-2, 2), source_exp)


def suite_monomial(seed=0):
    rng = random.Random(seed)
    checks = []

    ok = True
    for _ in range(40):
        n = rng.randint(2, 9)
        f1 = _random_norm_map(rng, n, rng.randint(-3, 3))
        f2 = _random_norm_map(rng, n, f1.target_exp)
        f3 = _random_norm_map(rng, n, f2.target_exp)
        ok &= mon.compose(f3, mon.compose(f2, f1)) == mon.compose(mon.compose(f3, f2), f1)
    checks.append(CheckResult("composition of norm-set maps is associative", ok))

    ok = True
    for _ in range(40):
        n = rng.randint(2, 9)
        tau = _random_tau(rng, n)
        f1 = _random_norm_map(rng, n, rng.randint(-3, 3))
        f2 = _random_norm_map(rng, n, f1.target_exp)
        lhs = mon.tau_conjugate(mon.compose(f2, f1), tau)
        rhs = mon.compose(mon.tau_conjugate(f2, tau), mon.tau_conjugate(f1, tau))
        ok &= lhs == rhs
    checks.append(CheckResult("tau-conjugation is multiplicative", ok))

    ok = True
    for _ in range(40):
        n = rng.randint(2, 9)
        i = rng.randint(-3, 3)
        j, k = rng.randint(-4, 4), rng.randint(-4, 4)
        inner = mon.shift_map(n, k, i)
        ok &= mon.compose(mon.shift_map(n, j, inner.target_exp), inner) == mon.shift_map(n, j + k, i)
    checks.append(CheckResult("shift maps compose additively", ok))

    ok = True
    for _ in range(40):
        n = rng.randint(2, 9)
        i = rng.randint(-3, 3)
        k = rng.randint(-3, 3)
        element = GroupRingElement(n, [rng.randint(-2, 2) for _ in range(n)])
        phi_first = mon.compose(mon.monomial_map(element, i + n * k), mon.shift_map(n, k, i))
        monomial_first = mon.compose(
            mon.shift_map(n, element.augmentation() * k, i * element.augmentation()),
            mon.monomial_map(element, i),
        )
        ok &= phi_first == monomial_first
    checks.append(CheckResult("monomials commute with shifts via the augmentation", ok))

    ok = True
    finite = tow.builtin_finite(5, 3, 2)
    base_points = [x for x in finite.field.elements() if tow.norm(finite, x) == finite.b]
    for _ in range(25):
        pt = tow.NormSetPoint(rng.choice(base_points), 1)
        element = GroupRingElement(3, [rng.randint(-2, 2) for _ in range(3)])
        shift = rng.randint(-2, 2)
        canonical = mon.NormSetMap(element, shift, pt.k)
        raw_value = tow.apply_monomial(finite, element, pt.x) * finite.b**shift
        canonical_value = (
            tow.apply_monomial(finite, canonical.monomial, pt.x) * finite.b**canonical.shift
        )
        ok &= raw_value == canonical_value
        ok &= tow.norm(finite, raw_value) == finite.b**canonical.target_exp
    checks.append(CheckResult("canonical and raw forms act identically on points", ok))

    ok = True
    for n in (3, 5):
        for r in range(1, n):
            if gcd(r, n) != 1:
                continue
            report = cov.coverage_subgroup(n, r)
            for l in report.subgroup:
                record = mon.verify_certificate(mon.make_certificate(n, r, l))
                ok &= record.passed
    checks.append(CheckResult("certificates verify for every covered residue", ok))
    return checks


def s3_spanning_points(tw):
    """Norm-set points whose elements span the degree-6 field, including x = -1."""
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
    points = [tow.make_norm_point(tw, u, 0) for u in units]
    points.extend(tow.make_norm_point(tw, -u, 1) for u in units)
    return points


def suite_tower(seed=0):
    rng = random.Random(seed)
    checks = []
    s3 = tow.builtin_s3()

    lam, b = s3.lam, s3.b
    construction = (
        s3.tau(b) == lam**3 * b**2
        and s3.r * s3.t == s3.s * s3.n + 1
        and all(
            s3.tau(s3.sigma(s3.tau(x))) == s3.sigma(s3.sigma(x))
            for x in (s3.basis_element(i) for i in range(6))
        )
    )
    checks.append(CheckResult("s3 construction self-checks", construction))

    identity = [[int(i == j) for j in range(6)] for i in range(6)]
    sigma_fixed_dim = 6 - rank_rational(
        [[s3.sigma_matrix[i][j] - identity[i][j] for j in range(6)] for i in range(6)]
    )
    tau_fixed_dim = 6 - rank_rational(
        [[s3.tau_matrix[i][j] - identity[i][j] for j in range(6)] for i in range(6)]
    )
    checks.append(
        CheckResult(
            "fixed subfields have degrees m and n",
            sigma_fixed_dim == s3.m and tau_fixed_dim == s3.n,
            f"dim E^sigma = {sigma_fixed_dim}, dim E^tau = {tau_fixed_dim}",
        )
    )

    ok = True
    for _ in range(20):
        x, y = s3.random_element(rng), s3.random_element(rng)
        nx = tow.norm(s3, x)
        ok &= s3.sigma(nx) == nx
        ok &= tow.norm(s3, x * y) == nx * tow.norm(s3, y)
    checks.append(CheckResult("norm is sigma-fixed and multiplicative", ok))

    points = s3_spanning_points(s3)
    ok = all(tow.point_is_valid(s3, tow.tau_hat(s3, pt)) for pt in points)
    checks.append(CheckResult("tau-hat preserves norm sets", ok))

    ok = all(tow.tau_hat(s3, tow.tau_hat(s3, pt)).x == pt.x for pt in points)
    checks.append(CheckResult("tau-hat squares to the identity", ok))

    tau = TauData(3, 2)
    ok = True
    for a in range(-2, 3):
        for w in range(-2, 3):
            element = GroupRingElement(3, (a, w, w))
            if element == GroupRingElement.zero(3):
                continue
            for pt in points:
                if any(e < 0 for e in element.coeffs) and not pt.x:
                    continue
                lhs = tow.tau_hat(s3, tow.apply_monomial_point(s3, element, pt))
                rhs = tow.apply_monomial_point(s3, element, tow.tau_hat(s3, pt))
                ok &= lhs.x == rhs.x and lhs.k == rhs.k
    checks.append(CheckResult("tau-hat commutes with fixed monomials", ok))

    ok = True
    for k in range(-3, 4):
        for pt in points:
            lhs = tow.tau_hat(s3, tow.phi_k_apply(s3, pt, k))
            rhs = tow.phi_k_apply(s3, tow.tau_hat(s3, pt), k)
            ok &= lhs.x == rhs.x and lhs.k == rhs.k
    checks.append(CheckResult("phi_k commutes with tau-hat", ok))

    ok = True
    for _ in range(20):
        element = GroupRingElement(3, [rng.randint(-2, 2) for _ in range(3)])
        k = rng.randint(-2, 2)
        pt = rng.choice(points)
        via_shift_first = tow.apply_monomial_point(
            s3, element, tow.phi_k_apply(s3, pt, k)
        )
        via_monomial_first = tow.phi_k_apply(
            s3, tow.apply_monomial_point(s3, element, pt), element.augmentation() * k
        )
        ok &= via_shift_first.x == via_monomial_first.x
        ok &= via_shift_first.k == via_monomial_first.k
        ok &= tow.norm(s3, tow.apply_monomial(s3, element, pt.x)) == s3.b ** (
            pt.k * element.augmentation()
        )
    checks.append(CheckResult("monomial/shift commutation and norm bookkeeping on points", ok))

    round_trip = tow.load_tower(tow.dump_tower(s3))
    checks.append(
        CheckResult(
            "fixture round trip reproduces the tower",
            round_trip.table == s3.table
            and round_trip.sigma_matrix == s3.sigma_matrix
            and round_trip.tau_matrix == s3.tau_matrix,
        )
    )
    return checks


def suite_crossed(seed=0):
    rng = random.Random(seed)
    checks = []

    ok = True
    trips = True
    dims = True
    for _ in range(20):
        q = rng.choice([3, 5])
        n = rng.choice([2, 3])
        algebra, chain, _ = cp.random_cyclic_instance(q, n, rng)
        ok &= cp.is_splitting_chain(algebra, chain)
        ideal = cp.ideal_from_chain(algebra, chain)
        dims &= ideal.dimension == n * n - n
        recovered = cp.chain_from_ideal(algebra, ideal)
        trips &= recovered.values == chain.values
        trips &= cp.ideal_from_chain(algebra, recovered) == ideal
    checks.append(CheckResult("partial-norm chains satisfy delta z = c", ok))
    checks.append(CheckResult("chain/ideal round trips are mutually inverse", trips))
    checks.append(CheckResult("ideals have dimension n^2 - n", dims))

    algebra, chain, _ = cp.random_cyclic_instance(3, 3, rng)
    corrupted = dict(algebra.cocycle)
    corrupted[(1, 1)] = corrupted[(1, 1)] * algebra.tower.field.from_int(2)
    broken = cp.CrossedProduct(algebra.tower, corrupted, validate=False)
    associative = True
    for _ in range(40):
        x, y, z = (
            tuple(algebra.tower.random_element(rng) for _ in range(3)) for _ in range(3)
        )
        if broken.multiply(broken.multiply(x, y), z) != broken.multiply(x, broken.multiply(y, z)):
            associative = False
            break
    checks.append(
        CheckResult(
            "corrupted cocycle breaks associativity",
            (not associative) and not cp.cocycle_condition_holds(algebra.tower, corrupted),
        )
    )

    ok = True
    for _ in range(5):
        q = rng.choice([3, 5])
        n = rng.choice([2, 3])
        algebra, chain, _ = cp.random_cyclic_instance(q, n, rng)
        bad = cp.corrupt_chain(algebra, chain)
        ok &= not cp.is_splitting_chain(algebra, bad)
        try:
            cp.ideal_from_chain(algebra, bad)
            ok = False
        except ValueError:
            pass
    checks.append(CheckResult("corrupted chains are rejected", ok))

    algebra, _, _ = cp.random_cyclic_instance(5, 3, rng)
    spanning = algebra.tower.l_basis() + [algebra.tower.random_unit(rng) for _ in range(2)]
    ok = all(
        cp.norm_element_check(algebra, x, i).passed
        for x in spanning
        if x
        for i in range(1, 2 * algebra.n + 1)
    )
    checks.append(CheckResult("norm-element identity on a spanning set", ok))

    s3_algebra = cp.CrossedProduct(tow.builtin_s3())
    checks.extend(cp.tau_action_check(s3_algebra))

    small, _, _ = cp.random_cyclic_instance(3, 2, rng)
    checks.extend(cp.tensor_power_check(small, 2))
    return checks


SUITES = {
    "group-ring": suite_group_ring,
    "quotient": suite_quotient,
    "coverage": suite_coverage,
    "monomial": suite_monomial,
    "tower": suite_tower,
    "crossed": suite_crossed,
}


def run_suites(names, seed=0):
    """Run the named suites; returns {suite: [CheckResult, ...]}."""
    return {name: SUITES[name](seed) for name in names}
