"""Tau-fixed units of S, the residues they cover mod n, and a bounded exhaustive oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .group_ring import TauData, partial_norm
from .quotient import SElement, eps_bar, is_unit, lift, reduce, tau_apply_s

_EXHAUSTIVE_GUARD = 10**8
_BLOCK_LIMIT = 1 << 20
_PREFILTER_THRESHOLD = 512


class SearchSpaceTooLargeError(ValueError):
    """Raised when the exhaustive enumeration exceeds desk scale."""


@dataclass(frozen=True)
class CoverageReport:
    """Residues of (Z/nZ)* reached by eps_bar over a family of tau-fixed units.

    generators pairs one witness unit with each residue it reaches directly;
    subgroup is the multiplicative closure of those residues. The reported
    subgroup is a lower bound for the full coverage: the generator strategy
    may miss units, which is why the strategy label is part of the report.
    """

    n: int
    r: int
    m: int
    generators: tuple
    subgroup: tuple
    is_full: bool
    strategy: str


def subgroup_closure(residues, n):
    """Multiplicative closure in (Z/nZ)* of the given unit residues."""
    for x in residues:
        if gcd(x, n) != 1:
            raise ValueError(f"{x} is not a unit mod {n}")
    known = {1}
    frontier = {x % n for x in residues} | {1}
    while frontier:
        new = set()
        for a in frontier:
            for b in list(known) + list(frontier):
                c = (a * b) % n
                if c not in known and c not in frontier and c not in new:
                    new.add(c)
        known |= frontier
        frontier = new
    return tuple(sorted(known))


def dihedral_generators(n):
    """Closed-form tau-fixed generators for r = n-1, n odd.

    Returns rho + rho^(-1) followed by the symmetric sums
    rho^(-k) + ... + rho^k for 3 <= 2k+1 < n. Each is fixed under rho -> rho^(-1);
    unit status is checked downstream, not assumed.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"dihedral generators require odd n >= 3, got {n}")
    return _symmetric_sums(n)


def _symmetric_sums(n):
    # Well-defined and tau-fixed for r = n-1 over any n >= 3; the odd-n case
    # is the dihedral family.
    gens = [SElement.from_exponents(n, (1, n - 1))]
    k = 1
    while 2 * k + 1 < n:
        gens.append(SElement.from_exponents(n, [e % n for e in range(-k, k + 1)]))
        k += 1
    return gens


def tau_symmetrize(s, tau):
    """Product of s over its tau-orbit; always tau-fixed, and a unit if s is."""
    acc = s
    cur = s
    for _ in range(tau.m - 1):
        cur = tau_apply_s(cur, tau)
        acc = acc * cur
    return acc


def fixed_unit_generators(n, r, depth=3):
    """Deduplicated tau-fixed units built from symmetrized monomials and norms.

    Base candidates: +-(rho^i symmetrized), symmetrized partial norms with
    length coprime to n, and the symmetric-sum family when r = n-1. Products
    of up to `depth` base units are included; products of units need no
    re-check. Returned in canonical sorted order.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    tau = TauData(n, r)
    candidates = []
    for i in range(n):
        u = tau_symmetrize(SElement.rho_power(n, i), tau)
        candidates.append(u)
        candidates.append(-u)
    for j in range(1, n):
        if gcd(j, n) == 1:
            candidates.append(tau_symmetrize(reduce(partial_norm(n, 1, j)), tau))
    if n >= 3 and r % n == n - 1:
        candidates.extend(_symmetric_sums(n))
    base = []
    seen = set()
    for u in candidates:
        if u not in seen and is_unit(u):
            seen.add(u)
            base.append(u)
    pool = set(base)
    frontier = list(base)
    for _ in range(depth - 1):
        new = []
        for x in frontier:
            for b in base:
                y = x * b
                if y not in pool:
                    pool.add(y)
                    new.append(y)
        frontier = new
    return sorted(pool, key=lambda s: s.coeffs)


def coverage_subgroup(n, r, depth=3):
    """Subgroup of (Z/nZ)* generated by eps_bar over the fixed-unit pool."""
    tau = TauData(n, r)
    units = fixed_unit_generators(n, r, depth)
    witnesses = {}
    for u in units:
        res = eps_bar(u)
        if res not in witnesses:
            witnesses[res] = u
    subgroup = subgroup_closure(witnesses.keys(), n)
    units_mod_n = tuple(x for x in range(1, n) if gcd(x, n) == 1) or (1,)
    generators = tuple((witnesses[res], res) for res in sorted(witnesses))
    return CoverageReport(
        n=n,
        r=r,
        m=tau.m,
        generators=generators,
        subgroup=subgroup,
        is_full=subgroup == units_mod_n,
        strategy=f"generator-based(depth={depth})",
    )


def unit_witnesses(n, r, depth=3):
    """One tau-fixed unit per residue of the covered subgroup.

    Extends the direct witnesses of coverage_subgroup by multiplying them
    until every residue in the closure has a concrete unit.
    """
    report = coverage_subgroup(n, r, depth)
    witnesses = {1 % n: SElement.one(n)}
    for unit, res in report.generators:
        witnesses.setdefault(res, unit)
    changed = True
    while changed:
        changed = False
        for res in sorted(witnesses):
            for gen_unit, gen_res in report.generators:
                new_res = (res * gen_res) % n
                if new_res not in witnesses:
                    witnesses[new_res] = witnesses[res] * gen_unit
                    changed = True
    return witnesses


def _tau_matrix(n, tau):
    """Matrix of tau_apply_s on the canonical coordinates, as int64."""
    dim = n - 1
    cols = []
    for j in range(dim):
        image = tau_apply_s(SElement(n, tuple(1 if i == j else 0 for i in range(dim))), tau)
        cols.append(image.coeffs)
    return np.array(cols, dtype=np.int64).T


def _candidate_blocks(dim, bound):
    values = np.arange(-bound, bound + 1, dtype=np.int64)
    width = len(values)
    free = dim
    while width**free > _BLOCK_LIMIT and free > 1:
        free -= 1
    grid = np.stack(np.meshgrid(*([values] * free), indexing="ij"), axis=-1).reshape(-1, free)
    if free == dim:
        yield grid
        return
    for prefix in itertools.product(values.tolist(), repeat=dim - free):
        block = np.empty((grid.shape[0], dim), dtype=np.int64)
        block[:, : dim - free] = np.array(prefix, dtype=np.int64)
        block[:, dim - free :] = grid
        yield block


def _primes_one_mod_n(n, count=2):
    found = []
    p = n + 1
    while len(found) < count:
        if p > 2 and all(p % q for q in range(2, int(p**0.5) + 1)):
            found.append(p)
        p += n
    return found


def _root_of_order(n, p):
    for g in range(2, p):
        w = pow(g, (p - 1) // n, p)
        if w == 1:
            continue
        order = 1
        x = w
        while x != 1:
            x = (x * w) % p
            order += 1
        if order == n:
            return w
    raise RuntimeError(f"no element of order {n} mod {p}")


def _norm_mod_p_mask(coeff_rows, n, p):
    """Mask of rows whose S-norm is +-1 mod p. Never rejects a true unit."""
    w = _root_of_order(n, p)
    dim = n - 1
    vand = np.empty((dim, dim), dtype=np.int64)
    for jidx in range(dim):
        point = pow(w, jidx + 1, p)
        acc = 1
        for i in range(dim):
            vand[i, jidx] = acc
            acc = (acc * point) % p
    values = (coeff_rows % p) @ vand % p
    norms = np.ones(len(coeff_rows), dtype=np.int64)
    for jidx in range(dim):
        norms = (norms * values[:, jidx]) % p
    return (norms == 1) | (norms == p - 1)


def exhaustive_fixed_units(n, r, bound=2):
    """Every tau-fixed unit whose canonical coefficients all lie in [-bound, bound].

    Independent oracle for the generator strategy: candidates are enumerated
    coefficientwise (fixedness is a linear condition, applied vectorized), a
    mod-p norm filter discards most non-units without ever discarding a true
    unit, and each survivor is confirmed by the exact resultant test.
    Enumeration blocks are disjoint, so they could be farmed out to workers;
    the final order is canonical either way.
    """
    tau = TauData(n, r)
    dim = n - 1
    total = (2 * bound + 1) ** dim
    if total > _EXHAUSTIVE_GUARD:
        raise SearchSpaceTooLargeError(
            f"(2*{bound}+1)^{dim} = {total} exceeds the desk-scale guard of {_EXHAUSTIVE_GUARD}"
        )
    fix = _tau_matrix(n, tau) - np.eye(dim, dtype=np.int64)
    survivors = []
    for block in _candidate_blocks(dim, bound):
        mask = ~(block @ fix.T).any(axis=1)
        if mask.any():
            survivors.append(block[mask])
    if not survivors:
        return []
    fixed = np.concatenate(survivors)
    if len(fixed) > _PREFILTER_THRESHOLD:
        for p in _primes_one_mod_n(n):
            fixed = fixed[_norm_mod_p_mask(fixed, n, p)]
    units = []
    for row in fixed:
        s = SElement(n, tuple(int(c) for c in row))
        if is_unit(s):
            units.append(s)
    return sorted(units, key=lambda s: s.coeffs)


def _is_prime(p):
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


def reduce_to_cyclic(p, action_images):
    """Collapse a conjugation action on a prime-order cyclic group to (m, r).

    The images generate a subgroup of (Z/pZ)*, necessarily cyclic; m is its
    order and r its smallest positive generator.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    images = [x % p for x in action_images]
    if any(x == 0 for x in images):
        raise ValueError("action images must be nonzero mod p")
    subgroup = subgroup_closure(images, p)
    m = len(subgroup)
    for candidate in subgroup:
        order = 1
        x = candidate
        while x != 1:
            x = (x * candidate) % p
            order += 1
        if order == m:
            return m, candidate
    raise RuntimeError("no generator found in a subgroup of (Z/pZ)*")  # unreachable


def verify_report(report):
    """Re-check the CoverageReport invariants; returns a list of violations."""
    problems = []
    tau = TauData(report.n, report.r)
    for residue in report.subgroup:
        if gcd(residue, report.n) != 1:
            problems.append(f"residue {residue} is not a unit mod {report.n}")
    closure = subgroup_closure(report.subgroup, report.n)
    if closure != report.subgroup:
        problems.append("subgroup is not multiplicatively closed")
    for unit, residue in report.generators:
        if eps_bar(unit) != residue:
            problems.append(f"generator residue mismatch for {unit!r}")
        if not is_unit(unit):
            problems.append(f"generator {unit!r} fails the resultant unit test")
        if not lift(unit).is_tau_fixed(tau):
            problems.append(f"generator {unit!r} is not tau-fixed after lifting")
    return problems
