"""Formal calculus of monomial maps between norm sets, shift maps, and certificates."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .checks import CheckResult, all_passed
from .coverage import unit_witnesses
from .group_ring import GroupRingElement, OrderMismatchError, TauData, full_norm
from .quotient import SElement, invert, is_unit, lift, reduce


class ExponentMismatchError(ValueError):
    """Raised when norm-set maps are chained across mismatched exponents."""


class NotCoveredError(LookupError):
    """Raised when no tau-fixed unit reaching the requested residue was found."""


class NormSetMap:
    """The map x -> P(x) * b^shift from [N = b^i] to [N = b^(i*eps(P) + n*shift)].

    Stored in canonical form: the coefficient of sigma^(n-1) in the monomial
    part is removed by absorbing a multiple of the norm element into the
    shift (the norm element acts on [N = b^i] as multiplication by b^i).
    Canonical forms of equal maps are identical, so == decides map equality.
    """

    __slots__ = ("n", "monomial", "shift", "source_exp")

    def __init__(self, monomial, shift, source_exp):
        top = monomial.coeffs[-1]
        if top:
            monomial = monomial - top * full_norm(monomial.n)
            shift = shift + source_exp * top
        object.__setattr__(self, "n", monomial.n)
        object.__setattr__(self, "monomial", monomial)
        object.__setattr__(self, "shift", int(shift))
        object.__setattr__(self, "source_exp", int(source_exp))

    def __setattr__(self, name, value):
        raise AttributeError("NormSetMap is immutable")

    @property
    def target_exp(self):
        return self.source_exp * self.monomial.augmentation() + self.n * self.shift

    def __eq__(self, other):
        return (
            isinstance(other, NormSetMap)
            and self.n == other.n
            and self.monomial == other.monomial
            and self.shift == other.shift
            and self.source_exp == other.source_exp
        )

    def __hash__(self):
        return hash((self.n, self.monomial, self.shift, self.source_exp))

    def __repr__(self):
        return (
            f"NormSetMap(monomial={self.monomial.coeffs}, shift={self.shift}, "
            f"source_exp={self.source_exp})"
        )


def identity_map(n, source_exp):
    return NormSetMap(GroupRingElement.one(n), 0, source_exp)


def monomial_map(element, source_exp):
    """The norm-set map induced by a group-ring element, with no shift."""
    return NormSetMap(element, 0, source_exp)


def shift_map(n, k, source_exp):
    """The map x -> x * b^k from [N = b^i] to [N = b^(i + n*k)]."""
    return NormSetMap(GroupRingElement.one(n), k, source_exp)


def compose(f, g):
    """The composite f after g, in canonical form.

    Normalization moves the shift of g past the monomial of f: a shift by k
    commutes with a monomial P at the cost of multiplying k by eps(P).
    """
    if f.n != g.n:
        raise OrderMismatchError(f"group orders differ: {f.n} != {g.n}")
    if f.source_exp != g.target_exp:
        raise ExponentMismatchError(
            f"cannot chain: source exponent {f.source_exp} != target exponent {g.target_exp}"
        )
    monomial = f.monomial * g.monomial
    shift = f.shift + g.shift * f.monomial.augmentation()
    return NormSetMap(monomial, shift, g.source_exp)


def tau_conjugate(mp, tau):
    """Conjugation by tau: the monomial part maps through sigma -> sigma^r."""
    return NormSetMap(mp.monomial.tau_apply(tau), mp.shift, mp.source_exp)


def is_identity(mp):
    return mp.monomial == GroupRingElement.one(mp.n) and mp.shift == 0


@dataclass(frozen=True)
class Certificate:
    """Witness data for the birational map from [N = b] to [N = b^l].

    alpha_tilde and beta_tilde are tau-fixed group-ring lifts of mutually
    inverse units of S; k and s record the augmentation bookkeeping
    eps(alpha_tilde) = l + k*n and eps(beta_tilde)*l = 1 + n*s.
    """

    n: int
    r: int
    l: int
    alpha_tilde: GroupRingElement
    k: int
    beta_tilde: GroupRingElement
    s: int


def make_certificate(n, r, l, depth=3):
    """Build a certificate for residue l by multiplying coverage witnesses.

    The unit alpha with eps_bar(alpha) = l mod n comes from the coverage
    generators; beta is its inverse in S; both are lifted canonically (the
    canonical lift of a tau-fixed element is tau-fixed).
    """
    if gcd(l, n) != 1:
        raise ValueError(f"l must be coprime to n: gcd({l}, {n}) != 1")
    TauData(n, r)  # validates (n, r)
    witnesses = unit_witnesses(n, r, depth)
    residue = l % n
    if residue not in witnesses:
        raise NotCoveredError(
            f"residue {residue} is not covered by the depth-{depth} generator pool for (n={n}, r={r})"
        )
    alpha = witnesses[residue]
    beta = invert(alpha)
    alpha_tilde = lift(alpha)
    beta_tilde = lift(beta)
    k, k_rem = divmod(alpha_tilde.augmentation() - l, n)
    s, s_rem = divmod(beta_tilde.augmentation() * l - 1, n)
    if k_rem or s_rem:
        raise RuntimeError("augmentation bookkeeping failed; witness residue is wrong")
    return Certificate(n=n, r=r, l=l, alpha_tilde=alpha_tilde, k=k, beta_tilde=beta_tilde, s=s)


@dataclass(frozen=True)
class VerificationRecord:
    checks: tuple

    @property
    def passed(self):
        return all_passed(self.checks)

    def named(self, name):
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def verify_certificate(cert):
    """Recompute every certificate identity exactly; failures are recorded, not raised."""
    tau = TauData(cert.n, cert.r)
    n = cert.n
    checks = []

    alpha_s = reduce(cert.alpha_tilde)
    beta_s = reduce(cert.beta_tilde)
    checks.append(CheckResult("alpha-tau-fixed", cert.alpha_tilde.is_tau_fixed(tau)))
    checks.append(CheckResult("beta-tau-fixed", cert.beta_tilde.is_tau_fixed(tau)))
    checks.append(CheckResult("alpha-unit", is_unit(alpha_s)))
    checks.append(CheckResult("beta-unit", is_unit(beta_s)))
    checks.append(
        CheckResult(
            "mutually-inverse",
            alpha_s * beta_s == SElement.one(n),
            "reduce(alpha)*reduce(beta) must be 1 in S",
        )
    )

    product = cert.beta_tilde * cert.alpha_tilde
    deviation = product - GroupRingElement.one(n)
    levels = set(deviation.coeffs)
    if len(levels) == 1:
        r_prime = levels.pop()
        checks.append(
            CheckResult("product-is-one-plus-rN", True, f"beta*alpha = 1 + {r_prime}*N")
        )
    else:
        r_prime = None
        checks.append(
            CheckResult("product-is-one-plus-rN", False, "beta*alpha - 1 is not a multiple of N")
        )

    eps_alpha = cert.alpha_tilde.augmentation()
    eps_beta = cert.beta_tilde.augmentation()
    checks.append(
        CheckResult(
            "augmentation-alpha",
            eps_alpha == cert.l + cert.k * n,
            f"eps(alpha)={eps_alpha}, l + k*n = {cert.l + cert.k * n}",
        )
    )
    checks.append(
        CheckResult(
            "augmentation-beta",
            eps_beta * cert.l == 1 + n * cert.s,
            f"eps(beta)*l={eps_beta * cert.l}, 1 + n*s = {1 + n * cert.s}",
        )
    )

    # phi_{-s} o beta o phi_{-k} o alpha, chained from source exponent 1
    alpha_map = monomial_map(cert.alpha_tilde, 1)
    step = compose(shift_map(n, -cert.k, alpha_map.target_exp), alpha_map)
    step = compose(monomial_map(cert.beta_tilde, step.target_exp), step)
    composite = compose(shift_map(n, -cert.s, step.target_exp), step)
    checks.append(
        CheckResult(
            "composite-is-identity",
            is_identity(composite) and composite.target_exp == 1,
            f"canonical composite: monomial={composite.monomial.coeffs}, shift={composite.shift}",
        )
    )

    if r_prime is None:
        checks.append(
            CheckResult("exponent-identity", False, "no r' available: product check failed")
        )
    else:
        value = r_prime - cert.s - eps_beta * cert.k
        checks.append(
            CheckResult(
                "exponent-identity",
                value == 0,
                f"r' - s - eps(beta)*k = {value}",
            )
        )
    return VerificationRecord(tuple(checks))
