"""Arithmetic in S = Z[rho]/(1 + rho + ... + rho^(n-1)) with the tau-action rho -> rho^r."""

from __future__ import annotations

from . import linalg
from .group_ring import GroupRingElement, OrderMismatchError


class NotInvertibleError(ArithmeticError):
    """Raised when inversion is requested for a non-unit of S."""


class SElement:
    """Canonical residue in S: the unique representative of degree <= n-2.

    coeffs[i] is the coefficient of rho^i; len(coeffs) == n - 1. Equality and
    hashing are coefficientwise on this canonical form.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        n = int(n)
        if n < 2:
            raise ValueError(f"quotient ring needs n >= 2, got {n}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != n - 1:
            raise ValueError(f"expected {n - 1} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("SElement is immutable")

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * (n - 1))

    @classmethod
    def one(cls, n):
        return cls(n, (1,) + (0,) * (n - 2))

    @classmethod
    def constant(cls, n, value):
        return cls(n, (value,) + (0,) * (n - 2))

    @classmethod
    def rho_power(cls, n, exponent):
        """Canonical form of rho^exponent."""
        return cls.from_exponents(n, (exponent,))

    @classmethod
    def from_exponents(cls, n, exponents):
        """Canonical form of a sum of rho-powers (exponents reduced mod n)."""
        coeffs = [0] * n
        for e in exponents:
            coeffs[e % n] += 1
        return reduce(GroupRingElement(n, coeffs))

    def _require_same_order(self, other):
        if self.n != other.n:
            raise OrderMismatchError(f"quotient orders differ: {self.n} != {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = SElement.constant(self.n, other)
        self._require_same_order(other)
        return SElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return SElement(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = SElement.constant(self.n, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return SElement(self.n, tuple(other * a for a in self.coeffs))
        self._require_same_order(other)
        return reduce(lift(self) * lift(other))

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            base = invert(self)
            exponent = -exponent
        else:
            base = self
        result = SElement.one(self.n)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, SElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("S", self.n, self.coeffs))

    def __repr__(self):
        return f"SElement(n={self.n}, coeffs={self.coeffs})"


def reduce(element):
    """Canonical image of a group-ring element in S.

    Substitutes rho^(n-1) = -(1 + rho + ... + rho^(n-2)); this is a surjective
    ring homomorphism whose kernel is the integer multiples of the norm element.
    """
    top = element.coeffs[-1]
    return SElement(element.n, tuple(c - top for c in element.coeffs[:-1]))


def lift(s):
    """The canonical preimage in the group ring (top coefficient padded with 0)."""
    return GroupRingElement(s.n, s.coeffs + (0,))


def _modulus_polynomial(n):
    return [1] * n


def is_unit(s):
    """Whether s is invertible in S.

    Decided by the resultant of the canonical representative with
    1 + x + ... + x^(n-1): s is a unit exactly when the resultant is +-1.
    """
    return abs(linalg.resultant(list(s.coeffs), _modulus_polynomial(s.n))) == 1


def _multiplication_matrix(s):
    """Matrix of multiplication by s on the basis 1, rho, ..., rho^(n-2)."""
    n = s.n
    cols = []
    for j in range(n - 1):
        col = (s * SElement.rho_power(n, j)).coeffs
        cols.append(col)
    return [[cols[j][i] for j in range(n - 1)] for i in range(n - 1)]


def solve_inverse(s):
    """Inverse of s found by the exact rational linear solve, or None.

    Returns None when no inverse exists in S (singular system or a
    non-integral solution). This is the oracle route, independent of the
    resultant criterion used by is_unit.
    """
    matrix = _multiplication_matrix(s)
    rhs = [1] + [0] * (s.n - 2)
    solution = linalg.solve_rational(matrix, rhs)
    if solution is None:
        return None
    if any(x.denominator != 1 for x in solution):
        return None
    return SElement(s.n, tuple(int(x) for x in solution))


def invert(s):
    """Inverse of a unit of S, via the exact integer linear system.

    Raises NotInvertibleError when s fails the resultant unit test. A
    non-integral solution after a +-1 resultant would be an internal
    inconsistency and raises RuntimeError.
    """
    if not is_unit(s):
        raise NotInvertibleError(f"{s!r} is not a unit of S")
    inverse = solve_inverse(s)
    if inverse is None:
        raise RuntimeError("resultant is +-1 but the linear solve found no integral inverse")
    if s * inverse != SElement.one(s.n):
        raise RuntimeError("computed inverse failed verification")
    return inverse


def eps_bar(s):
    """Sum of canonical coefficients mod n (the residue of any preimage's augmentation)."""
    return sum(s.coeffs) % s.n


def tau_apply_s(s, tau):
    """Image of s under the ring automorphism rho -> rho^r."""
    return reduce(lift(s).tau_apply(tau))


def is_tau_fixed_s(s, tau):
    return tau_apply_s(s, tau) == s
