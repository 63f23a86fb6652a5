"""Exact arithmetic in the integral group ring of a cyclic group of order n."""

from __future__ import annotations

from math import gcd


class OrderMismatchError(ValueError):
    """Raised when elements over different group orders are combined."""


class GroupRingElement:
    """Element of the group ring Z<sigma>, sigma of order n.

    coeffs[i] is the integer coefficient of sigma^i. Coefficients are
    arbitrary-precision and the value is immutable; all operations are pure.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs):
        n = int(n)
        if n < 1:
            raise ValueError(f"group order must be positive, got {n}")
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != n:
            raise ValueError(f"expected {n} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("GroupRingElement is immutable")

    @classmethod
    def zero(cls, n):
        return cls(n, (0,) * n)

    @classmethod
    def one(cls, n):
        return cls(n, (1,) + (0,) * (n - 1))

    @classmethod
    def sigma_power(cls, n, exponent, coefficient=1):
        """coefficient * sigma^exponent, with the exponent reduced mod n."""
        coeffs = [0] * n
        coeffs[exponent % n] = coefficient
        return cls(n, coeffs)

    def _require_same_order(self, other):
        if self.n != other.n:
            raise OrderMismatchError(f"group orders differ: {self.n} != {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.sigma_power(self.n, 0, other)
        self._require_same_order(other)
        return GroupRingElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.sigma_power(self.n, 0, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.n, tuple(other * a for a in self.coeffs))
        self._require_same_order(other)
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return GroupRingElement(n, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not defined in the group ring")
        result = GroupRingElement.one(self.n)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def augmentation(self):
        """Sum of all coefficients (image of the map sending every group element to 1)."""
        return sum(self.coeffs)

    def tau_apply(self, tau):
        """Image under the ring automorphism sigma -> sigma^r."""
        if self.n != tau.n:
            raise OrderMismatchError(f"group orders differ: {self.n} != {tau.n}")
        out = [0] * self.n
        for i, a in enumerate(self.coeffs):
            out[(i * tau.r) % self.n] = a
        return GroupRingElement(self.n, out)

    def is_tau_fixed(self, tau):
        return self.tau_apply(tau) == self

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        return f"GroupRingElement(n={self.n}, coeffs={self.coeffs})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"s^{i}" if i > 1 else "s")
            elif c == -1:
                terms.append(f"-s^{i}" if i > 1 else "-s")
            else:
                terms.append(f"{c}*s^{i}" if i > 1 else f"{c}*s")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out


def partial_norm(n, g, j):
    """The j'th partial norm of sigma^g: 1 + sigma^g + ... + sigma^(g(j-1)).

    j = 0 gives the zero element; the augmentation always equals j.
    """
    if j < 0:
        raise ValueError("partial norm length must be nonnegative")
    coeffs = [0] * n
    for a in range(j):
        coeffs[(g * a) % n] += 1
    return GroupRingElement(n, coeffs)


def full_norm(n):
    """The norm element 1 + sigma + ... + sigma^(n-1)."""
    return partial_norm(n, 1, n)


class TauData:
    """The conjugation datum: tau sigma tau^-1 = sigma^r on a cyclic group of order n.

    m is the multiplicative order of r mod n.
    """

    __slots__ = ("n", "r", "m")

    def __init__(self, n, r):
        n = int(n)
        r = int(r)
        if n < 2:
            raise ValueError(f"group order must be at least 2, got {n}")
        if not 1 <= r <= n - 1:
            raise ValueError(f"r must lie in [1, {n - 1}], got {r}")
        if gcd(r, n) != 1:
            raise ValueError(f"r must be coprime to n: gcd({r}, {n}) != 1")
        m = 1
        power = r % n
        while power != 1:
            power = (power * r) % n
            m += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("TauData is immutable")

    def __eq__(self, other):
        return isinstance(other, TauData) and (self.n, self.r) == (other.n, other.r)

    def __hash__(self):
        return hash((self.n, self.r))

    def __repr__(self):
        return f"TauData(n={self.n}, r={self.r}, m={self.m})"
