"""Structure-constant crossed products, splitting chains, left ideals, and identity checks."""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .checks import CheckResult
from .tower import sigma_partial_product

_TENSOR_GUARD_N = 3
_TENSOR_GUARD_L = 2


def _sigma_pow(tw, x, power):
    for _ in range(power):
        x = tw.sigma(x)
    return x


def standard_cyclic_cocycle(tw, b=None):
    """The standard normalized 2-cocycle of a cyclic extension: c(i,j) = 1 or b.

    b defaults to the tower's distinguished element; it must be nonzero and
    sigma-fixed. The cocycle condition is verified over all n^3 triples.
    """
    if b is None:
        b = tw.b
    if not b:
        raise ValueError("b must be nonzero")
    if tw.sigma(b) != b:
        raise ValueError("b must be sigma-fixed")
    n = tw.n
    table = {}
    for i in range(n):
        for j in range(n):
            table[(i, j)] = b if i + j >= n else tw.one
    if not cocycle_condition_holds(tw, table):
        raise RuntimeError("standard cocycle failed the cocycle condition")  # unreachable
    return table


def cocycle_condition_holds(tw, table):
    """Exact check of normalization and the 2-cocycle condition on all triples."""
    n = tw.n
    if table[(0, 0)] != tw.one:
        return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = _sigma_pow(tw, table[(j, k)], i) * table[(i, (j + k) % n)]
                rhs = table[(i, j)] * table[((i + j) % n, k)]
                if lhs != rhs:
                    return False
    return True


class CrossedProduct:
    """The crossed product (E, <sigma>, c) over the sigma-fixed field L.

    Elements are length-n tuples of E-coefficients indexed by group elements,
    representing sum_j x_j u_j with u x = sigma(x) u and u_i u_j = c(i,j) u_(i+j).
    """

    def __init__(self, tower, cocycle=None, validate=True):
        self.tower = tower
        self.n = tower.n
        self.cocycle = cocycle if cocycle is not None else standard_cyclic_cocycle(tower)
        if validate and not cocycle_condition_holds(tower, self.cocycle):
            raise ValueError("table is not a normalized 2-cocycle")
        self.zero = (tower.zero,) * self.n
        self.one = self.from_field(tower.one)

    def from_field(self, x):
        return (x,) + (self.tower.zero,) * (self.n - 1)

    def u(self, j=1):
        return tuple(self.tower.one if idx == j % self.n else self.tower.zero for idx in range(self.n))

    def u_power(self, power):
        return self.power(self.u(1), power)

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def scale(self, coefficient, x):
        return tuple(coefficient * a for a in x)

    def multiply(self, x, y):
        out = [self.tower.zero] * self.n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                idx = (i + j) % self.n
                out[idx] = out[idx] + xi * _sigma_pow(self.tower, yj, i) * self.cocycle[(i, j)]
        return tuple(out)

    def power(self, x, exponent):
        if exponent < 0:
            raise ValueError("negative powers are not supported in the crossed product")
        result = self.one
        for _ in range(exponent):
            result = self.multiply(result, x)
        return result

    def flatten(self, x):
        """Coordinates over L: each E-coefficient expanded along the E-over-L basis."""
        out = []
        for coeff in x:
            out.extend(self.tower.flatten(coeff))
        return out

    def basis_elements(self):
        """The n^2 elements e_b * u_g spanning the algebra over L."""
        out = []
        for g in range(self.n):
            for e_b in self.tower.l_basis():
                out.append(self.scale(e_b, self.u(g)))
        return out

    def dimension(self):
        return self.n * self.n

    def __repr__(self):
        return f"CrossedProduct(n={self.n}, tower={self.tower!r})"


@dataclass(frozen=True)
class SplittingChain:
    """A 1-chain z on the cyclic group; splitting means delta z equals the cocycle."""

    values: tuple

    def __len__(self):
        return len(self.values)


def chain_from_unit(algebra, y):
    """The partial-norm chain z_j = y * sigma(y) * ... * sigma^(j-1)(y).

    When b = N(y) this satisfies delta z = c for the standard cocycle; the
    property is checked by callers, never assumed.
    """
    tw = algebra.tower
    return SplittingChain(tuple(sigma_partial_product(tw, y, j) for j in range(algebra.n)))


def is_splitting_chain(algebra, chain):
    """Exact check of delta z = c: sigma^i(z_j) * z_i == c(i,j) * z_(i+j) for all pairs."""
    tw = algebra.tower
    z = chain.values
    if len(z) != algebra.n or any(not zj for zj in z):
        return False
    for i in range(algebra.n):
        for j in range(algebra.n):
            lhs = _sigma_pow(tw, z[j], i) * z[i]
            rhs = algebra.cocycle[(i, j)] * z[(i + j) % algebra.n]
            if lhs != rhs:
                return False
    return True


class LeftIdeal:
    """A left ideal as a reduced row-echelon basis over L (canonical row space)."""

    def __init__(self, algebra, rows, pivots):
        self.algebra = algebra
        self.rows = tuple(tuple(row) for row in rows)
        self.pivots = tuple(pivots)

    @property
    def dimension(self):
        return len(self.rows)

    def contains(self, element):
        residue = linalg.reduce_against(
            self.algebra.flatten(element), self.rows, self.pivots, self.algebra.tower.zero
        )
        return all(c == self.algebra.tower.zero for c in residue)

    def __eq__(self, other):
        return isinstance(other, LeftIdeal) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"LeftIdeal(dimension={self.dimension})"


def ideal_from_chain(algebra, chain):
    """The left ideal spanned by E*(z_j - u_j) over all group elements.

    Requires delta z = c; the resulting subspace is verified to be a left
    ideal of dimension n^2 - n complementary to the field part.
    """
    if not is_splitting_chain(algebra, chain):
        raise ValueError("chain does not satisfy delta z = c")
    tw = algebra.tower
    generators = []
    for j in range(1, algebra.n):
        difference = algebra.sub(algebra.from_field(chain.values[j]), algebra.u(j))
        for e_b in tw.l_basis():
            generators.append(algebra.flatten(algebra.scale(e_b, difference)))
    rows, pivots = linalg.rref(generators, tw.zero)
    ideal = LeftIdeal(algebra, rows, pivots)
    expected = algebra.n * algebra.n - algebra.n
    if ideal.dimension != expected:
        raise RuntimeError(f"ideal dimension {ideal.dimension} != {expected}")
    for row in rows:
        element = _unflatten(algebra, row)
        if not ideal.contains(algebra.multiply(algebra.u(1), element)):
            raise RuntimeError("span is not closed under left multiplication by u")
    field_rows = [algebra.flatten(algebra.from_field(e_b)) for e_b in tw.l_basis()]
    full_rows, _ = linalg.rref(list(rows) + field_rows, tw.zero)
    if len(full_rows) != algebra.n * algebra.n:
        raise RuntimeError("ideal is not complementary to the field part")
    return ideal


def _unflatten(algebra, coords):
    tw = algebra.tower
    basis = tw.l_basis()
    n = algebra.n
    out = []
    for j in range(n):
        coeff = tw.zero
        for b in range(n):
            coeff = coeff + coords[j * n + b] * basis[b]
        out.append(coeff)
    return tuple(out)


def chain_from_ideal(algebra, ideal):
    """Recover the splitting chain: z_j is the unique field part with z_j - u_j in the ideal.

    Solves the direct-sum decomposition A = I + field-part for each symbol
    u_j; a missing or non-unique solution means the ideal lies outside the
    open locus where the correspondence is defined.
    """
    tw = algebra.tower
    combined = [list(row) for row in ideal.rows]
    field_basis = tw.l_basis()
    for e_b in field_basis:
        combined.append(algebra.flatten(algebra.from_field(e_b)))
    values = []
    for j in range(algebra.n):
        target = algebra.flatten(algebra.u(j))
        coefficients = linalg.solve_combination(combined, target, tw.zero)
        if coefficients is None:
            raise ValueError("ideal is not complementary to the field part")
        z_j = tw.zero
        for b in range(algebra.n):
            z_j = z_j + coefficients[ideal.dimension + b] * field_basis[b]
        if not z_j:
            raise ValueError("recovered chain value is zero; ideal is outside the open locus")
        values.append(z_j)
    chain = SplittingChain(tuple(values))
    if not is_splitting_chain(algebra, chain):
        raise ValueError("recovered chain does not satisfy delta z = c")
    return chain


def corrupt_chain(algebra, chain):
    """Scale one chain value so that delta z = c provably fails (negative-control input).

    Scaling z_1 by an element of norm 1 would produce another valid chain, so
    candidates are scanned until the delta condition actually breaks.
    """
    for candidate in algebra.tower.field.elements():
        if not candidate or candidate == algebra.tower.one:
            continue
        values = list(chain.values)
        values[1] = values[1] * candidate
        bad = SplittingChain(tuple(values))
        if not is_splitting_chain(algebra, bad):
            return bad
    raise RuntimeError("every scaling produced a valid chain")  # impossible: the norm map is nontrivial


def norm_element_check(algebra, x, i):
    """Exact check that a * (x - u) = N_sigma^i(x) - u^i for the displayed element a."""
    tw = algebra.tower
    a = algebra.zero
    for k in range(i):
        coefficient = tw.one
        for j in range(1, k + 1):
            coefficient = coefficient * _sigma_pow(tw, x, i - j)
        a = algebra.add(a, algebra.scale(coefficient, algebra.u_power(i - k - 1)))
    lhs = algebra.multiply(a, algebra.sub(algebra.from_field(x), algebra.u(1)))
    rhs = algebra.sub(
        algebra.from_field(sigma_partial_product(tw, x, i)), algebra.u_power(i)
    )
    return CheckResult(
        name=f"norm-element identity (i={i})",
        passed=lhs == rhs,
        detail="a*(x - u) must equal (partial norm of x) - u^i",
    )


def _tau_on_algebra(algebra):
    """The semilinear extension of tau: coefficients through tau, u through lambda*u^r."""
    tw = algebra.tower
    w = algebra.multiply(algebra.from_field(tw.lam), algebra.u_power(tw.r))
    w_powers = [algebra.one]
    for _ in range(algebra.n - 1):
        w_powers.append(algebra.multiply(w_powers[-1], w))

    def apply(x):
        out = algebra.zero
        for j, coeff in enumerate(x):
            if coeff:
                out = algebra.add(
                    out, algebra.multiply(algebra.from_field(tw.tau(coeff)), w_powers[j])
                )
        return out

    return apply, w


def tau_action_check(algebra):
    """Verify the tau-action on the crossed product over the degree-6 tower.

    Checks the defining relation against every basis element, the image of
    u^n, multiplicativity on the full algebra basis, and that the m-fold
    iterate fixes u.
    """
    tw = algebra.tower
    tau_map, w = _tau_on_algebra(algebra)
    checks = []

    spanning = [tw.basis_element(i) for i in range(tw.dim)]
    relation = all(
        algebra.multiply(w, algebra.from_field(tw.tau(x)))
        == algebra.multiply(algebra.from_field(tw.tau(tw.sigma(x))), w)
        for x in spanning
    )
    checks.append(
        CheckResult("tau(u)*tau(x) = tau(sigma(x))*tau(u)", relation, "checked on a spanning set")
    )

    u_n = algebra.power(w, algebra.n)
    checks.append(
        CheckResult(
            "tau(u^n) = tau(b)",
            u_n == algebra.from_field(tw.tau(tw.b)),
            "lambda^n * b^r must equal tau(b) inside the algebra",
        )
    )

    basis = algebra.basis_elements()
    multiplicative = all(
        tau_map(algebra.multiply(p, q)) == algebra.multiply(tau_map(p), tau_map(q))
        for p in basis
        for q in basis
    )
    checks.append(
        CheckResult("tau is multiplicative on the algebra", multiplicative, "all basis pairs")
    )

    iterate = algebra.u(1)
    for _ in range(tw.m):
        iterate = tau_map(iterate)
    checks.append(CheckResult("tau^m fixes u", iterate == algebra.u(1)))
    return checks


def _tensor_key_identity(l):
    return ((0, 0),) * l


def _tensor_normalize(data, zero):
    return {key: value for key, value in data.items() if value != zero}


def _tensor_expand(algebra, element):
    """L-coordinates of an algebra element, keyed by (basis index, group index)."""
    flat = algebra.flatten(element)
    out = {}
    for g in range(algebra.n):
        for b in range(algebra.n):
            value = flat[g * algebra.n + b]
            if value != algebra.tower.zero:
                out[(b, g)] = value
    return out


def tensor_power_check(algebra, l):
    """Inside the l-fold tensor power, the span of E and v = u⊗...⊗u is (E, sigma, b^l).

    Verifies v^n = b^l, v x = sigma(x) v, and that the spanned subalgebra has
    dimension n^2. Guarded to n <= 3, l <= 2 where the n^(2l)-dimensional
    tensor algebra is desk-enumerable.
    """
    n = algebra.n
    tw = algebra.tower
    if n > _TENSOR_GUARD_N or l > _TENSOR_GUARD_L:
        raise ValueError(f"tensor power check is guarded to n <= {_TENSOR_GUARD_N}, l <= {_TENSOR_GUARD_L}")
    if l < 1:
        raise ValueError("l must be positive")

    pair_basis = [(b, g) for g in range(n) for b in range(n)]
    product_cache = {}

    def pair_product(p1, p2):
        if (p1, p2) not in product_cache:
            e1 = algebra.scale(tw.l_basis()[p1[0]], algebra.u(p1[1]))
            e2 = algebra.scale(tw.l_basis()[p2[0]], algebra.u(p2[1]))
            product_cache[(p1, p2)] = _tensor_expand(algebra, algebra.multiply(e1, e2))
        return product_cache[(p1, p2)]

    def tensor_mul(x, y):
        out = {}
        for key1, c1 in x.items():
            for key2, c2 in y.items():
                partial = [((), c1 * c2)]
                for comp in range(l):
                    expansion = pair_product(key1[comp], key2[comp])
                    partial = [
                        (prefix + (pair,), coeff * value)
                        for prefix, coeff in partial
                        for pair, value in expansion.items()
                    ]
                for key, coeff in partial:
                    out[key] = out.get(key, tw.zero) + coeff
        return _tensor_normalize(out, tw.zero)

    def tensor_from_field(x):
        expansion = _tensor_expand(algebra, algebra.from_field(x))
        identity_tail = ((0, 0),) * (l - 1)
        return {(pair,) + identity_tail: coeff for pair, coeff in expansion.items()}

    checks = []
    v = {((0, 1),) * l: tw.one}
    v_powers = [{_tensor_key_identity(l): tw.one}]
    for _ in range(n):
        v_powers.append(tensor_mul(v_powers[-1], v))
    expected = {_tensor_key_identity(l): tw.b**l}
    checks.append(
        CheckResult(
            "v^n = b^l",
            _tensor_normalize(v_powers[n], tw.zero) == _tensor_normalize(expected, tw.zero),
        )
    )

    commutes = all(
        tensor_mul(v, tensor_from_field(x)) == tensor_mul(tensor_from_field(tw.sigma(x)), v)
        for x in tw.l_basis()
    )
    checks.append(CheckResult("v*x = sigma(x)*v", commutes, "checked on the E-over-L basis"))

    full_basis = sorted(
        {key for key in _all_tensor_keys(pair_basis, l)}
    )
    index = {key: i for i, key in enumerate(full_basis)}
    rows = []
    for e_b in tw.l_basis():
        for i in range(n):
            element = tensor_mul(tensor_from_field(e_b), v_powers[i])
            vector = [tw.zero] * len(full_basis)
            for key, coeff in element.items():
                vector[index[key]] = coeff
            rows.append(vector)
    reduced, _ = linalg.rref(rows, tw.zero)
    checks.append(
        CheckResult(
            "subalgebra has dimension n^2",
            len(reduced) == n * n,
            f"rank {len(reduced)} inside the {len(full_basis)}-dimensional tensor power",
        )
    )
    return checks


def _all_tensor_keys(pair_basis, l):
    if l == 1:
        return [(pair,) for pair in pair_basis]
    shorter = _all_tensor_keys(pair_basis, l - 1)
    return [key + (pair,) for key in shorter for pair in pair_basis]


def random_cyclic_instance(q, n, rng):
    """A seeded random instance: a unit y, the tower with b = N(y), and the chain from y."""
    from .tower import FiniteTower, norm

    scaffold = FiniteTower(q, n, 1)
    while True:
        y = scaffold.random_unit(rng)
        b = norm(scaffold, y)
        if b:
            break
    tower = FiniteTower(q, n, b)
    algebra = CrossedProduct(tower)
    chain = chain_from_unit(algebra, y)
    return algebra, chain, y
