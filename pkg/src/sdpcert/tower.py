"""Exact Galois tower models: a degree-6 number-field tower and finite cyclic towers.

Both models expose the same surface: a cyclic automorphism sigma of order n,
an automorphism tau of order m with tau sigma tau^-1 = sigma^r, distinguished
base elements b and lambda with tau(b) = lambda^n * b^r, and integers t, s
with r*t = s*n + 1. Norm sets, monomial maps, the shift maps and the induced
tau-action on norm-set points are implemented on top of that surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .finitefield import ExtField, ExtFieldElement, gf, smallest_irreducible
from .group_ring import GroupRingElement


class TowerElement:
    """Field element as exact rational coordinates over a fixed power-product basis."""

    __slots__ = ("tower", "coords")

    def __init__(self, tower, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != tower.dim:
            raise ValueError(f"expected {tower.dim} coordinates, got {len(coords)}")
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("tower elements are immutable")

    def _coerce(self, other):
        if isinstance(other, TowerElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.tower.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return TowerElement(self.tower, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = self.tower.table
        out = [Fraction(0)] * self.tower.dim
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        ab = a * b
                        for k, c in enumerate(table[i][j]):
                            if c:
                                out[k] += ab * c
        return TowerElement(self.tower, out)

    __rmul__ = __mul__

    def inverse(self):
        return self.tower.inverse(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.tower.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(("tower", id(self.tower), self.coords))

    def __bool__(self):
        return any(self.coords)

    def rational_part(self):
        """The coordinate on the basis element 1, when the element is rational."""
        if any(self.coords[1:]):
            raise ValueError("element is not rational")
        return self.coords[0]

    def __repr__(self):
        return f"TowerElement({[str(c) for c in self.coords]})"


def _matrix_apply(matrix, coords):
    return tuple(sum(row[j] * coords[j] for j in range(len(coords))) for row in matrix)


def _matrix_mul(a, b):
    size = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(size)) for j in range(size))
        for i in range(size)
    )


def _identity_matrix(size):
    return tuple(tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size))


class NumberTower:
    """Structure-constant model of a Galois field tower over Q.

    The multiplication table, the automorphism matrices and the distinguished
    elements are all validated at construction; a failed check raises, so a
    constructed tower always satisfies its invariants.
    """

    def __init__(self, labels, table, sigma_matrix, tau_matrix, n, m, r, t, s,
                 b_coords, lam_coords, flatten_pairs=None):
        self.dim = len(labels)
        self.labels = tuple(labels)
        self.table = tuple(
            tuple(tuple(Fraction(c) for c in cell) for cell in row) for row in table
        )
        self.sigma_matrix = tuple(tuple(Fraction(c) for c in row) for row in sigma_matrix)
        self.tau_matrix = tuple(tuple(Fraction(c) for c in row) for row in tau_matrix)
        self.n = n
        self.m = m
        self.r = r
        self.t = t
        self.s = s
        self.one = self.basis_element(0)
        self.zero = TowerElement(self, (0,) * self.dim)
        self.b = TowerElement(self, b_coords)
        self.lam = TowerElement(self, lam_coords)
        self._flatten_pairs = flatten_pairs
        self._l_structure = None
        self._conjugation_matrices = self._build_automorphisms()
        self._self_check()

    def basis_element(self, index):
        return TowerElement(self, tuple(int(i == index) for i in range(self.dim)))

    def scalar(self, value):
        return TowerElement(self, (Fraction(value),) + (Fraction(0),) * (self.dim - 1))

    def element(self, coords):
        return TowerElement(self, coords)

    def sigma(self, x):
        return TowerElement(self, _matrix_apply(self.sigma_matrix, x.coords))

    def tau(self, x):
        return TowerElement(self, _matrix_apply(self.tau_matrix, x.coords))

    def _build_automorphisms(self):
        powers_sigma = [_identity_matrix(self.dim)]
        for _ in range(self.n - 1):
            powers_sigma.append(_matrix_mul(self.sigma_matrix, powers_sigma[-1]))
        powers_tau = [_identity_matrix(self.dim)]
        for _ in range(self.m - 1):
            powers_tau.append(_matrix_mul(self.tau_matrix, powers_tau[-1]))
        return tuple(
            _matrix_mul(ps, pt) for ps in powers_sigma for pt in powers_tau
        )

    def inverse(self, x):
        """Inverse via the product of all nontrivial conjugates.

        The full product over the automorphism group is the norm down to Q, a
        rational scalar, so division reduces to one rational division.
        """
        if not x:
            raise ZeroDivisionError("0 has no inverse")
        conjugate_product = self.one
        for matrix in self._conjugation_matrices[1:]:
            conjugate_product = conjugate_product * TowerElement(self, _matrix_apply(matrix, x.coords))
        denom = (x * conjugate_product).rational_part()
        if denom == 0:
            raise ZeroDivisionError("norm to the base field vanished")
        return conjugate_product * self.scalar(1 / denom)

    def _ensure_l_structure(self):
        """Derive the E-over-L basis and the change-of-basis matrix when not given.

        L is the sigma-fixed subspace; an E-over-L basis is picked greedily
        among the power-product basis elements. Everything stays rational.
        """
        if self._l_structure is not None:
            return
        if self.dim != self.n * self.m:
            raise RuntimeError("total degree is not n*m; no E-over-L structure exists")
        identity = _identity_matrix(self.dim)
        delta = [
            [self.sigma_matrix[i][j] - identity[i][j] for j in range(self.dim)]
            for i in range(self.dim)
        ]
        l_elements = [TowerElement(self, v) for v in linalg.nullspace_rational(delta)]
        if len(l_elements) != self.m:
            raise RuntimeError("sigma-fixed subspace does not have dimension m")
        chosen = []
        spanned = []
        for i in range(self.dim):
            candidate = self.basis_element(i)
            trial = spanned + [(g * candidate).coords for g in l_elements]
            if linalg.rank_rational(trial) == len(trial):
                chosen.append(candidate)
                spanned = trial
                if len(chosen) == self.n:
                    break
        if len(chosen) != self.n:
            raise RuntimeError("no basis of E over L among the power products")
        matrix = [
            [spanned[column][row] for column in range(self.dim)] for row in range(self.dim)
        ]
        self._l_structure = (chosen, l_elements, matrix)

    def flatten(self, x):
        """Coordinates of x over the designated basis of E over L, as elements of L."""
        if self._flatten_pairs is not None:
            out = []
            for pairs in self._flatten_pairs:
                coords = [Fraction(0)] * self.dim
                for src, dst in pairs:
                    coords[dst] = x.coords[src]
                out.append(TowerElement(self, coords))
            return out
        self._ensure_l_structure()
        _, l_elements, matrix = self._l_structure
        solution = linalg.solve_rational(matrix, list(x.coords))
        if solution is None:
            raise RuntimeError("change-of-basis matrix is singular")  # unreachable
        out = []
        for i in range(self.n):
            coeff = self.zero
            for j in range(self.m):
                coeff = coeff + solution[i * self.m + j] * l_elements[j]
            out.append(coeff)
        return out

    def l_basis(self):
        if self._flatten_pairs is not None:
            return [self.basis_element(pairs[0][0]) for pairs in self._flatten_pairs]
        self._ensure_l_structure()
        return list(self._l_structure[0])

    def random_element(self, rng, span=5):
        return TowerElement(self, tuple(rng.randint(-span, span) for _ in range(self.dim)))

    def _matrix_is_identity(self, matrix):
        return matrix == _identity_matrix(self.dim)

    def _is_ring_automorphism(self, matrix):
        basis = [self.basis_element(i) for i in range(self.dim)]
        images = [TowerElement(self, _matrix_apply(matrix, e.coords)) for e in basis]
        if images[0] != self.one:
            return False
        for i in range(self.dim):
            for j in range(self.dim):
                if images[i] * images[j] != TowerElement(
                    self, _matrix_apply(matrix, (basis[i] * basis[j]).coords)
                ):
                    return False
        return True

    def _self_check(self):
        basis = [self.basis_element(i) for i in range(self.dim)]
        for j in range(self.dim):
            if basis[0] * basis[j] != basis[j]:
                raise RuntimeError("basis element 0 is not the multiplicative identity")
        for i in range(self.dim):
            for j in range(i, self.dim):
                if basis[i] * basis[j] != basis[j] * basis[i]:
                    raise RuntimeError("multiplication table is not commutative")
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if (basis[i] * basis[j]) * basis[k] != basis[i] * (basis[j] * basis[k]):
                        raise RuntimeError("multiplication table is not associative")
        for name, matrix in (("sigma", self.sigma_matrix), ("tau", self.tau_matrix)):
            if not self._is_ring_automorphism(matrix):
                raise RuntimeError(f"{name} is not a ring automorphism")
        power = _identity_matrix(self.dim)
        for i in range(1, self.n + 1):
            power = _matrix_mul(self.sigma_matrix, power)
            if i < self.n and self._matrix_is_identity(power):
                raise RuntimeError("sigma has order smaller than n")
        if not self._matrix_is_identity(power):
            raise RuntimeError("sigma does not have order n")
        power = _identity_matrix(self.dim)
        for i in range(1, self.m + 1):
            power = _matrix_mul(self.tau_matrix, power)
            if i < self.m and self._matrix_is_identity(power):
                raise RuntimeError("tau has order smaller than m")
        if not self._matrix_is_identity(power):
            raise RuntimeError("tau does not have order m")
        tau_inverse = _identity_matrix(self.dim)
        for _ in range(self.m - 1):
            tau_inverse = _matrix_mul(self.tau_matrix, tau_inverse)
        conjugated = _matrix_mul(self.tau_matrix, _matrix_mul(self.sigma_matrix, tau_inverse))
        sigma_r = _identity_matrix(self.dim)
        for _ in range(self.r):
            sigma_r = _matrix_mul(self.sigma_matrix, sigma_r)
        if conjugated != sigma_r:
            raise RuntimeError("tau sigma tau^-1 != sigma^r")
        if self.sigma(self.b) != self.b or self.sigma(self.lam) != self.lam:
            raise RuntimeError("b and lambda must be sigma-fixed")
        if self.tau(self.b) != (self.lam**self.n) * (self.b**self.r):
            raise RuntimeError("tau(b) != lambda^n * b^r")
        if self.r * self.t != self.s * self.n + 1:
            raise RuntimeError("r*t != s*n + 1")

    def __repr__(self):
        return f"NumberTower(dim={self.dim}, n={self.n}, m={self.m}, r={self.r})"


def _reduce_s3_monomial(coeff, a, e):
    """Rewrite coeff * zeta^a * c^e on the basis zeta^{0,1} c^{0,1,2} (zeta^2=-1-zeta, c^3=2)."""
    while e >= 3:
        coeff *= 2
        e -= 3
    a %= 3
    if a == 2:
        return [(-coeff, 0, e), (-coeff, 1, e)]
    return [(coeff, a, e)]


def _s3_index(a, e):
    return 3 * a + e


def builtin_s3():
    """The splitting field of x^3 - 2 as an exact 6-dimensional tower.

    Basis zeta^a c^e with c a cube root of 2 and zeta a primitive cube root
    of unity; sigma(c) = zeta*c fixes zeta, tau(zeta) = zeta^2 fixes c.
    The parameters are (b, lambda) = (-1, -1) with r = t = 2, s = 1.
    """
    dim = 6
    labels = ["1", "c", "c2", "z", "zc", "zc2"]
    table = [[None] * dim for _ in range(dim)]
    for a1 in range(2):
        for e1 in range(3):
            for a2 in range(2):
                for e2 in range(3):
                    vec = [Fraction(0)] * dim
                    for coeff, a, e in _reduce_s3_monomial(Fraction(1), a1 + a2, e1 + e2):
                        vec[_s3_index(a, e)] += coeff
                    table[_s3_index(a1, e1)][_s3_index(a2, e2)] = tuple(vec)
    sigma_cols = []
    tau_cols = []
    for a in range(2):
        for e in range(3):
            vec = [Fraction(0)] * dim
            for coeff, aa, ee in _reduce_s3_monomial(Fraction(1), a + e, e):
                vec[_s3_index(aa, ee)] += coeff
            sigma_cols.append(vec)
            vec = [Fraction(0)] * dim
            for coeff, aa, ee in _reduce_s3_monomial(Fraction(1), 2 * a, e):
                vec[_s3_index(aa, ee)] += coeff
            tau_cols.append(vec)
    sigma_matrix = [[sigma_cols[j][i] for j in range(dim)] for i in range(dim)]
    tau_matrix = [[tau_cols[j][i] for j in range(dim)] for i in range(dim)]
    flatten_pairs = tuple(
        ((_s3_index(0, e), 0), (_s3_index(1, e), _s3_index(1, 0))) for e in range(3)
    )
    return NumberTower(
        labels=labels,
        table=table,
        sigma_matrix=sigma_matrix,
        tau_matrix=tau_matrix,
        n=3,
        m=2,
        r=2,
        t=2,
        s=1,
        b_coords=(-1, 0, 0, 0, 0, 0),
        lam_coords=(-1, 0, 0, 0, 0, 0),
        flatten_pairs=flatten_pairs,
    )


class FiniteTower:
    """Degree-n extension of a q-element field with sigma the q-power map.

    A cyclic testbed: m = 1 and tau is the identity, with r = t = 1, s = 0.
    """

    def __init__(self, q, n, b):
        if n < 2:
            raise ValueError("extension degree must be at least 2")
        base = gf(q)
        if isinstance(b, ExtFieldElement) and b.field.order == base.order**n:
            # an element of the extension itself; it must lie in the base field
            if any(bool(c) for c in b.coeffs[1:]):
                raise ValueError("b must lie in the base field")
            self.field = b.field
            b = b.coeffs[0]
        else:
            self.field = ExtField(base, smallest_irreducible(base, n))
            if isinstance(b, int):
                b = base.from_int(b)
        if not b:
            raise ValueError("b must be nonzero")
        self.q = q
        self.base = base
        self.n = n
        self.m = 1
        self.r = 1
        self.t = 1
        self.s = 0
        self.one = self.field.one
        self.zero = self.field.zero
        self.b = self.field.embed(b)
        self.lam = self.field.one
        gen = self.field.generator()
        power = gen
        for i in range(1, n):
            power = self.sigma(power)
            if power == gen:
                raise RuntimeError("frobenius has order smaller than n")
        if self.sigma(power) != gen:
            raise RuntimeError("frobenius does not have order n")

    def sigma(self, x):
        return x**self.q

    def tau(self, x):
        return x

    def scalar(self, value):
        return self.field.from_int(value)

    def flatten(self, x):
        return [self.field.embed(c) for c in x.coeffs]

    def l_basis(self):
        gen = self.field.generator()
        return [gen**e for e in range(self.n)]

    def random_element(self, rng):
        return self.field.random_element(rng)

    def random_unit(self, rng):
        while True:
            x = self.field.random_element(rng)
            if x:
                return x

    def __repr__(self):
        return f"FiniteTower(q={self.q}, n={self.n})"


def builtin_finite(q, n, b):
    """Finite cyclic tower over the q-element field with the chosen norm target b."""
    return FiniteTower(q, n, b)


@dataclass(frozen=True)
class NormSetPoint:
    """A field element x together with its claimed norm exponent: N(x) = b^k."""

    x: object
    k: int


def sigma_partial_product(tw, x, length):
    """x * sigma(x) * ... * sigma^(length-1)(x)."""
    if length == 0:
        return tw.one
    acc = x
    cur = x
    for _ in range(length - 1):
        cur = tw.sigma(cur)
        acc = acc * cur
    return acc


def norm(tw, x):
    """The cyclic norm down to the sigma-fixed field: the full sigma-product."""
    return sigma_partial_product(tw, x, tw.n)


def make_norm_point(tw, x, k):
    """A verified norm-set point; raises when N(x) != b^k."""
    if norm(tw, x) != tw.b**k:
        raise ValueError(f"norm of element is not b^{k}")
    return NormSetPoint(x, k)


def point_is_valid(tw, pt):
    return norm(tw, pt.x) == tw.b**pt.k


def apply_monomial(tw, element, x):
    """Evaluate the monomial action of a group-ring element: prod_i sigma^i(x^(e_i)).

    Negative exponents require x invertible, which every norm-set point is.
    """
    if not isinstance(element, GroupRingElement):
        raise TypeError("monomial part must be a GroupRingElement")
    if element.n != tw.n:
        raise ValueError(f"monomial order {element.n} does not match tower degree {tw.n}")
    if any(e < 0 for e in element.coeffs) and not x:
        raise ZeroDivisionError("negative exponent applied to a non-invertible element")
    result = tw.one
    cur = x
    for e in element.coeffs:
        if e:
            result = result * cur**e
        cur = tw.sigma(cur)
    return result


def apply_monomial_point(tw, element, pt, validate=True):
    """The image norm-set point under a monomial map: exponent scales by the augmentation."""
    image = NormSetPoint(apply_monomial(tw, element, pt.x), pt.k * element.augmentation())
    if validate and not point_is_valid(tw, image):
        raise RuntimeError("monomial image left the norm set")
    return image


def tau_hat(tw, pt, validate=True):
    """The induced tau-action on [N = b^k]: x -> tau(N_sigma^t(x)) / (lambda^(kt) b^(ks)).

    The output is re-verified to satisfy the same norm invariant.
    """
    if validate and not point_is_valid(tw, pt):
        raise ValueError("input does not satisfy its norm invariant")
    numerator = tw.tau(sigma_partial_product(tw, pt.x, tw.t))
    denominator = tw.lam ** (pt.k * tw.t) * tw.b ** (pt.k * tw.s)
    image = NormSetPoint(numerator / denominator, pt.k)
    if not point_is_valid(tw, image):
        raise RuntimeError("tau-hat image left the norm set")
    return image


def phi_k_apply(tw, pt, k, validate=True):
    """The shift map: x -> x * b^k, moving exponent i to i + n*k."""
    image = NormSetPoint(pt.x * tw.b**k, pt.k + tw.n * k)
    if validate and not point_is_valid(tw, image):
        raise RuntimeError("shift image left the norm set")
    return image


def dump_tower(tw):
    """Serialize a NumberTower as the plain-text structure-constant fixture format.

    One entry per line: `mul i j k value` rows give the coefficient of basis
    element k in the product of basis elements i and j; `sigma`/`tau` rows give
    automorphism matrix entries; `elem` rows give coordinates of b and lambda.
    Values are exact rationals rendered as p/q strings.
    """
    lines = [f"tower dim={tw.dim} n={tw.n} m={tw.m} r={tw.r} t={tw.t} s={tw.s}"]
    for i, label in enumerate(tw.labels):
        lines.append(f"label {i} {label}")
    for i in range(tw.dim):
        for j in range(tw.dim):
            for k, value in enumerate(tw.table[i][j]):
                if value:
                    lines.append(f"mul {i} {j} {k} {value}")
    for name, matrix in (("sigma", tw.sigma_matrix), ("tau", tw.tau_matrix)):
        for i in range(tw.dim):
            for j in range(tw.dim):
                if matrix[i][j]:
                    lines.append(f"{name} {i} {j} {matrix[i][j]}")
    for name, element in (("b", tw.b), ("lambda", tw.lam)):
        for k, value in enumerate(element.coords):
            if value:
                lines.append(f"elem {name} {k} {value}")
    return "\n".join(lines) + "\n"


def load_tower(text):
    """Parse the fixture format of dump_tower and build a validated NumberTower.

    Loaded towers support every tower-level operation; crossed products
    additionally need an E-over-L basis, which the fixture format does not
    carry.
    """
    header = None
    labels = {}
    mul_entries = []
    matrix_entries = {"sigma": [], "tau": []}
    elem_entries = {"b": [], "lambda": []}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "tower":
            header = dict(item.split("=") for item in parts[1:])
        elif parts[0] == "label":
            labels[int(parts[1])] = parts[2]
        elif parts[0] == "mul":
            mul_entries.append((int(parts[1]), int(parts[2]), int(parts[3]), Fraction(parts[4])))
        elif parts[0] in matrix_entries:
            matrix_entries[parts[0]].append((int(parts[1]), int(parts[2]), Fraction(parts[3])))
        elif parts[0] == "elem":
            elem_entries[parts[1]].append((int(parts[2]), Fraction(parts[3])))
        else:
            raise ValueError(f"unrecognized fixture line: {raw!r}")
    if header is None:
        raise ValueError("fixture is missing the tower header line")
    dim = int(header["dim"])
    table = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, value in mul_entries:
        table[i][j][k] = value
    matrices = {}
    for name, entries in matrix_entries.items():
        matrix = [[Fraction(0)] * dim for _ in range(dim)]
        for i, j, value in entries:
            matrix[i][j] = value
        matrices[name] = matrix
    elements = {}
    for name, entries in elem_entries.items():
        coords = [Fraction(0)] * dim
        for k, value in entries:
            coords[k] = value
        elements[name] = coords
    return NumberTower(
        labels=[labels.get(i, f"e{i}") for i in range(dim)],
        table=table,
        sigma_matrix=matrices["sigma"],
        tau_matrix=matrices["tau"],
        n=int(header["n"]),
        m=int(header["m"]),
        r=int(header["r"]),
        t=int(header["t"]),
        s=int(header["s"]),
        b_coords=elements["b"],
        lam_coords=elements["lambda"],
    )
