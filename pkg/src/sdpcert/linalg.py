"""Exact linear algebra: integer determinants, rational solves, generic row reduction."""

from __future__ import annotations

from fractions import Fraction


def bareiss_determinant(rows):
    """Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate value is an exact integer; the divisions performed by
    the Bareiss recurrence are exact.
    """
    mat = [[int(x) for x in row] for row in rows]
    size = len(mat)
    if size == 0:
        return 1
    for row in mat:
        if len(row) != size:
            raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(size - 1):
        if mat[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if mat[i][k] != 0), None)
            if pivot is None:
                return 0
            mat[k], mat[pivot] = mat[pivot], mat[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                mat[i][j] = (mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j]) // prev
            mat[i][k] = 0
        prev = mat[k][k]
    return sign * mat[size - 1][size - 1]


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def resultant(f, g):
    """Resultant of two integer polynomials given by ascending coefficients.

    Computed as the determinant of the Sylvester matrix via Bareiss
    elimination. Returns 0 when f is the zero polynomial (g is assumed
    nonzero by every caller).
    """
    f = _trim(f)
    g = _trim(g)
    if not f or not g:
        return 0
    df = len(f) - 1
    dg = len(g) - 1
    if df == 0:
        return f[0] ** dg
    if dg == 0:
        return g[0] ** df
    size = df + dg
    rows = []
    frev = f[::-1]
    grev = g[::-1]
    for i in range(dg):
        rows.append([0] * i + frev + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + grev + [0] * (size - dg - 1 - i))
    return bareiss_determinant(rows)


def solve_rational(matrix, rhs):
    """Solve a square linear system exactly over Q.

    Returns a list of Fractions, or None when the matrix is singular.
    """
    size = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(size):
        pivot = next((i for i in range(col, size) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        head = aug[col][col]
        aug[col] = [x / head for x in aug[col]]
        for i in range(size):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[col])]
    return [aug[i][size] for i in range(size)]


def rank_rational(rows):
    """Rank of a rational matrix, by exact Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        head = mat[rank][col]
        mat[rank] = [x / head for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        if rank == len(mat):
            break
    return rank


def nullspace_rational(rows):
    """A basis of the rational kernel of the matrix, as Fraction vectors."""
    mat = [[Fraction(x) for x in row] for row in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    reduced, pivots = rref(mat, Fraction(0))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, piv in zip(reduced, pivots):
            vec[piv] = -row[f]
        basis.append(vec)
    return basis


def rref(rows, zero):
    """Reduced row echelon form over any exact field.

    Entries must support +, -, *, / and ==. Returns (rows, pivot_columns)
    with zero rows dropped; the result is a canonical basis of the row space.
    """
    mat = [list(row) for row in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != zero), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        head = mat[r][c]
        mat[r] = [x / head for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != zero:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def reduce_against(vector, rows, pivots, zero):
    """Reduce a vector against RREF rows; the remainder is zero iff it lies in the span."""
    vec = list(vector)
    for row, piv in zip(rows, pivots):
        if vec[piv] != zero:
            factor = vec[piv]
            vec = [a - factor * b for a, b in zip(vec, row)]
    return vec


def solve_combination(vectors, target, zero):
    """Express target as a linear combination of independent vectors.

    Returns the coefficient list, or None when the target is outside the
    span or the vectors are dependent (no unique answer).
    """
    if not vectors:
        return None
    ncols = len(vectors[0])
    nvec = len(vectors)
    # augmented system: columns are the vectors, last column the target
    aug = [[vectors[j][i] for j in range(nvec)] + [target[i]] for i in range(ncols)]
    rows, pivots = rref(aug, zero)
    if nvec in pivots:
        return None  # inconsistent
    if len(pivots) != nvec:
        return None  # dependent vectors
    coeffs = [zero] * nvec
    for row, piv in zip(rows, pivots):
        coeffs[piv] = row[nvec]
    return coeffs
