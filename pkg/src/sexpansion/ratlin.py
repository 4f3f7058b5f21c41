"""Exact rational linear algebra on small dense matrices.

Matrices are plain lists of rows.  Entries may be ``int`` or
:class:`fractions.Fraction`; every function converts to ``Fraction`` on entry,
so no floating point value ever takes part in a computation.
"""

from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple, Sequence

import numpy as np

from .errors import NonSymmetric, SingularMatrix

Matrix = list[list[Fraction]]


class InertiaSignature(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def chi(self) -> int:
        return self.n_plus - self.n_minus


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    for row in M:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[Fraction(0)] * cols for _ in range(rows)]


def transpose(M: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*as_matrix(M))] if M else []


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    A = as_matrix(A)
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [sum((Fraction(a) * Fraction(x) for a, x in zip(row, v)), Fraction(0)) for row in A]


def kron(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    A, B = as_matrix(A), as_matrix(B)
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def is_symmetric(M: Sequence[Sequence]) -> bool:
    n, m = shape(M)
    return n == m and all(M[i][j] == M[j][i] for i in range(n) for j in range(i + 1, n))


def is_integral(M: Sequence[Sequence]) -> bool:
    return all(Fraction(x).denominator == 1 for row in M for x in row)


def exact_inertia(M: Sequence[Sequence]) -> InertiaSignature:
    """Sylvester inertia of a symmetric rational matrix by congruence.

    Pivots on the first nonzero remaining diagonal entry.  When the remaining
    diagonal is zero but some off-diagonal a_ij is not, the congruence
    e_i <- e_i + e_j puts 2*a_ij on the diagonal first.
    """
    if not is_symmetric(M):
        raise NonSymmetric("matrix is not symmetric")
    A = as_matrix(M)
    active = list(range(len(A)))
    pos = neg = 0
    while active:
        pivot = next((k for k in active if A[k][k] != 0), None)
        if pivot is None:
            pair = next(((i, j) for i in active for j in active if i < j and A[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for s in range(len(A)):
                A[i][s] += A[j][s]
            for r in range(len(A)):
                A[r][i] += A[r][j]
            pivot = i
        d = A[pivot][pivot]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(pivot)
        # only rows/columns touching the pivot column change
        support = [r for r in active if A[r][pivot] != 0]
        row_p = A[pivot]
        for r in support:
            f = A[r][pivot] / d
            row_r = A[r]
            for s in support:
                row_r[s] -= f * row_p[s]
        for r in support:
            A[r][pivot] = Fraction(0)
            row_p[r] = Fraction(0)
    return InertiaSignature(pos, neg, len(A) - pos - neg)


def _integer_rows(M: Sequence[Sequence]) -> list[list[int]]:
    rows = []
    for row in as_matrix(M):
        den = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * den) for x in row])
    return rows


def rational_rank(M: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free integer elimination."""
    rows = [r for r in _integer_rows(M) if any(r)]
    if not rows:
        return 0
    cols = len(rows[0])
    rank = 0
    for c in range(cols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, len(rows)):
            a = rows[i][c]
            if a:
                new = [pr[c] * x - a * y for x, y in zip(rows[i], pr)]
                g = gcd(*new)
                rows[i] = [x // g for x in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


def rref(M: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = as_matrix(M)
    if not A:
        return A, []
    n, m = shape(A)
    pivots: list[int] = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, n) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(n):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return A, pivots


def primitive(v: Sequence) -> list[Fraction]:
    """Scale a nonzero rational vector to a primitive integer vector whose
    first nonzero entry is positive."""
    v = [Fraction(x) for x in v]
    nz = [x for x in v if x != 0]
    if not nz:
        return v
    den = lcm(*(x.denominator for x in nz))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    if nz[0] < 0:
        g = -g
    return [Fraction(x // g) for x in ints]


def kernel_basis(M: Sequence[Sequence], cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right null space, one primitive vector per free column."""
    if not M:
        if cols is None:
            raise ValueError("column count needed for an empty matrix")
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)]
    R, pivots = rref(M)
    m = shape(M)[1]
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * m
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(primitive(v))
    return basis


def inverse(M: Sequence[Sequence]) -> Matrix:
    n, m = shape(M)
    if n != m:
        raise ValueError("matrix is not square")
    aug = [list(row) + e for row, e in zip(as_matrix(M), identity(n))]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in R]


def integer_eigen_spectrum(M: Sequence[Sequence], bound: int) -> list[tuple[int, list[list[Fraction]]]]:
    """Integer eigenvalues in [-bound, bound] with eigenspace bases, sorted."""
    if not is_integral(M):
        raise ValueError("integer_eigen_spectrum needs an integral matrix")
    n, m = shape(M)
    if n != m:
        raise ValueError("matrix is not square")
    A = as_matrix(M)
    out = []
    for t in range(-bound, bound + 1):
        shifted = [[A[i][j] - (t if i == j else 0) for j in range(n)] for i in range(n)]
        basis = kernel_basis(shifted)
        if basis:
            out.append((t, basis))
    return out


def span_annihilator(vectors: Sequence[Sequence], dim: int) -> list[list[int]]:
    """Integer rows z with z.v = 0 for every v in ``vectors``.

    A vector lies in the span of ``vectors`` iff every returned row kills it.
    """
    if not vectors:
        return [[int(i == j) for j in range(dim)] for i in range(dim)]
    return [[int(x) for x in primitive(z)] for z in kernel_basis(vectors)]


MODULUS = 2147483647  # prime; products of residues fit in int64


def modular_rank(M, p: int = MODULUS) -> int:
    """Rank of an integer matrix over GF(p); never exceeds the rational rank."""
    A = np.array([[int(x) % p for x in row] for row in M], dtype=np.int64).reshape(len(M), -1)
    rank = 0
    rows, cols = A.shape
    for c in range(cols):
        nz = np.nonzero(A[rank:, c])[0]
        if not len(nz):
            continue
        r = rank + int(nz[0])
        A[[rank, r]] = A[[r, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank] = A[rank] * inv % p
        f = A[:, c].copy()
        f[rank] = 0
        A = (A - (f[:, None] * A[rank][None, :]) % p) % p
        rank += 1
        if rank == rows:
            break
    return rank


def is_span_annihilator(annihilator: Sequence[Sequence[int]], vectors: Sequence[Sequence], dim: int) -> bool:
    """Exact check that the integer rows cut out exactly span(vectors).

    They must kill every vector, which bounds the two ranks' sum by ``dim``;
    ranks over GF(p) are lower bounds, so reaching ``dim`` there settles it.
    """
    W, _ = integer_array(vectors)
    Z = np.array(annihilator, dtype=object).reshape(len(annihilator), dim)
    if np.any(Z.dot(W.astype(object).T) != 0):
        return False
    return modular_rank(Z.tolist()) + modular_rank(W.tolist()) == dim


def in_span(annihilator: Sequence[Sequence[int]], v: Sequence) -> bool:
    return all(sum(Fraction(a) * Fraction(x) for a, x in zip(z, v) if a) == 0 for z in annihilator)


def integer_array(values, dtype_limit: int = 1 << 12):
    """Exact integer numpy view of a rational array: (ints, common denominator).

    Uses int64 when every scaled entry is at most ``dtype_limit`` in magnitude
    (safe for the triple products taken downstream), Python ints otherwise.
    """
    flat = [x if isinstance(x, (Fraction, int)) else Fraction(x) for x in np.asarray(values, dtype=object).ravel()]
    den = lcm(*{x.denominator for x in flat}) if flat else 1
    ints = [x.numerator * (den // x.denominator) for x in flat]
    big = max((abs(x) for x in ints), default=0) > dtype_limit
    arr = np.array(ints, dtype=object if big else np.int64)
    return arr.reshape(np.shape(values)), den
