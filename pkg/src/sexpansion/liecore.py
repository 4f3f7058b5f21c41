"""Lie algebras given by exact structure constants.

Constants are stored sparsely for i < j only; reading (j, i) negates, so
antisymmetry holds by construction.  Dense integer tensors (scaled by a common
denominator) back the heavy contractions: Jacobi sums, Killing forms and
invariance scans are all computed on exact integers.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import ratlin
from .errors import IndexOutOfRange, InvalidAlgebra, SingularMatrix, UnknownName

# dense Jacobi scan is N**5 integer work; sparse scan above this size
DENSE_JACOBI_MAX_DIM = 40
# scaled structure constants above this go to Python ints
INT64_ENTRY_LIMIT = 1 << 12


class LieAlgebra:
    """Finite-dimensional Lie algebra over Q.

    ``constants`` maps ``(i, j)`` with ``i < j`` to ``{k: C_ij^k}``.
    """

    def __init__(self, dim: int, constants: Mapping, names: Sequence[str] | None = None, name: str | None = None):
        self.dim = int(dim)
        self.name = name
        if names is None:
            names = [f"X{i + 1}" for i in range(self.dim)]
        if len(names) != self.dim:
            raise ValueError(f"expected {self.dim} generator names, got {len(names)}")
        self.names = list(names)
        clean: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), terms in constants.items():
            for idx in (i, j):
                if not 0 <= idx < self.dim:
                    raise IndexOutOfRange(f"generator index {idx} outside [0, {self.dim})")
            if i >= j:
                raise InvalidAlgebra(f"stored bracket ({i}, {j}) must have i < j", witness=(i, j))
            row = {}
            for k, v in terms.items():
                if not 0 <= k < self.dim:
                    raise IndexOutOfRange(f"generator index {k} outside [0, {self.dim})")
                v = Fraction(v)
                if v != 0:
                    row[int(k)] = v
            if row:
                clean[(int(i), int(j))] = row
        self.constants = clean

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable, names=None, name=None) -> "LieAlgebra":
        """Build from raw ``(i, j, k, value)`` entries in any index order.

        Entries given for both (i, j) and (j, i) must be negatives of each
        other; a nonzero C_ii^k is rejected.
        """
        full: dict[tuple[int, int, int], Fraction] = {}
        for i, j, k, v in entries:
            v = Fraction(v)
            if v == 0:
                continue
            if i == j:
                raise InvalidAlgebra(f"C_{i}{i}^{k} = {v} violates antisymmetry", witness=(i, i, k))
            full[(i, j, k)] = full.get((i, j, k), Fraction(0)) + v
        constants: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j, k), v in full.items():
            other = full.get((j, i, k))
            if other is not None and other != -v:
                raise InvalidAlgebra(
                    f"C_{i}{j}^{k} = {v} but C_{j}{i}^{k} = {other}; antisymmetry violated",
                    witness=(i, j, k),
                )
            a, b, s = (i, j, v) if i < j else (j, i, -v)
            constants.setdefault((a, b), {})[k] = s
        return cls(dim, constants, names, name)

    def __repr__(self):
        label = self.name or "LieAlgebra"
        return f"<{label} dim={self.dim} brackets={len(self.constants)}>"

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self.constants == other.constants

    def __hash__(self):
        return hash((self.dim, tuple(sorted((k, tuple(sorted(v.items()))) for k, v in self.constants.items()))))

    def bracket(self, i: int, j: int) -> dict[int, Fraction]:
        """Coefficients of [X_i, X_j]."""
        if i == j:
            return {}
        if i < j:
            return dict(self.constants.get((i, j), {}))
        return {k: -v for k, v in self.constants.get((j, i), {}).items()}

    def bracket_vectors(self, u: Sequence, v: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for (i, j), terms in self.constants.items():
            c = Fraction(u[i]) * Fraction(v[j]) - Fraction(u[j]) * Fraction(v[i])
            if c:
                for k, val in terms.items():
                    out[k] += c * val
        return out

    @property
    def is_abelian(self) -> bool:
        return not self.constants

    @cached_property
    def tensor(self) -> np.ndarray:
        """Dense object array T[i, j, k] = C_ij^k of Fractions."""
        T = np.full((self.dim,) * 3, Fraction(0), dtype=object)
        for (i, j), terms in self.constants.items():
            for k, v in terms.items():
                T[i, j, k] = v
                T[j, i, k] = -v
        return T

    @cached_property
    def int_tensor(self) -> tuple[np.ndarray, int]:
        """(D * C as exact integers, D) for the least common denominator D."""
        N = self.dim
        vals = [v for terms in self.constants.values() for v in terms.values()]
        den = lcm(*(v.denominator for v in vals)) if vals else 1
        big = max((abs(v) * den for v in vals), default=0) > INT64_ENTRY_LIMIT
        C = np.zeros((N, N, N), dtype=object if big else np.int64)
        for (i, j), terms in self.constants.items():
            for k, v in terms.items():
                x = int(v * den)
                C[i, j, k] = x
                C[j, i, k] = -x
        return C, den

    @cached_property
    def _report(self) -> "ValidationReport":
        return _jacobi_report(self)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    message: str = "ok"
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def _jacobi_report(L: LieAlgebra) -> ValidationReport:
    N = L.dim
    if N < 3 or L.is_abelian:
        return ValidationReport(True)
    if N <= DENSE_JACOBI_MAX_DIM:
        C, _ = L.int_tensor
        # T[i,j,k,r] = sum_m C_ij^m C_mk^r
        if C.dtype == np.int64:
            # small integers: float64 BLAS is exact here and much faster
            C = C.astype(np.float64)
        T = (C.reshape(N * N, N) @ C.reshape(N, N * N)).reshape(N, N, N, N)
        J = T + T.transpose(1, 2, 0, 3) + T.transpose(2, 0, 1, 3)
        if J.any():
            bad = np.argwhere(J != 0)
            i, j, k, r = (int(x) for x in bad[0])
            return ValidationReport(
                False, f"Jacobi identity fails at (i,j,k,r) = ({i},{j},{k},{r})", (i, j, k, r)
            )
        return ValidationReport(True)
    brackets = [[L.bracket(i, j) for j in range(N)] for i in range(N)]
    for i, j, k in combinations(range(N), 3):
        acc: dict[int, Fraction] = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, v in brackets[a][b].items():
                for r, w in brackets[m][c].items():
                    acc[r] = acc.get(r, 0) + v * w
        for r in sorted(acc):
            if acc[r] != 0:
                return ValidationReport(
                    False, f"Jacobi identity fails at (i,j,k,r) = ({i},{j},{k},{r})", (i, j, k, r)
                )
    return ValidationReport(True)


def validate_algebra(L: LieAlgebra) -> ValidationReport:
    """Check the Jacobi identity on every quadruple (i, j, k, r)."""
    return L._report


def ensure_valid(L: LieAlgebra) -> LieAlgebra:
    report = validate_algebra(L)
    if not report.ok:
        raise InvalidAlgebra(report.message, report.witness)
    return L


def adjoint(L: LieAlgebra, i: int) -> ratlin.Matrix:
    """ad(X_i) with entry (j, k) = C_ij^k."""
    if not 0 <= i < L.dim:
        raise IndexOutOfRange(f"generator index {i} outside [0, {L.dim})")
    M = ratlin.zeros(L.dim, L.dim)
    for j in range(L.dim):
        for k, v in L.bracket(i, j).items():
            M[j][k] = v
    return M


def killing_form(L: LieAlgebra) -> ratlin.Matrix:
    """g_ij = sum_{k,l} C_ik^l C_jl^k."""
    N = L.dim
    if N == 0:
        return []
    C, den = L.int_tensor
    A = C.reshape(N, N * N)
    B = C.transpose(0, 2, 1).reshape(N, N * N)
    if C.dtype == np.int64:
        # entries <= 2^12 keep every partial sum far below 2^53, so BLAS is exact
        G = np.rint(A.astype(np.float64) @ B.T.astype(np.float64)).astype(np.int64)
    else:
        G = A @ B.T
    d2 = den * den
    return [[Fraction(int(G[i, j]), d2) for j in range(N)] for i in range(N)]


def change_of_basis(L: LieAlgebra, A: Sequence[Sequence]) -> LieAlgebra:
    """Structure constants in the basis Y_r = sum_i A[i][r] X_i.

    The columns of ``A`` are the new basis vectors in old coordinates, so the
    Killing form transforms as A^T g A.
    """
    n, m = ratlin.shape(A)
    if n != L.dim or m != L.dim:
        raise ValueError(f"basis change must be {L.dim}x{L.dim}")
    try:
        Ainv = ratlin.inverse(A)
    except SingularMatrix:
        raise SingularMatrix("basis change matrix is singular") from None
    Af = ratlin.as_matrix(A)
    N = L.dim
    cols = [[Af[i][r] for i in range(N)] for r in range(N)]
    constants = {}
    for r in range(N):
        for s in range(r + 1, N):
            old = L.bracket_vectors(cols[r], cols[s])
            new = ratlin.matvec(Ainv, old)
            terms = {t: v for t, v in enumerate(new) if v != 0}
            if terms:
                constants[(r, s)] = terms
    return LieAlgebra(N, constants, [f"Y{r + 1}" for r in range(N)], name=L.name)


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    off = L1.dim
    constants = {k: dict(v) for k, v in L1.constants.items()}
    for (i, j), terms in L2.constants.items():
        constants[(i + off, j + off)] = {k + off: v for k, v in terms.items()}
    names = list(L1.names) + list(L2.names)
    if len(set(names)) != len(names):
        names = [f"{n}_1" for n in L1.names] + [f"{n}_2" for n in L2.names]
    label = f"{L1.name or 'L1'}+{L2.name or 'L2'}"
    return LieAlgebra(L1.dim + L2.dim, constants, names, name=label)


# ----------------------------------------------------------------------------
# standard algebras


def so(n: int) -> LieAlgebra:
    """so(n) on T_ab (a < b) with
    [T_ab, T_cd] = d_bc T_ad - d_ac T_bd - d_bd T_ac + d_ad T_bc."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}

    def gen(a, b):
        # T_ab as (index, sign); None for T_aa
        if a == b:
            return None
        return (index[(a, b)], 1) if a < b else (index[(b, a)], -1)

    constants = {}
    for x, (a, b) in enumerate(pairs):
        for y in range(x + 1, len(pairs)):
            c, d = pairs[y]
            terms: dict[int, int] = {}
            for delta, coef, (p, q) in (
                (b == c, 1, (a, d)),
                (a == c, -1, (b, d)),
                (b == d, -1, (a, c)),
                (a == d, 1, (b, c)),
            ):
                if delta:
                    g = gen(p, q)
                    if g is not None:
                        terms[g[0]] = terms.get(g[0], 0) + coef * g[1]
            terms = {k: v for k, v in terms.items() if v}
            if terms:
                constants[(x, y)] = terms
    names = [f"T{a + 1}{b + 1}" if n < 10 else f"T{a + 1}_{b + 1}" for a, b in pairs]
    return LieAlgebra(len(pairs), constants, names, name=f"so({n})")


def sl2() -> LieAlgebra:
    # (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
    return LieAlgebra(3, {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}}, ["h", "e", "f"], name="sl2")


def sl2c() -> LieAlgebra:
    """sl(2, C) viewed as a 6-dim real algebra (isomorphic to so(3,1)).

    Basis h, e, f, ih, ie, if; Killing inertia (3, 3, 0).
    """
    base = sl2()
    constants: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), terms in base.constants.items():
        # [X, Y] = Z, [iX, Y] = [X, iY] = iZ, [iX, iY] = -Z
        for (a, b), shift, sign in (((i, j), 0, 1), ((i + 3, j), 3, 1), ((i, j + 3), 3, 1), ((i + 3, j + 3), 0, -1)):
            for k, v in terms.items():
                key, s = ((a, b), 1) if a < b else ((b, a), -1)
                constants.setdefault(key, {})[k + shift] = s * sign * v
    return LieAlgebra(6, constants, ["h", "e", "f", "ih", "ie", "if"], name="sl2c")


def heisenberg3() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: 1}}, ["x", "y", "z"], name="heisenberg3")


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"abelian({n})")


_SO = re.compile(r"^so\(?(\d+)\)?$")
_AB = re.compile(r"^abelian\(?(\d+)\)?$")


def standard_algebra(name: str) -> LieAlgebra:
    """Resolve a built-in name: so3..so16, sl2, sl2c, heisenberg3, abelianN.

    Names joined with ``+`` build direct sums, e.g. ``sl2+so3``.
    """
    key = name.strip().lower().replace(" ", "")
    if "+" in key or "⊕" in key:
        parts = re.split(r"[+⊕]", key)
        out = standard_algebra(parts[0])
        for p in parts[1:]:
            out = direct_sum(out, standard_algebra(p))
        out.name = "+".join(parts)
        return ensure_valid(out)
    if m := _SO.match(key):
        n = int(m.group(1))
        if not 3 <= n <= 16:
            raise UnknownName(f"so(n) is built for 3 <= n <= 16, got {n}")
        return ensure_valid(so(n))
    if m := _AB.match(key):
        return abelian(int(m.group(1)))
    builders = {"sl2": sl2, "sl2c": sl2c, "so31": sl2c, "heisenberg3": heisenberg3, "heisenberg": heisenberg3}
    if key in builders:
        return ensure_valid(builders[key]())
    raise UnknownName(f"unknown algebra name {name!r}")
