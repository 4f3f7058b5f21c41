"""Ideals and direct-sum splittings of expanded algebras."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from . import ratlin
from .errors import NoCertificate
from .expansion import s_expand
from .liecore import LieAlgebra, change_of_basis, direct_sum, ensure_valid
from .ratlin import exact_inertia, integer_eigen_spectrum, kernel_basis, rational_rank
from .semigroups import Semigroup, selectors


@dataclass
class RegularRepresentation:
    operators: list  # operators[a][d][g] = K_ag^d
    faithful: bool


def regular_representation(S: Semigroup) -> RegularRepresentation:
    S.require_valid()
    K = selectors(S)
    P = S.order
    ops = [[[int(K[a, g, d]) for g in range(P)] for d in range(P)] for a in range(P)]
    distinct = len({tuple(map(tuple, M)) for M in ops}) == P
    return RegularRepresentation(ops, distinct)


@dataclass
class RankReport:
    order: int
    operator_rank: int  # span dimension of {M_a}
    table_rank: int  # the table read as an integer matrix of 1-based labels
    faithful: bool

    @property
    def full_rank_claim_holds(self) -> bool:
        return self.operator_rank == self.order and self.table_rank == self.order


def mf_rank_analysis(S: Semigroup) -> RankReport:
    rep = regular_representation(S)
    flat = [[x for row in M for x in row] for M in rep.operators]
    table = [[x + 1 for x in row] for row in S.table]
    return RankReport(S.order, rational_rank(flat), rational_rank(table), rep.faithful)


# ----------------------------------------------------------------------------
# ideals


@dataclass
class IdealCertificate:
    basis: list  # coordinate vectors in the expansion, flat index A*P + a
    dim: int
    ambient_dim: int
    checks: int
    verified: bool
    construction: str


def _bracket_closure(
    E: LieAlgebra, basis: list, generators: range | list | None = None, annihilator: list | None = None
) -> tuple[bool, int]:
    """Exact check that [X_g, w] stays in span(basis) for all g, w.

    A proposed ``annihilator`` is used once it is confirmed to cut out the span.
    """
    n = E.dim
    gens = range(n) if generators is None else generators
    if annihilator is not None and ratlin.is_span_annihilator(annihilator, basis, n):
        ann = annihilator
    else:
        ann = ratlin.span_annihilator(basis, n)
    if not ann:
        return True, len(gens) * len(basis)
    C, _ = E.int_tensor
    W, _ = ratlin.integer_array([[Fraction(x) for x in w] for w in basis])
    Z, _ = ratlin.integer_array(ann)
    if C.dtype == object or W.dtype == object or Z.dtype == object:
        C, W, Z = C.astype(object), W.astype(object), Z.astype(object)
    # B[g, k, w] = sum_j C[g, j, k] W[w, j]
    B = np.einsum("gjk,wj->gkw", C[list(gens)], W)
    hits = np.einsum("zk,gkw->zgw", Z, B)
    return bool(not np.any(hits != 0)), len(gens) * len(basis)


def ideal_certificate(S: Semigroup, L: LieAlgebra, expansion=None) -> IdealCertificate:
    """A verified proper nonzero ideal of S (x) L.

    Default: (zero-sum vectors of Q^P) (x) L, invariant under every M_a since
    each column of M_a sums to one.  Abelian L short-circuits to the span of
    one generator.  ``expansion`` reuses an already built S (x) L.
    """
    ensure_valid(L)
    P, N = S.order, L.dim
    E = s_expand(S, L) if expansion is None else expansion
    n = E.algebra.dim
    if n < 2:
        raise NoCertificate("an algebra of dimension < 2 has no proper nonzero ideal")
    if L.is_abelian:
        basis = [[Fraction(int(i == 0)) for i in range(n)]]
        ann = [[int(i == j) for i in range(n)] for j in range(1, n)]
        construction = "abelian: any one-dimensional subspace"
    elif P == 1:
        raise NoCertificate("for P = 1 the expansion is L itself")
    else:
        basis = []
        for A in range(N):
            for a in range(1, P):
                v = [Fraction(0)] * n
                v[A * P] = Fraction(1)
                v[A * P + a] = Fraction(-1)
                basis.append(v)
        # coefficient sums within each generator block
        ann = [[int(i // P == A) for i in range(n)] for A in range(N)]
        construction = "zero-sum hyperplane (x) L"
    ok, checks = _bracket_closure(E.algebra, basis, annihilator=ann)
    return IdealCertificate(basis, len(basis), n, checks, ok, construction)


# ----------------------------------------------------------------------------
# direct-sum splitting


@dataclass
class IdealPart:
    vector: list  # semigroup coordinates v; the ideal is v (x) L
    character: tuple  # eigenvalue of each M_a on v
    scale: Fraction  # sum_a v_a character_a; nonzero means v (x) L is a copy of L
    algebra: LieAlgebra
    copy_of_base: bool


@dataclass
class SplitResult:
    full: bool
    parts: list = field(default_factory=list)
    isomorphism_verified: bool | None = None
    basis_change: list | None = None

    @property
    def copies(self) -> list:
        return [p for p in self.parts if p.copy_of_base]


def common_eigenvectors(S: Semigroup) -> list[tuple[tuple, list]]:
    """Joint integer eigenspaces of the regular operators: (character, basis)."""
    ops = regular_representation(S).operators
    P = S.order
    spectra = [[t for t, _ in integer_eigen_spectrum(M, P)] for M in ops]
    out = []
    for chars in product(*spectra):
        rows = []
        for M, t in zip(ops, chars):
            rows.extend([[M[i][j] - (t if i == j else 0) for j in range(P)] for i in range(P)])
        basis = kernel_basis(rows)
        if basis:
            out.append((tuple(chars), basis))
    return out


def _tensor_part(S: Semigroup, L: LieAlgebra, v: list) -> list:
    """Columns v (x) X_A of the expansion, one per base generator."""
    P, N = S.order, L.dim
    cols = []
    for A in range(N):
        col = [Fraction(0)] * (N * P)
        for a in range(P):
            col[A * P + a] = Fraction(v[a])
        cols.append(col)
    return cols


def split_direct_sum(S: Semigroup, L: LieAlgebra) -> SplitResult:
    """Try to write S (x) L as P ideals v (x) L, each isomorphic to L.

    Every common eigenvector v of the M_a with character c gives an ideal
    v (x) L with [v X, v Y] = s v [X, Y], s = sum_a v_a c_a.  When s != 0
    the rescaled ideal is a copy of L; when s = 0 it is abelian.  A full
    split needs P independent copies and is confirmed by an explicit basis
    change onto the direct sum of P copies of L.
    """
    ensure_valid(L)
    P, N = S.order, L.dim
    if P < 2:
        raise ValueError("splitting needs P >= 2")
    E = s_expand(S, L)
    parts = []
    for chars, basis in common_eigenvectors(S):
        scale = [sum((Fraction(v[a]) * chars[a] for a in range(P)), Fraction(0)) for v in basis]
        # at most one vector per joint eigenspace with nonzero scale
        pivot = next((i for i, s in enumerate(scale) if s != 0), None)
        chosen = []
        if pivot is not None:
            chosen.append(basis[pivot])
            for i, v in enumerate(basis):
                if i != pivot:
                    f = scale[i] / scale[pivot]
                    chosen.append([x - f * y for x, y in zip(v, basis[pivot])])
        else:
            chosen = basis
        for v in chosen:
            s = sum((Fraction(v[a]) * chars[a] for a in range(P)), Fraction(0))
            vec = [x / s for x in v] if s != 0 else list(v)
            cols = _tensor_part(S, L, vec)
            closed, _ = _bracket_closure(E.algebra, cols)
            if not closed:
                continue
            sub = _restrict_to_columns(E.algebra, cols)
            parts.append(IdealPart(vec, chars, s, sub, s != 0 and sub.constants == L.constants))
    copies = [p for p in parts if p.copy_of_base]
    if len(copies) < P or ratlin.rational_rank([p.vector for p in copies]) < P:
        return SplitResult(False, parts)
    copies = copies[:P]
    A = ratlin.transpose([col for p in copies for col in _tensor_part(S, L, p.vector)])
    target = L
    for _ in range(P - 1):
        target = direct_sum(target, L)
    ok = change_of_basis(E.algebra, A).constants == target.constants
    if ok:
        for p in copies:
            ok = ok and exact_inertia_equal(p.algebra, L)
    return SplitResult(ok, parts, ok, A)


def exact_inertia_equal(L1: LieAlgebra, L2: LieAlgebra) -> bool:
    from .liecore import killing_form

    return exact_inertia(killing_form(L1)) == exact_inertia(killing_form(L2))


def _restrict_to_columns(E: LieAlgebra, cols: list) -> LieAlgebra:
    """Structure constants of the subalgebra spanned by ``cols`` (already
    known to be closed), in the basis ``cols``."""
    d = len(cols)
    # coordinates in span(cols) are fixed by any d independent rows
    M = ratlin.transpose(cols)  # n x d
    idx = _independent_rows(M, d)
    inv = ratlin.inverse([M[r] for r in idx])
    constants = {}
    for i in range(d):
        for j in range(i + 1, d):
            w = E.bracket_vectors(cols[i], cols[j])
            coords = ratlin.matvec(inv, [w[r] for r in idx])
            terms = {k: c for k, c in enumerate(coords) if c != 0}
            if terms:
                constants[(i, j)] = terms
    return LieAlgebra(d, constants)


def _independent_rows(M: list, d: int) -> list[int]:
    chosen: list[int] = []
    for r in range(len(M)):
        if rational_rank([M[i] for i in chosen] + [M[r]]) > len(chosen):
            chosen.append(r)
            if len(chosen) == d:
                break
    return chosen
