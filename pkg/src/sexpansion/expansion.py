"""S-expansion of a Lie algebra by a finite abelian semigroup.

Flat index convention: generator (A, alpha) sits at A*P + alpha
(generator-major, semigroup-minor), so the expanded Killing form is the
Kronecker product g (x) M_K.
"""

import os
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from . import ratlin
from .errors import MalformedPartition, NoZeroElement, NotInvariantBase, ResonanceFailed
from .liecore import LieAlgebra, ensure_valid, killing_form
from .semigroups import Semigroup, selectors, zero_element

DEFAULT_SEED = 20140731


@dataclass
class ExpandedAlgebra:
    base: LieAlgebra
    semigroup: Semigroup
    algebra: LieAlgebra

    @property
    def P(self) -> int:
        return self.semigroup.order

    def flat(self, A: int, alpha: int) -> int:
        return A * self.P + alpha

    def unflat(self, index: int) -> tuple[int, int]:
        return divmod(index, self.P)


def s_expand(S: Semigroup, L: LieAlgebra) -> ExpandedAlgebra:
    """C_{(A,a)(B,b)}^{(C,c)} = K_ab^c C_AB^C, re-validated for Jacobi."""
    S.require_valid()
    ensure_valid(L)
    P, T = S.order, S.table
    constants = {}
    for (A, B), terms in L.constants.items():
        for a in range(P):
            for b in range(P):
                c = T[a][b]
                constants[(A * P + a, B * P + b)] = {C * P + c: v for C, v in terms.items()}
    names = [f"λ{a + 1}·{n}" for n in L.names for a in range(P)]
    label = f"{S.name or 'S'}x{L.name or 'g'}"
    E = LieAlgebra(L.dim * P, constants, names, name=label)
    ensure_valid(E)
    return ExpandedAlgebra(L, S, E)


def expanded_killing(E: ExpandedAlgebra) -> ratlin.Matrix:
    return killing_form(E.algebra)


def zero_reduce(E: ExpandedAlgebra) -> LieAlgebra:
    """Delete the generators (A, 0_S) and every bracket component landing on
    them, i.e. impose 0_S T_A = 0."""
    z = zero_element(E.semigroup)
    if z is None:
        raise NoZeroElement(f"semigroup {E.semigroup.name or E.semigroup.table} has no zero element")
    P = E.P
    keep = [i for i in range(E.algebra.dim) if i % P != z]
    new = {old: n for n, old in enumerate(keep)}
    constants = {}
    for (i, j), terms in E.algebra.constants.items():
        if i in new and j in new:
            t = {new[k]: v for k, v in terms.items() if k in new}
            if t:
                constants[(new[i], new[j])] = t
    names = [E.algebra.names[i] for i in keep]
    reduced = LieAlgebra(len(keep), constants, names, name=f"{E.algebra.name}/0S")
    return ensure_valid(reduced)


# ----------------------------------------------------------------------------
# resonance


@dataclass
class ResonantDecomposition:
    """Subspace partition of g, subset cover of S, and bracket targets i(p,q).

    ``bracket_targets`` maps an unordered pair (p, q) to the set of part
    indices r allowed on the right-hand side; missing pairs mean the empty set.
    """

    g_partition: list
    s_partition: list
    bracket_targets: Mapping

    def targets(self, p: int, q: int) -> set:
        key = (p, q) if (p, q) in self.bracket_targets else (q, p)
        return set(self.bracket_targets.get(key, ()))


@dataclass(frozen=True)
class ResonanceReport:
    ok: bool
    message: str = "ok"
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def _check_partitions(S: Semigroup, L: LieAlgebra, D: ResonantDecomposition):
    if len(D.g_partition) != len(D.s_partition):
        raise MalformedPartition("g_partition and s_partition need one entry per part")
    seen: set = set()
    for part in D.g_partition:
        for x in part:
            if not 0 <= x < L.dim:
                raise MalformedPartition(f"generator {x} outside [0, {L.dim})")
            if x in seen:
                raise MalformedPartition(f"generator {x} appears in two parts")
            seen.add(x)
    if seen != set(range(L.dim)):
        raise MalformedPartition("g_partition must cover every generator")
    covered = set()
    for part in D.s_partition:
        for a in part:
            if not 0 <= a < S.order:
                raise MalformedPartition(f"semigroup element {a} outside [0, {S.order})")
        covered |= set(part)
    if covered != set(range(S.order)):
        raise MalformedPartition("s_partition must cover the semigroup")
    n = len(D.g_partition)
    for key, rs in D.bracket_targets.items():
        if any(not 0 <= x < n for x in (*key, *rs)):
            raise MalformedPartition(f"bracket target {key} -> {rs} refers to a missing part")


def check_resonance(S: Semigroup, L: LieAlgebra, D: ResonantDecomposition) -> ResonanceReport:
    """[V_p, V_q] within the sum of V_r, and S_p S_q within the union of S_r,
    for r in i(p,q)."""
    _check_partitions(S, L, D)
    n = len(D.g_partition)
    owner = {x: p for p, part in enumerate(D.g_partition) for x in part}
    for p in range(n):
        for q in range(p, n):
            allowed = D.targets(p, q)
            for x in D.g_partition[p]:
                for y in D.g_partition[q]:
                    for k in L.bracket(x, y):
                        if owner[k] not in allowed:
                            return ResonanceReport(
                                False,
                                f"[V_{p}, V_{q}] not inside i({p},{q}) = {sorted(allowed)}: "
                                f"[X{x + 1}, X{y + 1}] has a component along X{k + 1} in V_{owner[k]}",
                                ("algebra", p, q, x, y, k),
                            )
            union = set().union(*(D.s_partition[r] for r in allowed)) if allowed else set()
            for a in D.s_partition[p]:
                for b in D.s_partition[q]:
                    c = S.table[a][b]
                    if c not in union:
                        return ResonanceReport(
                            False,
                            f"S_{p} S_{q} not inside the union over i({p},{q}) = {sorted(allowed)}: "
                            f"λ{a + 1}λ{b + 1} = λ{c + 1}",
                            ("semigroup", p, q, a, b, c),
                        )
    return ResonanceReport(True)


@dataclass
class Subalgebra:
    algebra: LieAlgebra
    embedding: list  # flat indices in the full expansion


def _restrict(E: LieAlgebra, keep: Sequence[int], label: str) -> LieAlgebra:
    new = {old: n for n, old in enumerate(keep)}
    constants = {}
    for a, i in enumerate(keep):
        for b in range(a + 1, len(keep)):
            j = keep[b]
            terms = E.bracket(i, j)
            for k in terms:
                if k not in new:
                    raise ResonanceFailed(f"bracket of generators {i}, {j} leaves the subspace via {k}")
            if terms:
                constants[(a, b)] = {new[k]: v for k, v in terms.items()}
    return LieAlgebra(len(keep), constants, [E.names[i] for i in keep], name=label)


def resonant_subalgebra(S: Semigroup, L: LieAlgebra, D: ResonantDecomposition) -> Subalgebra:
    """The subalgebra spanned by S_p x V_p over all parts p."""
    report = check_resonance(S, L, D)
    if not report.ok:
        raise ResonanceFailed(report.message)
    E = s_expand(S, L)
    P = S.order
    keep = sorted({A * P + a for Vp, Sp in zip(D.g_partition, D.s_partition) for A in Vp for a in Sp})
    sub = _restrict(E.algebra, keep, f"{E.algebra.name}_R")
    return Subalgebra(ensure_valid(sub), keep)


# ----------------------------------------------------------------------------
# invariant tensors


def n_selector(S: Semigroup, indices: Sequence[int]) -> int:
    """Index of the product of all listed elements."""
    if not indices:
        raise ValueError("n_selector needs at least one element")
    acc = indices[0]
    for x in indices[1:]:
        acc = S.table[acc][x]
    return acc


def is_invariant_tensor(L: LieAlgebra, tensor: Mapping) -> bool:
    """sum_k t(Y_1..[X,Y_k]..Y_n) = 0 for every basis X and index tuple.

    ``tensor`` maps index tuples to values; absent entries are zero.
    """
    if not tensor:
        return True
    rank = len(next(iter(tensor)))
    N = L.dim
    brackets = [[L.bracket(x, y) for y in range(N)] for x in range(N)]
    for x in range(N):
        acc: dict[tuple, Fraction] = {}
        # contribution of t(..., m at slot k, ...) with [X_x, X_{a_k}] = sum C^m X_m
        for idx, val in tensor.items():
            for k in range(rank):
                m = idx[k]
                for a in range(N):
                    c = brackets[x][a].get(m)
                    if c:
                        key = idx[:k] + (a,) + idx[k + 1:]
                        acc[key] = acc.get(key, 0) + c * val
        if any(v != 0 for v in acc.values()):
            return False
    return True


def expand_invariant_tensor(S: Semigroup, L: LieAlgebra, base_tensor: Mapping, alphas: Sequence) -> dict:
    """Invariant tensor of the 0_S-reduced expansion.

    <T_(A1,i1) ... T_(An,in)> = alpha_j K_{i1..in}^j <T_A1 ... T_An>, with
    terms whose product is 0_S dropped.  ``alphas`` lists one constant per
    nonzero element in increasing element order.  Keys of the result are
    flat indices of the reduced algebra.
    """
    z = zero_element(S)
    if z is None:
        raise NoZeroElement("the semigroup has no zero element")
    nonzero = [a for a in range(S.order) if a != z]
    if len(alphas) != len(nonzero):
        raise ValueError(f"need {len(nonzero)} alpha constants, got {len(alphas)}")
    if not is_invariant_tensor(L, base_tensor):
        raise NotInvariantBase("base tensor is not invariant")
    alpha = dict(zip(nonzero, (Fraction(a) for a in alphas)))
    pos = {a: n for n, a in enumerate(nonzero)}
    Pr = len(nonzero)
    out = {}
    for idx, val in base_tensor.items():
        if val == 0:
            continue
        for elems in product(nonzero, repeat=len(idx)):
            j = n_selector(S, elems)
            if j == z or alpha[j] == 0:
                continue
            key = tuple(A * Pr + pos[e] for A, e in zip(idx, elems))
            out[key] = alpha[j] * Fraction(val)
    return out


def matrix_to_tensor(M: Sequence[Sequence]) -> dict:
    return {(i, j): Fraction(v) for i, row in enumerate(M) for j, v in enumerate(row) if v != 0}


# ----------------------------------------------------------------------------
# verification of the expanded Killing product


@dataclass
class AxiomReport:
    ok: bool
    checks: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def default_seed() -> int:
    return int(os.environ.get("SEXP_SEED", DEFAULT_SEED))


SAMPLE_DEN = 60  # every sampled denominator (1..5) divides this


def _forms(G: np.ndarray, U: np.ndarray, V: np.ndarray) -> list:
    """Row-wise U[s]^T G V[s] as exact integers."""
    bound = int(np.abs(U).max(initial=0)) * int(np.abs(V).max(initial=0)) * int(np.abs(G).max(initial=0))
    if bound * G.shape[0] ** 2 >= 1 << 62:
        G, U, V = G.astype(object), U.astype(object), V.astype(object)
    return [int(x) for x in np.einsum("si,ij,sj->s", U, G, V)]


def verify_inner_product_axioms(
    E: ExpandedAlgebra, samples: int = 50, seed: int | None = None, G: Sequence[Sequence] | None = None
) -> AxiomReport:
    """Additivity, homogeneity and symmetry of the expanded Killing product on
    random rational coordinate vectors, plus (0, Y) = 0.

    Vectors have entries a/b with |a| <= 9, 1 <= b <= 5; they are carried as
    integer numerators over SAMPLE_DEN so the forms are batched exactly.
    ``G`` reuses an already computed Killing matrix.
    """
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    n = E.algebra.dim
    G, _ = ratlin.integer_array(expanded_killing(E) if G is None else G)  # common denominator cancels

    def block():
        # numerators over SAMPLE_DEN of a/b with |a| <= 9, 1 <= b <= 5
        return rng.integers(-9, 10, (samples, n)) * (SAMPLE_DEN // rng.integers(1, 6, (samples, n)))

    X, Y, Z = block(), block(), block()
    ca, cb = rng.integers(-9, 10, samples), rng.integers(1, 6, samples)
    C = [Fraction(int(a), int(b)) for a, b in zip(ca, cb)]
    cX = X * (ca * (SAMPLE_DEN // cb))[:, None]  # numerators over SAMPLE_DEN**2
    xz, yz, xy, yx = _forms(G, X, Z), _forms(G, Y, Z), _forms(G, X, Y), _forms(G, Y, X)
    sum_z = _forms(G, X + Y, Z)
    cxy = _forms(G, cX, Y)
    zero = _forms(G, np.zeros_like(Y), Y)

    checks = {"additivity": 0, "homogeneity": 0, "symmetry": 0, "zero": 0}
    failures = []
    for s in range(samples):
        for name, ok in (
            ("additivity", sum_z[s] == xz[s] + yz[s]),
            # (cX, Y) over SAMPLE_DEN^3 against c (X, Y) over SAMPLE_DEN^2
            ("homogeneity", Fraction(cxy[s], SAMPLE_DEN) == C[s] * xy[s]),
            ("symmetry", xy[s] == yx[s]),
            ("zero", zero[s] == 0),
        ):
            checks[name] += 1
            if not ok:
                failures.append((name, s))
    return AxiomReport(not failures, checks, failures)


def selector_identity_holds(S: Semigroup) -> bool:
    """sum K_ab^d K_de^f K_gf^e == sum K_bg^d K_ae^f K_df^e for all (a, b, g)."""
    K = selectors(S)
    lhs = np.einsum("abd,def,gfe->abg", K, K, K)
    rhs = np.einsum("bgd,aef,dfe->abg", K, K, K)
    return bool(np.array_equal(lhs, rhs))


def ad_invariance_holds(L: LieAlgebra, G: Sequence[Sequence] | None = None) -> bool:
    """([X_i, X_j], X_k) == (X_i, [X_j, X_k]) for all basis triples."""
    N = L.dim
    if N == 0:
        return True
    G = killing_form(L) if G is None else G
    C, _ = L.int_tensor
    Gi, _ = ratlin.integer_array(G)
    Gi = Gi.astype(object) if C.dtype == object else Gi
    lhs = np.einsum("ijm,mk->ijk", C, Gi)
    rhs = np.einsum("jkm,im->ijk", C, Gi)
    return bool(np.array_equal(lhs, rhs))


def verify_ad_invariance(E: ExpandedAlgebra) -> AxiomReport:
    checks = {"selector_identity": selector_identity_holds(E.semigroup), "ad_invariance": ad_invariance_holds(E.algebra)}
    failures = [k for k, v in checks.items() if not v]
    return AxiomReport(not failures, checks, failures)
