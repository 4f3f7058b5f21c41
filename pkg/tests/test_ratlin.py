from fractions import Fraction
from itertools import product
import random

import pytest
from hypothesis import given, settings, strategies as st

from sexpansion.errors import NonSymmetric, SingularMatrix
from sexpansion.ratlin import (
    InertiaSignature,
    exact_inertia,
    identity,
    integer_eigen_spectrum,
    inverse,
    kernel_basis,
    kron,
    matmul,
    matvec,
    rational_rank,
    rref,
    span_annihilator,
    in_span,
    is_span_annihilator,
    modular_rank,
    transpose,
)

from oracles import descartes_inertia


@pytest.mark.parametrize(
    "M, expected",
    [
        ([[2, 0], [0, 2]], (2, 0, 0)),
        ([[1, 1], [1, 2]], (2, 0, 0)),
        ([[1, 1], [1, 1]], (1, 0, 1)),
        ([[0, 1], [1, 0]], (1, 1, 0)),
    ],
)
def test_inertia_small_cases(M, expected):
    assert exact_inertia(M) == expected


def test_inertia_rejects_asymmetric():
    with pytest.raises(NonSymmetric):
        exact_inertia([[1, 2], [0, 1]])


def test_inertia_empty_and_zero():
    assert exact_inertia([]) == (0, 0, 0)
    assert exact_inertia([[0, 0], [0, 0]]) == (0, 0, 2)


def test_inertia_signature_properties():
    s = InertiaSignature(2, 3, 1)
    assert (s.dim, s.rank, s.chi) == (6, 5, -1)


def test_inertia_matches_descartes_oracle_exhaustively_2x2():
    for a, b, c in product(range(-2, 3), repeat=3):
        M = [[a, b], [b, c]]
        assert exact_inertia(M) == descartes_inertia(M), M


def test_inertia_matches_descartes_oracle_random_3x3():
    rng = random.Random(7)
    for _ in range(400):
        v = [rng.randint(-2, 2) for _ in range(6)]
        M = [[v[0], v[1], v[2]], [v[1], v[3], v[4]], [v[2], v[4], v[5]]]
        assert exact_inertia(M) == descartes_inertia(M), M


def test_inertia_of_rational_entries():
    M = [[Fraction(1, 3), Fraction(1, 2)], [Fraction(1, 2), Fraction(-1, 7)]]
    assert exact_inertia(M) == descartes_inertia(M)


def _unimodular(rng, n):
    A = identity(n)
    if n == 1:
        return [[rng.choice([-3, -1, 2])]]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for r in range(n):
            A[r][j] += c * A[r][i]
    return A


symmetric_matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
        lambda vals, n=n: _fill_symmetric(n, vals)
    )
)


def _fill_symmetric(n, vals):
    M = [[0] * n for _ in range(n)]
    it = iter(vals)
    for i in range(n):
        for j in range(i, n):
            M[i][j] = M[j][i] = next(it)
    return M


@settings(max_examples=150, deadline=None)
@given(symmetric_matrices, st.integers(0, 10**6))
def test_inertia_invariant_under_congruence(M, seed):
    A = _unimodular(random.Random(seed), len(M))
    C = matmul(matmul(transpose(A), M), A)
    assert exact_inertia(C) == exact_inertia(M)


@settings(max_examples=100, deadline=None)
@given(symmetric_matrices)
def test_inertia_rank_agrees_with_rational_rank(M):
    s = exact_inertia(M)
    assert s.rank == rational_rank(M)
    assert s.dim == len(M)


@settings(max_examples=60, deadline=None)
@given(symmetric_matrices, symmetric_matrices)
def test_kron_inertia_product_rule(A, B):
    a, b = exact_inertia(A), exact_inertia(B)
    k = exact_inertia(kron(A, B))
    assert k.n_plus == a.n_plus * b.n_plus + a.n_minus * b.n_minus
    assert k.n_minus == a.n_plus * b.n_minus + a.n_minus * b.n_plus


def test_rank_examples():
    assert rational_rank(identity(3)) == 3
    assert rational_rank([[1, 1], [1, 1]]) == 1
    # the two Z2 operators flattened as rows
    assert rational_rank([[1, 0, 0, 1], [0, 1, 1, 0]]) == 2
    assert rational_rank([[0, 0], [0, 0]]) == 0
    assert rational_rank([[Fraction(1, 2), 1], [1, 2]]) == 1


def test_rref_pivots():
    R, piv = rref([[0, 2, 4], [1, 1, 1]])
    assert piv == [0, 1]
    assert R == [[1, 0, -1], [0, 1, 2]]


def test_kernel_examples():
    assert kernel_basis(identity(2)) == []
    assert kernel_basis([[1, 1], [1, 1]]) == [[1, -1]]
    assert kernel_basis([[1, 1], [1, 1], [0, 0]]) == [[1, -1]]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5), st.integers(0, 10**6))
def test_kernel_vectors_are_annihilated_and_count_matches_rank(rows, cols, seed):
    rng = random.Random(seed)
    M = [[rng.randint(-2, 2) for _ in range(cols)] for _ in range(rows)]
    K = kernel_basis(M)
    assert len(K) == cols - rational_rank(M)
    for v in K:
        assert all(x == 0 for x in matvec(M, v))
    if K:
        assert rational_rank(K) == len(K)


def test_inverse_roundtrip_and_singular():
    A = [[2, 1], [1, 1]]
    assert matmul(A, inverse(A)) == identity(2)
    with pytest.raises(SingularMatrix):
        inverse([[1, 2], [2, 4]])


def test_integer_eigen_spectrum_examples():
    spec = integer_eigen_spectrum([[2, 0], [0, 2]], 2)
    assert [t for t, _ in spec] == [2] and len(spec[0][1]) == 2
    spec = integer_eigen_spectrum([[0, 1], [1, 0]], 2)
    assert spec == [(-1, [[1, -1]]), (1, [[1, 1]])]


def test_integer_eigen_spectrum_skips_irrational():
    # eigenvalues (3 +- sqrt 5)/2
    assert integer_eigen_spectrum([[1, 1], [1, 2]], 3) == []


def test_span_annihilator_membership():
    ann = span_annihilator([[1, -1, 0], [0, 1, -1]], 3)
    assert in_span(ann, [2, -1, -1])
    assert not in_span(ann, [1, 0, 0])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=5))
def test_modular_rank_agrees_with_rational_rank(rows):
    assert modular_rank(rows) == rational_rank(rows)


def test_span_annihilator_check():
    vectors = [[1, -1, 0, 0], [0, 0, 1, -1]]
    assert is_span_annihilator([[1, 1, 0, 0], [0, 0, 1, 1]], vectors, 4)
    assert not is_span_annihilator([[1, 1, 0, 0]], vectors, 4)
    assert not is_span_annihilator([[1, 0, 0, 0], [0, 0, 1, 1]], vectors, 4)
