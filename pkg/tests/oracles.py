"""Independent reference computations used only by the tests.

Nothing here calls into the package's linear algebra or enumeration code.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def det(M):
    """Leibniz determinant; fine for the tiny matrices the oracles see."""
    n = len(M)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(n):
            term *= M[i][perm[i]]
        total += term
    return total


def char_poly(M):
    """Coefficients of det(xI - M), highest degree first."""
    n = len(M)
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        e_k = sum(det([[M[i][j] for j in idx] for i in idx]) for idx in combinations(range(n), k))
        coeffs.append((-1) ** k * e_k)
    return coeffs


def _sign_changes(seq):
    signs = [1 if c > 0 else -1 for c in seq if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_inertia(M):
    """(n+, n-, n0) of a symmetric matrix from its characteristic polynomial.

    All roots are real, so Descartes' rule of signs counts exactly.
    """
    c = char_poly(M)
    n = len(M)
    zero = 0
    while zero < n and c[n - zero] == 0:
        zero += 1
    pos = _sign_changes(c)
    neg = _sign_changes([x * (-1) ** (n - i) for i, x in enumerate(c)])
    return pos, neg, zero


def brute_force_commutative_semigroups(P):
    """Every symmetric P x P table that is associative, by direct scan."""
    cells = [(i, j) for i in range(P) for j in range(i, P)]
    out = []
    for values in product(range(P), repeat=len(cells)):
        T = [[0] * P for _ in range(P)]
        for (i, j), v in zip(cells, values):
            T[i][j] = T[j][i] = v
        if all(T[T[a][b]][c] == T[a][T[b][c]] for a in range(P) for b in range(P) for c in range(P)):
            out.append(tuple(tuple(r) for r in T))
    return out


def killing_by_traces(L):
    """g_ij = tr(ad X_i ad X_j) from explicit ad matrices (ad_i)[k][j] = C_ij^k."""
    N = L.dim
    ads = []
    for i in range(N):
        A = [[Fraction(0)] * N for _ in range(N)]
        for j in range(N):
            for k, v in L.bracket(i, j).items():
                A[k][j] = Fraction(v)
        ads.append(A)
    G = [[Fraction(0)] * N for _ in range(N)]
    for i in range(N):
        for j in range(N):
            G[i][j] = sum(ads[i][a][b] * ads[j][b][a] for a in range(N) for b in range(N))
    return G


def jacobi_by_brute_force(L):
    """True iff sum over cyclic (i,j,k) of [[X_i,X_j],X_k] vanishes for every triple."""
    N = L.dim
    for i, j, k in product(range(N), repeat=3):
        acc = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for m, v in L.bracket(a, b).items():
                for r, w in L.bracket(m, c).items():
                    acc[r] = acc.get(r, 0) + Fraction(v) * Fraction(w)
        if any(x != 0 for x in acc.values()):
            return False
    return True
