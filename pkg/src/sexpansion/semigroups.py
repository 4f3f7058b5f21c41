"""Finite commutative semigroups as multiplication tables.

Elements are 0-based indices; ``table[a][b]`` is the index of a*b.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from .errors import IndexOutOfRange, InvalidSemigroup


@dataclass(frozen=True)
class Semigroup:
    table: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        P = len(table)
        for row in table:
            if len(row) != P:
                raise ValueError("multiplication table must be square")
            for x in row:
                if not 0 <= x < P:
                    raise IndexOutOfRange(f"table entry {x} outside [0, {P})")
        object.__setattr__(self, "table", table)

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def report(self) -> "SemigroupReport":
        return _check(self)

    def require_valid(self) -> "Semigroup":
        if not self.report.ok:
            raise InvalidSemigroup(self.report.message, self.report.witness)
        return self

    def __repr__(self):
        label = self.name or "Semigroup"
        return f"<{label} P={self.order} {[list(r) for r in self.table]}>"


@dataclass(frozen=True)
class SemigroupReport:
    ok: bool
    message: str = "ok"
    witness: tuple | None = None
    semigroup: Semigroup | None = None

    def __bool__(self):
        return self.ok


def _check(S: Semigroup) -> SemigroupReport:
    T = S.table
    P = S.order
    for a in range(P):
        for b in range(a + 1, P):
            if T[a][b] != T[b][a]:
                return SemigroupReport(False, f"not commutative: λ{a + 1}λ{b + 1} != λ{b + 1}λ{a + 1}", (a, b))
    for a in range(P):
        for b in range(P):
            ab = T[a][b]
            for c in range(P):
                if T[ab][c] != T[a][T[b][c]]:
                    return SemigroupReport(
                        False,
                        f"not associative: (λ{a + 1}λ{b + 1})λ{c + 1} = λ{T[ab][c] + 1} "
                        f"but λ{a + 1}(λ{b + 1}λ{c + 1}) = λ{T[a][T[b][c]] + 1}",
                        (a, b, c),
                    )
    return SemigroupReport(True, semigroup=S)


def validate_semigroup(table, name: str | None = None) -> SemigroupReport:
    """Check commutativity and associativity; the report names the first
    failing pair or triple (0-based)."""
    S = table if isinstance(table, Semigroup) else Semigroup(table, name)
    return S.report


def selectors(S: Semigroup) -> np.ndarray:
    """One-hot tensor K[a, b, c] = 1 iff a*b = c."""
    P = S.order
    K = np.zeros((P, P, P), dtype=np.int64)
    for a in range(P):
        for b in range(P):
            K[a, b, S.table[a][b]] = 1
    return K


def mk_matrix(S: Semigroup) -> list[list[int]]:
    """M_K[i][j] = sum_{g,d} K_ig^d K_jd^g, i.e. #{g : j*(i*g) = g}.

    Works on any table, associative or not, so rejected candidates can still
    be displayed.
    """
    T = S.table
    P = S.order
    return [[sum(1 for g in range(P) if T[j][T[i][g]] == g) for j in range(P)] for i in range(P)]


def zero_element(S: Semigroup) -> int | None:
    for z in range(S.order):
        if all(S.table[z][a] == z for a in range(S.order)):
            return z
    return None


def identity_element(S: Semigroup) -> int | None:
    for e in range(S.order):
        if all(S.table[e][a] == a for a in range(S.order)):
            return e
    return None


def idempotents(S: Semigroup) -> list[int]:
    return [a for a in range(S.order) if S.table[a][a] == a]


def selector_pair_count(S: Semigroup) -> int:
    """Number of unordered pairs {a, b}; each carries exactly one selector."""
    K = selectors(S)
    return sum(1 for a in range(S.order) for b in range(a, S.order) if K[a, b].sum() == 1)


# ----------------------------------------------------------------------------
# enumeration


def _cells(P: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(P) for j in range(i, P)]


def enumerate_semigroups(order: int, up_to_iso: bool = False) -> Iterator[Semigroup]:
    """All commutative semigroups on ``order`` labeled elements, in
    lexicographic table order.

    Backtracks over the upper triangle; after each assignment only the
    associativity checks involving the new cell are run.  With ``up_to_iso``
    only the lexicographically least table of each isomorphism class is kept.
    """
    P = order
    if P < 1:
        return
    cells = _cells(P)
    T = [[-1] * P for _ in range(P)]
    perms = list(permutations(range(P))) if up_to_iso else None

    def consistent(i: int, j: int) -> bool:
        # every triple whose two bracketings are now both defined and use cell {i,j}
        for a in range(P):
            for b in range(P):
                ab = T[a][b]
                if ab < 0:
                    continue
                for c in range(P):
                    if not (a in (i, j) or b in (i, j) or c in (i, j) or ab in (i, j)):
                        continue
                    left = T[ab][c]
                    bc = T[b][c]
                    if left < 0 or bc < 0:
                        continue
                    right = T[a][bc]
                    if right >= 0 and left != right:
                        return False
        return True

    def rec(n: int):
        if n == len(cells):
            table = tuple(tuple(row) for row in T)
            if perms is None or _is_lex_min(table, perms):
                yield Semigroup(table)
            return
        i, j = cells[n]
        for v in range(P):
            T[i][j] = T[j][i] = v
            if consistent(i, j):
                yield from rec(n + 1)
        T[i][j] = T[j][i] = -1

    yield from rec(0)


def relabel(table, perm: Sequence[int]) -> tuple:
    """Table of the same semigroup with element a renamed perm[a]."""
    P = len(table)
    out = [[0] * P for _ in range(P)]
    for a in range(P):
        for b in range(P):
            out[perm[a]][perm[b]] = perm[table[a][b]]
    return tuple(tuple(r) for r in out)


def _is_lex_min(table, perms) -> bool:
    P = len(table)
    for perm in perms:
        inv = [0] * P
        for a, pa in enumerate(perm):
            inv[pa] = a
        # relabeled[x][y] = perm[table[inv x][inv y]], compared lazily
        for x in range(P):
            for y in range(P):
                r = perm[table[inv[x]][inv[y]]]
                t = table[x][y]
                if r != t:
                    if r < t:
                        return False
                    break
            else:
                continue
            break
    return True


def canonical_form(S: Semigroup) -> Semigroup:
    """Lexicographically least relabeling of S."""
    best = min(relabel(S.table, p) for p in permutations(range(S.order)))
    return Semigroup(best, S.name)


def _invariants(S: Semigroup):
    T = S.table
    P = S.order
    squares = sorted(sum(1 for a in range(P) if T[a][a] == b) for b in range(P))
    image = sorted(sum(1 for a in range(P) for c in range(P) if T[a][c] == b) for b in range(P))
    return (len(idempotents(S)), zero_element(S) is not None, identity_element(S) is not None, squares, image)


def is_isomorphic(S1: Semigroup, S2: Semigroup) -> tuple[int, ...] | None:
    """A permutation p with p(a*b) = p(a)*p(b), or None."""
    if S1.order != S2.order:
        return None
    if _invariants(S1) != _invariants(S2):
        return None
    P = S1.order
    T1, T2 = S1.table, S2.table
    img = [-1] * P
    used = [False] * P

    def ok_partial() -> bool:
        for a in range(P):
            if img[a] < 0:
                continue
            for b in range(P):
                if img[b] < 0:
                    continue
                c = T1[a][b]
                if img[c] >= 0 and img[c] != T2[img[a]][img[b]]:
                    return False
        return True

    def rec(a: int) -> bool:
        if a == P:
            return True
        for x in range(P):
            if used[x] or (T1[a][a] == a) != (T2[x][x] == x):
                continue
            img[a] = x
            used[x] = True
            if ok_partial() and rec(a + 1):
                return True
            img[a] = -1
            used[x] = False
        return False

    return tuple(img) if rec(0) else None


# ----------------------------------------------------------------------------
# named semigroups


def cyclic_group(n: int) -> Semigroup:
    return Semigroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), f"Z{n}")


def trivial() -> Semigroup:
    return Semigroup(((0,),), "trivial")


def chain_semilattice(n: int = 2) -> Semigroup:
    """Chain 0 < 1 < ... with a*b = min(a, b); element 0 absorbing."""
    return Semigroup(tuple(tuple(min(a, b) for b in range(n)) for a in range(n)), f"semilattice{n}")


def null_semigroup(n: int = 2) -> Semigroup:
    """Every product equals element 0."""
    return Semigroup(tuple(tuple(0 for _ in range(n)) for _ in range(n)), f"null{n}")


def expansion_semigroup(n: int) -> Semigroup:
    """S_E^(n): elements 0..n+1, a*b = a+b when a+b <= n, else the zero n+1."""
    z = n + 1
    return Semigroup(
        tuple(tuple(a + b if a + b <= n else z for b in range(n + 2)) for a in range(n + 2)),
        f"SE{n}",
    )


def standard_semigroup(name: str) -> Semigroup:
    """Resolve trivial, Z<n>, semilattice<n>, null<n>, SE<n>."""
    import re

    key = name.strip().lower()
    if key in ("trivial", "one", "s1"):
        return trivial()
    for pattern, builder in (
        (r"^z_?(\d+)$", cyclic_group),
        (r"^semilattice(\d*)$", chain_semilattice),
        (r"^chain(\d*)$", chain_semilattice),
        (r"^null(\d*)$", null_semigroup),
        (r"^se_?(\d+)$", expansion_semigroup),
    ):
        m = re.match(pattern, key)
        if m:
            arg = m.group(1)
            return builder(int(arg)) if arg else builder()
    from .errors import UnknownName

    raise UnknownName(f"unknown semigroup name {name!r}")


def render_table(S: Semigroup, one_based: bool = True) -> str:
    """Multiplication table in the ⋄-table layout."""
    off = 1 if one_based else 0
    labels = [f"λ{a + off}" for a in range(S.order)]
    w = max(len(x) for x in labels)
    head = "⋄".ljust(w) + " | " + " ".join(x.ljust(w) for x in labels)
    lines = [head, "-" * len(head)]
    for a, row in enumerate(S.table):
        lines.append(labels[a].ljust(w) + " | " + " ".join(labels[x].ljust(w) for x in row))
    return "\n".join(lines)
