"""Find semigroups that carry one Lie algebra to another.

The (P, H, Q) counts constrain the semigroup through the inertia of its M_K
matrix; candidates of that order are then enumerated, filtered on M_K
inertia and confirmed by building the expansion.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import ratlin
from .errors import PlanOutOfBounds, UnconstrainedSource
from .expansion import expanded_killing, s_expand
from .geometry import SignatureProfile, signature_profile
from .liecore import LieAlgebra, change_of_basis, direct_sum, so
from .ratlin import InertiaSignature, exact_inertia
from .semigroups import (
    Semigroup,
    chain_semilattice,
    cyclic_group,
    enumerate_semigroups,
    is_isomorphic,
    mk_matrix,
    null_semigroup,
    trivial,
)

# largest target so(m) listed for each source so(n) in the reference table
TABLE_ONE_RANGES = {3: 12, 4: 16, 5: 21, 6: 16}
DEFAULT_ORDER_MAX = 5


@dataclass(frozen=True)
class ExpansionPlan:
    P: int
    H: int
    Q: int
    predicted: SignatureProfile

    @property
    def mk_inertia(self) -> InertiaSignature:
        return InertiaSignature(self.P - self.H - self.Q, self.Q, self.H)


@dataclass
class Candidate:
    semigroup: Semigroup
    mk_inertia: InertiaSignature
    expanded_inertia: InertiaSignature
    verified: bool
    witness: str | None = None


@dataclass
class DiscoveryResult:
    plan: ExpansionPlan
    candidates: list = field(default_factory=list)

    @property
    def verified(self) -> list:
        return [c for c in self.candidates if c.verified]


def solve_phq(source: SignatureProfile, target: SignatureProfile, p_max: int) -> list[ExpansionPlan]:
    """Every (P, H, Q) with P <= p_max and H + Q <= P such that

        t+ = n+ (P-H-Q) + n- Q,   t- = n- (P-H-Q) + n+ Q,
        rank_t = rank_n (P-H),    chi_t = chi_n (P-H-2Q).

    The last two follow from the first two and are checked anyway.
    """
    if source.killing_rank == 0:
        raise UnconstrainedSource("source Killing form vanishes; the rank equations give no constraint")
    n_p, n_m = source.n_plus, source.n_minus
    t_p, t_m = target.n_plus, target.n_minus
    plans = []
    for P in range(1, p_max + 1):
        for H in range(P + 1):
            for Q in range(P - H + 1):
                kept = P - H - Q
                if n_p * kept + n_m * Q != t_p or n_m * kept + n_p * Q != t_m:
                    continue
                if source.killing_rank * (P - H) != target.killing_rank:
                    continue
                if source.chi * (P - H - 2 * Q) != target.chi:
                    continue
                dim = source.dim * P
                predicted = SignatureProfile(dim, InertiaSignature(t_p, t_m, dim - t_p - t_m))
                plans.append(ExpansionPlan(P, H, Q, predicted))
    return plans


def _catalog(P: int) -> list[Semigroup]:
    out = [cyclic_group(P), chain_semilattice(P), null_semigroup(P)]
    return [trivial()] if P == 1 else out


def identify(S: Semigroup) -> str | None:
    """Name of a catalog semigroup isomorphic to S, with the relabeling."""
    for named in _catalog(S.order):
        perm = is_isomorphic(S, named)
        if perm is not None:
            return f"{named.name} via λ -> {[p + 1 for p in perm]}"
    return None


def find_semigroups(
    plan: ExpansionPlan,
    source: LieAlgebra,
    target_profile: SignatureProfile,
    up_to_iso: bool = True,
    well_defined: bool = False,
    order_max: int = DEFAULT_ORDER_MAX,
) -> DiscoveryResult:
    """Candidates of order P whose M_K inertia is (P-H-Q, Q, H).

    A candidate is marked verified only after the expansion is built and its
    Killing inertia equals the target inertia.  With ``well_defined`` only
    semigroups whose M_K diagonal has no zero are kept.
    """
    if plan.P > order_max:
        raise PlanOutOfBounds(f"plan needs order {plan.P} but enumeration is bounded by {order_max}")
    result = DiscoveryResult(plan)
    for S in enumerate_semigroups(plan.P, up_to_iso=up_to_iso):
        M = mk_matrix(S)
        inertia = exact_inertia(M)
        if inertia != plan.mk_inertia:
            continue
        if well_defined and any(M[i][i] == 0 for i in range(S.order)):
            continue
        E = s_expand(S, source)
        observed = exact_inertia(expanded_killing(E))
        result.candidates.append(
            Candidate(S, inertia, observed, observed == target_profile.inertia, identify(S))
        )
    return result


def verify_isomorphism(L1: LieAlgebra, L2: LieAlgebra, A: Sequence[Sequence]) -> bool:
    """True iff the basis given by the columns of A turns L1's constants into L2's."""
    if L1.dim != L2.dim:
        raise ValueError("algebras of different dimension cannot be isomorphic")
    return change_of_basis(L1, A).constants == L2.constants


# ----------------------------------------------------------------------------
# reference table and case study


@lru_cache(maxsize=None)
def so_profile(n: int) -> SignatureProfile:
    return signature_profile(so(n))


def generate_table_one(ranges: dict | None = None, p_max: int = 22) -> list[tuple[int, int, int, int, int]]:
    """Rows (n, n+l, P, H, Q) whose minimal plan has H = Q = 0.

    ``ranges`` maps each source n to its largest target; the default follows
    the reference table.
    """
    ranges = TABLE_ONE_RANGES if ranges is None else ranges
    rows = []
    for n in sorted(ranges):
        src = so_profile(n)
        for m in range(n + 1, ranges[n] + 1):
            if (m * (m - 1) // 2) % src.dim:
                # no integer P can scale the rank; skip building so(m)
                continue
            plans = solve_phq(src, so_profile(m), p_max)
            if plans and plans[0].H == 0 and plans[0].Q == 0:
                rows.append((n, m, plans[0].P, 0, 0))
    return rows


# The four order-2 tables of the worked so(3) -> so(4) example, 0-based.
CASE_TABLES = {
    "A": Semigroup(((0, 1), (1, 0)), "A"),
    "B": Semigroup(((1, 0), (0, 0)), "B"),
    "C": Semigroup(((0, 0), (0, 1)), "C"),
    "D": Semigroup(((1, 1), (1, 0)), "D"),
}
# identity first, absorbing second
SEMILATTICE_WITH_IDENTITY = Semigroup(((0, 1), (1, 1)), "semilattice (identity first)")


def z2_split_basis() -> list[list]:
    """Columns T+_i = (λ1 X_i + λ2 X_i)/2 then T-_i = (λ1 X_i - λ2 X_i)/2 in
    Z2 (x) so(3), generator-major flat order."""
    from fractions import Fraction

    half = Fraction(1, 2)
    A = ratlin.zeros(6, 6)
    for i in range(3):
        A[2 * i][i] = half
        A[2 * i + 1][i] = half
        A[2 * i][3 + i] = half
        A[2 * i + 1][3 + i] = -half
    return A


def semilattice_split_basis(zero: int = 0) -> list[list]:
    """Columns U_i = λ_id X_i - λ_0 X_i then V_i = λ_0 X_i for the two-element
    semilattice with absorbing element ``zero``."""
    one = 1 - zero
    A = ratlin.zeros(6, 6)
    for i in range(3):
        A[2 * i + one][i] = 1
        A[2 * i + zero][i] = -1
        A[2 * i + zero][3 + i] = 1
    return A


def case_study() -> dict:
    """Everything the so(3) -> so(4) walkthrough reports."""
    so3, so4 = so(3), so(4)
    src, tgt = signature_profile(so3), signature_profile(so4)
    plans = solve_phq(src, tgt, 4)
    tables = {}
    for key, S in CASE_TABLES.items():
        tables[key] = {"semigroup": S, "report": S.report, "mk": mk_matrix(S)}
    discovery = find_semigroups(plans[0], so3, tgt)
    metric = expanded_killing(s_expand(SEMILATTICE_WITH_IDENTITY, so3))
    z2 = s_expand(CASE_TABLES["A"], so3)
    witness = verify_isomorphism(z2.algebra, direct_sum(so3, so3), z2_split_basis())
    return {
        "source": src,
        "target": tgt,
        "plans": plans,
        "tables": tables,
        "labeled_order2": sum(1 for _ in enumerate_semigroups(2)),
        "classes_order2": sum(1 for _ in enumerate_semigroups(2, up_to_iso=True)),
        "discovery": discovery,
        "metric": metric,
        "isomorphism_witness": witness,
    }
