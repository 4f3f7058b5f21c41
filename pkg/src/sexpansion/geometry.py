"""Signatures, characters and the metric rescaling induced by an expansion."""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from .errors import IllDefinedAngle, InvalidCounts
from .expansion import expanded_killing, s_expand
from .liecore import LieAlgebra, ensure_valid, killing_form
from .ratlin import InertiaSignature, exact_inertia
from .semigroups import Semigroup, mk_matrix


@dataclass(frozen=True)
class SignatureProfile:
    dim: int
    inertia: InertiaSignature

    @property
    def n_plus(self):
        return self.inertia.n_plus

    @property
    def n_minus(self):
        return self.inertia.n_minus

    @property
    def n_zero(self):
        return self.inertia.n_zero

    @property
    def chi(self) -> int:
        return self.inertia.n_plus - self.inertia.n_minus

    @property
    def killing_rank(self) -> int:
        return self.inertia.n_plus + self.inertia.n_minus


@dataclass(frozen=True)
class SemigroupProfile:
    order: int
    inertia: InertiaSignature

    @property
    def s_plus(self):
        return self.inertia.n_plus

    @property
    def Q(self) -> int:
        return self.inertia.n_minus

    @property
    def H(self) -> int:
        return self.inertia.n_zero

    @property
    def chi(self) -> int:
        return self.inertia.n_plus - self.inertia.n_minus

    @property
    def rank(self) -> int:
        return self.inertia.n_plus + self.inertia.n_minus


class PredictedSignature(NamedTuple):
    n_plus: int
    n_minus: int
    n_zero: int
    rank: int
    chi: int
    summed_n_zero: int

    @property
    def inertia(self) -> InertiaSignature:
        return InertiaSignature(self.n_plus, self.n_minus, self.n_zero)

    @property
    def summed_form_agrees(self) -> bool:
        return self.summed_n_zero == self.n_zero


def signature_profile(L: LieAlgebra) -> SignatureProfile:
    ensure_valid(L)
    return SignatureProfile(L.dim, exact_inertia(killing_form(L)))


def semigroup_profile(S: Semigroup) -> SemigroupProfile:
    S.require_valid()
    return SemigroupProfile(S.order, exact_inertia(mk_matrix(S)))


def predict_expanded_signature(n: SignatureProfile, s: SemigroupProfile) -> PredictedSignature:
    """Inertia of g (x) M_K from the two factor inertias.

    N0 is total minus nonzero counts; ``summed_n_zero`` is n*s0 + s*n0, which
    double counts n0*s0 when both are nonzero.
    """
    np_, nm, n0 = n.inertia
    sp, sm, s0 = s.inertia
    N_plus = np_ * sp + nm * sm
    N_minus = nm * sp + np_ * sm
    total = n.dim * s.order
    return PredictedSignature(
        N_plus,
        N_minus,
        total - N_plus - N_minus,
        (np_ + nm) * (sp + sm),
        (np_ - nm) * (sp - sm),
        n.dim * s0 + s.order * n0,
    )


def predict_character(chi: int, P: int, H: int, Q: int) -> int:
    """chi * (P - H - 2Q)."""
    if min(P, H, Q) < 0 or H + Q > P:
        raise InvalidCounts(f"need H + Q <= P with nonnegative counts, got P={P}, H={H}, Q={Q}")
    return chi * (P - H - 2 * Q)


def classify(L: LieAlgebra) -> str:
    """I: even Killing rank with n+ = n-; II: even rank otherwise; III: odd rank."""
    p = signature_profile(L)
    if p.killing_rank % 2:
        return "III"
    return "I" if p.n_plus == p.n_minus else "II"


@dataclass
class ClassificationReport:
    source_class: str
    expanded_class: str
    source_chi: int
    expanded_chi: int

    @property
    def class_one_preserved(self) -> bool | None:
        """Whether a class-I source stayed class I; None for other sources."""
        if self.source_class != "I":
            return None
        return self.expanded_class == "I"


def classification_preserved_under_expansion(L: LieAlgebra, S: Semigroup) -> ClassificationReport:
    E = s_expand(S, L)
    src = signature_profile(L)
    exp = exact_inertia(expanded_killing(E))
    return ClassificationReport(classify(L), classify(E.algebra), src.chi, exp.chi)


def magnitude_factor(S: Semigroup, alpha: int) -> int:
    """M_K[alpha][alpha]; a basis vector's length scales by its square root."""
    S.require_valid()
    return mk_matrix(S)[alpha][alpha]


def angle_factor(S: Semigroup, i: int, j: int) -> tuple[int, int]:
    """(M_K[i][j], M_K[i][i] * M_K[j][j]): Delta = numerator / sqrt(radicand)."""
    S.require_valid()
    M = mk_matrix(S)
    for k in (i, j):
        if M[k][k] == 0:
            raise IllDefinedAngle(f"M_K[{k}][{k}] = 0; angles through λ{k + 1} are not defined")
    return M[i][j], M[i][i] * M[j][j]


def format_root(numerator: int, radicand: int) -> str:
    if numerator == 0:
        return "0"
    r = isqrt(radicand)
    if r * r == radicand:
        return str(Fraction(numerator, r))
    return f"{numerator}/√{radicand}"


def diagonality_test(S: Semigroup) -> list[tuple[int, int]]:
    """Off-diagonal (i, j), i < j, with M_K[i][j] != 0."""
    S.require_valid()
    M = mk_matrix(S)
    return [(i, j) for i in range(S.order) for j in range(i + 1, S.order) if M[i][j] != 0]


# ----------------------------------------------------------------------------
# exhaustive check of the product rule


MATRIX_ALGEBRAS = ("so3", "so4", "sl2", "heisenberg3", "abelian2", "sl2+so3")


@dataclass
class SignatureRow:
    algebra: str
    semigroup: Semigroup
    predicted: PredictedSignature
    observed: InertiaSignature
    n0_s0: int  # product of the two factor nullities

    @property
    def match(self) -> bool:
        return self.observed == self.predicted.inertia

    @property
    def summed_form_ok(self) -> bool | None:
        """Whether n*s0 + s*n0 gives the observed nullity; None when n0*s0 != 0."""
        if self.n0_s0:
            return None
        return self.predicted.summed_n_zero == self.observed.n_zero


def signature_matrix(algebras=MATRIX_ALGEBRAS, order_max: int = 4):
    """One SignatureRow per (algebra, labeled semigroup of order <= order_max)."""
    from .liecore import standard_algebra
    from .semigroups import enumerate_semigroups

    semigroups = [S for P in range(1, order_max + 1) for S in enumerate_semigroups(P)]
    for name in algebras:
        L = standard_algebra(name)
        n = signature_profile(L)
        for S in semigroups:
            s = semigroup_profile(S)
            observed = exact_inertia(expanded_killing(s_expand(S, L)))
            yield SignatureRow(name, S, predict_expanded_signature(n, s), observed, n.n_zero * s.H)
