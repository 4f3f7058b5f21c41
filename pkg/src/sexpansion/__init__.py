"""Exact S-expansion of Lie algebras by finite abelian semigroups."""

from .errors import *  # noqa: F401,F403
from .ratlin import InertiaSignature, exact_inertia, rational_rank
from .liecore import (
    LieAlgebra,
    abelian,
    adjoint,
    change_of_basis,
    direct_sum,
    killing_form,
    sl2,
    sl2c,
    so,
    standard_algebra,
    validate_algebra,
)
from .semigroups import (
    Semigroup,
    chain_semilattice,
    cyclic_group,
    enumerate_semigroups,
    is_isomorphic,
    mk_matrix,
    null_semigroup,
    selectors,
    standard_semigroup,
    validate_semigroup,
)
from .expansion import (
    ExpandedAlgebra,
    ResonantDecomposition,
    check_resonance,
    expand_invariant_tensor,
    expanded_killing,
    resonant_subalgebra,
    s_expand,
    verify_inner_product_axioms,
    zero_reduce,
)
from .geometry import (
    angle_factor,
    classify,
    diagonality_test,
    magnitude_factor,
    predict_character,
    predict_expanded_signature,
    semigroup_profile,
    signature_profile,
)
from .discovery import find_semigroups, generate_table_one, solve_phq, verify_isomorphism
from .structure import ideal_certificate, mf_rank_analysis, regular_representation, split_direct_sum

__version__ = "0.1.0"
