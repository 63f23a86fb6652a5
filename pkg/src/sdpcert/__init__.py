"""Exact arithmetic for cyclic crossed products and their birational-map certificates.

The package computes, for a cyclic group of order n with a conjugation action
sigma -> sigma^r, the tau-fixed units of Z[rho]/(1 + rho + ... + rho^(n-1)),
the subgroup of (Z/nZ)* their residues cover, and symbolic certificates whose
exact identities realize birational maps between the Severi-Brauer varieties
of a crossed-product algebra and its tensor powers. Concrete field-tower and
crossed-product models validate the underlying identities with no floating
point anywhere.
"""

from .checks import CheckResult, all_passed
from .coverage import (
    CoverageReport,
    SearchSpaceTooLargeError,
    coverage_subgroup,
    dihedral_generators,
    exhaustive_fixed_units,
    fixed_unit_generators,
    reduce_to_cyclic,
    subgroup_closure,
    tau_symmetrize,
    unit_witnesses,
)
from .crossed import (
    CrossedProduct,
    LeftIdeal,
    SplittingChain,
    chain_from_ideal,
    chain_from_unit,
    cocycle_condition_holds,
    ideal_from_chain,
    is_splitting_chain,
    norm_element_check,
    random_cyclic_instance,
    standard_cyclic_cocycle,
    tau_action_check,
    tensor_power_check,
)
from .group_ring import (
    GroupRingElement,
    OrderMismatchError,
    TauData,
    full_norm,
    partial_norm,
)
from .monomial import (
    Certificate,
    ExponentMismatchError,
    NormSetMap,
    NotCoveredError,
    VerificationRecord,
    compose,
    identity_map,
    is_identity,
    make_certificate,
    monomial_map,
    shift_map,
    tau_conjugate,
    verify_certificate,
)
from .quotient import (
    NotInvertibleError,
    SElement,
    eps_bar,
    invert,
    is_unit,
    lift,
    reduce,
    tau_apply_s,
)
from .tower import (
    FiniteTower,
    NormSetPoint,
    NumberTower,
    apply_monomial,
    apply_monomial_point,
    builtin_finite,
    builtin_s3,
    dump_tower,
    load_tower,
    make_norm_point,
    norm,
    phi_k_apply,
    tau_hat,
)

__all__ = [
    "CheckResult",
    "CoverageReport",
    "Certificate",
    "CrossedProduct",
    "ExponentMismatchError",
    "FiniteTower",
    "GroupRingElement",
    "LeftIdeal",
    "NormSetMap",
    "NormSetPoint",
    "NotCoveredError",
    "NotInvertibleError",
    "NumberTower",
    "OrderMismatchError",
    "SElement",
    "SearchSpaceTooLargeError",
    "SplittingChain",
    "TauData",
    "VerificationRecord",
    "all_passed",
    "apply_monomial",
    "apply_monomial_point",
    "builtin_finite",
    "builtin_s3",
    "chain_from_ideal",
    "chain_from_unit",
    "cocycle_condition_holds",
    "compose",
    "coverage_subgroup",
    "dihedral_generators",
    "dump_tower",
    "eps_bar",
    "exhaustive_fixed_units",
    "fixed_unit_generators",
    "full_norm",
    "ideal_from_chain",
    "identity_map",
    "invert",
    "is_identity",
    "is_splitting_chain",
    "is_unit",
    "lift",
    "load_tower",
    "make_certificate",
    "make_norm_point",
    "monomial_map",
    "norm",
    "norm_element_check",
    "partial_norm",
    "phi_k_apply",
    "random_cyclic_instance",
    "reduce",
    "reduce_to_cyclic",
    "shift_map",
    "standard_cyclic_cocycle",
    "subgroup_closure",
    "tau_action_check",
    "tau_apply_s",
    "tau_conjugate",
    "tau_hat",
    "tau_symmetrize",
    "tensor_power_check",
    "unit_witnesses",
    "verify_certificate",
]
