"""Exact linear algebra for partial actions of finite-dimensional Hopf algebras.

Everything is represented by structure constants over the rationals or
a prime field, and every claimed identity is checked coefficient by
coefficient.  The main entry points:

- fields / linalg: exact scalars, matrices, canonical subspaces
- hopf: Hopf algebra data, verification, duals and pairings
- actions: (partial) module algebra structures and their axioms
- globalization: the standard enveloping action of a partial action
- smash: smash products, the partial smash, the Morita context
- reps: partial representations, canonical ones included
- coactions: partial coactions and dualization both ways
- catalog: small worked examples, also reachable from the CLI
"""

from .actions import (
    ActionData,
    PartialActionData,
    RightIdealSpec,
    as_partial,
    check_equivalence,
    induce_partial,
    is_total,
    partial_action_from_group,
    quotient_module_algebra,
    verify_module_algebra,
    verify_partial_action,
)
from .algebras import AlgebraData, endomorphism_algebra, solve_unit, verify_algebra
from .catalog import CATALOG_NAMES, load_catalog
from .coactions import (
    CoactionData,
    CoModuleIdealSpec,
    action_from_coaction,
    coaction_from_action,
    enveloping_coaction,
    restrict_coaction,
    verify_partial_coaction,
)
from .errors import (
    CarrierEscape,
    CharTwo,
    ClosureViolation,
    DimensionMismatch,
    GroupAxiomViolation,
    InconsistentSystem,
    InvalidGroup,
    NoUnit,
    NotAnIdeal,
    NotARightIdeal,
    NotASubmodule,
    NotPrime,
    ParseError,
    PartialHopfError,
    PreconditionViolated,
    ShapeMismatch,
    SingularAntipode,
    SingularMatrix,
)
from .fields import QQ, GFElement, PrimeField, Rationals
from .globalization import (
    EnvelopingAction,
    is_bilateral,
    is_minimal,
    morphism_to_standard,
    standard_enveloping,
    theta_one_is_central,
    verify_enveloping,
)
from .groups import CayleyTable, group_algebra
from .hopf import (
    CoalgebraData,
    HopfData,
    PairingData,
    antipode_inverse,
    canonical_pairing,
    dual_hopf,
    hopf_tensors_equal,
    verify_hopf,
    verify_pairing,
)
from .linalg import Matrix, Subspace
from .reports import Check, Failure, Report
from .reps import (
    canonical_rep_end,
    canonical_rep_smash,
    verify_group_partial_rep,
    verify_partial_rep,
)
from .smash import (
    MoritaContext,
    PartialSmash,
    SmashAlgebra,
    build_morita,
    embed_partial_smash,
    morita_dims,
    partial_smash,
    smash_product,
    verify_morita,
)
from .transport import transport_action, transport_algebra, transport_hopf

__all__ = [
    "ActionData", "AlgebraData", "CATALOG_NAMES", "CarrierEscape", "CayleyTable",
    "CharTwo", "Check", "ClosureViolation", "CoModuleIdealSpec", "CoactionData",
    "CoalgebraData", "DimensionMismatch", "EnvelopingAction", "Failure",
    "GFElement", "GroupAxiomViolation", "HopfData", "InconsistentSystem",
    "InvalidGroup", "Matrix", "MoritaContext", "NoUnit", "NotAnIdeal",
    "NotARightIdeal", "NotASubmodule", "NotPrime", "PairingData", "ParseError",
    "PartialActionData", "PartialHopfError", "PartialSmash", "PreconditionViolated",
    "PrimeField", "QQ", "Rationals", "Report", "RightIdealSpec", "ShapeMismatch",
    "SingularAntipode", "SingularMatrix", "SmashAlgebra", "Subspace",
    "action_from_coaction", "antipode_inverse", "as_partial", "build_morita",
    "canonical_pairing", "canonical_rep_end", "canonical_rep_smash",
    "check_equivalence", "coaction_from_action", "dual_hopf", "embed_partial_smash",
    "endomorphism_algebra", "enveloping_coaction", "group_algebra",
    "hopf_tensors_equal", "induce_partial",
    "is_bilateral", "is_minimal", "is_total", "load_catalog", "morita_dims",
    "morphism_to_standard", "partial_action_from_group", "partial_smash",
    "quotient_module_algebra", "restrict_coaction", "smash_product", "solve_unit",
    "standard_enveloping", "theta_one_is_central", "transport_action",
    "transport_algebra", "transport_hopf", "verify_algebra", "verify_enveloping",
    "verify_group_partial_rep", "verify_hopf", "verify_module_algebra",
    "verify_morita", "verify_pairing", "verify_partial_action",
    "verify_partial_coaction", "verify_partial_rep",
]

__version__ = "0.1.0"
