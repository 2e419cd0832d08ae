"""Exact-arithmetic multiplicity bookkeeping for Hermitian pairs.

The package expands compact-group characters exactly (doubled-integer
weights, Freudenthal recursion), restricts them to the boundary
stabilizer M of each irreducible Hermitian family, and compares the
resulting multiplicity verdicts against the closed-form lists, with
classical branching rules and signed Weyl sums as independent checks.
"""

from .branching import (
    compositions,
    gl_branch_levi,
    gl_interlace_step,
    lr_restrict,
    one_gap_weights,
    so_branch_step_btod,
    so_branch_step_dtob,
    so_two_step,
    su2_blocks_symmetric,
)
from .characters import (
    FormalCharacter,
    LabelFn,
    TorusMap,
    add_character,
    decompose_character,
    irreducible_character,
    restrict_character,
    tensor_character,
    twist_character,
)
from .classify import (
    ClassifyReport,
    MFResult,
    classify_range,
    cross_validate,
    gl_levi_via_characters,
    kostant_multiplicity,
    mf_check,
    restricted_constituents,
    so_step2_via_characters,
    witness_multiplicity,
)
from .config import DEFAULTS, load_config, parse_config
from .pairs import FAMILIES, HermitianPair
from .weights import (
    DEFAULT_DIM_CAP,
    E6_FUNDAMENTAL,
    EmbeddingError,
    NotACharacterError,
    ResourceCapError,
    RootDatum,
    ShapeError,
    parse_weight,
    weight_multiplicities,
    weight_str,
)
from .weylgroup import SignedPermutation, generate_weyl, generators, orbit

__all__ = [
    "ClassifyReport",
    "DEFAULTS",
    "DEFAULT_DIM_CAP",
    "E6_FUNDAMENTAL",
    "EmbeddingError",
    "FAMILIES",
    "FormalCharacter",
    "HermitianPair",
    "LabelFn",
    "MFResult",
    "NotACharacterError",
    "ResourceCapError",
    "RootDatum",
    "ShapeError",
    "SignedPermutation",
    "TorusMap",
    "add_character",
    "classify_range",
    "compositions",
    "cross_validate",
    "decompose_character",
    "generate_weyl",
    "generators",
    "gl_branch_levi",
    "gl_interlace_step",
    "gl_levi_via_characters",
    "irreducible_character",
    "kostant_multiplicity",
    "load_config",
    "lr_restrict",
    "mf_check",
    "one_gap_weights",
    "orbit",
    "parse_config",
    "parse_weight",
    "restrict_character",
    "restricted_constituents",
    "so_branch_step_btod",
    "so_branch_step_dtob",
    "so_step2_via_characters",
    "so_two_step",
    "su2_blocks_symmetric",
    "tensor_character",
    "twist_character",
    "weight_multiplicities",
    "weight_str",
    "witness_multiplicity",
]

__version__ = "0.1.0"
