"""Codes from group matrix rings over GF(2): the sigma/tau block matrix map,
self-dual [I | tau] constructions of length 72, weight counting and search."""

from .codes import (
    TYPE_I_W1,
    TYPE_I_W2,
    TYPE_II,
    Classification72,
    ClassificationError,
    LinearCode,
    WeightProfile,
    brute_force_weights,
    classify_72,
    code_from_rows,
    dual,
    is_doubly_even,
    is_extremal,
    is_self_dual,
    min_distance,
    quasi_group_invariant,
    weights_upto,
)
from .constructions import (
    BlockTemplate,
    ConstructionSpec,
    build_block,
    build_generator,
    build_tau,
    decode_table_row,
    get_spec,
    registered_specs,
)
from .gf2 import BinaryMatrix, NotInvertible, concat_horizontal, inverse, mat_add, mat_mul, row_reduce, transpose
from .gmr import GroupMatrixRingElement, gmr_add, gmr_mul, involution, is_unit, is_unitary_unit, sigma_tau
from .groups import FiniteGroup, cyclic_group, cyclic_split_group, dihedral_group, group_by_name, validate_group
from .search import SearchConfig, SearchRecord, dedup, run_search

__version__ = "0.1.0"
