"""Cellular algebras, their representation theory, and the levi / parabolic /
quotient algebras cut out by an idempotent decomposition and an alpha map."""

from .field import QQ, GF, Fp, FieldMismatchError, parse_field
from .poset import Poset
from .algebra import Algebra, CellDatum, Element, verify_cellular, verify_standardly_based
from .modules import LEFT, RIGHT, standard_module, simple_module, pairing, gram, beta
from .repth import jacobson_radical, decomposition_matrix, linkage_partition, cartan_via_formula
from .alpha import AlphaDatum, AlphaConstruction, AssumptionError, verify_assumptions, tableau_partition
from .ingest import builtin, load, parse, serialize, build_matrix_algebra, build_paper_quiver_example
from .relations import (check_constructions, check_module_relations, check_decomposition_relations,
                        check_condition_C, check_block_relations, full_report)

__all__ = [
    "QQ", "GF", "Fp", "FieldMismatchError", "parse_field", "Poset",
    "Algebra", "CellDatum", "Element", "verify_cellular", "verify_standardly_based",
    "LEFT", "RIGHT", "standard_module", "simple_module", "pairing", "gram", "beta",
    "jacobson_radical", "decomposition_matrix", "linkage_partition", "cartan_via_formula",
    "AlphaDatum", "AlphaConstruction", "AssumptionError", "verify_assumptions", "tableau_partition",
    "builtin", "load", "parse", "serialize", "build_matrix_algebra", "build_paper_quiver_example",
    "check_constructions", "check_module_relations", "check_decomposition_relations",
    "check_condition_C", "check_block_relations", "full_report",
]
