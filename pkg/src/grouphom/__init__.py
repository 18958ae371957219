"""Exact first homology of finitely presented groups with twisted coefficients."""

from .catalog import SurfaceSpec, expected_h1, mcg_action, mcg_module, mcg_presentation, prop4_generators
from .coefficients import CoefficientModule, check_action_compatibility, trivial_module
from .exact_linalg import AbelianGroupStructure, IntMatrix, LatticeBasis
from .homology import H1Result, abelianization, twisted_h1, verify_kernel_generators
from .presentation import GroupPresentation, Relation, parse_presentation
from .representation import MatrixRepresentation, verify_representation, word_matrix

__all__ = [
    "AbelianGroupStructure",
    "CoefficientModule",
    "GroupPresentation",
    "H1Result",
    "IntMatrix",
    "LatticeBasis",
    "MatrixRepresentation",
    "Relation",
    "SurfaceSpec",
    "abelianization",
    "check_action_compatibility",
    "expected_h1",
    "mcg_action",
    "mcg_module",
    "mcg_presentation",
    "parse_presentation",
    "prop4_generators",
    "trivial_module",
    "twisted_h1",
    "verify_kernel_generators",
    "verify_representation",
    "word_matrix",
]
