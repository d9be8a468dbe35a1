"""Exact computation with graded ideals of finite-dimensional graded Lie algebras."""

from .algebra import AbelianGroup, GradedHom, GradedLieAlgebra, bracket, build_algebra, validate
from .classify import LITERAL, PROPER, QuantifierVariant, Verdict
from .ideals import IdealHandle, colon, generated_ideal, ideal_bracket
from .linalg import FieldSpec, Subspace, canonicalize

__all__ = [
    "AbelianGroup",
    "FieldSpec",
    "GradedHom",
    "GradedLieAlgebra",
    "IdealHandle",
    "LITERAL",
    "PROPER",
    "QuantifierVariant",
    "Subspace",
    "Verdict",
    "bracket",
    "build_algebra",
    "canonicalize",
    "colon",
    "generated_ideal",
    "ideal_bracket",
    "validate",
]
