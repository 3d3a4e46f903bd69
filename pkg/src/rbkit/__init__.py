"""Rook-Brauer algebra toolkit: diagram arithmetic and the representations built on it."""

from .algebra import AlgebraElement, Polynomial, check_presentation, presentation_relations
from .combinatorics import Partition, Path, StandardTableau, bratteli, enumerate_paths, rsk
from .diagrams import (
    Diagram,
    DiagramError,
    GeneratorWord,
    Letter,
    ProductResult,
    classify,
    concatenate,
    count,
    enumerate_diagrams,
    factor,
    generator,
    rank,
)
from .render import render
from .schur_weyl import TensorRepConfig, verify_commuting, verify_faithful, verify_homomorphism
from .seminormal import (
    SeminormalModule,
    SingularParameterError,
    build_module,
    esk,
    esk_eval,
    verify_complete,
    verify_relations,
    verify_restriction,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "Polynomial", "check_presentation", "presentation_relations",
    "Partition", "Path", "StandardTableau", "bratteli", "enumerate_paths", "rsk",
    "Diagram", "DiagramError", "GeneratorWord", "Letter", "ProductResult", "classify",
    "concatenate", "count", "enumerate_diagrams", "factor", "generator", "rank", "render",
    "TensorRepConfig", "verify_commuting", "verify_faithful", "verify_homomorphism",
    "SeminormalModule", "SingularParameterError", "build_module", "esk", "esk_eval",
    "verify_complete", "verify_relations", "verify_restriction",
]
