"""Symbolic computations in the pure mapping class group of a twice-punctured
genus-g surface, centred on the subgroup of classes that extend over the
handlebody while fixing a trivial arc."""

from .words import Alphabet, FreeWord, WordError
from .morphism import Morphism, Automorphism
from .surface import SurfaceModel, ExtensionReport
from .generators import (
    GeneratorName,
    MappingClassExpr,
    build_generator,
    evaluate,
    relation_suite,
    slide_product,
    theorem_generating_set,
)
from .knots import Presentation, knot_group, tietze_simplify, abelianize, alexander_matrix

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "FreeWord",
    "WordError",
    "Morphism",
    "Automorphism",
    "SurfaceModel",
    "ExtensionReport",
    "GeneratorName",
    "MappingClassExpr",
    "build_generator",
    "evaluate",
    "relation_suite",
    "slide_product",
    "theorem_generating_set",
    "Presentation",
    "knot_group",
    "tietze_simplify",
    "abelianize",
    "alexander_matrix",
]
