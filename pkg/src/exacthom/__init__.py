"""Exact-arithmetic homological algebra workbench.

Cellular homology with surface classification, cochain-complex invariants,
and morphism-complex cohomology of quiver dg-representations, all over
exact rational coefficients.
"""

from .rational import Rational, RationalMatrix, block_diag
from .graded import (
    GradedMap,
    GradedVectorSpace,
    compose,
    direct_sum_space,
    dual_space,
    hom_space,
    scale_and_add,
    shift_space,
)
from .complexes import (
    CochainComplex,
    CohomologyResult,
    direct_sum_complex,
    random_complex,
    shift_complex,
)
from .cellular import (
    Cell,
    CellComplex,
    SurfaceVerdict,
    builtin,
    chain_complex_of,
    classify_surface,
    genus_from_euler,
    genus_surface,
    homology_of,
)
from .quiver import (
    Generator,
    HomComplexResult,
    QuiverPresentation,
    Representation,
    euler_of_hom,
    floer_cohomology,
    hom_complex,
    sphere_quiver,
    torus_quiver,
    torus_trivial_representation,
    validate_representation,
    zero_section_representation,
)
from .classify import (
    SampleConfig,
    TheoremReport,
    check_concentrated_lemma,
    check_sphere_theorem,
    check_torus_theorem,
    enumerate_sphere_representations,
    enumerate_torus_representations,
    sample_representation_at,
    sample_representations,
)
from .errors import (
    CellComplexError,
    ClassificationError,
    ExactHomError,
    FormatError,
    InvalidComplexError,
    RepresentationError,
    ShapeError,
    UnsupportedDifferentialError,
)

__version__ = "0.1.0"

__all__ = [
    "Rational",
    "RationalMatrix",
    "block_diag",
    "GradedVectorSpace",
    "GradedMap",
    "shift_space",
    "direct_sum_space",
    "dual_space",
    "hom_space",
    "compose",
    "scale_and_add",
    "CochainComplex",
    "CohomologyResult",
    "shift_complex",
    "direct_sum_complex",
    "random_complex",
    "Cell",
    "CellComplex",
    "SurfaceVerdict",
    "builtin",
    "chain_complex_of",
    "homology_of",
    "classify_surface",
    "genus_surface",
    "genus_from_euler",
    "Generator",
    "QuiverPresentation",
    "Representation",
    "HomComplexResult",
    "sphere_quiver",
    "torus_quiver",
    "validate_representation",
    "hom_complex",
    "floer_cohomology",
    "euler_of_hom",
    "zero_section_representation",
    "torus_trivial_representation",
    "SampleConfig",
    "TheoremReport",
    "check_concentrated_lemma",
    "check_sphere_theorem",
    "check_torus_theorem",
    "sample_representations",
    "sample_representation_at",
    "enumerate_sphere_representations",
    "enumerate_torus_representations",
    "ExactHomError",
    "ShapeError",
    "InvalidComplexError",
    "CellComplexError",
    "RepresentationError",
    "UnsupportedDifferentialError",
    "ClassificationError",
    "FormatError",
]
