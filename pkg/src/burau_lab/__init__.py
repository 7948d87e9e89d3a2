"""burau_lab: the reduced Burau representation over exact Laurent-matrix
arithmetic, its specializations at roots of unity via exact cyclotomic
arithmetic, and the cone-metric moduli-space orbifold analysis that
identifies the kernels of those specializations."""

from .burau import (
    AffineExtended,
    BurauImage,
    ProjectiveMatrix,
    affine_extension,
    burau_generator,
    burau_of_word,
    crossed_v,
    ev_map,
    projectively_equal,
    specialized_burau,
)
from .cyclotomic import (
    INFINITE,
    CycloMatrix,
    CyclotomicNumber,
    InvalidD,
    ZeroInput,
    cyclotomic_polynomial,
    minus_q_from_d,
    multiplicative_order,
    specialize_matrix,
    specialize_poly,
)
from .laurent import DimensionMismatch, LaurentMatrix, LaurentPoly, NotDivisible
from .moduli import (
    ConeStratum,
    CurvatureVector,
    Inconclusive,
    InvalidConfiguration,
    InvalidCurvatures,
    InvalidFraction,
    KernelDescriptor,
    OrbifoldReport,
    b3_kernel,
    cone_angle,
    curvatures_from_nd,
    distinguished_labels,
    kernel_descriptor,
    orbifold_check,
)
from .monodromy import (
    HermitianForm,
    InvalidDims,
    MonodromyGenerators,
    NoInvariantForm,
    diagram_check,
    invariant_hermitian_form,
    rho_generators,
    rho_product,
    signature,
)
from .words import (
    BraidWord,
    EmptyGeneratorSet,
    IndexOutOfRange,
    InvalidSupport,
    NamedTwist,
    TwistKind,
    WordSyntaxError,
    canonical_twist_word,
    free_reduce,
    parse_word,
    random_word,
    sample_normal_closure,
)

__version__ = "0.1.0"

__all__ = [
    "AffineExtended",
    "BraidWord",
    "BurauImage",
    "ConeStratum",
    "CurvatureVector",
    "CycloMatrix",
    "CyclotomicNumber",
    "DimensionMismatch",
    "EmptyGeneratorSet",
    "HermitianForm",
    "INFINITE",
    "Inconclusive",
    "IndexOutOfRange",
    "InvalidConfiguration",
    "InvalidCurvatures",
    "InvalidD",
    "InvalidDims",
    "InvalidFraction",
    "InvalidSupport",
    "KernelDescriptor",
    "LaurentMatrix",
    "LaurentPoly",
    "MonodromyGenerators",
    "NamedTwist",
    "NoInvariantForm",
    "NotDivisible",
    "OrbifoldReport",
    "ProjectiveMatrix",
    "TwistKind",
    "WordSyntaxError",
    "ZeroInput",
    "affine_extension",
    "b3_kernel",
    "burau_generator",
    "burau_of_word",
    "canonical_twist_word",
    "cone_angle",
    "crossed_v",
    "curvatures_from_nd",
    "cyclotomic_polynomial",
    "diagram_check",
    "distinguished_labels",
    "ev_map",
    "free_reduce",
    "invariant_hermitian_form",
    "kernel_descriptor",
    "minus_q_from_d",
    "multiplicative_order",
    "orbifold_check",
    "parse_word",
    "projectively_equal",
    "random_word",
    "rho_generators",
    "rho_product",
    "sample_normal_closure",
    "signature",
    "specialize_matrix",
    "specialize_poly",
    "specialized_burau",
]
