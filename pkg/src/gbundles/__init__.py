"""Classification of principal G-bundles over 2-dimensional CW-complexes."""

from .classifier import (
    ClassificationResult,
    Verdict,
    classify,
    classify_sphere,
    surface_closed_form,
    witten_cross_check,
)
from .cohomology import cohomology_direct, cohomology_uct, integral_homology
from .complex import CwComplex2, StandardSpace, build_standard, validate
from .errors import (
    ComplexError,
    DimensionError,
    DisconnectedError,
    GBundlesError,
    GroupSpecError,
    HypothesisViolation,
)
from .groups import FgAbelianGroup, parse_abelian
from .linalg import IntMatrix, smith_normal_form
from .structure import GroupDescriptor, covering_quotient, parse_group_spec, product_descriptor

__version__ = "0.1.0"
