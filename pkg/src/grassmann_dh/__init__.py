"""Exact Duistermaat-Heckman moments and the cubic instability test for complex Grassmannians."""
from .determinant import (
    dh_series_determinant,
    epsilon,
    leading_coefficient_check,
    cubic_triple_decompose,
    predicted_cubic_triple,
    moment_determinant,
)
from .errors import (
    CapExceededError,
    InexactDivisionError,
    InputError,
    InternalError,
    PrecisionError,
    RegularityError,
)
from .exact import MultiPoly, TruncSeries, det_cofactor, fmt_rational, parse_rational
from .localization import (
    Direction,
    OrbitSpec,
    dh_series_localization,
    fixed_points,
    localization_identity_check,
    moment,
    moment_polynomial,
    moments,
)
from .stability import (
    StabilityReport,
    SpaceFamily,
    SymmetricSpaceType,
    Verdict,
    consistency_identity,
    cst_gate,
    duality_flip_check,
    invariant_degrees,
    verdict,
)
from .symmetric import decompose_deg3, schur_bialternant, schur_ssyt, vandermonde
from .tableaux import Partition, c0, hook_count, partitions, syt_enumerate

__version__ = "0.1.0"
