"""Limit-point and limit-disc behaviour of compositions of Möbius self-maps of the unit disc."""

from .catalog import ghk, ghk_file
from .classify import (
    AffineMap,
    Classification,
    LimitDiscResult,
    Verdict,
    WordSpec,
    classify_word,
    conjugate_to_halfplane,
    gamma_series_test,
    is_limit_tangent,
    limit_disc_exact,
    q_statistic,
)
from .dimension import (
    DimensionReport,
    Method,
    dim_theorem3,
    dim_theorem4,
    dim_upper_bound,
    make_tangent_generator,
    minimize_g,
)
from .dynamics import (
    iterate_orbit,
    ideal_limit,
    pointwise_convergence,
    rapid_escape_report,
    tangency_chain_check,
)
from .errors import HypothesisViolated, InputError, LimitDiscError, NumericError
from .mobius import (
    INF,
    UNIT_DISC,
    Disc,
    H3Point,
    MobiusMap,
    apply,
    chordal_metric,
    compose,
    image_disc,
    in_class_MD,
    make_mobius,
)
from .tangency import (
    GeneratorSet,
    TangencyGraph,
    build_tangency_graph,
    has_cycle,
    is_complete,
    spectral_radius,
    tangency_data,
)

__version__ = "0.1.0"
