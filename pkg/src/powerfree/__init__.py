"""Cubefree binary squares, power-free infinite words, and the repetition
detectors used to check them."""

from .constructions import (
    AnchoredFactor,
    CensusRecord,
    census,
    cubefree_square,
    even_square,
    exp_family,
    find_anchor_factor,
    fy_stream,
    gw_stream,
    odd_square,
    square_supply_stream,
    w_stream,
    y_stream,
)
from .errors import DomainError, NoAnchor, PowerfreeError, ResourceError, WindowError
from .kernels import BACKEND
from .repetitions import (
    ExponentThreshold,
    Mode,
    Occurrence,
    SquareSet,
    conjugates,
    count_occurrences,
    distinct_square_factors,
    factor_complexity,
    find_cube,
    is_cubefree,
    is_overlap_free,
    is_powerfree,
    is_square,
    is_squarefree,
    max_exponent,
)
from .streams import InfiniteWordStream
from .words import F, G, H, MU, Morphism, Word, apply_morphism, iterate_morphism, relabel, tm_prefix, tm_symbol_at

__version__ = "0.1.0"
