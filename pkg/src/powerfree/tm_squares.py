"""Squares of the Thue-Morse word and the square families tied to them.

The squares occurring in the Thue-Morse word are the images of
``{00, 11, 010010, 101101}`` under the powers of the Thue-Morse morphism.
Their conjugates that are themselves squares are the overlap-free binary
squares.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import avoiding_words
from .errors import ResourceError, WindowError
from .repetitions import (
    OVERLAP,
    ExponentThreshold,
    Mode,
    SquareSet,
    conjugates,
    distinct_square_factors,
    is_powerfree,
    is_square,
)
from .words import MU, apply_morphism, tm_prefix

ENUMERATION_CAP = 48
WINDOW_FACTOR = 32
SEVEN_THIRDS = (7, 3)


@dataclass(frozen=True)
class TMSquareFamily:
    length_cap: int
    members: SquareSet


def base_square_set() -> SquareSet:
    return SquareSet(["00", "11", "010010", "101101"])


def tm_square_family(length_cap: int) -> TMSquareFamily:
    """All squares mu^k(a), a in the base set, no longer than ``length_cap``."""
    members = set()
    layer = [w.with_alphabet(2) for w in base_square_set()]
    while layer:
        layer = [w for w in layer if len(w) <= length_cap]
        members.update(layer)
        layer = [apply_morphism(MU, w) for w in layer]
    return TMSquareFamily(length_cap, SquareSet(members))


def squares_in_tm(length_cap: int, window: int) -> SquareSet:
    """Distinct squares of length <= ``length_cap`` in a Thue-Morse prefix."""
    if window < WINDOW_FACTOR * length_cap:
        raise WindowError(f"window {window} < {WINDOW_FACTOR} * {length_cap}")
    return distinct_square_factors(tm_prefix(window), max_len=length_cap)


def _binary_squares(length_cap: int, t: ExponentThreshold, oracle: bool) -> SquareSet:
    if length_cap > ENUMERATION_CAP:
        raise ResourceError(f"length cap {length_cap} exceeds {ENUMERATION_CAP}")
    out = set()
    for half in range(1, length_cap // 2 + 1):
        # The root of a t-free square is itself t-free.
        for x in avoiding_words(2, half, t):
            xx = x + x
            if is_powerfree(xx, t, oracle=oracle):
                out.add(xx)
    return SquareSet(out)


def overlap_free_squares(length_cap: int, oracle=False) -> SquareSet:
    return _binary_squares(length_cap, OVERLAP, oracle)


def seven_thirds_free_squares(length_cap: int, mode: Mode | str = Mode.GE, oracle=False) -> SquareSet:
    t = ExponentThreshold(*SEVEN_THIRDS, Mode(mode))
    return _binary_squares(length_cap, t, oracle)


def conjugate_closure(s) -> SquareSet:
    """Rotations of the members that are still squares."""
    out = set()
    for w in s:
        out.update(c for c in conjugates(w) if is_square(c))
    return SquareSet(out)


def determine_seven_thirds_mode(length_cap: int = 24) -> list[Mode]:
    """Threshold modes under which the 7/3-free squares up to ``length_cap``
    coincide with the conjugate closure of the Thue-Morse squares."""
    target = conjugate_closure(tm_square_family(length_cap).members)
    return [m for m in Mode if seven_thirds_free_squares(length_cap, m) == target]


def is_tm_half_length(half: int) -> bool:
    """True when ``half`` is a power of 2 or three times one."""
    if half % 3 == 0:
        half //= 3
    return half > 0 and half & (half - 1) == 0

