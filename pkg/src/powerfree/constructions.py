"""Cubefree binary squares of every even length and the infinite words
built from them.

Odd half-lengths come from ``x0x0`` and even ones from ``x101100x101100``,
where ``x`` is a Thue-Morse factor that begins and ends with ``1001``.
Half-lengths those two shapes cannot reach are served from a small table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import streams
from .enumeration import avoiding_words
from .errors import DomainError, NoAnchor, ResourceError, WindowError
from .repetitions import CUBE, SquareSet, is_cubefree
from .streams import InfiniteWordStream
from .words import F, G, H, Word, complement, tm_prefix

ANCHOR = Word("1001")
EVEN_SUFFIX = Word("101100")
EXHAUSTIVE_CAP = 28
MAX_MATERIALIZED_FAMILY = 1 << 20

# Lexicographically least cubefree square for each half-length that the
# two anchored shapes miss; tests re-derive them by exhaustive search.
BASE_SQUARES = {
    1: "00",
    2: "0101",
    3: "001001",
    4: "00110011",
    6: "001011001011",
    7: "00100110010011",
    8: "0010110100101101",
    12: "001001010011001001010011",
}


@dataclass(frozen=True)
class AnchoredFactor:
    word: Word
    source_position: int


def anchor_window(n: int) -> int:
    return 64 * n + 64


def find_anchor_factor(n: int) -> AnchoredFactor:
    """First Thue-Morse factor of length ``n`` of the form 1001...1001."""
    if n < 4 or n % 2 or n == 6:
        raise NoAnchor(f"no anchored factor of length {n}")
    t = tm_prefix(anchor_window(n)).data
    a = ANCHOR.data
    i = t.find(a)
    while 0 <= i <= len(t) - n:
        if t[i + n - 4:i + n] == a:
            return AnchoredFactor(Word._raw(t[i:i + n], 2), i)
        i = t.find(a, i + 1)
    raise WindowError(f"no anchored factor of length {n} in the first {len(t)} symbols")


def odd_square(n: int) -> Word:
    """``(x0)^2`` for the anchored factor ``x`` of length ``n``."""
    x0 = find_anchor_factor(n).word + Word("0")
    return x0 + x0


def even_square(n: int) -> Word:
    """``(x101100)^2`` for the anchored factor ``x`` of length ``n``."""
    root = find_anchor_factor(n).word + EVEN_SUFFIX
    return root + root


def base_case_square(half: int) -> Word:
    try:
        return Word(BASE_SQUARES[half])
    except KeyError:
        raise DomainError(f"no table entry for half-length {half}") from None


@lru_cache(maxsize=4096)
def cubefree_square(half: int) -> Word:
    """A cubefree binary square of length ``2 * half``."""
    if half < 1:
        raise DomainError("half-length must be positive")
    if half in BASE_SQUARES:
        return base_case_square(half)
    if half % 2:
        return odd_square(half - 1)
    return even_square(half - 6)


# -- exponentially many squares --------------------------------------------


def _family_root(m: int) -> Word:
    x = cubefree_square(m)[:m]
    if x.data.count(1) > x.data.count(0):
        x = complement(x)
    return x


def exp_family_size(m: int) -> int:
    return 1 << _family_root(m).data.count(0)


def iter_exp_family(m: int) -> Iterator[Word]:
    """Members ``h(y)h(y)`` in lexicographic order.

    ``y`` ranges over the words obtained from the root by turning any subset
    of its 0s into 2s.  h is uniform with images in increasing order, so
    lexicographic order on ``y`` carries over to the images.
    """
    if m < 1:
        raise DomainError("m must be positive")
    root = bytearray(_family_root(m).data)
    zeros = [i for i, c in enumerate(root) if c == 0]
    k = len(zeros)
    table = [img.data for img in H.images]
    for mask in range(1 << k):
        y = bytearray(root)
        for j, pos in enumerate(zeros):
            if mask >> (k - 1 - j) & 1:
                y[pos] = 2
        half = b"".join([table[c] for c in y])
        yield Word._raw(half + half, 2)


def exp_family(m: int) -> SquareSet:
    """All cubefree squares of length 12m produced by the family."""
    if exp_family_size(m) > MAX_MATERIALIZED_FAMILY:
        raise ResourceError(f"family for m={m} has more than {MAX_MATERIALIZED_FAMILY} members")
    return SquareSet(iter_exp_family(m))


def square_supply_stream() -> Iterator[Word]:
    """Every family member, by increasing m and lexicographically within m."""
    for m in itertools.count(1):
        yield from iter_exp_family(m)


# -- infinite words --------------------------------------------------------


def separator_stream() -> InfiniteWordStream:
    """The Thue-Morse word written over {2, 3}."""
    return streams.relabelled(streams.thue_morse(), {0: 2, 1: 3})


def w_stream() -> InfiniteWordStream:
    """``x1 S1 x2 S2 ...``: separators from Thue-Morse, blocks from the square supply."""
    return streams.interleaved(separator_stream(), square_supply_stream, 4)


def gw_stream() -> InfiniteWordStream:
    return streams.morphic_image(w_stream(), G)


def y_stream() -> InfiniteWordStream:
    """Perfect shuffle of a squarefree ternary word with Champernowne over {3, 4}."""
    full = streams.relabelled(streams.champernowne(), {0: 3, 1: 4})
    return streams.shuffled(streams.ternary_squarefree(), full)


def fy_stream() -> InfiniteWordStream:
    return streams.morphic_image(y_stream(), F)


# -- census ----------------------------------------------------------------


@dataclass(frozen=True)
class CensusRecord:
    length: int
    exact_count: int | None = None
    family_lower_bound: int | None = None
    witnesses: tuple[Word, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "exact_count": self.exact_count,
            "family_lower_bound": self.family_lower_bound,
            "witnesses": [str(w) for w in self.witnesses],
        }


def count_cubefree_squares(length: int) -> int:
    """Exact number of cubefree binary squares of the given even length."""
    half = length // 2
    return sum(1 for x in avoiding_words(2, half, CUBE) if is_cubefree(x + x))


def census(max_length: int, exhaustive_cap: int = 24, witness_limit: int = 4) -> list[CensusRecord]:
    if max_length % 2 or max_length < 0:
        raise DomainError("max_length must be a non-negative even integer")
    if exhaustive_cap > EXHAUSTIVE_CAP:
        raise ResourceError(f"exhaustive cap {exhaustive_cap} exceeds {EXHAUSTIVE_CAP}")
    records = []
    for length in range(2, max_length + 1, 2):
        exact = count_cubefree_squares(length) if length <= exhaustive_cap else None
        bound = None
        witnesses = {cubefree_square(length // 2)}
        if length % 12 == 0:
            m = length // 12
            bound = exp_family_size(m)
            witnesses.update(itertools.islice(iter_exp_family(m), witness_limit - 1))
        records.append(CensusRecord(length, exact, bound, tuple(sorted(witnesses))))
    return records
