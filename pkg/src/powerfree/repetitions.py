"""Squares, cubes, overlaps, fractional powers and factor statistics.

Every detector takes ``oracle=True`` to route through the naive scans in
:mod:`powerfree.oracles` instead of the sampling kernels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import kernels, oracles
from .errors import DomainError
from .words import Word, WordLike, as_word


class Mode(enum.Enum):
    """How a threshold treats a factor whose exponent equals it exactly."""

    GE = "ge"  # exponent >= threshold is forbidden
    GT = "gt"  # only exponent > threshold is forbidden


@dataclass(frozen=True)
class ExponentThreshold:
    numerator: int
    denominator: int = 1
    mode: Mode = Mode.GE

    def __post_init__(self):
        if self.numerator < 1 or self.denominator < 1:
            raise DomainError("threshold terms must be positive integers")
        if self.numerator <= self.denominator:
            raise DomainError("threshold must exceed 1")

    @classmethod
    def parse(cls, text: str, mode: Mode | str = Mode.GE) -> ExponentThreshold:
        """Read ``"7/3"`` or ``"3"``."""
        num, _, den = text.strip().partition("/")
        try:
            n, d = int(num), int(den or 1)
        except ValueError:
            raise DomainError(f"bad exponent {text!r}") from None
        return cls(n, d, Mode(mode))

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def strict(self) -> bool:
        return self.mode is Mode.GT

    def forbids(self, exponent: Fraction) -> bool:
        return exponent > self.value if self.strict else exponent >= self.value

    def __str__(self):
        v = self.value
        return f"{v.numerator}/{v.denominator} ({self.mode.value})"


CUBE = ExponentThreshold(3, 1, Mode.GE)
SQUARE = ExponentThreshold(2, 1, Mode.GE)
OVERLAP = ExponentThreshold(2, 1, Mode.GT)


@dataclass(frozen=True, order=True)
class Occurrence:
    """A repetition ``w[position:position+length]`` of the given period."""

    position: int
    period: int
    length: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def factor(self, w: Word) -> Word:
        return w[self.position:self.position + self.length]

    def __str__(self):
        return f"pos={self.position}, period={self.period}, len={self.length}"


class SquareSet(frozenset):
    """A set of words, each of which is a square."""

    def __new__(cls, words: Iterable[WordLike] = ()):
        members = [as_word(w) for w in words]
        for w in members:
            if not is_square(w):
                raise DomainError(f"{w} is not a square")
        return super().__new__(cls, members)

    def sorted(self) -> list[Word]:
        """Members by length, then lexicographically."""
        return sorted(self, key=lambda w: (len(w), w.data))

    def strings(self) -> list[str]:
        return [str(w) for w in self.sorted()]

    def __repr__(self):
        return f"SquareSet({self.strings()})"


def _occ(t):
    return None if t is None else Occurrence(*t)


def is_square(w: WordLike) -> bool:
    d = as_word(w).data
    half = len(d) // 2
    return len(d) >= 2 and len(d) % 2 == 0 and d[:half] == d[half:]


def find_power(w: WordLike, t: ExponentThreshold, oracle=False) -> Occurrence | None:
    """Leftmost (then shortest-period) factor whose exponent ``t`` forbids."""
    d = as_word(w).data
    if oracle:
        return _occ(oracles.find_power(d, t.numerator, t.denominator, t.strict))
    return _occ(kernels.find_repetition(d, t.numerator, t.denominator, t.strict, True))


def is_powerfree(w: WordLike, t: ExponentThreshold, oracle=False) -> bool:
    d = as_word(w).data
    if oracle:
        return oracles.is_powerfree(d, t.numerator, t.denominator, t.strict)
    return kernels.find_repetition(d, t.numerator, t.denominator, t.strict, False) is None


def find_cube(w: WordLike, oracle=False) -> Occurrence | None:
    if oracle:
        return _occ(oracles.find_cube(as_word(w).data))
    return find_power(w, CUBE)


def is_cubefree(w: WordLike, oracle=False) -> bool:
    if oracle:
        return oracles.is_cubefree(as_word(w).data)
    return is_powerfree(w, CUBE)


def find_square(w: WordLike, oracle=False) -> Occurrence | None:
    if oracle:
        return _occ(oracles.find_square(as_word(w).data))
    return find_power(w, SQUARE)


def is_squarefree(w: WordLike, oracle=False) -> bool:
    if oracle:
        return oracles.is_squarefree(as_word(w).data)
    return is_powerfree(w, SQUARE)


def find_overlap(w: WordLike, oracle=False) -> Occurrence | None:
    if oracle:
        return _occ(oracles.find_overlap(as_word(w).data))
    return find_power(w, OVERLAP)


def is_overlap_free(w: WordLike, oracle=False) -> bool:
    if oracle:
        return oracles.is_overlap_free(as_word(w).data)
    return is_powerfree(w, OVERLAP)


def max_exponent(w: WordLike, oracle=False) -> tuple[Fraction, Occurrence]:
    """Largest exponent (length over period) of any factor, with a witness.

    The witness is the leftmost such factor, ties broken by smaller period,
    and spans the maximal extent of that period.
    """
    d = as_word(w).data
    if not d:
        raise DomainError("max_exponent of the empty word")
    if oracle:
        e, t = oracles.max_exponent(d)
        return e, Occurrence(*t)
    occ = Occurrence(*kernels.max_repetition(d))
    return occ.exponent, occ


def distinct_square_factors(w: WordLike, max_len: int | None = None, oracle=False) -> SquareSet:
    """Every distinct square factor of ``w`` (of length <= ``max_len``)."""
    word = as_word(w)
    d = word.data
    if oracle:
        found = oracles.distinct_square_factors(d, max_len)
    else:
        top = len(d) // 2 if max_len is None else max_len // 2
        found = set()
        # Within a run of period p, squares starting p apart coincide, so
        # only the first p starting points can contribute new factors.
        for start, p, length in kernels.square_runs(d, top):
            for i in range(start, start + min(p, length - 2 * p + 1)):
                found.add(d[i:i + 2 * p])
    k = word.alphabet_size
    return SquareSet(Word._raw(f, k) for f in found)


def squares_of_length(w: WordLike, length: int) -> SquareSet:
    """Distinct square factors of exactly the given (even) length."""
    if length < 2 or length % 2:
        return SquareSet()
    word = as_word(w)
    d = word.data
    p = length // 2
    found = {
        d[i:i + length] for s, q, n in kernels.square_runs(d, p) if q == p
        for i in range(s, s + min(p, n - length + 1))
    }
    return SquareSet(Word._raw(f, word.alphabet_size) for f in found)


def count_occurrences(pattern: WordLike, w: WordLike) -> int:
    """Number of (possibly overlapping) occurrences of ``pattern`` in ``w``."""
    pat = as_word(pattern).data
    if not pat:
        raise DomainError("empty pattern")
    d = as_word(w).data
    count = 0
    i = d.find(pat)
    while i >= 0:
        count += 1
        i = d.find(pat, i + 1)
    return count


def factor_complexity(w: WordLike, n: int) -> int:
    """Number of distinct length-``n`` factors of ``w``."""
    if n < 0:
        raise DomainError("factor length must be non-negative")
    d = as_word(w).data
    if n == 0:
        return 1
    return len({d[i:i + n] for i in range(len(d) - n + 1)})


def conjugates(w: WordLike) -> frozenset[Word]:
    word = as_word(w)
    d = word.data
    if not d:
        raise DomainError("conjugates of the empty word")
    return frozenset(Word._raw(d[i:] + d[:i], word.alphabet_size) for i in range(len(d)))
