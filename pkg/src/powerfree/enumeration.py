"""Exhaustive generation of words, optionally avoiding a power."""

from __future__ import annotations

from itertools import product
from typing import Iterator

from .kernels import min_length
from .repetitions import ExponentThreshold
from .words import Word


def all_words(alphabet_size: int, length: int) -> Iterator[Word]:
    """Every word of the given length, in lexicographic order."""
    for t in product(range(alphabet_size), repeat=length):
        yield Word._raw(bytes(t), alphabet_size)


def _suffix_violates(buf: bytearray, num, den, strict) -> bool:
    n = len(buf)
    for p in range(1, n + 1):
        length = min_length(p, num, den, strict)
        if length > n:
            return False
        if buf[n - length:n - p] == buf[n - length + p:n]:
            return True
    return False


def avoiding_words(alphabet_size: int, length: int, t: ExponentThreshold) -> Iterator[Word]:
    """Every ``t``-power-free word of exactly ``length``, in lexicographic order.

    Power-freeness is factor-closed, so a depth-first extension that only
    inspects new suffixes visits exactly the power-free words.
    """
    num, den, strict = t.numerator, t.denominator, t.strict
    buf = bytearray()

    def extend():
        if len(buf) == length:
            yield Word._raw(bytes(buf), alphabet_size)
            return
        for a in range(alphabet_size):
            buf.append(a)
            if not _suffix_violates(buf, num, den, strict):
                yield from extend()
            buf.pop()

    yield from extend()
