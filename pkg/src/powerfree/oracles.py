"""Naive repetition detectors that follow the definitions literally.

These scan every (start, period) pair and compare slices, roughly cubic
time in the word length.  They share no code with the optimized kernels
and serve as the reference the kernels are checked against; the ``verify``
command can also run every suite on them.

All functions take raw symbol ``bytes``.
"""

from fractions import Fraction


def _violating_length(p, num, den, strict):
    return (num * p) // den + 1 if strict else -(-num * p // den)


def find_cube(s):
    """Leftmost, then shortest-period, cube as ``(start, period, 3*period)``."""
    n = len(s)
    for i in range(n):
        for p in range(1, (n - i) // 3 + 1):
            if s[i:i + 2 * p] == s[i + p:i + 3 * p]:
                return (i, p, 3 * p)
    return None


def find_square(s):
    n = len(s)
    for i in range(n):
        for p in range(1, (n - i) // 2 + 1):
            if s[i:i + p] == s[i + p:i + 2 * p]:
                return (i, p, 2 * p)
    return None


def find_overlap(s):
    """Leftmost factor ``axaxa`` as ``(start, |ax|, 2|ax|+1)``."""
    n = len(s)
    for i in range(n):
        for p in range(1, (n - i - 1) // 2 + 1):
            if s[i:i + p + 1] == s[i + p:i + 2 * p + 1]:
                return (i, p, 2 * p + 1)
    return None


def find_power(s, num, den, strict):
    n = len(s)
    for i in range(n):
        for p in range(1, n - i + 1):
            length = _violating_length(p, num, den, strict)
            if i + length > n:
                break
            if s[i:i + length - p] == s[i + p:i + length]:
                return (i, p, length)
    return None


def is_cubefree(s):
    return find_cube(s) is None


def is_squarefree(s):
    return find_square(s) is None


def is_overlap_free(s):
    return find_overlap(s) is None


def is_powerfree(s, num, den, strict):
    return find_power(s, num, den, strict) is None


def distinct_square_factors(s, max_len=None):
    n = len(s)
    top = n // 2 if max_len is None else min(n // 2, max_len // 2)
    found = set()
    for p in range(1, top + 1):
        found.update(s[i:i + 2 * p] for i in range(n - 2 * p + 1) if s[i:i + p] == s[i + p:i + 2 * p])
    return found


def max_exponent(s):
    """``(exponent, (start, period, length))`` maximizing length/period.

    Ties go to the leftmost start, then the smallest period.
    """
    n = len(s)
    best = (Fraction(1), (0, 1, 1))
    for i in range(n):
        for p in range(1, n - i + 1):
            length = p
            while i + length < n and s[i + length] == s[i + length - p]:
                length += 1
            e = Fraction(length, p)
            if e > best[0]:
                best = (e, (i, p, length))
    return best
