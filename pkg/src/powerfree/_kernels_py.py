"""Pure-Python repetition kernels.

Same contract as the compiled ``_kernels`` extension.  Longest common
extensions are computed by galloping over ``bytes`` slice comparisons so
the heavy lifting stays inside memcmp.

Every kernel works on periods one at a time and samples the word at a
spacing no larger than the number of matching pairs a qualifying
repetition must contain, so each such repetition is hit by at least one
sample; forward and backward extensions from the sample recover its full
extent.
"""


def _lce(s, i, j, cap):
    # Longest l <= cap with s[i:i+l] == s[j:j+l]; requires i < j.
    n = len(s)
    if cap > n - j:
        cap = n - j
    if cap <= 0 or s[i] != s[j]:
        return 0
    lo = 1
    hi = 2
    while hi <= cap and s[i + lo:i + hi] == s[j + lo:j + hi]:
        lo = hi
        hi *= 2
    if hi > cap + 1:
        hi = cap + 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if s[i + lo:i + mid] == s[j + lo:j + mid]:
            lo = mid
        else:
            hi = mid
    return lo


def min_length(p, num, den, strict):
    """Shortest length whose exponent against period p violates num/den."""
    if strict:
        return (num * p) // den + 1
    return -(-num * p // den)


def find_repetition(s, num, den, strict, leftmost=True):
    """Locate a factor whose exponent is >= num/den (> when ``strict``).

    Returns ``(start, period, length)`` with ``length`` the shortest
    violating length for that period, or ``None``.  With ``leftmost`` the
    answer has minimal start, ties broken by minimal period; otherwise the
    first hit found is returned.
    """
    n = len(s)
    r = s[::-1]
    best = None
    for p in range(1, n + 1):
        length = min_length(p, num, den, strict)
        if length > n:
            break
        need = length - p
        q = 0
        while q + p < n:
            if best is not None and q - need >= best[0]:
                break
            b = _lce(r, n - q - p, n - q, need)
            f = _lce(s, q, q + p, need - b) if b < need else 0
            if b + f >= need:
                start = q - b
                if best is None or start < best[0]:
                    best = (start, p, length)
                break
            q += need
        if best is not None and (not leftmost or best[0] == 0):
            break
    return best


def square_runs(s, max_period):
    """All maximal runs ``(start, period, length)`` with length >= 2*period."""
    n = len(s)
    r = s[::-1]
    out = []
    for p in range(1, min(max_period, n // 2) + 1):
        q = 0
        while q + p < n:
            b = _lce(r, n - q - p, n - q, q)
            f = _lce(s, q, q + p, n)
            if b + f >= p:
                start = q - b
                end = q + p + f
                out.append((start, p, end - start))
                q = ((end - p) // p + 1) * p
            else:
                q += p
    return out


def _better(c, b):
    lhs, rhs = c[2] * b[1], b[2] * c[1]
    if lhs != rhs:
        return lhs > rhs
    return (c[0], c[1]) < (b[0], b[1])


def max_repetition(s):
    """The factor of maximal exponent as ``(start, period, length)``.

    Ties go to the leftmost start, then the smallest period.  ``s`` must be
    non-empty.
    """
    n = len(s)
    best = (0, 1, 1)
    runs = square_runs(s, n // 2)
    if runs:
        for run in runs:
            if _better(run, best):
                best = run
        return best
    # Squarefree: every repetition has exponent below 2, scan densely.
    for p in range(1, n):
        i = 0
        while i + p < n:
            f = _lce(s, i, i + p, n)
            if f:
                cand = (i, p, p + f)
                if _better(cand, best):
                    best = cand
                i += f + 1
            else:
                i += 1
    return best
