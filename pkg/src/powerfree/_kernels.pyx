# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled repetition kernels; see ``_kernels_py`` for the contract."""

ctypedef long long i64


cdef inline Py_ssize_t _fwd(const unsigned char[::1] s, Py_ssize_t i, Py_ssize_t j,
                            Py_ssize_t cap) noexcept nogil:
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t l = 0
    if cap > n - j:
        cap = n - j
    while l < cap and s[i + l] == s[j + l]:
        l += 1
    return l


cdef inline Py_ssize_t _bwd(const unsigned char[::1] s, Py_ssize_t i, Py_ssize_t j,
                            Py_ssize_t cap) noexcept nogil:
    # Longest l <= cap with s[i-l:i] == s[j-l:j]; requires i < j.
    cdef Py_ssize_t l = 0
    if cap > i:
        cap = i
    while l < cap and s[i - 1 - l] == s[j - 1 - l]:
        l += 1
    return l


cdef inline i64 _min_length(i64 p, i64 num, i64 den, bint strict) noexcept nogil:
    if strict:
        return (num * p) // den + 1
    return (num * p + den - 1) // den


def min_length(p, num, den, strict):
    return _min_length(p, num, den, strict)


def find_repetition(const unsigned char[::1] s, i64 num, i64 den, bint strict, bint leftmost=True):
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t p, q, need, b, f, start
    cdef i64 length
    cdef Py_ssize_t best_start = -1, best_p = 0
    cdef i64 best_len = 0
    with nogil:
        for p in range(1, n + 1):
            length = _min_length(p, num, den, strict)
            if length > n:
                break
            need = <Py_ssize_t>length - p
            q = 0
            while q + p < n:
                if best_start >= 0 and q - need >= best_start:
                    break
                b = _bwd(s, q, q + p, need)
                f = _fwd(s, q, q + p, need - b) if b < need else 0
                if b + f >= need:
                    start = q - b
                    if best_start < 0 or start < best_start:
                        best_start = start
                        best_p = p
                        best_len = length
                    break
                q += need
            if best_start >= 0 and (not leftmost or best_start == 0):
                break
    if best_start < 0:
        return None
    return (best_start, best_p, best_len)


def square_runs(const unsigned char[::1] s, Py_ssize_t max_period):
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t p, q, b, f, start, end, top
    out = []
    top = n // 2
    if max_period < top:
        top = max_period
    for p in range(1, top + 1):
        q = 0
        while q + p < n:
            b = _bwd(s, q, q + p, q)
            f = _fwd(s, q, q + p, n)
            if b + f >= p:
                start = q - b
                end = q + p + f
                out.append((start, p, end - start))
                q = ((end - p) // p + 1) * p
            else:
                q += p
    return out


cdef inline bint _better(Py_ssize_t cs, Py_ssize_t cp, Py_ssize_t cl,
                         Py_ssize_t bs, Py_ssize_t bp, Py_ssize_t bl) noexcept nogil:
    cdef i64 lhs = <i64>cl * bp
    cdef i64 rhs = <i64>bl * cp
    if lhs != rhs:
        return lhs > rhs
    if cs != bs:
        return cs < bs
    return cp < bp


def max_repetition(const unsigned char[::1] s):
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t bs = 0, bp = 1, bl = 1
    cdef Py_ssize_t p, i, f
    runs = square_runs(s, n // 2)
    if runs:
        for rs, rp, rl in runs:
            if _better(rs, rp, rl, bs, bp, bl):
                bs, bp, bl = rs, rp, rl
        return (bs, bp, bl)
    with nogil:
        for p in range(1, n):
            i = 0
            while i + p < n:
                f = _fwd(s, i, i + p, n)
                if f:
                    if _better(i, p, p + f, bs, bp, bl):
                        bs, bp, bl = i, p, p + f
                    i += f + 1
                else:
                    i += 1
    return (bs, bp, bl)
