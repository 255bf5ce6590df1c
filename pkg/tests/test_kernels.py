"""Both kernel backends against the naive scans, and against each other."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from powerfree import kernels, oracles
from powerfree.constructions import gw_stream
from powerfree.enumeration import all_words
from powerfree.words import tm_prefix

THRESHOLDS = [(3, 1, False), (2, 1, False), (2, 1, True), (7, 3, False), (7, 3, True), (3, 2, False), (5, 4, True)]

raw_words = st.integers(2, 5).flatmap(
    lambda k: st.lists(st.integers(0, k - 1), max_size=60).map(bytes)
)


def _distinct_from_runs(k, s):
    out = set()
    for start, p, length in k.square_runs(s, len(s)):
        out.update(s[i:i + 2 * p] for i in range(start, start + length - 2 * p + 1))
    return out


@pytest.mark.parametrize("num,den,strict", THRESHOLDS)
def test_find_repetition_exhaustive_binary(kernel, num, den, strict):
    for n in range(11):
        for w in all_words(2, n):
            s = w.data
            assert kernel.find_repetition(s, num, den, strict, True) == oracles.find_power(s, num, den, strict)
            hit = kernel.find_repetition(s, num, den, strict, False)
            assert (hit is None) == oracles.is_powerfree(s, num, den, strict)


@settings(max_examples=300, deadline=None)
@given(raw_words)
def test_find_repetition_random(kernel, s):
    for num, den, strict in THRESHOLDS:
        assert kernel.find_repetition(s, num, den, strict, True) == oracles.find_power(s, num, den, strict)


@settings(max_examples=300, deadline=None)
@given(raw_words)
def test_runs_yield_all_squares(kernel, s):
    assert _distinct_from_runs(kernel, s) == oracles.distinct_square_factors(s)


@settings(max_examples=300, deadline=None)
@given(raw_words.filter(len))
def test_max_repetition(kernel, s):
    e, occ = oracles.max_exponent(s)
    start, p, length = kernel.max_repetition(s)
    assert (start, p, length) == occ
    assert e == type(e)(length, p)


def test_runs_are_maximal(kernel):
    s = tm_prefix(3000).data
    for start, p, length in kernel.square_runs(s, 200):
        end = start + length
        assert all(s[i] == s[i + p] for i in range(start, end - p))
        assert start == 0 or s[start - 1] != s[start - 1 + p]
        assert end == len(s) or s[end] != s[end - p]


def test_squarefree_input_dense_path(kernel):
    s = bytes([0, 1, 2, 0, 2, 1, 0, 1, 2, 1, 0, 2])
    assert kernel.find_repetition(s, 2, 1, False, False) is None
    assert kernel.max_repetition(s) == oracles.max_exponent(s)[1]


def test_empty_and_single(kernel):
    assert kernel.find_repetition(b"", 3, 1, False, True) is None
    assert kernel.square_runs(b"", 10) == []
    assert kernel.max_repetition(b"\x00") == (0, 1, 1)


def test_degenerate_unary(kernel):
    s = b"\x00" * 2000
    assert kernel.find_repetition(s, 3, 1, False, True) == (0, 1, 3)
    assert kernel.max_repetition(s) == (0, 1, 2000)


@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled extension not built")
def test_backends_agree_on_long_words():
    py, c = kernels.available_backends()["python"], kernels.available_backends()["cython"]
    rng = random.Random(7)
    g = gw_stream().prefix(20000).data
    samples = [g, tm_prefix(5000).data] + [bytes(rng.randrange(3) for _ in range(3000)) for _ in range(5)]
    for s in samples:
        for num, den, strict in THRESHOLDS:
            assert py.find_repetition(s, num, den, strict, True) == c.find_repetition(s, num, den, strict, True)
        assert py.square_runs(s, 300) == c.square_runs(s, 300)
    for s in samples[1:]:
        assert py.max_repetition(s) == c.max_repetition(s)


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")
    assert "python" in kernels.available_backends()
