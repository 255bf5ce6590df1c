"""Theorem verification suites behind ``powerfree verify``.

A suite is a function ``(limit, oracle) -> Checker``; ``limit`` scales the
suite (half-lengths, anchor lengths, prefix lengths ... see ``SUITES``) and
``oracle`` switches every detector to the naive scans.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import oracles
from .constructions import (
    cubefree_square,
    count_cubefree_squares,
    even_square,
    exp_family_size,
    find_anchor_factor,
    fy_stream,
    gw_stream,
    iter_exp_family,
    odd_square,
    w_stream,
    y_stream,
)
from .enumeration import all_words, avoiding_words
from .errors import NoAnchor
from .repetitions import (
    CUBE,
    SQUARE,
    ExponentThreshold,
    Mode,
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
    squares_of_length,
)
from .streams import ternary_squarefree
from .tm_squares import (
    conjugate_closure,
    is_tm_half_length,
    overlap_free_squares,
    seven_thirds_free_squares,
    squares_in_tm,
    tm_square_family,
)
from .words import F, G, H, Word, apply_morphism, tm_prefix


def _clip(value, width=72) -> str:
    s = str(value)
    return s if len(s) <= width else f"{s[:width]}...({len(s)} chars)"


@dataclass(frozen=True, order=True)
class Failure:
    check_id: str
    input: str
    expected: str
    got: str


@dataclass
class VerificationReport:
    suite: str
    checks_run: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"suite {self.suite}: {self.checks_run} checks, {len(self.failures)} failures"]
        for f in sorted(self.failures):
            out.append(f"  FAIL {f.check_id}: input={f.input} expected={f.expected} got={f.got}")
        return out


class Checker:
    def __init__(self, suite: str):
        self.report = VerificationReport(suite)

    def check(self, check_id, input, expected, got) -> bool:
        self.report.checks_run += 1
        if expected != got:
            self.report.failures.append(Failure(check_id, _clip(input), _clip(expected), _clip(got)))
            return False
        return True


# -- suites ----------------------------------------------------------------


def suite_thm1(c: Checker, limit: int, oracle: bool):
    for half in range(1, limit + 1):
        w = cubefree_square(half)
        got = (len(w), is_square(w), is_cubefree(w, oracle=oracle))
        c.check(f"thm1/half={half:05d}", half, (2 * half, True, True), got)


def suite_lemma3(c: Checker, limit: int, oracle: bool):
    for n in (2, 6):
        try:
            find_anchor_factor(n)
            got = "found"
        except NoAnchor:
            got = "NoAnchor"
        c.check(f"lemma3/reject/n={n:05d}", n, "NoAnchor", got)
    for n in range(4, limit + 1, 2):
        if n == 6:
            continue
        a = find_anchor_factor(n)
        t = tm_prefix(64 * n + 64)
        d = a.word.data
        got = (
            len(a.word),
            t[a.source_position:a.source_position + n] == a.word,
            d[:4] == b"\x01\x00\x00\x01" and d[-4:] == b"\x01\x00\x00\x01",
        )
        c.check(f"lemma3/n={n:05d}", n, (n, True, True), got)


def _valid_anchor_lengths(limit):
    return [n for n in range(4, limit + 1, 2) if n != 6]


def suite_thm6(c: Checker, limit: int, oracle: bool):
    for n in _valid_anchor_lengths(limit):
        w = odd_square(n)
        c.check(f"thm6/n={n:05d}/cubefree", w, True, is_cubefree(w, oracle=oracle))
        c.check(f"thm6/n={n:05d}/count-01010", w, 1, count_occurrences("01010", w))


def suite_thm8(c: Checker, limit: int, oracle: bool):
    for n in _valid_anchor_lengths(limit):
        w = even_square(n)
        c.check(f"thm8/n={n:05d}/cubefree", w, True, is_cubefree(w, oracle=oracle))
        c.check(f"thm8/n={n:05d}/count-00100", w, 1, count_occurrences("00100", w))
        c.check(f"thm8/n={n:05d}/count-11011", w, 2, count_occurrences("11011", w))


def _preserves(c, tag, morphism, alphabet, length, t, oracle):
    bad = []
    total = 0
    for n in range(1, length + 1):
        for u in avoiding_words(alphabet, n, t):
            total += 1
            if not is_powerfree(apply_morphism(morphism, u), t, oracle=oracle):
                bad.append(str(u))
    c.check(f"{tag}/{morphism.name}-preserves/len<={length}", f"{total} words", [], bad[:5])


def suite_prop8(c: Checker, limit: int, oracle: bool):
    for m in range(1, limit + 1):
        members = list(iter_exp_family(m))
        c.check(f"prop8/m={m:03d}/size", m, True, len(members) >= 2 ** -(-m // 2))
        c.check(f"prop8/m={m:03d}/distinct", m, len(members), len(set(members)))
        bad = [str(w) for w in members
               if not (len(w) == 12 * m and is_square(w) and is_cubefree(w, oracle=oracle))]
        c.check(f"prop8/m={m:03d}/cubefree-squares", m, [], bad[:3])
        if 12 * m <= 24:
            c.check(f"prop8/m={m:03d}/census", m, True,
                    count_cubefree_squares(12 * m) >= exp_family_size(m))
    _preserves(c, "prop8", H, 3, 9, CUBE, oracle)


def suite_thm2(c: Checker, limit: int, oracle: bool):
    g = gw_stream().prefix(limit)
    c.check(f"thm2/gw-prefix={limit}/cubefree", "gw", True, is_cubefree(g, oracle=oracle))
    w = w_stream().prefix(-(-limit // 9))
    c.check(f"thm2/w-prefix={len(w)}/cubefree", "w", True, is_cubefree(w, oracle=oracle))
    c.check("thm2/gw-head", "gw", "001101011", str(g[:9]))
    # With m=1 and m=2 blocks covered, g-images of both families are present.
    if limit >= 9 * 76:
        for m, size in ((1, 108), (2, 216)):
            want = {apply_morphism(G, s) for s in iter_exp_family(m)}
            if oracle:
                found = distinct_square_factors(g[:9 * 76], max_len=size, oracle=True)
            else:
                found = squares_of_length(g, size)
            found = {s for s in found if len(s) == size}
            c.check(f"thm2/squares-len{size}/images-present", m, True, want <= found)
            c.check(f"thm2/squares-len{size}/count>=2", m, True, len(found) >= 2)
    _preserves(c, "thm2", G, 4, 7, CUBE, oracle)


def suite_tm_squares(c: Checker, limit: int, oracle: bool):
    family = tm_square_family(limit).members
    if oracle:
        seen = distinct_square_factors(tm_prefix(32 * limit), max_len=limit, oracle=True)
    else:
        seen = squares_in_tm(limit, 32 * limit)
    c.check(f"tm-squares/pansiot-brlek/cap={limit}", limit, family.strings(), seen.strings())
    cap = min(limit, 48)
    closure = sorted(map(str, conjugate_closure(tm_square_family(cap).members)))
    got = sorted(map(str, overlap_free_squares(cap, oracle=oracle)))
    c.check(f"tm-squares/overlap-free/cap={cap}", cap, closure, got)
    got = sorted(map(str, seven_thirds_free_squares(cap, Mode.GE, oracle=oracle)))
    c.check(f"tm-squares/seven-thirds-ge/cap={cap}", cap, closure, got)
    bad = [w for w in sorted(set(family.strings()) | set(closure)) if not is_tm_half_length(len(w) // 2)]
    c.check(f"tm-squares/half-lengths/cap={limit}", limit, [], bad)


def suite_prop10(c: Checker, limit: int, oracle: bool):
    y = y_stream().prefix(limit)
    fy = fy_stream().prefix(limit)
    src = ternary_squarefree().prefix(limit)
    c.check(f"prop10/ternary-prefix={limit}/squarefree", "thue-ternary", True, is_squarefree(src, oracle=oracle))
    c.check(f"prop10/y-prefix={limit}/squarefree", "y", True, is_squarefree(y, oracle=oracle))
    c.check(f"prop10/fy-prefix={limit}/squarefree", "f(y)", True, is_squarefree(fy, oracle=oracle))
    for k in range(1, 7):
        if 2 * k <= limit:
            c.check(f"prop10/y-complexity/len={2 * k:03d}", k, True, factor_complexity(y, 2 * k) >= 2 ** k)
    _preserves(c, "prop10", F, 5, 5, SQUARE, oracle)


def _compare_detectors(c, tag, w):
    d = w.data
    c.check(f"{tag}/find_cube", w, oracles.find_cube(d), _tuple(find_cube(w)))
    c.check(f"{tag}/overlap-free", w, oracles.is_overlap_free(d), is_overlap_free(w))
    for num, den in ((7, 3), (5, 2), (3, 2)):
        for mode in Mode:
            t = ExponentThreshold(num, den, mode)
            c.check(f"{tag}/powerfree-{num}/{den}-{mode.value}", w,
                    oracles.is_powerfree(d, num, den, t.strict), is_powerfree(w, t))
    c.check(f"{tag}/distinct-squares", w,
            sorted(oracles.distinct_square_factors(d)), sorted(s.data for s in distinct_square_factors(w)))
    if d:
        e, occ = max_exponent(w)
        c.check(f"{tag}/max-exponent", w, oracles.max_exponent(d), (e, _tuple(occ)))


def _tuple(occ):
    return None if occ is None else (occ.position, occ.period, occ.length)


def suite_oracles(c: Checker, limit: int, oracle: bool):
    for n in range(limit + 1):
        for w in all_words(2, n):
            _compare_detectors(c, f"oracles/exhaustive/len={n:02d}/{w}", w)
    rng = random.Random(20080101)
    for i in range(200):
        k = rng.randint(2, 5)
        n = rng.randint(1, 8 * limit)
        w = _random_word(rng, k, n)
        _compare_detectors(c, f"oracles/random/{i:04d}", w)


def _random_word(rng, k, n):
    return Word(bytes(rng.randrange(k) for _ in range(n)), k)


SUITES = {
    "thm1": (suite_thm1, 512, "half-lengths 1..limit"),
    "lemma3": (suite_lemma3, 1024, "anchor lengths 4..limit"),
    "thm6": (suite_thm6, 512, "anchor lengths 4..limit"),
    "thm8": (suite_thm8, 512, "anchor lengths 4..limit"),
    "prop8": (suite_prop8, 8, "family sizes m = 1..limit"),
    "thm2": (suite_thm2, 100_000, "g(w) prefix length"),
    "tm-squares": (suite_tm_squares, 64, "square length cap"),
    "prop10": (suite_prop10, 100_000, "y and f(y) prefix length"),
    "oracles": (suite_oracles, 12, "exhaustive binary word length"),
}


def run_suite(name: str, limit: int | None = None, oracle: bool = False) -> VerificationReport:
    func, default, _ = SUITES[name]
    c = Checker(name)
    start = time.perf_counter()
    func(c, default if limit is None else limit, oracle)
    c.report.elapsed = time.perf_counter() - start
    c.report.failures.sort()
    return c.report

