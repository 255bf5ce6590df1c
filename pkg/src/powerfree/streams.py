"""Deterministic, pull-based infinite words.

A stream is built from a block factory: a zero-argument callable that
returns a fresh iterator of non-empty ``bytes`` chunks whose concatenation
is the infinite word.  Every cursor gets its own iterator, so cursors are
independent and never share position.  ``prefix`` and ``symbol_at`` go
through a memoized prefix guarded by a lock; some kinds override
``symbol_at`` with a closed form.
"""

from __future__ import annotations

import threading
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DomainError
from .words import Morphism, Word

BLOCK = 4096

BlockFactory = Callable[[], Iterator[bytes]]


class InfiniteWordStream:
    def __init__(
        self,
        kind: str,
        alphabet_size: int,
        blocks: BlockFactory,
        symbol_at: Callable[[int], int] | None = None,
        **params,
    ):
        self.kind = kind
        self.alphabet_size = alphabet_size
        self.params = params
        self._blocks = blocks
        self._direct = symbol_at
        self._buf = bytearray()
        self._it: Iterator[bytes] | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        return f"<InfiniteWordStream {self.kind}>"

    def _ensure(self, n: int) -> None:
        if len(self._buf) >= n:
            return
        with self._lock:
            if self._it is None:
                self._it = self._blocks()
            while len(self._buf) < n:
                self._buf += next(self._it)

    def symbol_at(self, i: int) -> int:
        if i < 0:
            raise DomainError("index must be non-negative")
        if self._direct is not None:
            return self._direct(i)
        self._ensure(i + 1)
        return self._buf[i]

    def prefix(self, n: int) -> Word:
        if n < 0:
            raise DomainError("length must be non-negative")
        self._ensure(n)
        return Word._raw(bytes(self._buf[:n]), self.alphabet_size)

    def cursor(self) -> StreamCursor:
        return StreamCursor(self)

    def iter_blocks(self) -> Iterator[bytes]:
        return self._blocks()


class StreamCursor:
    """Sequential reader over a stream with its own block iterator."""

    def __init__(self, stream: InfiniteWordStream):
        self.stream = stream
        self.position = 0
        self._it = stream.iter_blocks()
        self._pending = b""

    def next_block(self, size: int) -> Word:
        if size < 0:
            raise DomainError("block size must be non-negative")
        parts = [self._pending]
        have = len(self._pending)
        while have < size:
            chunk = next(self._it)
            parts.append(chunk)
            have += len(chunk)
        joined = b"".join(parts)
        self._pending = joined[size:]
        self.position += size
        return Word._raw(joined[:size], self.stream.alphabet_size)


def _take(blocks: Iterator[bytes], size: int, pending: bytearray) -> bytes:
    while len(pending) < size:
        pending += next(blocks)
    out = bytes(pending[:size])
    del pending[:size]
    return out


# -- Thue-Morse ------------------------------------------------------------

_FLIP = bytes.maketrans(b"\x00\x01", b"\x01\x00")


def _tm_base_block() -> bytes:
    data = b"\x00"
    while len(data) < BLOCK:
        data += data.translate(_FLIP)
    return data


_TM_BLOCK = _tm_base_block()
_TM_BLOCK_FLIPPED = _TM_BLOCK.translate(_FLIP)


def _tm_blocks() -> Iterator[bytes]:
    # BLOCK is a power of two, so block k is the base block or its complement.
    k = 0
    while True:
        yield _TM_BLOCK_FLIPPED if k.bit_count() & 1 else _TM_BLOCK
        k += 1


def thue_morse() -> InfiniteWordStream:
    return InfiniteWordStream("thue_morse", 2, _tm_blocks, lambda i: i.bit_count() & 1)


# -- derived streams -------------------------------------------------------


def relabelled(base: InfiniteWordStream, mapping: Mapping[int, int]) -> InfiniteWordStream:
    if len(set(mapping.values())) != len(mapping):
        raise DomainError("relabelling map must be injective")
    if set(range(base.alphabet_size)) - set(mapping):
        raise DomainError("relabelling map must cover the stream's alphabet")
    table = bytes.maketrans(bytes(mapping), bytes(mapping[a] for a in mapping))
    k = max(2, max(mapping.values()) + 1)

    def blocks():
        for chunk in base.iter_blocks():
            yield chunk.translate(table)

    return InfiniteWordStream(
        "relabelled", k, blocks, lambda i: mapping[base.symbol_at(i)], base=base, mapping=dict(mapping)
    )


def morphic_image(base: InfiniteWordStream, m: Morphism) -> InfiniteWordStream:
    if base.alphabet_size > m.domain_size:
        raise DomainError(f"{m} is not defined on the whole stream alphabet")
    table = [img.data for img in m.images]

    def blocks():
        for chunk in base.iter_blocks():
            yield b"".join([table[c] for c in chunk])

    step = m.uniform_length

    def direct(i):
        return table[base.symbol_at(i // step)][i % step]

    return InfiniteWordStream(
        "morphic_image", m.codomain_size, blocks, direct if step else None, base=base, morphism=m
    )


def shuffled(even: InfiniteWordStream, odd: InfiniteWordStream) -> InfiniteWordStream:
    """Perfect shuffle: ``even[0] odd[0] even[1] odd[1] ...``."""

    def blocks():
        a, b = even.iter_blocks(), odd.iter_blocks()
        pa, pb = bytearray(), bytearray()
        while True:
            out = bytearray(2 * BLOCK)
            out[0::2] = _take(a, BLOCK, pa)
            out[1::2] = _take(b, BLOCK, pb)
            yield bytes(out)

    def direct(i):
        return odd.symbol_at(i >> 1) if i & 1 else even.symbol_at(i >> 1)

    k = max(even.alphabet_size, odd.alphabet_size)
    return InfiniteWordStream("shuffled_y", k, blocks, direct, even=even, odd=odd)


def interleaved(
    separators: InfiniteWordStream, supply: Callable[[], Iterable[Word]], alphabet_size: int
) -> InfiniteWordStream:
    """The word ``x1 S1 x2 S2 ...`` for separator letters x and blocks S."""

    def blocks():
        seps = separators.iter_blocks()
        pending = bytearray()
        for word in supply():
            yield _take(seps, 1, pending) + word.data

    return InfiniteWordStream("interleaved_w", alphabet_size, blocks, separators=separators)


# -- full-complexity and squarefree sources --------------------------------


def _champernowne_blocks() -> Iterator[bytes]:
    n = 0
    while True:
        parts = []
        size = 0
        while size < BLOCK:
            bits = format(n, "b").encode("ascii")
            parts.append(bits)
            size += len(bits)
            n += 1
        yield b"".join(parts).translate(bytes.maketrans(b"01", b"\x00\x01"))


def champernowne() -> InfiniteWordStream:
    """Binary integers 0, 1, 10, 11, 100, ... written one after another."""
    return InfiniteWordStream("champernowne", 2, _champernowne_blocks)


def _ternary_blocks() -> Iterator[bytes]:
    # Count the 1s between consecutive 0s of the Thue-Morse word.
    run = None
    for chunk in _tm_blocks():
        parts = chunk.split(b"\x00")
        out = bytearray()
        for j, part in enumerate(parts):
            if j == 0:
                if run is not None:
                    run += len(part)
                continue
            if run is not None:
                out.append(run)
            run = len(part)
        if out:
            yield bytes(out)


def ternary_squarefree() -> InfiniteWordStream:
    return InfiniteWordStream("ternary_squarefree", 3, _ternary_blocks)
