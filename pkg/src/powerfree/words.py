"""Finite words over small alphabets, morphisms, and the Thue-Morse word.

A word stores one symbol per byte; symbol codes run from 0 to 4, so the
largest alphabet supported has five letters.  Words print as ASCII digit
strings, which is also their serialized form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .errors import DomainError

MAX_ALPHABET = 5

_DIGITS = b"01234"
_FROM_ASCII = bytes.maketrans(_DIGITS, bytes(range(MAX_ALPHABET)))
_TO_ASCII = bytes.maketrans(bytes(range(MAX_ALPHABET)), _DIGITS)
_COMPLEMENT = bytes.maketrans(b"\x00\x01", b"\x01\x00")

WordLike = Union["Word", str, bytes, Iterable[int]]


class Word:
    """An immutable finite word.

    ``symbols`` may be a digit string (``"0110"``), raw symbol bytes, or any
    iterable of integer codes.  When ``alphabet_size`` is omitted it is
    inferred as one more than the largest symbol, but never below 2.

    Equality, hashing and ordering look at the symbols only; the alphabet
    size is a declaration carried along for validation and printing.
    """

    __slots__ = ("_data", "alphabet_size")

    def __init__(self, symbols: WordLike = b"", alphabet_size: int | None = None):
        if isinstance(symbols, Word):
            data = symbols._data
        elif isinstance(symbols, str):
            raw = symbols.encode("ascii", "replace")
            if raw.translate(None, _DIGITS):
                raise DomainError(f"not a digit word: {symbols!r}")
            data = raw.translate(_FROM_ASCII)
        elif isinstance(symbols, (bytes, bytearray, memoryview)):
            data = bytes(symbols)
        else:
            try:
                data = bytes(symbols)
            except (TypeError, ValueError) as exc:
                raise DomainError(f"bad symbol sequence: {exc}") from None
        top = max(data) + 1 if data else 0
        if alphabet_size is None:
            alphabet_size = max(2, top)
        if not 2 <= alphabet_size <= MAX_ALPHABET:
            raise DomainError(f"alphabet size {alphabet_size} not in 2..{MAX_ALPHABET}")
        if top > alphabet_size:
            raise DomainError(f"symbol {top - 1} outside alphabet of size {alphabet_size}")
        self._data = data
        self.alphabet_size = alphabet_size

    @classmethod
    def _raw(cls, data: bytes, alphabet_size: int) -> Word:
        # Trusted constructor: caller guarantees data fits the alphabet.
        w = object.__new__(cls)
        w._data = data
        w.alphabet_size = alphabet_size
        return w

    @property
    def data(self) -> bytes:
        """The symbols as raw bytes (one code per byte)."""
        return self._data

    def __len__(self):
        return len(self._data)

    def __iter__(self):
        return iter(self._data)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word._raw(self._data[index], self.alphabet_size)
        return self._data[index]

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        k = max(self.alphabet_size, other.alphabet_size)
        return Word._raw(self._data + other._data, k)

    def __mul__(self, times: int):
        if not isinstance(times, int):
            return NotImplemented
        return Word._raw(self._data * max(times, 0), self.alphabet_size)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Word):
            return self._data == other._data
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Word):
            return self._data < other._data
        return NotImplemented

    def __hash__(self):
        return hash(self._data)

    def __str__(self):
        return self._data.translate(_TO_ASCII).decode("ascii")

    def __repr__(self):
        return f"Word({str(self)!r}, alphabet_size={self.alphabet_size})"

    def with_alphabet(self, alphabet_size: int) -> Word:
        return Word(self._data, alphabet_size)

    def find(self, pattern: Word, start: int = 0) -> int:
        return self._data.find(pattern._data, start)


def as_word(w: WordLike, alphabet_size: int | None = None) -> Word:
    """Coerce digit strings and symbol sequences to :class:`Word`."""
    if isinstance(w, Word) and alphabet_size is None:
        return w
    return Word(w, alphabet_size)


def complement(w: Word) -> Word:
    """Exchange 0 and 1 in a binary word."""
    if w.alphabet_size != 2:
        raise DomainError("complement is defined on binary words only")
    return Word._raw(w.data.translate(_COMPLEMENT), 2)


@dataclass(frozen=True)
class Morphism:
    """A morphism given by its letter images.

    ``images[a]`` is the image of letter ``a``; the domain alphabet is
    ``range(len(images))``.
    """

    images: tuple[Word, ...]
    codomain_size: int
    name: str = ""

    def __post_init__(self):
        if not 2 <= len(self.images) <= MAX_ALPHABET:
            raise DomainError("domain alphabet must have 2..5 letters")
        for img in self.images:
            if not len(img):
                raise DomainError("morphism images must be non-empty")
            if img.data and max(img.data) >= self.codomain_size:
                raise DomainError(f"image {img} leaves the codomain alphabet")
        if len(set(self.images)) != len(self.images):
            raise DomainError("letter images must be pairwise distinct")

    @classmethod
    def from_strings(cls, images: Sequence[str], codomain_size: int | None = None, name=""):
        words = [Word(s) for s in images]
        if codomain_size is None:
            codomain_size = max(w.alphabet_size for w in words)
        return cls(tuple(Word(w.data, codomain_size) for w in words), codomain_size, name)

    @property
    def domain_size(self) -> int:
        return len(self.images)

    @property
    def uniform_length(self) -> int | None:
        lengths = {len(img) for img in self.images}
        return lengths.pop() if len(lengths) == 1 else None

    @property
    def is_endomorphism(self) -> bool:
        return self.domain_size == self.codomain_size

    def __call__(self, w: Word) -> Word:
        return apply_morphism(self, w)

    def __str__(self):
        label = self.name or "morphism"
        return label + "{" + ", ".join(f"{a}->{img}" for a, img in enumerate(self.images)) + "}"


def apply_morphism(m: Morphism, w: Word) -> Word:
    data = w.data
    if data and max(data) >= m.domain_size:
        raise DomainError(f"symbol {max(data)} outside the domain of {m}")
    table = [img.data for img in m.images]
    return Word._raw(b"".join([table[c] for c in data]), m.codomain_size)


def iterate_morphism(m: Morphism, seed: Word, k: int) -> Word:
    """Return the k-th iterate of ``m`` applied to ``seed``."""
    if not m.is_endomorphism:
        raise DomainError(f"{m} is not an endomorphism")
    if k < 0:
        raise DomainError("iteration count must be non-negative")
    w = Word(seed.data, m.codomain_size)
    for _ in range(k):
        w = apply_morphism(m, w)
    return w


def relabel(w: Word, mapping: Mapping[int, int], alphabet_size: int | None = None) -> Word:
    """Rename letters pointwise through an injective table."""
    if len(set(mapping.values())) != len(mapping):
        raise DomainError("relabelling map must be injective")
    missing = set(w.data) - set(mapping)
    if missing:
        raise DomainError(f"relabelling map undefined on {sorted(missing)}")
    if alphabet_size is None:
        alphabet_size = max(2, max(mapping.values()) + 1)
    src = bytes(mapping)
    dst = bytes(mapping[a] for a in mapping)
    return Word(w.data.translate(bytes.maketrans(src, dst)), alphabet_size)


MU = Morphism.from_strings(["01", "10"], 2, name="mu")
H = Morphism.from_strings(["001011", "001101", "011001"], 2, name="h")
G = Morphism.from_strings(["001001101", "001010011", "001101011", "011001011"], 2, name="g")
F = Morphism.from_strings(
    [
        "010201202101210212",
        "010201202102010212",
        "010201202120121012",
        "010201210201021012",
        "010201210212021012",
    ],
    3,
    name="f",
)


def tm_symbol_at(i: int) -> int:
    """Symbol of the Thue-Morse word at index ``i`` (popcount parity)."""
    if i < 0:
        raise DomainError("index must be non-negative")
    return i.bit_count() & 1


def tm_prefix(n: int) -> Word:
    """The length-``n`` prefix of the Thue-Morse word."""
    if n < 0:
        raise DomainError("length must be non-negative")
    data = b"\x00"
    while len(data) < n:
        data += data.translate(_COMPLEMENT)
    return Word._raw(data[:n], 2)
