"""Binary linear codes over GF(2) using int bitsets.

A word of length ``n`` is stored as a Python int whose most significant bit
(bit ``n - 1``) is coordinate 1.  With that convention ``int(s, 2)`` parses a
row string directly and integer order coincides with lexicographic order of
the row strings.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_LENGTH = 64
ENUM_CAP = 24  # max dimension for full codeword enumeration


class CodeError(ValueError):
    """Invalid code input (bad length, mismatched rows, malformed text)."""


class EnumerationCapError(CodeError):
    """Dimension too large for brute-force codeword enumeration."""


class UndefinedDistance(CodeError):
    """Minimum distance requested for the zero code."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bit(word: int, n: int, i: int) -> int:
    """Coordinate ``i`` (0-based, left to right) of ``word``."""
    return (word >> (n - 1 - i)) & 1


def support(word: int, n: int) -> tuple[int, ...]:
    """0-based coordinates where ``word`` is 1."""
    return tuple(i for i in range(n) if (word >> (n - 1 - i)) & 1)


def from_support(coords: Iterable[int], n: int) -> int:
    w = 0
    for i in coords:
        w |= 1 << (n - 1 - i)
    return w


def word_str(word: int, n: int) -> str:
    return format(word, "b").zfill(n) if n else ""


@dataclass(frozen=True)
class Word:
    """An element of F_2^n."""

    n: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_LENGTH:
            raise CodeError(f"length {self.n} outside 0..{MAX_LENGTH}")
        if self.bits < 0 or self.bits >> self.n:
            raise CodeError(f"bits set beyond length {self.n}")

    @classmethod
    def parse(cls, s: str) -> "Word":
        s = s.strip()
        if s and set(s) - {"0", "1"}:
            raise CodeError(f"not a binary string: {s!r}")
        return cls(len(s), int(s, 2) if s else 0)

    @property
    def weight(self) -> int:
        return popcount(self.bits)

    def __getitem__(self, i: int) -> int:
        return bit(self.bits, self.n, i)

    def support(self) -> tuple[int, ...]:
        return support(self.bits, self.n)

    def __str__(self) -> str:
        return word_str(self.bits, self.n)


class DualityClass(enum.Enum):
    NOT_SELF_ORTHOGONAL = "NotSelfOrthogonal"
    SELF_ORTHOGONAL = "SelfOrthogonal"
    TYPE_I = "TypeI"
    TYPE_II = "TypeII"

    def __str__(self) -> str:
        return self.value


def rref(rows: Iterable[int], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced row echelon form of ``rows``.

    Returns ``(gens, pivots)``: independent rows sorted by pivot column
    (0-based, leftmost first), each pivot column cleared in every other row.
    """
    basis: dict[int, int] = {}  # pivot column -> row
    for r in rows:
        for p, b in basis.items():
            if bit(r, n, p):
                r ^= b
        if not r:
            continue
        p = n - r.bit_length()
        for q in basis:
            if bit(basis[q], n, p):
                basis[q] ^= r
        basis[p] = r
    pivots = tuple(sorted(basis))
    return tuple(basis[p] for p in pivots), pivots


@dataclass(frozen=True)
class Code:
    """A binary linear code in canonical RREF generator form.

    Two codes are equal as sets exactly when their ``gens`` agree, so the
    dataclass equality and hash are set equality.
    """

    n: int
    gens: tuple[int, ...]
    pivots: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.gens)

    @property
    def size(self) -> int:
        return 1 << len(self.gens)

    def __contains__(self, word: int) -> bool:
        return self.reduce(word) == 0

    def reduce(self, word: int) -> int:
        """Reduce ``word`` modulo the code (clears every pivot column)."""
        n = self.n
        for g, p in zip(self.gens, self.pivots):
            if (word >> (n - 1 - p)) & 1:
                word ^= g
        return word

    def rows(self) -> list[str]:
        return [word_str(g, self.n) for g in self.gens]

    def words(self) -> np.ndarray:
        """All 2^k codewords as a uint64 array (generator-subset order)."""
        if self.k > ENUM_CAP:
            raise EnumerationCapError(f"k={self.k} exceeds enumeration cap {ENUM_CAP}")
        arr = np.zeros(1, dtype=np.uint64)
        for g in self.gens:
            arr = np.concatenate([arr, arr ^ np.uint64(g)])
        return arr

    def __iter__(self) -> Iterator[int]:
        return (int(w) for w in self.words())

    def __repr__(self) -> str:
        return f"Code(n={self.n}, k={self.k}, rows={self.rows()})"


def make_code(rows: Sequence[int | str | Word], n: int) -> Code:
    """Canonical code spanned by ``rows`` (ints, bit strings or Words)."""
    if not 1 <= n <= MAX_LENGTH:
        raise CodeError(f"length {n} outside 1..{MAX_LENGTH}")
    ints = []
    for r in rows:
        if isinstance(r, str):
            w = Word.parse(r)
            if w.n != n:
                raise CodeError(f"row {r!r} has length {w.n}, expected {n}")
            ints.append(w.bits)
        elif isinstance(r, Word):
            if r.n != n:
                raise CodeError(f"row has length {r.n}, expected {n}")
            ints.append(r.bits)
        else:
            r = int(r)
            if r < 0 or r >> n:
                raise CodeError(f"row {r} does not fit length {n}")
            ints.append(r)
    gens, pivots = rref(ints, n)
    return Code(n, gens, pivots)


def zero_code(n: int) -> Code:
    return Code(n, (), ())


def full_space(n: int) -> Code:
    return make_code([1 << (n - 1 - i) for i in range(n)], n)


def direct_sum(*codes: Code) -> Code:
    """Block-diagonal direct sum, coordinates assigned left to right."""
    n = sum(c.n for c in codes)
    rows = []
    offset = n
    for c in codes:
        offset -= c.n
        rows.extend(g << offset for g in c.gens)
    return make_code(rows, n)


def permute(code: Code, perm: Sequence[int]) -> Code:
    """Image of ``code`` under the coordinate map i -> perm[i]."""
    return make_code([permute_word(g, code.n, perm) for g in code.gens], code.n)


def permute_word(word: int, n: int, perm: Sequence[int]) -> int:
    out = 0
    for i in range(n):
        if (word >> (n - 1 - i)) & 1:
            out |= 1 << (n - 1 - perm[i])
    return out


def inner(x: int, y: int) -> int:
    return popcount(x & y) & 1


def dual(code: Code) -> Code:
    """The dual code under the standard pairing."""
    n = code.n
    pivot_set = set(code.pivots)
    rows = []
    for f in range(n):
        if f in pivot_set:
            continue
        v = 1 << (n - 1 - f)
        for g, p in zip(code.gens, code.pivots):
            if bit(g, n, f):
                v |= 1 << (n - 1 - p)
        rows.append(v)
    gens, pivots = rref(rows, n)
    return Code(n, gens, pivots)


def is_self_orthogonal(code: Code) -> bool:
    gs = code.gens
    return all(inner(a, b) == 0 for i, a in enumerate(gs) for b in gs[i:])


def is_doubly_even(code: Code) -> bool:
    # wt(x+y) = wt(x) + wt(y) - 2|x & y|, so doubly even forces self-orthogonality
    return is_self_orthogonal(code) and all(popcount(g) % 4 == 0 for g in code.gens)


def classify_self_duality(code: Code) -> DualityClass:
    if not is_self_orthogonal(code):
        return DualityClass.NOT_SELF_ORTHOGONAL
    if 2 * code.k != code.n:
        return DualityClass.SELF_ORTHOGONAL
    if all(popcount(g) % 4 == 0 for g in code.gens):
        return DualityClass.TYPE_II
    return DualityClass.TYPE_I


def min_distance(code: Code) -> int:
    if code.k == 0:
        raise UndefinedDistance("minimum distance undefined for the zero code")
    return int(np.bitwise_count(code.words()[1:]).min())


def is_extremal(code: Code) -> bool:
    """Whether a Type II code meets the bound 4*floor(n/24) + 4."""
    if classify_self_duality(code) is not DualityClass.TYPE_II:
        raise CodeError("extremality is defined for Type II codes only")
    return min_distance(code) == 4 * (code.n // 24) + 4


# --- generator-matrix text format -----------------------------------------

def parse_matrix(text: str) -> Code:
    """Parse the line-oriented generator-matrix format.

    Lines starting with '#' and blank lines are skipped; every other line is
    a row over {0,1}, all of one length.
    """
    rows: list[int] = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise CodeError(f"line {lineno}: expected only 0/1 characters: {raw!r}")
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise CodeError(f"line {lineno}: row length {len(line)} differs from {n}")
        rows.append(int(line, 2))
    if n is None:
        raise CodeError("no generator rows found")
    try:
        return make_code(rows, n)
    except CodeError as exc:
        raise CodeError(f"line 1: {exc}") from None


def format_matrix(code: Code, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += code.rows()
    return "\n".join(lines) + "\n"
