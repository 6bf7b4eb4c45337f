"""Named codes, glue completion to Type II codes and the length-8 census."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import permutations
from math import factorial, prod

import numpy as np

from .enumerators import weight_distribution
from .gf2core import (
    Code,
    CodeError,
    DualityClass,
    EnumerationCapError,
    classify_self_duality,
    direct_sum,
    dual,
    inner,
    is_doubly_even,
    make_code,
    min_distance,
    permute_word,
    popcount,
    rref,
)
from .tetrad import E7, E8, KOCH_SIGNATURES, Signature, TetradLabel, decompose, tetrad_words


class UnknownName(CodeError):
    pass


# [I_12 | J - A] with A the adjacency matrix of the icosahedron.
GOLAY_ROWS = (
    "100000000000101110001101",
    "010000000000010110101110",
    "001000000000101011100110",
    "000100000000110101110010",
    "000010000000111010111000",
    "000001000000001101111100",
    "000000100000011111100001",
    "000000010000000111010111",
    "000000001000110011001011",
    "000000000100111001010101",
    "000000000010011100011011",
    "000000000001100000111111",
)

E7_ROWS = ("1111000", "1100110", "1010101")
E8_ROWS = ("11110000", "00111100", "00001111", "01010101")


def d_code(k: int) -> Code:
    """d_2k: doubly-even words of length 2k constant on each coordinate pair."""
    if k < 2 or 2 * k > 64:
        raise CodeError(f"d_2k needs 2 <= k <= 32, got k={k}")
    n = 2 * k
    rows = [0b1111 << (n - 4 - 2 * j) for j in range(k - 1)]
    return make_code(rows, n)


def e7_code() -> Code:
    return make_code(list(E7_ROWS), 7)


def e8_code() -> Code:
    return make_code(list(E8_ROWS), 8)


def golay_code() -> Code:
    return make_code(list(GOLAY_ROWS), 24)


def label_code(label: TetradLabel) -> Code:
    if label == E7:
        return e7_code()
    if label == E8:
        return e8_code()
    return d_code(label.length // 2)


def tetrad_sum(sig: Signature) -> Code:
    """Direct sum of the irreducible tetrad codes of ``sig``, left to right."""
    return direct_sum(*(label_code(lab) for lab in sig.labels))


# --- glue completion ------------------------------------------------------

QUOTIENT_CAP = 16


def _pad(code: Code, n: int) -> Code:
    shift = n - code.n
    return make_code([g << shift for g in code.gens], n)


def complete_to_type2(T: Code, n: int | None = None) -> Code | None:
    """Extend a doubly-even self-orthogonal ``T`` to a Type II code of
    length ``n`` without creating new weight-4 words.

    ``T`` is padded with zero coordinates on the right if shorter than ``n``.
    Glue cosets are tried in lexicographic order of their reduced
    representatives with full backtracking, so the result is deterministic.
    Returns None when no completion exists.
    """
    n = T.n if n is None else n
    if n < T.n:
        raise CodeError(f"target length {n} shorter than code length {T.n}")
    if T.n < n:
        T = _pad(T, n)
    if n % 8:
        raise CodeError(f"Type II codes need length divisible by 8, got {n}")
    if not is_doubly_even(T):
        raise CodeError("T must be doubly even and self-orthogonal")
    r = n // 2 - T.k
    if r == 0:
        return T
    if 2 * r > QUOTIENT_CAP:
        raise EnumerationCapError(
            f"quotient dimension {2 * r} exceeds glue-search cap {QUOTIENT_CAP}"
        )

    qgens, _ = rref([T.reduce(g) for g in dual(T).gens], n)
    reps = np.zeros(1, dtype=np.uint64)
    for g in qgens:
        reps = np.concatenate([reps, reps ^ np.uint64(g)])
    reps.sort()
    t_words = T.words()
    good: dict[int, bool] = {}
    for v in reps.tolist():
        coset_weights = np.bitwise_count(t_words ^ np.uint64(v))
        good[v] = popcount(v) % 4 == 0 and not bool(np.any(coset_weights == 4))
    cands = [v for v in reps.tolist() if v and good[v]]

    def search(start: int, span: list[int], basis: list[int]) -> list[int] | None:
        if len(basis) == r:
            return basis
        members = set(span)
        for idx in range(start, len(cands)):
            v = cands[idx]
            if v in members or any(inner(v, b) for b in basis):
                continue
            shifted = [v ^ s for s in span]
            if not all(good[x] for x in shifted):
                continue
            found = search(idx + 1, span + shifted, basis + [v])
            if found is not None:
                return found
        return None

    glue = search(0, [0], [])
    if glue is None:
        return None
    C = make_code(list(T.gens) + glue, n)
    if classify_self_duality(C) is not DualityClass.TYPE_II or tetrad_words(C) != tetrad_words(T):
        raise RuntimeError("glue completion produced an invalid code")
    return C


# --- names ----------------------------------------------------------------

_T_NAME = re.compile(r"^t(\d+)\((.+)\)$")
_D_NAME = re.compile(r"^d\((\d+)\)$|^d(\d+)$")

CATALOG_NAMES = (
    ["d4", "d6", "d8", "e7", "e8", "g24"]
    + ["t16(2e8)", "t16(d16)"]
    + [f"t24({s})" for s in KOCH_SIGNATURES if s.labels]
)


def _verify(ok: bool, name: str) -> None:
    if not ok:
        raise RuntimeError(f"catalog code {name} fails its contract")


def build(name: str) -> Code:
    """Build a catalog code by name and verify its contract.

    Names: ``d(k)`` or ``d<2k>``, ``e7``, ``e8``, ``g24`` and ``t<n>(<sig>)``
    for the Type II code of length n with tetrad signature sig.
    """
    name = name.strip()
    if name == "e7":
        C = e7_code()
        _verify(C.k == 3 and weight_distribution(C).A == (1, 0, 0, 0, 7, 0, 0, 0), name)
        return C
    if name == "e8":
        C = e8_code()
        _verify(classify_self_duality(C) is DualityClass.TYPE_II and min_distance(C) == 4, name)
        return C
    if name == "g24":
        C = golay_code()
        _verify(C.k == 12 and classify_self_duality(C) is DualityClass.TYPE_II, name)
        _verify(min_distance(C) == 8 and not tetrad_words(C), name)
        return C
    m = _D_NAME.match(name)
    if m:
        if m.group(1):
            k = int(m.group(1))
        else:
            size = int(m.group(2))
            if size % 2:
                raise UnknownName(f"unknown catalog name {name!r}")
            k = size // 2
        C = d_code(k)
        _verify(C.k == k - 1 and len(tetrad_words(C)) == k * (k - 1) // 2, name)
        return C
    m = _T_NAME.match(name)
    if m:
        n = int(m.group(1))
        try:
            sig = Signature.parse(m.group(2))
        except ValueError as exc:
            raise UnknownName(str(exc)) from None
        return build_type2(sig, n)
    raise UnknownName(f"unknown catalog name {name!r}")


def build_type2(sig: Signature, n: int = 24) -> Code:
    """Type II code of length n whose tetrad system is ``sig``."""
    if not sig.labels:
        if n != 24:
            raise UnknownName(f"no empty tetrad system is built at length {n}")
        return build("g24")
    if sig.length != n:
        raise UnknownName(f"signature {sig} has length {sig.length}, not {n}")
    C = complete_to_type2(tetrad_sum(sig), n)
    if C is None:
        raise UnknownName(f"no Type II code of length {n} with tetrad system {sig}")
    if decompose(C).signature != sig:
        raise RuntimeError(f"completion of {sig} changed the tetrad system")
    return C


# --- census ---------------------------------------------------------------

CENSUS_CAP = 8
PERM_CAP = 10


def _perm_cap(n: int) -> None:
    if n > PERM_CAP:
        raise EnumerationCapError(f"permutation search needs n <= {PERM_CAP}, got {n}")


def _maps_into(perm, src: Code, dst: Code) -> bool:
    n = src.n
    return all(dst.reduce(permute_word(g, n, perm)) == 0 for g in src.gens)


def aut_order(code: Code) -> int:
    """Size of the coordinate-permutation automorphism group (brute force)."""
    _perm_cap(code.n)
    return sum(1 for p in permutations(range(code.n)) if _maps_into(p, code, code))


def equivalent(c1: Code, c2: Code) -> bool:
    """Whether some coordinate permutation maps c1 onto c2."""
    if c1.n != c2.n:
        return False
    _perm_cap(c1.n)
    if c1.k != c2.k or weight_distribution(c1) != weight_distribution(c2):
        return False
    return any(_maps_into(p, c1, c2) for p in permutations(range(c1.n)))


@dataclass(frozen=True)
class CensusClass:
    representative: Code
    size: int
    aut_order: int


@dataclass(frozen=True)
class CensusReport:
    n: int
    codes: tuple[Code, ...]
    classes: tuple[CensusClass, ...]

    @property
    def count(self) -> int:
        return len(self.codes)

    @property
    def aut_orders(self) -> tuple[int, ...]:
        return tuple(c.aut_order for c in self.classes)

    def mass(self) -> int:
        """sum of n!/|Aut| over classes; equals ``count`` for a full census."""
        return sum(factorial(self.n) // c.aut_order for c in self.classes)


def enumerate_type2(n: int) -> CensusReport:
    """All Type II codes of length n <= 8, by exhaustive search."""
    if n > CENSUS_CAP:
        raise EnumerationCapError(f"census needs n <= {CENSUS_CAP}, got {n}")
    if n < 0:
        raise CodeError("negative length")
    if n == 0:
        empty = Code(0, (), ())
        return CensusReport(0, (empty,), (CensusClass(empty, 1, 1),))

    de_words = [w for w in range(1, 1 << n) if popcount(w) % 4 == 0]
    level = {Code(n, (), ())}
    for _ in range(n // 2):
        nxt = set()
        for C in level:
            for w in de_words:
                if C.reduce(w) and all(inner(w, g) == 0 for g in C.gens):
                    nxt.add(make_code(list(C.gens) + [w], n))
        level = nxt
    codes = sorted(
        (C for C in level if classify_self_duality(C) is DualityClass.TYPE_II),
        key=lambda c: c.gens,
    )

    reps: list[Code] = []
    sizes: list[int] = []
    for C in codes:
        for i, rep in enumerate(reps):
            if equivalent(rep, C):
                sizes[i] += 1
                break
        else:
            reps.append(C)
            sizes.append(1)
    classes = tuple(CensusClass(r, s, aut_order(r)) for r, s in zip(reps, sizes))
    return CensusReport(n, tuple(codes), classes)


def count_type2_formula(n: int) -> int:
    """Number of Type II codes of length n: prod_{i=0}^{n/2-2} (2^i + 1)."""
    if n % 8 or not 0 <= n <= 40:
        raise CodeError(f"formula needs n divisible by 8 with 0 <= n <= 40, got {n}")
    return prod(2 ** i + 1 for i in range(n // 2 - 1))
