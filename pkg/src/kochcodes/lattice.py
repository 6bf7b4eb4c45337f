"""Construction A root counts.

Vectors of L_C are scaled by sqrt(2) so everything stays integral: a lattice
vector is an integer vector v with (v mod 2) in C, and a root (norm 2 in
L_C) is such a v with |v|^2 = 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import isqrt
from typing import Iterator

import numpy as np

from .gf2core import Code, CodeError, is_doubly_even

MAX_ROOT_LENGTH = 24


@dataclass(frozen=True)
class RootCountReport:
    n: int
    count_enum: int
    count_formula: int
    axis_roots: int  # the 2n vectors +-2 e_i
    tetrad_roots: int  # 16 sign patterns per weight-4 codeword

    @property
    def agree(self) -> bool:
        return self.count_enum == self.count_formula


def _square_partitions(norm: int, largest: int) -> Iterator[list[int]]:
    """Non-increasing positive ints a_1 >= a_2 >= ... with sum a_i^2 == norm."""
    if norm == 0:
        yield []
        return
    for a in range(min(largest, isqrt(norm)), 0, -1):
        for rest in _square_partitions(norm - a * a, a):
            yield [a] + rest


def integer_vectors(n: int, norm: int) -> Iterator[tuple[int, ...]]:
    """All v in Z^n with sum(v_i^2) == norm."""
    for parts in _square_partitions(norm, norm):
        if len(parts) > n:
            continue
        for positions in combinations(range(n), len(parts)):
            # distinct placements of the multiset of absolute values
            for values in set(permutations(parts)):
                for signs in product((1, -1), repeat=len(parts)):
                    v = [0] * n
                    for i, a, s in zip(positions, values, signs):
                        v[i] = s * a
                    yield tuple(v)


def _parity_word(v: tuple[int, ...]) -> int:
    w = 0
    for x in v:
        w = (w << 1) | (x & 1)
    return w


def root_count(code: Code) -> RootCountReport:
    """Count norm-2 vectors of L_C by enumeration and by 2n + 16|C_4|."""
    n = code.n
    if not is_doubly_even(code):
        raise CodeError("root count needs a doubly-even code (L_C must be even)")
    if n > MAX_ROOT_LENGTH:
        raise CodeError(f"root enumeration needs n <= {MAX_ROOT_LENGTH}, got {n}")

    membership: dict[int, bool] = {}
    axis = tetrad = 0
    for v in integer_vectors(n, 4):
        p = _parity_word(v)
        if p not in membership:
            membership[p] = code.reduce(p) == 0
        if membership[p]:
            if p:
                tetrad += 1
            else:
                axis += 1

    # formula side: count weight-4 codewords directly from the code
    words = code.words()
    c4 = int(np.count_nonzero(np.bitwise_count(words) == 4))
    return RootCountReport(n, axis + tetrad, 2 * n + 16 * c4, axis, tetrad)
