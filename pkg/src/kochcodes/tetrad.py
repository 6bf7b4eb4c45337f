"""Tetrad systems of doubly-even codes and their irreducible components.

A tetrad is a codeword of weight 4.  The tetrads of a doubly-even code span
a direct sum of irreducible tetrad codes d_2k (k >= 2), e7 and e8; this
module recovers that decomposition, checks the equal-tetrad-number
condition for Type II codes of length 24 and enumerates the tetrad systems
that condition allows.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .gf2core import (
    Code,
    CodeError,
    DualityClass,
    Word,
    bit,
    classify_self_duality,
    make_code,
    support,
)


class PreconditionError(CodeError):
    """Input code does not satisfy an operation's precondition."""


class TetradClassificationError(RuntimeError):
    """A connected tetrad component matched no irreducible tetrad code."""


@dataclass(frozen=True, order=False)
class TetradLabel:
    family: str  # "d" or "e"
    length: int

    def __post_init__(self):
        ok = (self.family == "d" and self.length >= 4 and self.length % 2 == 0) or (
            self.family == "e" and self.length in (7, 8)
        )
        if not ok:
            raise ValueError(f"no irreducible tetrad code {self.family}{self.length}")

    @classmethod
    def D(cls, k: int) -> "TetradLabel":
        return cls("d", 2 * k)

    @property
    def dim(self) -> int:
        if self.family == "d":
            return self.length // 2 - 1
        return self.length - 4  # e7: 3, e8: 4

    @property
    def t4(self) -> int:
        if self.family == "d":
            k = self.length // 2
            return k * (k - 1) // 2
        return {7: 7, 8: 14}[self.length]

    @property
    def eta(self) -> Fraction:
        return Fraction(self.t4, self.length)

    def sort_key(self) -> tuple[int, int]:
        return (0 if self.family == "e" else 1, self.length)

    def __str__(self) -> str:
        return f"{self.family}{self.length}"


E7 = TetradLabel("e", 7)
E8 = TetradLabel("e", 8)

_TERM = re.compile(r"^(\d*)([de])(\d+)$")


@dataclass(frozen=True)
class Signature:
    """Multiset of irreducible tetrad-code labels, kept sorted."""

    labels: tuple[TetradLabel, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "labels", tuple(sorted(self.labels, key=TetradLabel.sort_key))
        )

    @classmethod
    def parse(cls, text: str) -> "Signature":
        text = text.strip()
        if text == "empty":
            return cls(())
        labels = []
        for term in text.split("+"):
            m = _TERM.match(term.strip())
            if not m:
                raise ValueError(f"bad signature term {term!r}")
            mult = int(m.group(1)) if m.group(1) else 1
            if mult < 1:
                raise ValueError(f"bad multiplicity in {term!r}")
            labels += [TetradLabel(m.group(2), int(m.group(3)))] * mult
        return cls(tuple(labels))

    @property
    def length(self) -> int:
        return sum(lab.length for lab in self.labels)

    def __str__(self) -> str:
        if not self.labels:
            return "empty"
        counts = Counter(self.labels)
        terms = []
        for lab in sorted(counts, key=TetradLabel.sort_key):
            c = counts[lab]
            terms.append(f"{c if c > 1 else ''}{lab}")
        return "+".join(terms)


KOCH_SIGNATURES = tuple(
    Signature.parse(s)
    for s in ("empty", "6d4", "4d6", "3d8", "2d12", "d24", "2e7+d10", "3e8", "e8+d16")
)


def tetrad_words(code: Code) -> list[int]:
    words = code.words()
    return sorted(int(w) for w in words[np.bitwise_count(words) == 4])


def tetrads(code: Code) -> list[Word]:
    """All weight-4 codewords in lexicographic order."""
    return [Word(code.n, w) for w in tetrad_words(code)]


def tetrad_subcode(code: Code) -> Code:
    return make_code(tetrad_words(code), code.n)


@dataclass(frozen=True)
class TetradComponent:
    support: tuple[int, ...]  # 1-based coordinates
    label: TetradLabel
    m: int
    dim: int
    t4: int
    eta: Fraction


@dataclass(frozen=True)
class TetradDecomposition:
    n: int
    components: tuple[TetradComponent, ...]
    uncovered: tuple[int, ...]  # 1-based coordinates
    total_t4: int

    @property
    def signature(self) -> Signature:
        return Signature(tuple(c.label for c in self.components))


def tetrad_number(comp: TetradComponent) -> Fraction:
    return Fraction(comp.t4, comp.m)


def _restrict(word: int, n: int, coords: tuple[int, ...]) -> int:
    m = len(coords)
    out = 0
    for j, i in enumerate(coords):
        if bit(word, n, i):
            out |= 1 << (m - 1 - j)
    return out


def _paired_columns(code: Code) -> bool:
    """Columns split into pairs of identical columns (d4 is all one column)."""
    if code.n == 4:
        return code.gens == (0b1111,)
    cols = Counter(
        tuple(bit(g, code.n, i) for g in code.gens) for i in range(code.n)
    )
    return all(c == 2 for c in cols.values())


def classify_component(sub: Code) -> TetradLabel:
    """Label of a support-connected code spanned by its tetrads."""
    m, dim = sub.n, sub.k
    if (m, dim) == (7, 3):
        label = E7
    elif (m, dim) == (8, 4):
        label = E8
    elif m % 2 == 0 and m >= 4 and dim == m // 2 - 1:
        label = TetradLabel.D(m // 2)
    else:
        raise TetradClassificationError(f"no tetrad code with length {m}, dimension {dim}")

    tw = tetrad_words(sub)
    if len(tw) != label.t4:
        raise TetradClassificationError(
            f"{label}: expected {label.t4} tetrads, found {len(tw)}"
        )
    coverage = 4 * label.eta
    for i in range(m):
        hits = sum(bit(w, m, i) for w in tw)
        if hits != coverage:
            raise TetradClassificationError(
                f"{label}: coordinate {i + 1} lies on {hits} tetrads, expected {coverage}"
            )
    if label.family == "d" and not _paired_columns(sub):
        raise TetradClassificationError(f"{label}: coordinates do not pair up")
    return label


def decompose(code: Code) -> TetradDecomposition:
    n = code.n
    tw = tetrad_words(code)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    covered = set()
    for w in tw:
        s = support(w, n)
        covered.update(s)
        r0 = find(s[0])
        for i in s[1:]:
            parent[find(i)] = r0

    blocks: dict[int, list[int]] = {}
    for i in sorted(covered):
        blocks.setdefault(find(i), []).append(i)

    comps = []
    for coords in sorted(blocks.values()):
        coords_t = tuple(coords)
        inside = [w for w in tw if find(support(w, n)[0]) == find(coords[0])]
        sub = make_code([_restrict(w, n, coords_t) for w in inside], len(coords_t))
        label = classify_component(sub)
        comps.append(TetradComponent(
            support=tuple(i + 1 for i in coords_t),
            label=label,
            m=len(coords_t),
            dim=sub.k,
            t4=len(inside),
            eta=Fraction(len(inside), len(coords_t)),
        ))
    uncovered = tuple(i + 1 for i in range(n) if i not in covered)
    return TetradDecomposition(n, tuple(comps), uncovered, len(tw))


def _require_type2_24(code: Code) -> None:
    if code.n != 24:
        raise PreconditionError(f"length must be 24, got {code.n}")
    cls = classify_self_duality(code)
    if cls is DualityClass.TYPE_I:
        raise PreconditionError("not Type II: code is self-dual but not doubly even")
    if cls is not DualityClass.TYPE_II:
        raise PreconditionError(f"not Type II: code is not self-dual ({cls})")


@dataclass(frozen=True)
class PropReport:
    passed: bool
    total_t4: int
    target_eta: Fraction
    etas: tuple[tuple[str, Fraction], ...]
    uncovered: tuple[int, ...]
    branch: str  # "empty" or "covered"


def prop_check(code: Code) -> PropReport:
    """Check that C_4 is empty or covers every coordinate, and that every
    component has tetrad number |C_4|/24."""
    _require_type2_24(code)
    dec = decompose(code)
    target = Fraction(dec.total_t4, 24)
    etas = tuple((str(c.label), c.eta) for c in dec.components)
    if dec.total_t4 == 0:
        return PropReport(True, 0, target, etas, dec.uncovered, "empty")
    ok = not dec.uncovered and all(e == target for _, e in etas)
    return PropReport(ok, dec.total_t4, target, etas, dec.uncovered, "covered")


@dataclass(frozen=True)
class KochVerdict:
    passed: bool
    signature: Signature
    decomposition: TetradDecomposition = field(repr=False)


def koch_check(code: Code) -> KochVerdict:
    _require_type2_24(code)
    dec = decompose(code)
    sig = dec.signature
    return KochVerdict(sig in KOCH_SIGNATURES, sig, dec)


def _labels_with_eta(eta: Fraction, n: int) -> list[TetradLabel]:
    labs = []
    k = 4 * eta + 1
    if k.denominator == 1 and 2 <= k <= n // 2:
        labs.append(TetradLabel.D(int(k)))
    if eta == 1 and n >= 7:
        labs.append(E7)
    if eta == Fraction(7, 4) and n >= 8:
        labs.append(E8)
    return labs


def admissible_systems(n: int) -> list[Signature]:
    """Nonempty tetrad systems of total length n whose components share one
    tetrad number."""
    if not 1 <= n <= 64:
        raise ValueError(f"length {n} outside 1..64")
    etas = {Fraction(k - 1, 4) for k in range(2, n // 2 + 1)} | {Fraction(1), Fraction(7, 4)}
    found = []
    for eta in sorted(etas):
        labs = _labels_with_eta(eta, n)
        if not labs:
            continue

        def solve(i: int, remaining: int, chosen: list[TetradLabel]):
            if remaining == 0:
                found.append((eta, Signature(tuple(chosen))))
                return
            if i == len(labs):
                return
            lab = labs[i]
            for mult in range(remaining // lab.length, -1, -1):
                solve(i + 1, remaining - mult * lab.length, chosen + [lab] * mult)

        solve(0, n, [])
    found.sort(key=lambda t: (t[0], str(t[1])))
    return [s for _, s in found if s.labels]
