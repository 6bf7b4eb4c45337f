"""Weight enumerators, harmonic weight enumerators and the MacWilliams transform.

All arithmetic is exact.  Coefficients live in Q[sqrt 2] so that the
normalising factor 2^(n/2) stays exact for odd ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

import numpy as np

from .gf2core import Code, CodeError, DualityClass, classify_self_duality, dual


class QSqrt2:
    """Exact number a + b*sqrt(2) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, x) -> "QSqrt2":
        return x if isinstance(x, QSqrt2) else cls(x)

    @classmethod
    def sqrt2_pow(cls, e: int) -> "QSqrt2":
        """sqrt(2)**e for any integer e."""
        half, odd = divmod(e, 2)
        scale = Fraction(2) ** half
        return cls(0, scale) if odd else cls(scale)

    def __add__(self, other):
        o = QSqrt2.coerce(other)
        return QSqrt2(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-QSqrt2.coerce(other))

    def __rsub__(self, other):
        return QSqrt2.coerce(other) - self

    def __mul__(self, other):
        o = QSqrt2.coerce(other)
        return QSqrt2(self.a * o.a + 2 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def __truediv__(self, other):
        o = QSqrt2.coerce(other)
        nrm = o.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q[sqrt2]")
        num = self * o.conjugate()
        return QSqrt2(num.a / nrm, num.b / nrm)

    def __rtruediv__(self, other):
        return QSqrt2.coerce(other) / self

    def __eq__(self, other):
        try:
            o = QSqrt2.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def __repr__(self):
        return f"QSqrt2({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt2"


@dataclass(frozen=True)
class HomoPoly2:
    """Homogeneous polynomial sum_w coeff[w] x^(D-w) y^w over Q[sqrt 2]."""

    degree: int
    coeff: tuple[QSqrt2, ...]

    def __post_init__(self):
        if len(self.coeff) != self.degree + 1:
            raise ValueError("coefficient list must have degree + 1 entries")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "HomoPoly2":
        cs = tuple(QSqrt2.coerce(c) for c in coeffs)
        return cls(len(cs) - 1, cs)

    @classmethod
    def zero(cls, degree: int) -> "HomoPoly2":
        return cls(degree, tuple(QSqrt2() for _ in range(degree + 1)))

    def is_zero(self) -> bool:
        return not any(self.coeff)

    def __add__(self, other: "HomoPoly2") -> "HomoPoly2":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return HomoPoly2(self.degree, tuple(a + b for a, b in zip(self.coeff, other.coeff)))

    def __sub__(self, other: "HomoPoly2") -> "HomoPoly2":
        return self + other.scale(-1)

    def scale(self, s) -> "HomoPoly2":
        s = QSqrt2.coerce(s)
        return HomoPoly2(self.degree, tuple(c * s for c in self.coeff))

    def times_xy(self, d: int) -> "HomoPoly2":
        z = (QSqrt2(),) * d
        return HomoPoly2(self.degree + 2 * d, z + self.coeff + z)

    def divide_xy(self, d: int) -> "HomoPoly2 | None":
        """Quotient by (xy)^d, or None when (xy)^d does not divide."""
        if d == 0:
            return self
        if self.degree < 2 * d:
            return None if not self.is_zero() else HomoPoly2.zero(0)
        if any(self.coeff[:d]) or any(self.coeff[self.degree - d + 1:]):
            return None
        return HomoPoly2(self.degree - 2 * d, self.coeff[d: self.degree - d + 1])

    def to_json(self) -> dict:
        terms = [
            [w, c.a.numerator, c.a.denominator, c.b.numerator, c.b.denominator]
            for w, c in enumerate(self.coeff)
            if c
        ]
        return {"degree": self.degree, "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "HomoPoly2":
        coeff = [QSqrt2() for _ in range(obj["degree"] + 1)]
        for w, an, ad, bn, bd in obj["terms"]:
            coeff[w] = QSqrt2(Fraction(an, ad), Fraction(bn, bd))
        return cls(obj["degree"], tuple(coeff))

    def __str__(self):
        parts = []
        D = self.degree
        for w, c in enumerate(self.coeff):
            if not c:
                continue
            mono = "*".join(
                m for m in (_pow("x", D - w), _pow("y", w)) if m
            ) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts) if parts else "0"


def _pow(v: str, e: int) -> str:
    return "" if e == 0 else v if e == 1 else f"{v}^{e}"


def _binomial_row(a: int, sign: int) -> list[int]:
    return [comb(a, j) * sign ** j for j in range(a + 1)]


def _convolve(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def sigma_transform(p: HomoPoly2) -> HomoPoly2:
    """Substitute x <- (x+y)/sqrt2, y <- (x-y)/sqrt2 and expand exactly."""
    D = p.degree
    out = [Fraction(0)] * (D + 1)
    out_b = [Fraction(0)] * (D + 1)
    for w, c in enumerate(p.coeff):
        if not c:
            continue
        # (x+y)^(D-w) * (x-y)^w, indexed by the power of y
        for j, m in enumerate(_convolve(_binomial_row(D - w, 1), _binomial_row(w, -1))):
            if m:
                out[j] += c.a * m
                out_b[j] += c.b * m
    scale = QSqrt2.sqrt2_pow(-D)
    return HomoPoly2(D, tuple(QSqrt2(a, b) * scale for a, b in zip(out, out_b)))


# --- weight distributions -------------------------------------------------

@dataclass(frozen=True)
class WeightDistribution:
    n: int
    A: tuple[int, ...]

    def as_poly(self) -> HomoPoly2:
        return HomoPoly2.from_coeffs(self.A)


def weight_distribution(code: Code) -> WeightDistribution:
    counts = np.bincount(np.bitwise_count(code.words()), minlength=code.n + 1)
    return WeightDistribution(code.n, tuple(int(c) for c in counts))


def weight_enumerator(code: Code) -> HomoPoly2:
    return weight_distribution(code).as_poly()


def coordinate_incidence(code: Code) -> np.ndarray:
    """Matrix N with N[w, i] = #{c in C_w : c_i = 1} (i 0-based)."""
    n = code.n
    words = code.words()
    weights = np.bitwise_count(words).astype(np.int64)
    N = np.zeros((n + 1, n), dtype=np.int64)
    for i in range(n):
        hit = ((words >> np.uint64(n - 1 - i)) & np.uint64(1)).astype(bool)
        N[:, i] = np.bincount(weights[hit], minlength=n + 1)
    return N


# --- harmonic weight enumerators ------------------------------------------

@dataclass(frozen=True)
class HarmonicLinForm:
    """Discrete harmonic polynomial of degree 0 (a constant) or 1.

    Degree 1 forms are P(c) = sum of ``coeffs[i]`` over the support of c,
    with the coefficients summing to zero.
    """

    n: int
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree == 0:
            if len(self.coeffs) != 1:
                raise ValueError("a degree-0 form carries exactly one constant")
        elif self.degree == 1:
            if len(self.coeffs) != self.n:
                raise ValueError(f"expected {self.n} coefficients, got {len(self.coeffs)}")
            if sum(self.coeffs) != 0:
                raise ValueError("degree-1 harmonic coefficients must sum to zero")
        else:
            raise ValueError("only harmonic degrees 0 and 1 are supported")

    @classmethod
    def constant(cls, n: int, value=1) -> "HarmonicLinForm":
        return cls(n, 0, (Fraction(value),))

    @classmethod
    def linear(cls, coeffs: Sequence) -> "HarmonicLinForm":
        cs = tuple(Fraction(c) for c in coeffs)
        return cls(len(cs), 1, cs)

    @classmethod
    def unit(cls, n: int, i: int) -> "HarmonicLinForm":
        """The form P_i(c) = n*c_i - wt(c), with ``i`` 1-based."""
        if not 1 <= i <= n:
            raise ValueError(f"coordinate {i} outside 1..{n}")
        return cls(n, 1, tuple(Fraction(n * (j == i - 1) - 1) for j in range(n)))

    def __call__(self, word: int) -> Fraction:
        if self.degree == 0:
            return self.coeffs[0]
        n = self.n
        return sum(
            (a for i, a in enumerate(self.coeffs) if (word >> (n - 1 - i)) & 1),
            Fraction(0),
        )


def hwe(code: Code, P: HarmonicLinForm) -> HomoPoly2:
    """Harmonic weight enumerator W_{C,P}, coefficient of x^(n-w) y^w at index w."""
    if P.n != code.n:
        raise CodeError(f"form length {P.n} does not match code length {code.n}")
    if P.degree == 0:
        A = weight_distribution(code).A
        return HomoPoly2.from_coeffs([P.coeffs[0] * a for a in A])
    N = coordinate_incidence(code)
    coeffs = []
    for w in range(code.n + 1):
        row = N[w].tolist()
        coeffs.append(sum((a * c for a, c in zip(P.coeffs, row) if c), Fraction(0)))
    return HomoPoly2.from_coeffs(coeffs)


class NotAnEnumerator(ValueError):
    """Transform produced non-integer coefficients."""


def macwilliams_dual(p: HomoPoly2, size_C: int) -> HomoPoly2:
    """Weight enumerator of the dual code from that of C (|C| = size_C)."""
    factor = QSqrt2.sqrt2_pow(p.degree) / size_C
    out = sigma_transform(p).scale(factor)
    bad = [w for w, c in enumerate(out.coeff) if not c.is_integer()]
    if bad:
        raise NotAnEnumerator(
            f"coefficient of y^{bad[0]} is {out.coeff[bad[0]]}, not an integer"
        )
    return out


# Sign in Z_{C-perp,P} = EPSILON^deg(P) * 2^(n/2)/|C| * sigma(Z_{C,P}).
# Pinned by the brute-force run over C = span{10} in tests/test_enumerators.py.
EPSILON = -1


@dataclass(frozen=True)
class BachocReport:
    passed: bool
    divisible: bool
    degree: int
    lhs: HomoPoly2 | None  # Z for the dual code
    rhs: HomoPoly2 | None  # transformed, scaled Z for the code


def bachoc_z_check(code: Code, P: HarmonicLinForm, epsilon: int = EPSILON) -> BachocReport:
    """Check the harmonic MacWilliams identity in its (xy)^d-reduced form."""
    d = P.degree
    W = hwe(code, P)
    W_dual = hwe(dual(code), P)
    Z = W.divide_xy(d)
    Z_dual = W_dual.divide_xy(d)
    if Z is None or Z_dual is None:
        return BachocReport(False, False, d, None, None)
    factor = QSqrt2.sqrt2_pow(code.n) / code.size * (epsilon ** d)
    rhs = sigma_transform(Z).scale(factor)
    return BachocReport(rhs == Z_dual, True, d, Z_dual, rhs)


def vanishing_check(code: Code) -> bool:
    """True iff W_{C,P_i} = 0 for every unit form P_i (Type II, n < 30)."""
    if classify_self_duality(code) is not DualityClass.TYPE_II:
        raise CodeError("vanishing check requires a Type II code")
    if code.n >= 30:
        raise CodeError("vanishing check requires length < 30")
    return all(hwe(code, HarmonicLinForm.unit(code.n, i)).is_zero()
               for i in range(1, code.n + 1))


@dataclass(frozen=True)
class DesignResult:
    weight: int
    passed: bool
    lam: Fraction | None
    counts: tuple[int, ...]
    failing_coordinate: int | None = None  # 1-based


def design_check(code: Code, w: int) -> DesignResult:
    """Whether the supports of C_w cover every coordinate equally often."""
    n = code.n
    if not 0 <= w <= n:
        raise CodeError(f"weight {w} outside 0..{n}")
    words = code.words()
    ww = words[np.bitwise_count(words) == w]
    counts = tuple(
        int(np.count_nonzero((ww >> np.uint64(n - 1 - i)) & np.uint64(1)))
        for i in range(n)
    )
    for i, c in enumerate(counts):
        # sum over C_w of (n c_i - w) = n*count_i - w*|C_w|
        if n * c - w * len(ww) != 0:
            return DesignResult(w, False, None, counts, i + 1)
    return DesignResult(w, True, Fraction(w * len(ww), n), counts)
