import random
from itertools import product

import pytest
from hypothesis import given, settings

from conftest import codes
from kochcodes import catalog
from kochcodes.gf2core import (
    Code,
    CodeError,
    DualityClass,
    EnumerationCapError,
    UndefinedDistance,
    Word,
    classify_self_duality,
    direct_sum,
    dual,
    full_space,
    is_extremal,
    make_code,
    min_distance,
    parse_matrix,
    format_matrix,
    popcount,
    zero_code,
)


def span_brute(rows, n):
    """Every F_2-combination of rows, as a set of ints."""
    out = set()
    for coeffs in product((0, 1), repeat=len(rows)):
        w = 0
        for c, r in zip(coeffs, rows):
            if c:
                w ^= r
        out.add(w)
    return out


def test_make_code_drops_dependent_row():
    C = make_code(["1100", "0110", "1010"], 4)
    assert C.k == 2
    assert set(C) == {0b0000, 0b1100, 0b0110, 0b1010}


def test_make_code_empty_rows():
    C = make_code([], 8)
    assert C.k == 0 and list(C) == [0]


def test_make_code_e8_generators():
    C = make_code(list(catalog.E8_ROWS), 8)
    assert C.k == 4
    assert set(C) == span_brute([int(r, 2) for r in catalog.E8_ROWS], 8)
    assert len(set(C)) == 16


@pytest.mark.parametrize("n", [0, 65])
def test_make_code_length_bounds(n):
    with pytest.raises(CodeError):
        make_code([], n)


def test_make_code_rejects_mismatched_rows():
    with pytest.raises(CodeError):
        make_code(["101", "11"], 3)
    with pytest.raises(CodeError):
        make_code([0b1000], 3)


def test_rref_is_canonical():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 10)
        rows = [rng.getrandbits(n) for _ in range(rng.randint(0, 6))]
        C = make_code(rows, n)
        # same span from a shuffled, re-mixed generating set
        mixed = list(C.gens)
        rng.shuffle(mixed)
        for i in range(1, len(mixed)):
            mixed[i] ^= mixed[i - 1]
        C2 = make_code(mixed + [0], n)
        assert C2 == C
        assert set(C) == span_brute(rows, n)
        assert C.pivots == tuple(sorted(C.pivots))
        assert len(set(C.pivots)) == C.k


def test_unequal_spans_have_unequal_gens():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 6)
        a = [rng.getrandbits(n) for _ in range(rng.randint(0, 3))]
        b = [rng.getrandbits(n) for _ in range(rng.randint(0, 3))]
        same_span = span_brute(a, n) == span_brute(b, n)
        assert (make_code(a, n) == make_code(b, n)) == same_span


def test_word_weight_oracle():
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randint(1, 64)
        w = Word(n, rng.getrandbits(n))
        loop = sum(w[i] for i in range(n))
        assert w.weight == loop == popcount(w.bits)
        assert 0 <= w.weight <= n


def test_word_rejects_high_bits():
    with pytest.raises(CodeError):
        Word(3, 0b1000)


def test_word_string_roundtrip():
    w = Word.parse("0010110")
    assert str(w) == "0010110"
    assert w.support() == (2, 4, 5)
    assert w[2] == 1 and w[0] == 0


def test_dual_of_full_space_is_zero():
    assert dual(full_space(3)) == zero_code(3)


def test_dual_of_e7_is_hamming(e7):
    H = dual(e7)
    assert H.k == 4
    words = list(H)
    assert len(words) == 16
    assert min(popcount(w) for w in words if w) == 3
    # brute-force kernel
    kernel = {x for x in range(1 << 7) if all(popcount(x & g) % 2 == 0 for g in e7.gens)}
    assert set(words) == kernel


def test_e8_self_dual(e8):
    assert dual(e8) == e8


@given(codes(max_n=16))
@settings(max_examples=300)
def test_dual_involution_and_dimension(C):
    D = dual(C)
    assert C.k + D.k == C.n
    assert dual(D) == C
    assert all(popcount(a & b) % 2 == 0 for a in C.gens for b in D.gens)


def test_dimension_law_randomized():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(1, 16)
        C = make_code([rng.getrandbits(n) for _ in range(rng.randint(0, n))], n)
        assert C.k + dual(C).k == n


def test_classify_examples(e7, e8):
    assert classify_self_duality(make_code(["11"], 2)) is DualityClass.TYPE_I
    assert classify_self_duality(e8) is DualityClass.TYPE_II
    assert classify_self_duality(e7) is DualityClass.SELF_ORTHOGONAL
    assert classify_self_duality(make_code(["10"], 2)) is DualityClass.NOT_SELF_ORTHOGONAL


def _type2_exists(n):
    """Exhaustive search for a Type II code of length n (n <= 14).

    Sound prunings only: a self-dual even code contains the all-ones word,
    and for n <= 12 every nonzero doubly-even class modulo all-ones contains
    a weight-4 word, so one such word may be fixed up to permutation.
    Subspaces are visited once each.
    """
    if n % 2:
        return False
    ones = (1 << n) - 1
    if popcount(ones) % 4:
        return False
    start = make_code([ones], n)
    if 8 <= n <= 12:
        start = make_code([ones, 0b1111 << (n - 4)], n)
    de = [w for w in range(1, 1 << n) if popcount(w) % 4 == 0]
    seen = set()

    def grow(code):
        if code.k == n // 2:
            return True
        if code in seen:
            return False
        seen.add(code)
        reps = {code.reduce(w) for w in de
                if all(popcount(w & g) % 2 == 0 for g in code.gens)}
        reps.discard(0)
        return any(grow(make_code(list(code.gens) + [r], n)) for r in sorted(reps))

    return grow(start)


@pytest.mark.parametrize("n", [2, 4, 6, 10, 12, 14])
def test_no_type2_outside_multiples_of_8(n):
    assert not _type2_exists(n)


def test_type2_found_at_8():
    assert _type2_exists(8)


def test_type2_words_doubly_even(type2_catalog):
    for C in type2_catalog:
        assert all(popcount(w) % 4 == 0 for w in C)


def test_min_distance(e7, e8, g24):
    assert min_distance(e8) == 4
    assert min_distance(e7) == 4
    assert min_distance(g24) == 8
    with pytest.raises(UndefinedDistance):
        min_distance(zero_code(5))


def test_min_distance_cap():
    with pytest.raises(EnumerationCapError):
        min_distance(full_space(25))


def test_extremality(e8, g24):
    assert is_extremal(e8)
    assert is_extremal(g24)
    assert not is_extremal(direct_sum(e8, e8, e8))
    with pytest.raises(CodeError):
        is_extremal(make_code(["11"], 2))


def test_matrix_format_roundtrip():
    text = "# a comment\n\n1100\n0110\n1010\n"
    C = parse_matrix(text)
    assert C == make_code(["1100", "0110"], 4)
    assert parse_matrix(format_matrix(C, "hello")) == C


def test_matrix_format_column_is_coordinate():
    C = parse_matrix("1000\n")
    assert Word(4, C.gens[0]).support() == (0,)


@pytest.mark.parametrize("text,line", [
    ("1100\n011\n", "line 2"),
    ("# c\n11a0\n", "line 2"),
])
def test_matrix_format_errors(text, line):
    with pytest.raises(CodeError, match=line):
        parse_matrix(text)


def test_matrix_format_empty():
    with pytest.raises(CodeError):
        parse_matrix("# nothing\n")


def test_code_is_hashable_value():
    a = make_code(["1111"], 4)
    assert {a: 1}[make_code([0b1111, 0], 4)] == 1
    assert isinstance(a, Code)
