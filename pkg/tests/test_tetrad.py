import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from kochcodes import catalog
from kochcodes.gf2core import CodeError, direct_sum, make_code, permute, zero_code
from kochcodes.tetrad import (
    E7,
    E8,
    KOCH_SIGNATURES,
    PreconditionError,
    Signature,
    TetradClassificationError,
    TetradLabel,
    admissible_systems,
    classify_component,
    decompose,
    koch_check,
    prop_check,
    tetrad_number,
    tetrad_subcode,
    tetrad_words,
    tetrads,
)


def test_tetrads_examples(e8, g24):
    assert tetrads(g24) == []
    t = tetrads(e8)
    assert len(t) == 14 and all(w.weight == 4 for w in t)
    assert [w.bits for w in t] == sorted(w.bits for w in t)
    assert [str(w) for w in tetrads(make_code(["1111"], 4))] == ["1111"]


def test_tetrad_subcode_examples(e8, g24):
    assert tetrad_subcode(e8) == e8
    assert tetrad_subcode(g24) == zero_code(24)
    C = direct_sum(e8, e8, e8)
    assert tetrad_subcode(C) == C


def test_tetrad_subcode_invariants(type2_catalog, e7):
    for C in [e7, *type2_catalog]:
        T = tetrad_subcode(C)
        assert all(C.reduce(g) == 0 for g in T.gens)
        assert tetrad_words(T) == tetrad_words(C)


def test_decompose_3e8(e8):
    dec = decompose(direct_sum(e8, e8, e8))
    assert [c.label for c in dec.components] == [E8, E8, E8]
    assert dec.uncovered == ()
    assert dec.components[1].support == tuple(range(9, 17))


def test_decompose_golay(g24):
    dec = decompose(g24)
    assert dec.components == () and dec.uncovered == tuple(range(1, 25))
    assert str(dec.signature) == "empty"


def test_decompose_with_spare_coordinates():
    C = direct_sum(catalog.d_code(3), catalog.d_code(2), zero_code(2))
    dec = decompose(C)
    assert sorted(str(c.label) for c in dec.components) == ["d4", "d6"]
    assert dec.uncovered == (11, 12)
    assert dec.total_t4 == 3 + 1


def test_decomposition_partitions_coordinates(type2_catalog):
    rng = random.Random(4)
    for C in type2_catalog:
        perm = list(range(C.n))
        rng.shuffle(perm)
        for code in (C, permute(C, perm)):
            dec = decompose(code)
            parts = [set(c.support) for c in dec.components] + [set(dec.uncovered)]
            assert sum(len(p) for p in parts) == code.n
            assert set().union(*parts) == set(range(1, code.n + 1))
            assert dec.total_t4 == sum(c.t4 for c in dec.components)
        assert decompose(permute(C, perm)).signature == decompose(C).signature


def test_classify_component_examples(e7, e8):
    assert classify_component(make_code(["1111"], 4)) == TetradLabel.D(2)
    assert classify_component(e7) == E7
    d8 = catalog.d_code(4)
    assert d8.n == 8 and d8.k == 3 and len(tetrad_words(d8)) == 6
    assert classify_component(d8) == TetradLabel.D(4)
    assert classify_component(e8) == E8


def test_unclassifiable_component_is_hard_error():
    with pytest.raises(TetradClassificationError):
        decompose(make_code(["11110", "01111"], 5))


@pytest.mark.parametrize("k", range(2, 33))
def test_d_family_table(k):
    C = catalog.d_code(k)
    lab = TetradLabel.D(k)
    assert (C.n, C.k) == (lab.length, lab.dim) == (2 * k, k - 1)
    if k <= 14:
        tw = tetrad_words(C)
        assert len(tw) == lab.t4 == k * (k - 1) // 2
        for i in range(C.n):
            assert sum((w >> (C.n - 1 - i)) & 1 for w in tw) == 4 * lab.eta
    assert lab.eta == Fraction(k - 1, 4)


def test_e_table(e7, e8):
    for C, lab in ((e7, E7), (e8, E8)):
        assert (C.n, C.k, len(tetrad_words(C))) == (lab.length, lab.dim, lab.t4)
    assert E7.eta == 1 and E8.eta == Fraction(7, 4)


def test_tetrad_number_examples(e7, e8):
    comps = {str(c.label): c for c in decompose(direct_sum(e7, e8, catalog.d_code(6))).components}
    assert tetrad_number(comps["e7"]) == 1
    assert tetrad_number(comps["e8"]) == Fraction(7, 4)
    assert tetrad_number(comps["d12"]) == Fraction(5, 4)


# --- signatures -----------------------------------------------------------

@pytest.mark.parametrize("text", ["empty", "6d4", "4d6", "2e7+d10", "e8+d16", "3e8", "d24"])
def test_signature_roundtrip(text):
    assert str(Signature.parse(text)) == text


def test_signature_normalizes_order():
    assert str(Signature.parse("d10+e7+e7")) == "2e7+d10"
    assert str(Signature.parse("d16+e8")) == "e8+d16"
    assert Signature.parse("d4+d4") == Signature.parse("2d4")


@pytest.mark.parametrize("bad", ["", "x8", "0d4", "d5", "e9", "2e7+", "d2"])
def test_signature_parse_errors(bad):
    with pytest.raises(ValueError):
        Signature.parse(bad)


def test_signature_rendering_injective():
    labels = [TetradLabel.D(k) for k in range(2, 7)] + [E7, E8]
    seen = {}
    for r in range(0, 4):
        for combo in combinations_with_replacement(labels, r):
            s = str(Signature(combo))
            assert seen.setdefault(s, Signature(combo)) == Signature(combo)
            assert Signature.parse(s) == Signature(combo)


# --- proposition and Koch check -------------------------------------------

def test_prop_check_examples(nine_codes, g24):
    r = prop_check(g24)
    assert r.passed and r.branch == "empty"
    r = prop_check(nine_codes["3e8"])
    assert r.passed and r.total_t4 == 42 and all(e == Fraction(7, 4) for _, e in r.etas)
    r = prop_check(nine_codes["2e7+d10"])
    assert r.passed and r.total_t4 == 24 and all(e == 1 for _, e in r.etas)


def test_koch_examples(g24, e8):
    v = koch_check(g24)
    assert v.passed and str(v.signature) == "empty"
    v = koch_check(direct_sum(e8, e8, e8))
    assert v.passed and str(v.signature) == "3e8"


def test_koch_preconditions(e8):
    type1 = direct_sum(*[make_code(["11"], 2)] * 12)
    with pytest.raises(PreconditionError, match="not Type II"):
        koch_check(type1)
    with pytest.raises(PreconditionError, match="length"):
        koch_check(e8)
    with pytest.raises(PreconditionError, match="not Type II"):
        koch_check(zero_code(24))
    with pytest.raises(CodeError):
        prop_check(type1)


def test_nine_codes_chain(nine_codes):
    adm = set(admissible_systems(24))
    sigs = set()
    for name, C in nine_codes.items():
        v = koch_check(C)
        assert v.passed and str(v.signature) == name
        assert v.signature in adm or not v.signature.labels
        assert prop_check(C).passed
        sigs.add(v.signature)
    assert sigs == set(KOCH_SIGNATURES)


def test_koch_rejects_forged_signature():
    # a doubly-even code padded to length 24 is not self-dual, so no verdict
    with pytest.raises(PreconditionError):
        koch_check(direct_sum(catalog.d_code(2), zero_code(20)))


# --- admissible systems ---------------------------------------------------

def brute_admissible(n):
    """Every multiset of irreducible labels filling n, with one tetrad number."""
    labels = [TetradLabel.D(k) for k in range(2, n // 2 + 1)] + [
        lab for lab in (E7, E8) if lab.length <= n
    ]
    out = set()
    for r in range(1, n // 4 + 1):
        for combo in combinations_with_replacement(labels, r):
            if sum(l.length for l in combo) == n and len({l.eta for l in combo}) == 1:
                out.add(Signature(combo))
    return out


def test_admissible_24():
    got = admissible_systems(24)
    assert len(got) == 8
    assert set(got) == {s for s in KOCH_SIGNATURES if s.labels}


def test_admissible_small():
    assert {str(s) for s in admissible_systems(8)} == {"2d4", "d8", "e8"}
    assert [str(s) for s in admissible_systems(7)] == ["e7"]
    assert admissible_systems(1) == []


@pytest.mark.parametrize("n", range(1, 33))
def test_admissible_matches_brute_force(n):
    got = admissible_systems(n)
    assert len(got) == len(set(got))
    assert set(got) == brute_admissible(n)


def test_admissible_bounds():
    with pytest.raises(ValueError):
        admissible_systems(65)
    assert admissible_systems(64)
