from __future__ import annotations

import pytest

from hfpq.core import BinaryWord, GroupElement, apply_perm, canonical_perm, prop_mul
from hfpq.gf2poly import Gf2Poly
from hfpq.typeq import (
    NotHadamardGroup,
    NotTypeQCandidate,
    TypeQCode,
    VerificationError,
    all_codewords,
    build_matrix,
    codeword_ints,
    codeword_set,
    construct_from_group,
    coordinate_index,
    d1_in_coordinate_order,
    d1_indices,
    derive_a2,
    derive_b,
    element_vector,
    group_table,
    inverse_set,
    kappa_vector,
    make_code,
    matrix_entry,
)

from .conftest import GOLDEN_A, GOLDEN_B, GOLDEN_KAPPA


def test_derive_b_reference(golden):
    derived = derive_b(golden.a_vec, 6)
    assert derived.to_string() == GOLDEN_B


def test_derive_b_zero_dividend():
    # a1 = x phi1(a2) makes both dividends vanish: b halves are 0 or u
    from hfpq.gf2poly import mul_by_x, phi1

    a2 = Gf2Poly.from_string("1011")
    a1 = mul_by_x(phi1(a2), 1)
    a = BinaryWord(a1.coeffs | (a2.coeffs << 4), 8)
    b = derive_b(a, 2)
    assert (b.bits & 0b1111) in (0, 0b1111)
    assert (b.bits >> 4) in (0, 0b1111)


def test_derive_b_odd_weight_rejected():
    with pytest.raises(NotTypeQCandidate):
        derive_b(BinaryWord.from_string("10000000"), 2)


def test_derive_a2_reference():
    a1 = Gf2Poly.from_string("111111011010")
    assert derive_a2(a1, 11, 6).to_string() == "101001000000"


def test_derive_a2_monomial():
    # a1 = 1: phi1(1) = x^(2n-1), so a2 = x^iota + u
    n = 3
    for iota in range(2 * n):
        a2 = derive_a2(Gf2Poly.one(2 * n), iota, n)
        expected = Gf2Poly.x_power(iota, 2 * n) ^ Gf2Poly.all_ones(2 * n)
        assert a2 == expected


def test_derive_a2_paired_relation_is_involutive():
    import random

    rng = random.Random(41)
    for _ in range(100):
        n = rng.choice((2, 3, 6))
        iota = rng.randrange(2 * n)
        a1 = Gf2Poly(rng.randrange(1 << (2 * n)), 2 * n)
        a2 = derive_a2(a1, iota, n)
        assert derive_a2(a2, iota, n) == a1


def test_kappa_vector_patterns():
    assert kappa_vector(0, 2).to_string() == "01010101"
    assert kappa_vector(1, 2).to_string() == "01011010"
    assert kappa_vector(11, 6).to_string() == GOLDEN_KAPPA


def test_kappa_vector_range():
    with pytest.raises(ValueError):
        kappa_vector(12, 6)


def test_element_vector_special_elements(golden):
    assert element_vector(GroupElement(0, False), golden) == BinaryWord.zero(24)
    assert element_vector(GroupElement(12, False), golden) == BinaryWord.all_ones(24)
    kv = element_vector(GroupElement(11, True), golden)
    rep = kv if kv.first_bit == 0 else kv.complement()
    assert rep.to_string() == GOLDEN_KAPPA


def test_element_vector_matches_iterated_product(golden):
    # independent route: fold the propelinear product with explicit perms
    n = golden.n
    words = codeword_ints(golden)
    acc = BinaryWord.zero(24)
    for i in range(4 * n):
        assert acc.bits == words[i]
        acc = prop_mul(golden.a_vec, canonical_perm(GroupElement(1, False), n), acc)
    acc = BinaryWord.zero(24)
    b = golden.b_vec
    for i in range(4 * n):
        lhs = prop_mul(
            BinaryWord(words[i], 24), canonical_perm(GroupElement(i, False), n), b
        )
        assert lhs.bits == words[4 * n + i]


def test_generator_orders_as_words(golden):
    words = codeword_ints(golden)
    assert len(set(words[:24])) == 24  # a has order 4n
    b = BinaryWord(words[24], 24)
    bb = prop_mul(b, canonical_perm(GroupElement(0, True), 6), b)
    assert bb == BinaryWord.all_ones(24)  # b^2 = u, so b has order 4


def test_rotated_diagonal_never_fixes_a_power_n(golden):
    # pi_a^h(a^n) != a^n for every divisor h of n
    n = golden.n
    vec_an = element_vector(GroupElement(n, False), golden)
    pa = canonical_perm(GroupElement(1, False), n)
    for h in (1, 2, 3, 6):
        img = vec_an
        for _ in range(h):
            img = apply_perm(pa, img)
        assert img != vec_an


def test_coordinate_indexing_equation(golden):
    # position i is indexed by the unique x in D1 with e_1 = pi_x(e_i)
    idx = coordinate_index(golden)
    for i, x in enumerate(idx.row_order):
        assert canonical_perm(x, golden.n).images[i] == 0
        assert element_vector(x, golden).first_bit == 0


def test_build_matrix_normalized_and_equidistant(golden):
    H = build_matrix(golden)
    assert H.order == 24
    assert H.rows[0] == 0
    assert all((r & 1) == 0 for r in H.rows)
    words = H.row_words()
    for i in range(24):
        for j in range(i + 1, 24):
            assert words[i].distance(words[j]) == 12


def test_build_matrix_requires_verification(golden):
    bad = TypeQCode(6, golden.a_vec ^ BinaryWord.unit(2, 24), golden.b_vec, None)
    with pytest.raises(VerificationError):
        build_matrix(bad)


def test_complemented_generator_gives_same_code(golden):
    # a*u generates the same codeword set (a valid alternative generator)
    alt = TypeQCode(6, golden.a_vec.complement(), derive_b(golden.a_vec.complement(), 6))
    assert codeword_set(alt) == codeword_set(golden)


def test_matrix_entry_matches_matrix(golden):
    H = build_matrix(golden)
    idx = H.index
    for i in range(24):
        for j in range(24):
            assert H.entry(i, j) == matrix_entry(
                idx.row_order[i], idx.row_order[j], golden
            )


def test_matrix_entry_normalization(golden):
    e = GroupElement(0, False)
    for g in (GroupElement(5, False), GroupElement(3, True)):
        assert matrix_entry(e, g, golden) == 0
        assert matrix_entry(g, e, golden) == 0


def test_transpose_of_matrix_is_hadamard(golden):
    H = build_matrix(golden)
    cols = [BinaryWord(c, 24) for c in H.transposed_rows()]
    for i in range(24):
        for j in range(i + 1, 24):
            assert cols[i].distance(cols[j]) == 12


def test_construct_from_group_round_trip(golden):
    table = group_table(golden)
    built = construct_from_group(table, d1_in_coordinate_order(golden), 12)
    assert built.words == codeword_set(golden)
    assert built.rows == build_matrix(golden).rows
    assert built.word(0) == BinaryWord.zero(24)
    assert built.word(12) == BinaryWord.all_ones(24)


def test_construct_from_group_propelinear(golden):
    table = group_table(golden)
    built = construct_from_group(table, d1_in_coordinate_order(golden), 12)
    order = table.order
    for g in range(order):
        pg = built.perms[g]
        for h in range(order):
            prod = built.sigma_words[g] ^ pg.apply_bits(built.sigma_words[h])
            assert prod == built.sigma_words[table.product(g, h)]


def test_construct_from_group_inverse_set(golden):
    table = group_table(golden)
    built = construct_from_group(table, inverse_set(golden, d1_indices(golden)), 12)
    assert len(built.words) == 48


def test_construct_from_group_identity_outside_d(golden):
    # e not in D: the construction replaces D by u*D
    table = group_table(golden)
    d_inv = [table.product(12, d) for d in d1_in_coordinate_order(golden)]
    built = construct_from_group(table, d_inv, 12)
    assert built.words == codeword_set(golden)


def test_construct_from_group_rejects_bad_subset(golden):
    table = group_table(golden)
    with pytest.raises(NotHadamardGroup):
        construct_from_group(table, list(range(24)), 12)


def test_make_code_derives_b(golden):
    code = make_code(6, golden.a_vec, iota=11)
    assert code.b_vec == golden.b_vec


def test_code_field_validation(golden):
    with pytest.raises(ValueError):
        TypeQCode(6, golden.a_vec, golden.b_vec, 12)
    with pytest.raises(ValueError):
        TypeQCode(5, golden.a_vec, golden.b_vec, None)


def test_all_codewords_are_words(golden):
    words = all_codewords(golden)
    assert len(words) == 48
    assert len({w.bits for w in words}) == 48
    assert all(w.length == 24 for w in words)
