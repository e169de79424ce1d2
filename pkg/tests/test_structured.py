"""Structured matrix constructions and the code-counting lemma."""

import itertools

import numpy as np
import pytest

from dtcodes import (
    GF,
    CirculantSpec,
    ToeplitzTriple,
    circulant_matrix,
    classify_triple,
    contains_vector,
    count_codes_containing,
    count_codes_containing_bruteforce,
    double_circulant_code,
    double_negacirculant_code,
    double_toeplitz_code,
    enumerate_triples,
    minimum_weight,
    parse_circulant,
    parse_triple,
    toeplitz_matrix,
    triple_count,
    triple_of_circulant,
)
from dtcodes.structured import band_sequence, digits_of_index, index_of_digits


def test_toeplitz_matrix_hand_example():
    gf = GF(2)
    T = ToeplitzTriple(gf, 0, (1, 1), (1, 0))
    assert band_sequence(T).tolist() == [0, 1, 0, 1, 1]
    assert toeplitz_matrix(T).tolist() == [
        [0, 1, 1],
        [1, 0, 1],
        [0, 1, 0],
    ]


def test_toeplitz_matrix_is_constant_on_diagonals():
    gf = GF(4)
    rng = np.random.default_rng(3)
    for _ in range(10):
        m = int(rng.integers(2, 7))
        T = ToeplitzTriple(
            gf,
            int(rng.integers(4)),
            tuple(int(x) for x in rng.integers(0, 4, m - 1)),
            tuple(int(x) for x in rng.integers(0, 4, m - 1)),
        )
        A = toeplitz_matrix(T)
        for i in range(m):
            for j in range(m):
                if i == j:
                    assert A[i, j] == T.t
                elif j > i:
                    assert A[i, j] == T.a[j - i - 1]
                else:
                    assert A[i, j] == T.b[i - j - 1]


def test_triple_validation():
    gf = GF(3)
    with pytest.raises(ValueError):
        ToeplitzTriple(gf, 3, (0,), (0,))
    with pytest.raises(ValueError):
        ToeplitzTriple(gf, 0, (0, 0), (0,))
    with pytest.raises(ValueError):
        CirculantSpec(gf, (1, 5), 1)
    with pytest.raises(ValueError):
        CirculantSpec(gf, (1, 2), 2)


def test_circulant_matrix_and_triple_agree():
    for q in (2, 3, 4):
        gf = GF(q)
        rng = np.random.default_rng(q)
        for mu in (1, -1):
            for _ in range(8):
                m = int(rng.integers(1, 6))
                r = tuple(int(x) for x in rng.integers(0, q, m))
                spec = CirculantSpec(gf, r, mu)
                direct = circulant_matrix(spec)
                via_triple = toeplitz_matrix(triple_of_circulant(spec))
                assert np.array_equal(direct, via_triple), (q, mu, r)


def test_negacirculant_wrap_scaling():
    gf = GF(3)
    A = circulant_matrix(CirculantSpec(gf, (1, 2), -1))
    # second row wraps r_2 = 2 through mu = -1, giving 1 over F3
    assert A.tolist() == [[1, 2], [1, 1]]


def test_classify_triple_families():
    gf = GF(3)
    spec_c = CirculantSpec(gf, (1, 2, 0), 1)
    spec_n = CirculantSpec(gf, (1, 2, 0), -1)
    assert classify_triple(triple_of_circulant(spec_c)) == "circulant"
    assert classify_triple(triple_of_circulant(spec_n)) == "negacirculant"
    assert classify_triple(ToeplitzTriple(gf, 0, (0, 0), (0, 0))) == "both"
    assert classify_triple(ToeplitzTriple(gf, 1, (1, 2), (2, 2))) == "neither"
    # F2 has mu = -mu, so the two families coincide
    f2 = triple_of_circulant(CirculantSpec(GF(2), (1, 1, 0), -1))
    assert classify_triple(f2) == "both"


def test_code_builders():
    gf = GF(2)
    C = double_circulant_code(CirculantSpec(gf, (1, 1, 0), 1))
    assert (C.n, C.k) == (6, 3)
    assert C.is_systematic()
    with pytest.raises(ValueError):
        double_circulant_code(CirculantSpec(gf, (1,), -1))
    with pytest.raises(ValueError):
        double_negacirculant_code(CirculantSpec(gf, (1,), 1))


def test_literal_round_trips():
    gf = GF(4)
    T = parse_triple(gf, "w;(1,0,v);(0,1,1)")
    assert (T.t, T.a, T.b) == (2, (1, 0, 3), (0, 1, 1))
    assert T.to_text() == "w;(1,0,v);(0,1,1)"
    spec = parse_circulant(gf, "N:(1,w,0)")
    assert (spec.r, spec.mu) == ((1, 2, 0), -1)
    assert spec.to_text() == "N:(1,w,0)"
    assert parse_circulant(gf, "C:(v)").mu == 1
    for bad in ("w;(1,0)", "X:(1)", "w;(1);(0);(1)", ""):
        with pytest.raises(ValueError):
            parse_triple(gf, bad)
    with pytest.raises(ValueError):
        parse_circulant(gf, "(1,w)")


def test_contains_vector_matches_membership():
    gf = GF(3)
    T = parse_triple(gf, "1;(2,0);(1,1)")
    C = double_toeplitz_code(T)
    words = {tuple(int(x) for x in C.encode(msg)) for msg in itertools.product(range(3), repeat=3)}
    for u in itertools.product(range(3), repeat=3):
        for v in itertools.product(range(3), repeat=3):
            assert contains_vector(T, u, v) == (u + v in words)


@pytest.mark.parametrize("q,n", [(2, 6), (3, 4), (4, 4)])
def test_counting_lemma_closed_form(q, n):
    gf = GF(q)
    m = n // 2
    for u in itertools.product(range(q), repeat=m):
        for v in itertools.product(range(q), repeat=m):
            assert count_codes_containing(gf, n, u, v) == count_codes_containing_bruteforce(
                gf, n, u, v
            )


def test_counting_lemma_split_by_case():
    gf = GF(3)
    n = 6
    zero = (0, 0, 0)
    assert count_codes_containing(gf, n, zero, zero) == 3**5
    assert count_codes_containing(gf, n, zero, (1, 0, 0)) == 0
    assert count_codes_containing(gf, n, (1, 0, 2), (2, 2, 2)) == 3**2


def test_enumerate_triples_is_the_full_odometer():
    for q, m in ((2, 3), (3, 2), (4, 2)):
        gf = GF(q)
        seen = list(enumerate_triples(gf, m))
        assert len(seen) == triple_count(gf, m) == q ** (2 * m - 1)
        assert len({(T.t, T.a, T.b) for T in seen}) == len(seen)


def test_index_digit_round_trip():
    for q in (2, 3, 4):
        for idx in range(q**4):
            digits = digits_of_index(idx, q, 4)
            assert index_of_digits(digits, q) == idx


def test_distinct_triples_give_distinct_codes():
    # G = (I | A) determines A, so the triple map is injective on codes
    gf = GF(2)
    mats = {toeplitz_matrix(T).tobytes() for T in enumerate_triples(gf, 3)}
    assert len(mats) == triple_count(gf, 3)


def test_small_known_minimum_weights():
    gf2 = GF(2)
    assert minimum_weight(double_circulant_code(CirculantSpec(gf2, (0,), 1))) == 1
    gf3 = GF(3)
    golay = double_negacirculant_code(CirculantSpec(gf3, (1, 2, 1, 1, 1, 0), -1))
    assert minimum_weight(golay) == 6
    gf4 = GF(4)
    assert minimum_weight(double_circulant_code(CirculantSpec(gf4, (1, 2), 1))) == 3
