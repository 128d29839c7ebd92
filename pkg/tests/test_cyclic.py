from __future__ import annotations

import pytest

from cyclic_lrc.cyclic import CyclicCode, min_distance_exhaustive
from cyclic_lrc.field import make_field
from cyclic_lrc.poly import Poly


@pytest.fixture(scope="module")
def code_8_4():
    f5 = make_field(5)
    return CyclicCode.build(f5, 8, Poly.from_indices(f5, [1, 2, 0, 1, 1]))


def test_build_derives_dimension_and_parity(code_8_4):
    assert code_8_4.k == 4
    assert code_8_4.g * code_8_4.h == Poly.x_pow_minus_one(code_8_4.field, 8)
    assert code_8_4.dual_g == code_8_4.h.reciprocal().monic()


def test_parity_check_code(f5):
    code = CyclicCode.build(f5, 6, Poly.from_indices(f5, [4, 1]))
    assert code.k == 5


def test_divisor_decided_by_division(f5):
    # x^2 + 1 factors into two fourth roots of unity, so it divides x^8 - 1
    code = CyclicCode.build(f5, 8, Poly.from_indices(f5, [1, 0, 1]))
    assert code.k == 6
    # x^2 + x + 1 has roots of order 3, which do not divide 8
    with pytest.raises(ValueError):
        CyclicCode.build(f5, 8, Poly.from_indices(f5, [1, 1, 1]))


def test_build_rejections(f5, f4):
    with pytest.raises(ValueError):
        CyclicCode.build(f4, 10, Poly.from_indices(f4, [1, 1]))  # gcd(10, 4) != 1
    with pytest.raises(ValueError):
        CyclicCode.build(f5, 8, Poly.from_indices(f5, [1, 2]))  # not monic
    with pytest.raises(ValueError):
        CyclicCode.build(f5, 8, Poly.zero(f5))


def test_systematic_encode_zero(code_8_4):
    zero_word = code_8_4.encode_systematic([code_8_4.field.zero()] * 4)
    assert all(s.is_zero for s in zero_word)


def test_systematic_encode_places_message_last(code_8_4):
    f5 = code_8_4.field
    message = [f5.from_index(i) for i in (1, 0, 0, 0)]
    word = code_8_4.encode_systematic(message)
    # x^4 * 1 - (x^4 mod g) equals g itself here
    assert tuple(s.index for s in word) == (1, 2, 0, 1, 1, 0, 0, 0)
    assert list(word[4:]) == message
    assert code_8_4.contains(word)


def test_systematic_encode_round_trip(code_8_4, rng):
    f5 = code_8_4.field
    for _ in range(50):
        message = [f5.from_index(rng.randrange(5)) for _ in range(4)]
        word = code_8_4.encode_systematic(message)
        assert code_8_4.contains(word)
        assert list(word[4:]) == message
    with pytest.raises(ValueError):
        code_8_4.encode_systematic([f5.zero()] * 3)


def test_contains(code_8_4, rng):
    f5 = code_8_4.field
    assert code_8_4.contains(code_8_4.g.padded(8))
    unit = [f5.one()] + [f5.zero()] * 7
    assert not code_8_4.contains(unit)
    for _ in range(30):
        message = [f5.from_index(rng.randrange(5)) for _ in range(4)]
        word = list(code_8_4.encode_systematic(message))
        shift = rng.randrange(8)
        shifted = word[-shift:] + word[:-shift] if shift else word
        assert code_8_4.contains(shifted)
    with pytest.raises(ValueError):
        code_8_4.contains(unit[:5])


def test_root_exponents_and_bch(code_8_4):
    assert sorted(code_8_4.root_exponents()) == [0, 1, 2, 5]
    assert code_8_4.bch_lower_bound() == 4
    assert code_8_4.bch_lower_bound([0, 1, 2, 5]) == 4
    with pytest.raises(ValueError):
        code_8_4.bch_lower_bound([0, 1, 2])


def test_bch_on_distance3_code(code_9_5_3):
    base = code_9_5_3.base
    assert sorted(base.root_exponents()) == [0, 1, 4, 7]
    assert base.bch_lower_bound() == 3


def test_bch_run_of_length_d_minus_1(acceptance_codes):
    base = acceptance_codes["subgroup-q13-d5"].base
    assert sorted(base.root_exponents()) == [0, 1, 2, 3, 6, 9]
    assert base.bch_lower_bound() == 5


def test_bch_degenerate_full_root_set(f5):
    zero_code = CyclicCode.build(f5, 4, Poly.x_pow_minus_one(f5, 4))
    assert zero_code.k == 0
    assert zero_code.bch_lower_bound() == 5  # n + 1 convention


def test_bch_empty_root_set(f5):
    full = CyclicCode.build(f5, 4, Poly.one(f5))
    assert full.bch_lower_bound() == 1


def _brute_force_distance(code):
    """Independent oracle: enumerate all nonzero messages with exact elements."""
    field, k, n = code.field, code.k, code.n
    best = n + 1
    for t in range(1, field.q**k):
        digits = []
        tt = t
        for _ in range(k):
            tt, d = divmod(tt, field.q)
            digits.append(d)
        word = [field.zero()] * n
        for j, d in enumerate(digits):
            if d:
                e = field.from_index(d)
                for c, g in enumerate(code.generator_matrix[j]):
                    if not g.is_zero:
                        word[c] = word[c] + e * g
        best = min(best, sum(1 for w in word if not w.is_zero))
    return best


def test_exhaustive_distance_matches_brute_force(code_8_4):
    scan = min_distance_exhaustive(code_8_4)
    assert scan.exact and scan.enumerated == 5**4 - 1
    assert scan.value == _brute_force_distance(code_8_4) == 4


def test_exhaustive_distance_examples(code_9_5_3, f5):
    assert min_distance_exhaustive(code_9_5_3.base).value == 3
    full = CyclicCode.build(f5, 8, Poly.one(f5))
    assert min_distance_exhaustive(full).value == 1


def test_distance_budget_fallback(code_8_4):
    scan = min_distance_exhaustive(code_8_4, budget=100)
    assert not scan.exact
    assert scan.value is None
    assert scan.lower == 4  # the BCH certificate
    assert scan.upper >= 4
    assert scan.enumerated == 100


def test_distance_of_zero_code(f5):
    zero_code = CyclicCode.build(f5, 4, Poly.x_pow_minus_one(f5, 4))
    scan = min_distance_exhaustive(zero_code)
    assert scan.exact and scan.value == 5


def test_dual_of_parity_check_is_repetition(f5):
    code = CyclicCode.build(f5, 6, Poly.from_indices(f5, [4, 1]))
    dual = code.dual()
    assert dual.k == 1
    ones = [f5.one()] * 6
    assert dual.contains(ones)


def test_dual_orthogonality(code_8_4, code_9_5_3):
    for code in (code_8_4, code_9_5_3.base):
        dual = code.dual()
        assert code.k + dual.k == code.n
        for row in code.generator_matrix:
            for dual_row in dual.generator_matrix:
                acc = code.field.zero()
                for a, b in zip(row, dual_row):
                    acc = acc + a * b
                assert acc.is_zero


def test_dual_contains_grid_witness(code_8_4):
    # (x^8 - 1)/(x^2 - alpha) reversed is a weight-4 dual word on one coset
    f5 = code_8_4.field
    divisor = Poly.from_indices(f5, [2, 0, 1])  # x^2 - 3
    assert divisor.divides(code_8_4.g)
    u = Poly.x_pow_minus_one(f5, 8) // divisor
    padded = u.padded(8)
    reversed_word = tuple(padded[7 - j] for j in range(8))
    assert code_8_4.dual().contains(reversed_word)
    assert sum(1 for w in reversed_word if not w.is_zero) == 4


def test_dual_of_full_space_is_zero_code(f5):
    full = CyclicCode.build(f5, 8, Poly.one(f5))
    assert full.dual().k == 0
