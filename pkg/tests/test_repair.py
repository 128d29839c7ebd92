from __future__ import annotations

import pytest

from cyclic_lrc.cyclic import CyclicCode
from cyclic_lrc.field import make_field
from cyclic_lrc.poly import Poly
from cyclic_lrc.repair import (
    ErasedWord,
    RepairError,
    coordinate_coset,
    dual_distance_exact,
    repair_erasure,
    repair_groups,
    repair_vector,
    verify_locality,
)


def _dot(u, v, field):
    acc = field.zero()
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def test_repair_groups(code_8_4_4):
    groups = repair_groups(code_8_4_4)
    assert groups[0] == (2, 4, 6)
    assert groups[3] == (1, 5, 7)
    assert all(len(g) == 3 for g in groups)


def test_repair_groups_single_coset_degenerate():
    from cyclic_lrc.constructions import build_any_d_coset

    code = build_any_d_coset(3, 4, 3, 2)  # stride 1: one coset of everything
    groups = repair_groups(code)
    assert groups[1] == (0, 2, 3)


def test_repair_vector_q5(code_8_4_4):
    vec = repair_vector(code_8_4_4, 0)
    support = [j for j, e in enumerate(vec) if not e.is_zero]
    assert support == [0, 2, 4, 6]
    assert [vec[j].index for j in support] == [1, 3, 4, 2]
    # independent check: orthogonal to every generator row
    for row in code_8_4_4.base.generator_matrix:
        assert _dot(vec, row, code_8_4_4.field).is_zero


def test_repair_vector_weight_and_normalization(acceptance_codes):
    for code in acceptance_codes.values():
        for i in range(code.n):
            vec = repair_vector(code, i)
            support = [j for j, e in enumerate(vec) if not e.is_zero]
            assert len(support) == code.r + 1
            assert i in support
            assert vec[support[0]].index == 1
            for row in code.base.generator_matrix:
                assert _dot(vec, row, code.field).is_zero


def test_repair_vectors_shift_compatible(code_8_4_4):
    n = code_8_4_4.n
    for i in range(n):
        vec = repair_vector(code_8_4_4, i)
        nxt = repair_vector(code_8_4_4, (i + 1) % n)
        shifted = vec[-1:] + vec[:-1]
        # equal up to a scalar factor
        anchor = next(j for j, e in enumerate(shifted) if not e.is_zero)
        scale = nxt[anchor] / shifted[anchor]
        assert all(nxt[j] == shifted[j] * scale for j in range(n))


def test_repair_vector_via_structural_witness():
    # coset width 12 with nullspace dimension 10: exhaustive search is
    # infeasible, the grid witness path must kick in
    from cyclic_lrc.constructions import build_any_d_subgroup

    code = build_any_d_subgroup(13, 12, 11, 11)
    vec = repair_vector(code, 5)
    assert sum(1 for e in vec if not e.is_zero) == 12
    for row in code.base.generator_matrix:
        assert _dot(vec, row, code.field).is_zero


def test_repair_vector_rejects_zero_dimensional_code():
    f5 = make_field(5)
    zero_code = CyclicCode.build(f5, 4, Poly.x_pow_minus_one(f5, 4))
    with pytest.raises(RepairError):
        from cyclic_lrc.repair import _coset_vector

        _coset_vector(zero_code, 3, 0)


def test_erased_word_validation(f5):
    with pytest.raises(ValueError, match="exactly one"):
        ErasedWord.from_symbols([None, None, f5.one()])
    with pytest.raises(ValueError, match="exactly one"):
        ErasedWord.from_symbols([f5.one(), f5.zero()])
    word = ErasedWord.from_symbols([f5.one(), None, f5.zero()])
    assert word.erased_at == 1


def test_repair_worked_example(code_8_4_4):
    # erase coordinate 0 of the codeword g itself
    word = list(code_8_4_4.base.g.padded(8))
    expected = word[0]
    word[0] = None
    recovered = repair_erasure(code_8_4_4, ErasedWord.from_symbols(word))
    assert recovered == expected
    assert recovered.index == 1


def test_repair_zero_codeword(code_8_4_4):
    f5 = code_8_4_4.field
    for i in range(8):
        word = [f5.zero()] * 8
        word[i] = None
        assert repair_erasure(code_8_4_4, ErasedWord.from_symbols(word)).is_zero


def test_repair_round_trip_all_positions(acceptance_codes, rng):
    for code in acceptance_codes.values():
        field = code.field
        for _ in range(20):
            message = [field.from_index(rng.randrange(field.q)) for _ in range(code.k)]
            codeword = code.base.encode_systematic(message)
            for i in range(code.n):
                erased = list(codeword)
                erased[i] = None
                got = repair_erasure(code, ErasedWord.from_symbols(erased))
                assert got == codeword[i]


def test_repair_word_length_checked(code_8_4_4):
    f5 = code_8_4_4.field
    with pytest.raises(ValueError, match="length"):
        repair_erasure(code_8_4_4, ErasedWord.from_symbols([None, f5.one()]))


def test_dual_distance_exact(code_8_4_4, code_9_5_3):
    assert dual_distance_exact(code_8_4_4).value == 4
    assert dual_distance_exact(code_9_5_3).value == 3


def test_dual_distance_of_parity_check_code():
    f5 = make_field(5)
    code = CyclicCode.build(f5, 6, Poly.from_indices(f5, [4, 1]))
    assert dual_distance_exact(code).value == 6  # repetition code


def test_dual_distance_at_most_r_plus_1(acceptance_codes):
    for code in acceptance_codes.values():
        scan = dual_distance_exact(code, budget=1 << 23)
        if scan.exact:
            assert scan.value <= code.r + 1
        else:
            # over-budget dual space: the weight-(r+1) repair vector itself
            # certifies the bound
            vec = repair_vector(code, 0)
            assert sum(1 for e in vec if not e.is_zero) == code.r + 1
            assert code.base.dual().contains(vec)


def test_dual_distance_brute_force_agreement(code_8_4_4):
    dual = code_8_4_4.base.dual()
    best = dual.n + 1
    field = dual.field
    for t in range(1, field.q**dual.k):
        digits = []
        tt = t
        for _ in range(dual.k):
            tt, d = divmod(tt, field.q)
            digits.append(d)
        word = [field.zero()] * dual.n
        for j, d in enumerate(digits):
            if d:
                e = field.from_index(d)
                for c, g in enumerate(dual.generator_matrix[j]):
                    word[c] = word[c] + e * g
        best = min(best, sum(1 for w in word if not w.is_zero))
    assert best == dual_distance_exact(code_8_4_4).value == 4


def test_verify_locality_with_coset_witnesses(code_8_4_4):
    check = verify_locality(code_8_4_4, 3)
    assert check.ok and check.method == "coset-witness"
    assert len(check.witnesses) == 8
    for i, (support, entries) in enumerate(check.witnesses):
        assert i in support
        assert len(support) == 4
        assert all(e != 0 for e in entries)


def test_verify_locality_below_true_locality(code_8_4_4):
    # no weight <= 3 dual word exists (dual distance is 4)
    check = verify_locality(code_8_4_4, 2)
    assert check.ok is False and check.method == "exhaustive"
    assert check.failing_coordinate == 0
    assert verify_locality(code_8_4_4, 1).ok is False


def test_verify_locality_exhaustive_positive():
    # r_test + 1 does not divide n, so only the exhaustive path can answer;
    # weight-3 dual words on the stride-2 grid still cover every coordinate
    from cyclic_lrc.constructions import build_any_d_subgroup

    code = build_any_d_subgroup(7, 6, 2, 2)
    check = verify_locality(code.base, 3)
    assert check.ok and check.method == "exhaustive"
    for i, (support, entries) in enumerate(check.witnesses):
        assert i in support and len(support) <= 4


def test_verify_locality_full_space_is_false():
    f5 = make_field(5)
    full = CyclicCode.build(f5, 8, Poly.one(f5))
    assert verify_locality(full, 3).ok is False


def test_verify_locality_budget_exceeded(code_8_4_4):
    check = verify_locality(code_8_4_4.base, 2, budget=1)
    assert check.ok is None and check.method == "budget-exceeded"


def test_verify_locality_rejects_bad_r(code_8_4_4):
    with pytest.raises(ValueError):
        verify_locality(code_8_4_4, 0)


def test_coordinate_coset_helper():
    assert coordinate_coset(8, 3, 0) == (0, 2, 4, 6)
    assert coordinate_coset(8, 3, 3) == (1, 3, 5, 7)
    with pytest.raises(ValueError):
        coordinate_coset(8, 2, 0)
