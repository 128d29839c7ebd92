from __future__ import annotations

import pytest

from cyclic_lrc.field import (
    FieldElement,
    embed,
    in_base_subfield,
    make_field,
    multiplicative_order,
    prime_factors,
    primitive_nth_root,
    project_to_base,
    splitting_degree,
)


def _irreducible_quadratics_oracle(p):
    """Brute-force scan of monic quadratics over GF(p), lex order from the
    constant term up; independent of the library's search."""
    out = []
    for c0 in range(p):
        for c1 in range(p):
            if all((x * x + c1 * x + c0) % p != 0 for x in range(p)):
                out.append((c0, c1, 1))
    return out


def test_canonical_modulus_gf4_is_the_unique_irreducible_quadratic(f4):
    assert _irreducible_quadratics_oracle(2) == [(1, 1, 1)]
    assert f4.modulus == (1, 1, 1)


def test_canonical_modulus_gf25_matches_exhaustive_scan(f25):
    assert f25.modulus == _irreducible_quadratics_oracle(5)[0]
    assert f25.modulus == (1, 1, 1)


def test_prime_field_has_no_modulus(f5):
    assert f5.modulus is None
    assert f5.q == 5


def test_make_field_is_deterministic():
    assert make_field(5, 2) == make_field(5, 2)
    assert make_field(2, 6).modulus == make_field(2, 6).modulus


def test_make_field_rejects_bad_parameters():
    with pytest.raises(ValueError):
        make_field(4)
    with pytest.raises(ValueError):
        make_field(5, 0)
    with pytest.raises(ValueError):
        make_field(2, 21)  # 2^21 over the order limit


def test_higher_degree_modulus_is_irreducible():
    f64 = make_field(2, 6)
    # no element of any proper subfield is a root
    coeffs = f64.modulus
    for a in make_field(2).elements():
        value = sum(c * pow(a.index, i, 2) for i, c in enumerate(coeffs)) % 2
        assert value != 0


def test_extension_multiplication_follows_modulus(f4):
    x = f4.from_index(2)  # the class of y
    assert (x * x).index == 3  # y^2 = y + 1


def test_inverse_and_pow_examples(f5, f13):
    assert f5.one().inverse() == f5.one()
    assert (f13.from_index(2) ** 6).index == 12
    a = f13.from_index(7)
    assert a ** -1 == a.inverse()
    assert (a ** -3) * (a ** 3) == f13.one()


def test_zero_inversion_rejected(f5):
    with pytest.raises(ZeroDivisionError):
        f5.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        f5.one() / f5.zero()


def test_mixed_field_arithmetic_rejected(f5, f13):
    with pytest.raises(ValueError):
        f5.one() + f13.one()


def test_element_round_trip_and_digits(f25):
    for i in range(25):
        assert f25.from_index(i).index == i
    assert f25.element([3, 1]).index == 8
    with pytest.raises(ValueError):
        f25.from_index(25)
    with pytest.raises(ValueError):
        f25.element([1, 2, 3])


@pytest.mark.parametrize(
    "q, n, expected",
    [(13, 12, 1), (4, 9, 3), (5, 1, 1), (5, 8, 2), (11, 12, 2), (7, 15, 4)],
)
def test_splitting_degree(q, n, expected):
    assert splitting_degree(q, n) == expected


def test_splitting_degree_rejects_shared_factor():
    with pytest.raises(ValueError):
        splitting_degree(4, 10)


@pytest.mark.parametrize("p, m, n, expected_index", [(13, 1, 12, 2), (5, 1, 4, 2)])
def test_primitive_root_examples(p, m, n, expected_index):
    field = make_field(p, m)
    assert primitive_nth_root(field, n).index == expected_index


def test_primitive_root_of_unity_order_is_exact(f25, f13):
    for field, n in [(f25, 8), (f25, 24), (f13, 12), (f13, 6), (f13, 1)]:
        beta = primitive_nth_root(field, n)
        assert (beta ** n).index == 1
        for t in range(1, n):
            assert (beta ** t).index != 1


def test_primitive_root_rejects_non_divisor(f13):
    with pytest.raises(ValueError):
        primitive_nth_root(f13, 5)


def test_nth_root_for_n_1_is_one(f25):
    assert primitive_nth_root(f25, 1) == f25.one()


def test_subfield_membership_in_gf25(f5, f25):
    one = f25.one()
    assert in_base_subfield(one, 5)
    assert project_to_base(one, f5) == f5.one()
    beta = primitive_nth_root(f25, 8)
    assert not in_base_subfield(beta, 5)  # order 8 does not divide 4
    assert in_base_subfield(beta ** 2, 5)
    with pytest.raises(ValueError):
        project_to_base(beta, f5)


@pytest.mark.parametrize("sub_pm, ext_pm", [((2, 2), (2, 4)), ((2, 3), (2, 6)), ((3, 1), (3, 4))])
def test_membership_matches_embedded_subfield_enumeration(sub_pm, ext_pm):
    sub = make_field(*sub_pm)
    ext = make_field(*ext_pm)
    image = {embed(a, ext) for a in sub.elements()}
    fixed = {a for a in ext.elements() if in_base_subfield(a, sub.q)}
    assert image == fixed
    for a in sub.elements():
        assert project_to_base(embed(a, ext), sub) == a


def test_embedding_is_a_ring_homomorphism(f4):
    ext = make_field(2, 6)
    for a in f4.elements():
        for b in f4.elements():
            assert embed(a + b, ext) == embed(a, ext) + embed(b, ext)
            assert embed(a * b, ext) == embed(a, ext) * embed(b, ext)


def test_field_axioms_sampled(rng, f25, f13):
    for field in (f25, f13):
        elems = list(field.elements())
        for _ in range(1000):
            a, b, c = (rng.choice(elems) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a
        nonzero = elems[1:]
        for _ in range(200):
            a = rng.choice(nonzero)
            assert a * a.inverse() == field.one()
            assert (a ** (field.q - 1)).index == 1


def test_multiplicative_order_and_generators(f25):
    gen = f25.generator()
    assert gen.index == 7
    assert multiplicative_order(gen) == 24
    assert multiplicative_order(f25.one()) == 1
    with pytest.raises(ValueError):
        multiplicative_order(f25.zero())


def test_prime_factors():
    assert prime_factors(1) == ()
    assert prime_factors(24) == (2, 3)
    assert prime_factors(63) == (3, 7)
