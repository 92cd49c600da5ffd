"""Exact polynomial arithmetic and the cyclotomicity decision."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclosemi.polycore import (
    IntPoly,
    cyclotomic,
    cyclotomic_test,
    cyclotomic_value_at_2,
    euler_phi,
    is_palindromic,
    poly_divexact,
    poly_mul,
)


def P(*coeffs: int) -> IntPoly:
    return IntPoly(coeffs)


class TestArithmetic:
    def test_mul_telescoping(self):
        assert P(1, -1) * P(1, 1, 1) == P(1, 0, 0, -1)

    def test_mul_identity(self):
        assert P(-1, 1) * P(1) == P(-1, 1)

    def test_mul_phi6_phi1(self):
        # (x^2 - x + 1)(x - 1) = x^3 - 2x^2 + 2x - 1
        assert P(1, -1, 1) * P(-1, 1) == P(-1, 2, -2, 1)

    def test_mul_matches_convolution_oracle(self):
        a, b = P(3, 0, -2, 5), P(-1, 4, 7)
        conv = [0] * (a.degree + b.degree + 1)
        for i, ca in enumerate(a.coeffs):
            for j, cb in enumerate(b.coeffs):
                conv[i + j] += ca * cb
        assert (a * b).coeffs == tuple(conv)

    def test_zero_trimming(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).is_zero()
        assert P().degree == -1

    def test_evaluate(self):
        assert P(1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1)(2) == 1024 - 512 + 32 - 2 + 1
        assert P(1, 2, 3)(10) == 321


def _rational_divmod(a: IntPoly, b: IntPoly) -> tuple[list[Fraction], list[Fraction]]:
    """Schoolbook division over Q; independent oracle for divexact."""
    rem = [Fraction(c) for c in a.coeffs]
    quot = [Fraction(0)] * max(0, a.degree - b.degree + 1)
    lead = Fraction(b.leading_coefficient())
    for k in range(a.degree - b.degree, -1, -1):
        q = rem[k + b.degree] / lead
        quot[k] = q
        for j, cb in enumerate(b.coeffs):
            rem[k + j] -= q * cb
    return quot, rem[: b.degree]


class TestDivexact:
    def test_geometric(self):
        assert poly_divexact(P(-1, 0, 0, 1), P(-1, 1)) == P(1, 1, 1)

    def test_not_divisible_by_value(self):
        # remainder at x=1 is 1, so x-1 cannot divide
        assert poly_divexact(P(1, -1, 1), P(-1, 1)) is None

    @pytest.mark.parametrize(
        "a,b",
        [
            (P(1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1), P(1, -1, 1)),
            (P(2, 3, 1), P(1, 1)),
            (P(1, 0, 0, 0, 1), P(1, 1)),
        ],
    )
    def test_against_rational_oracle(self, a, b):
        quot, rem = _rational_divmod(a, b)
        exact = all(r == 0 for r in rem) and all(q.denominator == 1 for q in quot)
        result = poly_divexact(a, b)
        if exact:
            assert result == IntPoly(int(q) for q in quot)
        else:
            assert result is None

    def test_division_by_zero(self):
        with pytest.raises(ValueError):
            poly_divexact(P(1), P())

    def test_quotient_reconstructs(self):
        a = P(1, -1, 1) * P(-1, 1) * P(1, 1, 1, 1, 1)
        q = poly_divexact(a, P(1, 1, 1, 1, 1))
        assert q is not None and q * P(1, 1, 1, 1, 1) == a


class TestCyclotomic:
    def test_small_indices(self):
        assert cyclotomic(1) == P(-1, 1)
        assert cyclotomic(6) == P(1, -1, 1)
        assert cyclotomic(12) == P(1, 0, -1, 0, 1)

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 30, 105])
    def test_degree_is_phi_and_monic(self, d):
        p = cyclotomic(d)
        assert p.degree == euler_phi(d)
        assert p.leading_coefficient() == 1

    @pytest.mark.parametrize("d", [1, 2, 6, 8, 12, 20, 36])
    def test_product_over_divisors(self, d):
        prod = IntPoly.one()
        for e in range(1, d + 1):
            if d % e == 0:
                prod = prod * cyclotomic(e)
        assert prod == IntPoly.x_power(d) - IntPoly.one()

    @pytest.mark.parametrize("d", [1, 2, 3, 6, 10, 12, 24, 36, 100])
    def test_value_at_2_shortcut(self, d):
        assert cyclotomic_value_at_2(d) == cyclotomic(d)(2)


class TestPalindrome:
    def test_family_example(self):
        assert is_palindromic(P(1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1))

    def test_constant(self):
        assert is_palindromic(P(1))

    def test_non_palindrome(self):
        assert not is_palindromic(P(-1, 1, 1))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            is_palindromic(P())


class TestCyclotomicTest:
    def test_phi6(self):
        report = cyclotomic_test(P(1, -1, 1))
        assert report.factors == ((6, 1),)
        assert report.is_cyclotomic

    def test_family_polynomial_not_cyclotomic(self):
        report = cyclotomic_test(P(1, -1, 0, 0, 0, 1, 0, 0, 0, -1, 1))
        assert not report.is_cyclotomic

    def test_constant_one(self):
        report = cyclotomic_test(P(1))
        assert report.factors == () and report.is_cyclotomic

    def test_prefilter_constant_term(self):
        report = cyclotomic_test(P(2, 1))
        assert not report.is_cyclotomic and report.remainder == P(2, 1)

    def test_prefilter_leading_coefficient(self):
        report = cyclotomic_test(P(1, 0, 2))
        assert not report.is_cyclotomic and report.remainder == P(1, 0, 2)

    def test_multiplicity(self):
        p = cyclotomic(4) ** 3 * cyclotomic(1)
        report = cyclotomic_test(p)
        assert report.factor_dict() == {1: 1, 4: 3}
        assert report.is_cyclotomic

    def test_reconstruction_with_noncyclotomic_remainder(self):
        junk = P(-1, -1, 1)  # x^2 - x - 1, irreducible with root phi
        p = cyclotomic(6) * cyclotomic(2) * junk
        report = cyclotomic_test(p)
        assert not report.is_cyclotomic
        assert report.reconstruct() == p
        assert report.factor_dict() == {2: 1, 6: 1}

    @given(
        st.lists(st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]), min_size=0, max_size=4),
        st.booleans(),
    )
    @settings(max_examples=60, deadline=None)
    def test_round_trip_random_products(self, indices, with_junk):
        p = IntPoly.one()
        expected: dict[int, int] = {}
        for d in indices:
            p = p * cyclotomic(d)
            expected[d] = expected.get(d, 0) + 1
        if with_junk:
            p = p * P(-1, -1, 1)
        report = cyclotomic_test(p)
        assert report.factor_dict() == expected
        assert report.is_cyclotomic == (not with_junk)
        assert report.reconstruct() == p

    @given(st.lists(st.sampled_from(range(2, 16)), min_size=1, max_size=4))
    @settings(max_examples=40, deadline=None)
    def test_products_of_higher_cyclotomics_are_palindromic(self, indices):
        p = IntPoly.one()
        for d in indices:
            p = p * cyclotomic(d)
        assert is_palindromic(p)
        assert cyclotomic_test(p).is_cyclotomic

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            cyclotomic_test(P())


class TestSerialization:
    def test_round_trip(self):
        p = P(1, -1, 0, 123456789012345678901234567890)
        assert IntPoly.from_coeff_strings(p.to_coeff_strings()) == p

    def test_constant_first(self):
        assert P(7, 0, -3).to_coeff_strings() == ["7", "0", "-3"]
