"""The summing derivation, its kernel, and the support property."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from h14.derivation import (
    apply_E,
    kernel_check,
    kernel_degree_basis,
    kernel_generators,
    support_property_check,
)
from h14.errors import PreconditionError, UsageError
from h14.laurent import QQ, LaurentPoly


def y(i, n=4):
    return LaurentPoly.variable(n, i)


class TestApplyE:
    def test_difference_killed(self):
        assert apply_E(y(3) - y(0)).is_zero()

    def test_single_variable(self):
        assert apply_E(y(0)) == LaurentPoly.constant(4, 1)

    def test_product(self):
        assert apply_E(y(0) * y(1)) == y(0) + y(1)


class TestKernelCheck:
    def test_kernel_product(self):
        f = (y(3) - y(1)) ** 3 * (y(3) - y(2))
        assert kernel_check(f)

    def test_two_variable_difference(self):
        assert kernel_check(y(1, n=2) - y(0, n=2))

    def test_sum_not_in_kernel(self):
        assert not kernel_check(y(3) + y(0))

    def test_closure_under_ring_ops(self):
        g1, g2, g3 = kernel_generators()
        assert kernel_check(g1 * g2 - 3 * g3 ** 2)
        assert kernel_check((g1 + g2) ** 3)


kernel_polys = st.builds(
    lambda coeffs: sum(
        (c * g ** k for (c, k), g in zip(coeffs, kernel_generators())),
        LaurentPoly.zero(4),
    ),
    st.tuples(*(st.tuples(st.integers(-3, 3), st.integers(0, 3)),) * 3),
)

small_y_polys = st.builds(
    lambda terms: LaurentPoly(4, QQ, {e: c for e, c in terms}),
    st.lists(
        st.tuples(
            st.tuples(*(st.integers(0, 2),) * 4),
            st.integers(-4, 4),
        ),
        max_size=3,
    ),
)


class TestLeibniz:
    @settings(max_examples=80, deadline=None)
    @given(small_y_polys, small_y_polys)
    def test_product_rule(self, f, g):
        assert apply_E(f * g) == apply_E(f) * g + f * apply_E(g)

    @settings(max_examples=40, deadline=None)
    @given(kernel_polys, kernel_polys)
    def test_kernel_is_subring(self, f, g):
        assert kernel_check(f + g)
        assert kernel_check(f * g)


class TestKernelDegreeBasis:
    def test_dimensions(self):
        for d in range(0, 9):
            basis = kernel_degree_basis(d)
            assert len(basis) == math.comb(d + 3, 3)
            for b in basis:
                assert kernel_check(b)
                assert b.is_polynomial()

    def test_prime_field_rejected(self):
        with pytest.raises(UsageError):
            kernel_degree_basis(2, field=5)

    def test_degree_cap(self):
        with pytest.raises(UsageError):
            kernel_degree_basis(9)
        with pytest.raises(UsageError):
            kernel_degree_basis(-1)


class TestSupportProperty:
    def test_constant(self):
        assert support_property_check(LaurentPoly.constant(4, 1))

    def test_synthetic_violator(self):
        f = LaurentPoly.monomial(4, (0, 0, 0, 2)) + LaurentPoly.monomial(4, (1, 1, 0, 1))
        assert not support_property_check(f)

    def test_good_element(self):
        f = LaurentPoly.monomial(4, (1, 0, 0, 1)) + LaurentPoly.monomial(4, (0, 2, 0, 0))
        assert support_property_check(f)

    def test_laurent_input_rejected(self):
        with pytest.raises(PreconditionError):
            support_property_check(LaurentPoly.monomial(4, (-1, 0, 0, 1)))
