"""Bounded-degree intersection algebras and structural instance checks."""

import itertools

import pytest

from h14.derivation import support_property_check
from h14.errors import GradingError, SingularMatrixError, UsageError
from h14.intersect import (
    freeness_coset_check,
    graded_intersection,
    kuroda_intersection_basis,
    minimal_generator_degrees,
    no_monomial_units_check,
)
from h14.kuroda import build_f0, build_instance, lemma31_find_p
from h14.laurent import QQ, LaurentPoly
from h14.linalg import SparseRREF


def mono(e, field=QQ):
    return LaurentPoly.monomial(4, e, 1, field)


def pairwise_products_data(field):
    """Generators of the two degree-graded algebras used across these tests:
    pairwise products of three degree-1 variables plus a weight-2 variable,
    against the three differences (weight-2 variable minus a square)."""
    gens_a = [mono((1, 1, 0, 0), field), mono((0, 1, 1, 0), field),
              mono((1, 0, 1, 0), field), mono((0, 0, 0, 1), field)]
    x = mono((0, 0, 0, 1), field)
    gens_b = [x - mono((2, 0, 0, 0), field), x - mono((0, 2, 0, 0), field),
              x - mono((0, 0, 2, 0), field)]
    return gens_a, gens_b


WEIGHTS = (1, 1, 1, 2)

ONES = build_instance(4, 1, [[1, 1, 1]] * 3)
OFF3 = build_instance(4, 1, [[1, 3, 3], [3, 1, 3], [3, 3, 1]])


class TestGradedIntersection:
    def test_rational_case_trivial(self):
        gens_a, gens_b = pairwise_products_data(QQ)
        rep = graded_intersection(gens_a, gens_b, WEIGHTS, 16)
        assert rep.dims[0] == 1
        assert all(rep.dims[d] == 0 for d in range(1, 17))
        assert rep.new_generators == ()

    @pytest.mark.parametrize("p", [5, 7])
    def test_odd_prime_fields_trivial(self, p):
        gens_a, gens_b = pairwise_products_data(p)
        rep = graded_intersection(gens_a, gens_b, WEIGHTS, 12)
        assert all(rep.dims[d] == 0 for d in range(1, 13))

    def test_char2_degree4_element(self):
        gens_a, gens_b = pairwise_products_data(2)
        rep = graded_intersection(gens_a, gens_b, WEIGHTS, 4)
        assert rep.dims[4] >= 1
        target = (mono((0, 1, 1, 0), 2) ** 2 - mono((1, 0, 1, 0), 2) ** 2
                  - mono((1, 1, 0, 0), 2) ** 2 + mono((0, 0, 0, 1), 2) ** 2)
        rr = SparseRREF(2)
        for b in rep.bases[4]:
            rr.add(b.terms)
        assert rr.contains(target.terms)
        assert rep.new_generators == ((4, 1),)

    def test_char3_table_is_zero(self):
        # characteristic 3 is outside the range any engine-independent claim
        # covers; the computed table itself is all zero up to degree 12
        gens_a, gens_b = pairwise_products_data(3)
        rep = graded_intersection(gens_a, gens_b, WEIGHTS, 12)
        assert all(rep.dims[d] == 0 for d in range(1, 13))

    def test_single_generator(self):
        x = mono((0, 0, 0, 1))
        rep = graded_intersection([x], [x], WEIGHTS, 8)
        for d in range(9):
            assert rep.dims[d] == (1 if d % 2 == 0 else 0)

    def test_non_homogeneous_rejected(self):
        x = mono((0, 0, 0, 1))
        with pytest.raises(GradingError, match=r"A\[0\]"):
            graded_intersection([x + mono((1, 0, 0, 0))], [x], WEIGHTS, 4)

    def test_degree_cap(self):
        x = mono((0, 0, 0, 1))
        with pytest.raises(UsageError):
            graded_intersection([x], [x], WEIGHTS, 64)

    def test_monomial_algebra_matches_hilbert_counts(self):
        # the monomial algebra generated by the worked-example intersection
        # generators: degree-wise dimensions count monoid monomials
        m = lambda e: LaurentPoly.monomial(2, e)
        gens = [m((1, 1)), m((2, 0)), m((0, 2))]
        rep = graded_intersection(gens, gens, (1, 1), 10)
        for d in range(11):
            assert rep.dims[d] == ((d + 1) if d % 2 == 0 else 0)
        assert rep.new_generators == ((2, 3),)

    def test_order_independence(self):
        m = lambda e: LaurentPoly.monomial(2, e)
        gens = [m((1, 1)), m((2, 0)), m((0, 2))]
        rep1 = graded_intersection(gens, gens, (1, 1), 8)
        rep2 = graded_intersection(gens[::-1], gens[::-1], (1, 1), 8)
        assert all(rep1.bases[d] == rep2.bases[d] for d in range(9))

    def test_basis_elements_homogeneous(self):
        gens_a, gens_b = pairwise_products_data(2)
        rep = graded_intersection(gens_a, gens_b, WEIGHTS, 6)
        for d in range(1, 7):
            for b in rep.bases[d]:
                assert b.is_homogeneous(WEIGHTS)


class TestKurodaIntersectionBasis:
    def test_ones_constants_only(self):
        rep = kuroda_intersection_basis(ONES, 3)
        assert rep.dims[0] == 1
        assert all(rep.dims[d] == 0 for d in (1, 2, 3))
        assert minimal_generator_degrees(rep) == []

    def test_degree_zero(self):
        rep = kuroda_intersection_basis(OFF3, 0)
        assert rep.dims == {0: 1}

    def test_ones_trivial_up_to_twelve(self):
        rep = kuroda_intersection_basis(ONES, 12)
        assert all(rep.dims[d] == 0 for d in range(1, 13))
        assert rep.new_generators == ()

    def test_off3_contains_certificate(self):
        rep = kuroda_intersection_basis(OFF3, 12)
        assert any(rep.dims[d] > 0 for d in range(1, 13))
        p, p1, p2, p3 = lemma31_find_p(OFF3.xi)
        assert p == 12
        f0 = build_f0(OFF3, p1, p2, p3)
        rr = SparseRREF(OFF3.field)
        for d in sorted(rep.images):
            for img in rep.images[d]:
                rr.add(img.terms)
        assert rr.contains(f0.terms)
        assert rep.new_generators != ()

    def test_images_are_polynomial(self):
        rep = kuroda_intersection_basis(OFF3, 8)
        for d in sorted(rep.images):
            for img in rep.images[d]:
                assert img.is_polynomial()

    def test_support_property_of_images(self):
        rep = kuroda_intersection_basis(OFF3, 8)
        for d in sorted(rep.images):
            for img in rep.images[d]:
                if not img.is_constant():
                    assert support_property_check(img)

    def test_singular_rejected(self):
        inst = build_instance(3, 1, [[1, 1], [1, 1]])  # det 0
        with pytest.raises(SingularMatrixError):
            kuroda_intersection_basis(inst, 2)


class TestFreenessCosetCheck:
    def test_standard_instances(self):
        assert freeness_coset_check(ONES, 5)
        assert freeness_coset_check(OFF3, 5)

    def test_n3_instance(self):
        assert freeness_coset_check(build_instance(3, 1, [[3, 1], [1, 1]]), 4)

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            freeness_coset_check(build_instance(3, 1, [[1, 1], [1, 1]]), 2)


class TestNoMonomialUnits:
    def test_standard_instances(self):
        assert no_monomial_units_check(ONES, 4)
        assert no_monomial_units_check(OFF3, 4)

    def test_synthetic_control(self):
        # sanity: the analogous reduction against an algebra that does
        # contain a variable must find that monomial
        span = SparseRREF(QQ)
        span.add(LaurentPoly.variable(2, 0).terms)
        assert span.contains(LaurentPoly.variable(2, 0).terms)

    def test_degree_cap(self):
        with pytest.raises(UsageError):
            no_monomial_units_check(ONES, 9)


class TestMinimalGeneratorDegrees:
    def test_constants_only_report(self):
        rep = kuroda_intersection_basis(ONES, 4)
        assert minimal_generator_degrees(rep) == []

    def test_off3_nonempty(self):
        rep = kuroda_intersection_basis(OFF3, 6)
        degs = minimal_generator_degrees(rep)
        assert degs and all(d >= 3 for d, _ in degs)
