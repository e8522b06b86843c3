"""Exact truncated series ring, Pochhammer/Gaussian builders, named series,
and the finite hypergeometric checkers."""

import pytest
from hypothesis import given, settings, strategies as st

from partition_lab.core import k_measure, partitions, sol
from partition_lab.qseries import (
    LaurentPoly,
    Monomial,
    MultiSeries,
    build,
    check_finite_identity,
    check_qbinom,
    check_qchu,
    check_xq2_expansion,
    gauss_binomial,
    pochhammer,
)

ORDER = 8


def series_from_terms(entries, order=ORDER):
    return MultiSeries(order, {key: coeff for key, coeff in entries})


small_series = st.builds(
    lambda entries: series_from_terms(entries.items()),
    st.dictionaries(
        st.tuples(
            st.integers(0, ORDER), st.integers(0, 3), st.integers(0, 3)
        ),
        st.integers(-5, 5),
        max_size=6,
    ),
)


def box_partition_count(rows, cols, size):
    """Oracle: partitions of ``size`` with at most ``rows`` parts, each <= cols."""
    return sum(
        1
        for p in partitions(size, max_part=None)
        if p.length <= rows and (not p or p.parts[0] <= cols)
    )


class TestRingOps:
    def test_add_zero(self):
        a = series_from_terms([((1, 1, 0), 2), ((3, 0, 2), -1)])
        assert a + MultiSeries.zero(ORDER) == a

    def test_geometric_inverse(self):
        one_minus_q = MultiSeries.one(ORDER) - MultiSeries.term(1, ORDER, q=1)
        geometric = MultiSeries(ORDER, {(n, 0, 0): 1 for n in range(ORDER + 1)})
        assert one_minus_q * geometric == MultiSeries.one(ORDER)

    def test_two_factor_product(self):
        n = 3
        a = MultiSeries.one(n) + MultiSeries.term(1, n, q=1, y=1)
        b = MultiSeries.one(n) + MultiSeries.term(1, n, q=2, y=1)
        product = a * b
        assert product == MultiSeries(
            n, {(0, 0, 0): 1, (1, 0, 1): 1, (2, 0, 1): 1, (3, 0, 2): 1}
        )

    @settings(max_examples=60)
    @given(small_series, small_series, small_series)
    def test_ring_laws(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_order_mismatch_rejected(self):
        with pytest.raises(ValueError):
            MultiSeries.one(3) + MultiSeries.one(4)
        with pytest.raises(ValueError):
            MultiSeries.one(3) * MultiSeries.one(3, xorder=3)

    def test_negative_exponents_rejected(self):
        with pytest.raises(ValueError):
            MultiSeries(3, {(-1, 0, 0): 1})

    def test_scalar_and_pow(self):
        a = MultiSeries.term(2, ORDER, q=1)
        assert 3 * a == MultiSeries.term(6, ORDER, q=1)
        assert a**3 == MultiSeries.term(8, ORDER, q=3)
        assert a**0 == MultiSeries.one(ORDER)


class TestInvert:
    def test_invert_one(self):
        assert MultiSeries.one(ORDER).invert() == MultiSeries.one(ORDER)

    def test_invert_one_minus_q(self):
        inv = (MultiSeries.one(ORDER) - MultiSeries.term(1, ORDER, q=1)).invert()
        assert inv == MultiSeries(ORDER, {(n, 0, 0): 1 for n in range(ORDER + 1)})

    def test_invert_q_factorial_counts_bounded_partitions(self):
        # oracle first: coefficients of 1/(q;q)_2 count partitions with parts <= 2
        expected = {
            size: sum(1 for p in partitions(size) if not p or p.parts[0] <= 2)
            for size in range(5)
        }
        assert expected[4] == 3
        product = pochhammer(Monomial(1, q=1), 1, 2, 4)
        inverse = product.invert()
        for size, count in expected.items():
            assert inverse.coefficient(size) == count

    @settings(max_examples=40)
    @given(small_series)
    def test_invert_round_trip(self, a):
        tail = MultiSeries(ORDER, {k: c for k, c in a.terms.items() if k[0] >= 1})
        unit = MultiSeries.one(ORDER) + tail
        assert unit * unit.invert() == MultiSeries.one(ORDER)

    def test_invert_rejects_non_unit(self):
        with pytest.raises(ValueError):
            MultiSeries.term(2, ORDER).invert()
        with pytest.raises(ValueError):
            (MultiSeries.one(ORDER) + MultiSeries.term(1, ORDER, x=1)).invert()


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(Monomial(1, q=1), 1, 0, ORDER) == MultiSeries.one(ORDER)

    def test_x_q2_two_factors(self):
        got = pochhammer(Monomial(1, x=1), 2, 2, ORDER)
        assert got == MultiSeries(
            ORDER, {(0, 0, 0): 1, (0, 1, 0): -1, (2, 1, 0): -1, (2, 2, 0): 1}
        )

    def test_infinite_product_counts_strict_partitions(self):
        # oracle first: (-yq; q)_inf coefficients count strict partitions by length
        order = 3
        expected = {}
        for n in range(order + 1):
            for p in partitions(n, distinct=True):
                key = (n, 0, p.length)
                expected[key] = expected.get(key, 0) + 1
        got = pochhammer(Monomial(-1, y=1, q=1), 1, None, order)
        assert got == MultiSeries(order, expected)

    def test_infinite_product_rejects_unanchored(self):
        with pytest.raises(ValueError):
            pochhammer(Monomial(1), 1, None, ORDER)
        with pytest.raises(ValueError):
            pochhammer(Monomial(1, x=1), 1, None, ORDER)  # no x-truncation
        pochhammer(Monomial(1, x=1), 1, None, ORDER, xorder=4)  # fine

    def test_poch_times_inverse(self):
        product = pochhammer(Monomial(1, q=1), 1, 3, ORDER)
        assert product * product.invert() == MultiSeries.one(ORDER)


class TestGaussBinomial:
    def test_choose_zero(self):
        for a in range(5):
            assert gauss_binomial(a, 0, order=ORDER) == MultiSeries.one(ORDER)

    def test_two_choose_one(self):
        assert gauss_binomial(2, 1, order=ORDER) == MultiSeries(
            ORDER, {(0, 0, 0): 1, (1, 0, 0): 1}
        )

    def test_four_choose_two_coefficients(self):
        got = gauss_binomial(4, 2, order=ORDER)
        assert [got.coefficient(i) for i in range(5)] == [1, 1, 2, 1, 1]

    def test_out_of_range_is_zero(self):
        assert gauss_binomial(3, 5, order=ORDER).is_zero()

    def test_counts_box_partitions(self):
        for a in range(9):
            for b in range(a + 1):
                series = gauss_binomial(a, b, order=ORDER)
                for size in range(ORDER + 1):
                    assert series.coefficient(size) == box_partition_count(
                        b, a - b, size
                    ), (a, b, size)

    def test_step_scales_exponents(self):
        plain = gauss_binomial(4, 2, order=ORDER)
        doubled = gauss_binomial(4, 2, step=2, order=2 * ORDER)
        for (q, x, y), coeff in plain.terms.items():
            assert doubled.coefficient(2 * q, x, y) == coeff


class TestSerialization:
    def test_line_format_and_sorting(self):
        series = series_from_terms([((2, 1, 0), 3), ((0, 0, 0), 1), ((2, 0, 1), -1)])
        assert series.serialize().splitlines() == [
            "q^0 x^0 y^0 : 1",
            "q^2 x^0 y^1 : -1",
            "q^2 x^1 y^0 : 3",
        ]

    def test_first_discrepancy(self):
        a = series_from_terms([((1, 0, 0), 1), ((2, 1, 1), 5)])
        b = series_from_terms([((1, 0, 0), 1), ((2, 0, 2), 4)])
        assert a.first_discrepancy(a) is None
        key, left, right = a.first_discrepancy(b)
        assert key == (2, 0, 2) and (left, right) == (0, 4)


class TestBuilders:
    def test_double_sum_at_order_zero(self):
        assert build("LHS_THM11", 0) == MultiSeries.one(0)

    def test_sol_length_coefficient_q6(self):
        # oracle first: strict partitions of 6 classified by (sol, length)
        expected = {}
        for p in partitions(6, distinct=True):
            key = (sol(p), p.length)
            expected[key] = expected.get(key, 0) + 1
        assert expected == {(1, 1): 1, (2, 2): 2, (1, 3): 1}
        series = build("GF_SOL_LEN", 10)
        assert series.coefficient_of_q(6) == expected

    def test_parity_series_smallest_case(self):
        series = build("GF_PARITY", 10, m=2)
        assert series.coefficient(2, 0) == 1
        assert series.coefficient(2, 1) == 0

    def test_double_sum_equals_pochhammer_sum(self):
        assert build("LHS_THM11", 14) == build("RHS_THM11", 14)

    def test_double_sum_counts_two_measure(self):
        order = 12
        expected = {}
        for n in range(order + 1):
            for p in partitions(n, distinct=True):
                key = (n, k_measure(p, 2), p.length)
                expected[key] = expected.get(key, 0) + 1
        assert build("LHS_THM11", order) == MultiSeries(order, expected)

    def test_k_measure_series_matches_enumeration(self):
        order = 10
        for k in (1, 2, 3):
            expected = {}
            for n in range(order + 1):
                for p in partitions(n, distinct=True):
                    key = (n, k_measure(p, k), p.length)
                    expected[key] = expected.get(key, 0) + 1
            assert build("GF_KMEASURE", order, k=k) == MultiSeries(order, expected)

    def test_all_partition_series_matches_enumeration(self):
        order = 10
        expected = {}
        for n in range(order + 1):
            for p in partitions(n):
                key = (n, k_measure(p, 2), p.length)
                expected[key] = expected.get(key, 0) + 1
        assert build("GF_2MEASURE_P", order) == MultiSeries(order, expected)

    def test_type_split_series_agree(self):
        order = 12
        a_series = build("GF_A_TYPES", order)
        b_series = build("GF_B", order)
        reindexed_a = build("GF_SOL_LEN", order).map_exponents(
            lambda q, x, y: (q, x // 2, (y + 1) // 2)
        )
        reindexed_b = build("GF_SOL_LEN", order).map_exponents(
            lambda q, x, y: (q, x, (y + 1) // 2)
        )
        assert a_series == reindexed_a
        assert b_series == reindexed_b

    def test_y_degree_bounded_by_q_degree(self):
        for name in ("LHS_THM11", "RHS_THM11", "GF_SOL_LEN", "GF_2MEASURE_P", "GF_A_TYPES", "GF_B"):
            series = build(name, 10)
            assert all(y <= q for (q, _x, y) in series.terms)

    def test_build_validates_arguments(self):
        with pytest.raises(ValueError):
            build("NO_SUCH_SERIES", 5)
        with pytest.raises(ValueError):
            build("GF_KMEASURE", 5)
        with pytest.raises(ValueError):
            build("GF_SOL_LEN", 5, k=2)


class TestLaurentPoly:
    def test_negative_exponent_arithmetic(self):
        a = LaurentPoly.term(1, q=-2)
        b = LaurentPoly.term(3, q=5)
        assert a * b == LaurentPoly.term(3, q=3)

    def test_poch_hits_zero_factor(self):
        # (q^0 appearing in the product kills it)
        assert LaurentPoly.poch(1, 0, 1, 1).is_zero()
        assert not LaurentPoly.poch(1, -2, 1, 2).is_zero()
        assert LaurentPoly.poch(1, -2, 1, 3).is_zero()

    def test_rejects_negative_x(self):
        with pytest.raises(ValueError):
            LaurentPoly({(0, -1): 1})


class TestFiniteIdentities:
    def test_xq2_trivial_case(self):
        report = check_xq2_expansion(0)
        assert report.passed

    def test_xq2_small_range(self):
        for n in range(7):
            assert check_xq2_expansion(n).passed

    def test_qchu_example_with_vanishing(self):
        report = check_qchu(2, 3)
        assert report.passed
        assert report.counts["vanishes"] == 1

    def test_qchu_nonvanishing(self):
        report = check_qchu(4, 2)
        assert report.passed
        assert report.counts["vanishes"] == 0

    def test_qbinom_spec_example(self):
        assert check_qbinom(Monomial(1, q=1), 10).passed

    def test_dispatch(self):
        assert check_finite_identity("XQ2_EXPANSION", n=3).passed
        assert check_finite_identity("QCHU", i=1, j=1).passed
        assert check_finite_identity("QBINOM", a=Monomial(-1, q=1), order=8).passed
        with pytest.raises(ValueError):
            check_finite_identity("NOPE")
