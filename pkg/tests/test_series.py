import itertools
import math

import pytest

from centroperm.classes import count_table, enumerate_centrosymmetric, enumerate_class, parse_class_spec
from centroperm.perms import is_centrosymmetric
from centroperm.series import (
    ONE,
    Polynomial,
    RationalGF,
    Series,
    ZERO,
    check_convolution,
    egge_monotone,
    empirical_growth,
    expand,
    gf_from_eventually_periodic,
    growth_rate_rational,
    parse_gf,
    parse_polynomial,
    poly_text,
    positive_root,
    pv_bound_check,
    rc_gf,
    sum_closure_gf,
)

MSM_GF = "(1-x)^2/(1-3x+2x^2-x^3)"
LSO_GF = "(1-x-x^2)/(1-2x-x^2)"


class TestPolynomialBasics:
    def test_trailing_zeros_trimmed(self):
        assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert Polynomial((0, 0)).is_zero()

    def test_arithmetic(self):
        p = parse_polynomial("1+x")
        q = parse_polynomial("1-x")
        assert (p * q) == parse_polynomial("1-x^2")
        assert (p + q) == parse_polynomial("2")
        assert (p - q) == parse_polynomial("2x")

    def test_parse_power(self):
        assert parse_polynomial("(1-x)^2") == parse_polynomial("1-2x+x^2")

    def test_parse_named_examples(self):
        assert parse_polynomial("x^5-2x^4-x^2-x-1").coeffs == (-1, -1, -1, 0, -2, 1)

    def test_text_round_trip(self):
        for text in ("1-3x+2x^2-x^3", "x", "2x^3", "1", "x^2-2x-1"):
            p = parse_polynomial(text)
            assert parse_polynomial(poly_text(p)) == p


class TestRationalGF:
    def test_lowest_terms(self):
        gf = RationalGF(parse_polynomial("2-2x^2"), parse_polynomial("2-2x"))
        assert gf == RationalGF(parse_polynomial("1+x"), ONE)

    def test_denominator_constant_positive(self):
        gf = RationalGF(parse_polynomial("1"), parse_polynomial("-1+2x"))
        assert gf.den.constant_term() > 0
        assert expand(gf, 3).as_ints() == (-1, -2, -4)

    def test_zero_constant_denominator_rejected(self):
        with pytest.raises(ValueError):
            RationalGF(ONE, parse_polynomial("x"))

    def test_gf_text_round_trip(self):
        for text in (MSM_GF, LSO_GF, "1/(1-2x)", "x/(1-x)"):
            gf = parse_gf(text)
            assert parse_gf(str(gf)) == gf


class TestExpand:
    def test_geometric(self):
        assert expand(parse_gf("1/(1-2x)"), 5).as_ints() == (1, 2, 4, 8, 16)

    def test_msm_matches_enumeration(self):
        got = expand(parse_gf(MSM_GF), 9).as_ints()
        counts = tuple(
            len(enumerate_class(parse_class_spec("av:321,3142,2413"), n)) for n in range(9)
        )
        assert got == counts

    def test_lso_matches_enumeration(self):
        got = expand(parse_gf(LSO_GF), 9).as_ints()
        counts = tuple(
            len(enumerate_class(parse_class_spec("av:312,4321,3421"), n)) for n in range(9)
        )
        assert got == counts

    def test_non_unit_denominator_constant(self):
        from fractions import Fraction

        series = expand(parse_gf("1/(2-x)"), 3)
        assert series.coeffs == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))

    def test_series_truncation_is_min(self):
        a = Series.from_ints((1, 1, 1, 1))
        b = Series.from_ints((1, 2))
        assert (a * b).order == 2
        assert (a + b).order == 2


class TestSumClosureGF:
    def test_single_point(self):
        assert sum_closure_gf(parse_gf("x")) == parse_gf("1/(1-x)")

    def test_msm(self):
        assert sum_closure_gf(parse_gf("(x-x^2+x^3)/(1-x)^2")) == parse_gf(MSM_GF)

    def test_lso(self):
        assert sum_closure_gf(parse_gf("x/(1-x-x^2)")) == parse_gf(LSO_GF)

    def test_nonzero_constant_rejected(self):
        with pytest.raises(ValueError, match="constant term"):
            sum_closure_gf(parse_gf("1+x"))


class TestRcGF:
    def test_zero_d_keeps_a(self):
        a = parse_gf("1/(1-x)")
        assert rc_gf(RationalGF(ZERO, ONE), a) == a

    def test_closed_loop_av_231_312(self):
        # d_n = 1 for n >= 1 (checked by exhaustive filter below)
        d = parse_gf("x/(1-x)")
        a = parse_gf("(1-x)/(1-2x)")
        assert rc_gf(d, a) == parse_gf("1/(1-2x)")

    def test_d_counts_by_exhaustive_filter(self):
        from centroperm.perms import is_sum_indecomposable

        spec = parse_class_spec("av:231,312")
        for n in range(1, 5):
            centro = enumerate_centrosymmetric(spec, 2 * n)
            d_n = sum(1 for p in centro if is_sum_indecomposable(p))
            assert d_n == 1

    def test_convolution_identity_on_tables(self):
        for text in ("av:231,312", "av:321", "av:321,3412"):
            table = count_table(parse_class_spec(text), 10)
            report = check_convolution(table)
            assert report.holds, (text, report)

    def test_convolution_reports_failures(self):
        from centroperm.classes import CountTable

        broken = CountTable(
            spec_text="fake", max_n=4,
            a=(1, 1, 1, 1, 1), b_even=(1, 2, 9), b_odd=(1, 1),
            c=(0, 1, 0, 0, 0), d=(0, 1, 1),
        )
        report = check_convolution(broken)
        assert not report.holds and report.first_failure == 2


class TestSeriesIdentity:
    def test_class_series_times_one_minus_ind_series(self):
        for text in ("av:321", "av:231,312", "av:321,3412"):
            table = count_table(parse_class_spec(text), 8)
            a = Series.from_ints(table.a)
            c = Series.from_ints(table.c)
            one = Series.from_ints((1,) + (0,) * (len(table.a) - 1))
            product = a * (one - c)
            assert product.as_ints() == (1,) + (0,) * (product.order - 1), text


class TestEggeMonotone:
    def test_k2_always_one(self):
        for n in range(6):
            assert egge_monotone(2, n) == 1

    def test_k3_central_binomial(self):
        assert egge_monotone(3, 3) == 20
        for n in range(6):
            assert egge_monotone(3, n) == math.comb(2 * n, n)

    def test_spot_value_by_brute_force(self):
        # all 8 centrosymmetric size-4 permutations, minus the one containing 4321
        centro4 = [
            p for p in itertools.permutations(range(1, 5)) if is_centrosymmetric(p)
        ]
        assert len(centro4) == 8
        survivors = [p for p in centro4 if p != (4, 3, 2, 1)]
        assert egge_monotone(4, 2) == len(survivors) == 7

    def test_oracle_equivalence(self):
        for k in (2, 3, 4, 5):
            pattern = "".join(str(v) for v in range(k, 0, -1))
            spec = parse_class_spec(f"av:{pattern}")
            for n in range(6):
                direct = len(enumerate_centrosymmetric(spec, 2 * n))
                assert egge_monotone(k, n) == direct, (k, n)


class TestRoots:
    def test_silver_ratio(self):
        root = positive_root(parse_polynomial("x^2-2x-1"))
        assert abs(root - (1 + math.sqrt(2))) < 1e-8

    def test_threshold_roots(self):
        xi = positive_root(parse_polynomial("x^5-2x^4-x^2-x-1"))
        tau = positive_root(parse_polynomial("x^3-3x^2+2x-1"))
        assert abs(xi - 2.30522) < 1e-5
        assert abs(tau - 2.32472) < 1e-5

    def test_residual_small(self):
        for text in ("x^5-2x^4-x^2-x-1", "x^3-3x^2+2x-1", "x^2-2x-1"):
            poly = parse_polynomial(text)
            assert abs(poly(positive_root(poly))) < 1e-7

    def test_no_positive_root_rejected(self):
        with pytest.raises(ValueError):
            positive_root(parse_polynomial("x^2+1"))

    def test_multiple_positive_roots_rejected(self):
        with pytest.raises(ValueError):
            positive_root(parse_polynomial("x^2-3x+2"))

    def test_zero_roots_stripped(self):
        # x^3 - 2x^2 - 2x = x(x^2 - 2x - 2): positive root 1 + sqrt(3)
        root = positive_root(parse_polynomial("x^3-2x^2-2x"))
        assert abs(root - (1 + math.sqrt(3))) < 1e-8


class TestGrowthRate:
    def test_geometric(self):
        assert abs(growth_rate_rational(parse_gf("1/(1-2x)")) - 2) < 1e-8

    def test_msm(self):
        assert abs(growth_rate_rational(parse_gf(MSM_GF)) - 2.32472) < 1e-5

    def test_lso(self):
        assert abs(growth_rate_rational(parse_gf(LSO_GF)) - 2.41421) < 1e-5

    def test_polynomial_is_subexponential(self):
        assert growth_rate_rational(parse_gf("1+x+2x^2")) == "subexponential"

    def test_growth_one(self):
        assert abs(growth_rate_rational(parse_gf("1/(1-x)")) - 1.0) < 1e-8

    def test_repeated_factor_denominator(self):
        assert abs(growth_rate_rational(parse_gf("1/(1-2x)^2")) - 2) < 1e-6


class TestEventuallyPeriodic:
    def test_all_ones(self):
        assert gf_from_eventually_periodic([], [1]) == parse_gf("1/(1-x)")

    def test_terminating_sequence_is_polynomial(self):
        gf = gf_from_eventually_periodic([1, 1, 2, 4, 3, 3, 2, 1], [0])
        assert gf.den == ONE
        assert expand(gf, 10).as_ints() == (1, 1, 2, 4, 3, 3, 2, 1, 0, 0)

    def test_head_then_constant(self):
        gf = gf_from_eventually_periodic([1, 1, 2, 3], [4])
        assert expand(gf, 9).as_ints() == (1, 1, 2, 3, 4, 4, 4, 4, 4)

    def test_longer_period(self):
        gf = gf_from_eventually_periodic([5], [1, 2])
        assert expand(gf, 7).as_ints() == (5, 1, 2, 1, 2, 1, 2)


class TestEmpiricalGrowth:
    def test_powers_of_two(self):
        report = empirical_growth([2**n for n in range(7)])
        assert all(r == 2 for r in report.ratios)

    def test_catalan_ratios_increase_toward_four(self):
        report = empirical_growth([1, 1, 2, 5, 14, 42, 132])
        ratios = report.ratios
        assert all(a <= b for a, b in zip(ratios, ratios[1:]))
        assert all(r < 4 for r in ratios)

    def test_even_centro_row_ratios_approach_four(self):
        report = empirical_growth([1, 2, 6, 20, 70, 252])
        assert all(a < b for a, b in zip(report.ratios, report.ratios[1:]))
        assert all(r < 4 for r in report.ratios)

    def test_zeros_yield_none_ratios(self):
        report = empirical_growth([1, 1, 0, 0])
        assert report.ratios[-1] is None

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            empirical_growth([1, -1])


class TestEnvelopes:
    def test_tiny_counts_pass(self):
        assert pv_bound_check([1, 1, 0, 0, 0]).passed

    def test_all_four_tail_passes(self):
        assert pv_bound_check([1, 1, 2, 3, 4, 4, 4]).passed

    def test_five_then_fours(self):
        report = pv_bound_check([1, 1, 2, 3, 4, 4, 5, 4, 4])
        assert report.passed

    def test_second_entry_violation(self):
        report = pv_bound_check([1, 2, 1, 1])
        assert not report.passed
        assert report.first_violation == 2

    def test_msm_ind_counts_exceed_envelopes(self):
        # n-1 grows past every envelope, matching a growth rate above the threshold
        assert not pv_bound_check([1, 1, 2, 3, 4, 5, 6, 7]).passed
