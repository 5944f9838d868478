from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pnwords import analysis, core, pnoracle

from conftest import LENGTH5_CLASSES, PNW_COUNTS, all_words


class TestGrayCloseness:
    def test_pair_examples(self):
        assert analysis.transposition_counts("1100011", "1110001") == (1, 1)
        assert analysis.transposition_counts("1111000", "1110110") == (1, 2)
        assert analysis.gray_close(1, 1) and analysis.gray_close(1, 2)
        assert analysis.gray_close(0, 2) and analysis.gray_close(2, 0)  # two flips
        assert not analysis.gray_close(3, 3)
        assert not analysis.gray_close(1, 3)
        assert not analysis.gray_close(2, 4)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            analysis.transposition_counts("10", "100")

    def test_detects_violations(self):
        report = analysis.verify_gray(["0000", "1111", "1110"])
        assert report.pairs == 2
        assert len(report.violations) == 1
        v = report.violations[0]
        assert (v.index, v.word, v.next_word, v.p, v.q) == (0, "0000", "1111", 0, 4)

    def test_cyclic_checks_wrap_pair(self):
        ok = analysis.verify_gray(["00", "10", "11"], cyclic=True)
        assert ok.ok and ok.pairs == 3
        bad = analysis.verify_gray(["0000", "1100", "1111"], cyclic=True)
        assert not bad.ok  # wrap pair 1111 -> 0000 flips four bits

    @pytest.mark.parametrize("n", range(2, 13))
    def test_generator_listings_are_gray(self, n):
        assert analysis.verify_gray(pnoracle.pn_words(n)).ok
        assert analysis.verify_gray(pnoracle.pn_words(n, cyclic=True), cyclic=True).ok


class TestCounts:
    def test_reference_counts(self):
        assert [analysis.count_pnw(n) for n in range(1, 13)] == PNW_COUNTS

    def test_growth_factor(self):
        counts = [analysis.count_pnw(n) for n in range(1, 17)]
        for prev, cur in zip(counts, counts[1:]):
            assert 2 * cur >= 3 * prev

    def test_deficit(self):
        count, deficit = analysis.pnw_deficit(12)
        assert count == 697
        assert deficit > 0


class TestCriticalPrefixSum:
    def test_small_values(self):
        assert analysis.critical_prefix_sum(0) == 0
        assert analysis.critical_prefix_sum(1) == 2
        assert analysis.critical_prefix_sum(2) == 7

    @pytest.mark.parametrize("n", range(0, 15))
    def test_closed_form(self, n):
        assert analysis.critical_prefix_sum(n) == 3 * 2**n - (n + 3)

    def test_recurrence(self):
        values = [analysis.critical_prefix_sum(n) for n in range(15)]
        for n in range(1, 15):
            assert values[n] == 2 * values[n - 1] + (n + 1)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_matches_per_word_scan(self, n):
        expected = sum(core.critical_prefix(w).cr for w in all_words(n))
        assert analysis.critical_prefix_sum(n) == expected

    def test_cap_refusal(self):
        with pytest.raises(ValueError):
            analysis.critical_prefix_sum(21)
        assert analysis.critical_prefix_sum(21, cap=21) == 3 * 2**21 - 24

    def test_jobs_identical(self):
        assert analysis.critical_prefix_sum(16, jobs=4) == analysis.critical_prefix_sum(16)

    def test_all_words_stats(self):
        stats = analysis.cr_stats_all_words(10)
        assert stats.count == 1024 and stats.total == 3059
        assert stats.mean == Fraction(3059, 1024)


class TestAvgCrPn:
    def test_small_values(self):
        assert analysis.avg_cr_pn(5) == Fraction(55, 14)
        assert analysis.avg_cr_pn(1) == 1

    def test_monotone_growth(self):
        means = [analysis.avg_cr_pn(n) for n in range(8, 17)]
        assert all(b > a for a, b in zip(means, means[1:]))

    def test_pn_stats(self):
        stats = analysis.cr_stats_pn(5)
        assert (stats.count, stats.total) == (14, 55)


class TestPnfCriticalPrefix:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_shortcut_matches_full_pnf(self, n):
        for w in all_words(n):
            assert analysis.critical_prefix_of_pnf(w) == core.critical_prefix(core.pnf(w)).cr, w

    @given(st.integers(min_value=1, max_value=200), st.integers(min_value=0))
    def test_shortcut_matches_full_pnf_random(self, n, x):
        w = format(x % (1 << n), f"0{n}b")
        assert analysis.critical_prefix_of_pnf(w) == core.critical_prefix(core.pnf(w)).cr

    def test_length2_mean_is_two(self):
        # every prefix normal form of a length-2 word has full critical prefix
        stats = analysis.pnf_cr_sample(2, samples=64, seed=5)
        assert stats.mean == 2

    def test_deterministic_under_seed(self):
        a = analysis.pnf_cr_sample(40, samples=100, seed=11)
        b = analysis.pnf_cr_sample(40, samples=100, seed=11)
        assert (a.total, a.mean) == (b.total, b.mean)

    def test_slow_growth_band(self):
        small = analysis.pnf_cr_sample(64, samples=300, seed=3)
        large = analysis.pnf_cr_sample(4096, samples=300, seed=3)
        assert small.mean < large.mean < 3 * small.mean

    def test_zero_samples_rejected(self):
        with pytest.raises(ValueError):
            analysis.pnf_cr_sample(8, samples=0, seed=1)


class TestEquivalenceClasses:
    def test_reference_rows(self):
        assert analysis.equivalence_class("11010") == {"11010", "10110", "01101", "01011"}
        assert analysis.equivalence_class("10000") == {"10000", "01000", "00100", "00010", "00001"}
        assert analysis.equivalence_class("11111") == {"11111"}

    def test_rejects_non_normal_input(self):
        with pytest.raises(ValueError):
            analysis.equivalence_class("10011")

    def test_cap_refusal(self):
        with pytest.raises(ValueError):
            analysis.equivalence_class("1" * 21)

    def test_all_length5_rows(self):
        for w, members in LENGTH5_CLASSES.items():
            assert analysis.equivalence_class(w) == members


class TestRejectionRatio:
    def test_reference_values(self):
        assert analysis.rejection_ratio(10, "trivial").ratio == "2.500"
        assert analysis.rejection_ratio(10, "combined").ratio == "2.168"
        assert analysis.rejection_ratio(12, "combined").ratio == "2.142"

    @pytest.mark.parametrize("mode", ["trivial", "combined"])
    @pytest.mark.parametrize("n", range(1, 13))
    def test_matches_per_word_phase1(self, n, mode):
        rejected = sum(core.phase1_rejects(w, mode) for w in all_words(n))
        report = analysis.rejection_ratio(n, mode)
        assert report.rejected == rejected
        assert report.passed == (1 << n) - rejected

    def test_csv_line(self):
        assert analysis.rejection_ratio(10, "combined").csv() == "10,802,222,2.168"

    def test_rounding_is_half_even(self):
        assert analysis._round3(25, 10000) == "0.002"  # 0.0025 rounds to even
        assert analysis._round3(35, 10000) == "0.004"  # 0.0035 rounds up to even
        assert analysis._round3(1, 3) == "0.333"

    def test_cap_and_mode_errors(self):
        with pytest.raises(ValueError):
            analysis.rejection_ratio(22)
        with pytest.raises(ValueError):
            analysis.rejection_ratio(8, "bogus")

    def test_jobs_identical(self):
        a = analysis.rejection_ratio(14, "combined", jobs=3)
        b = analysis.rejection_ratio(14, "combined")
        assert (a.rejected, a.ratio) == (b.rejected, b.ratio)

    def test_odd_lengths_also_decrease_in_combined_mode(self):
        exact = [Fraction(n * analysis.rejection_ratio(n, "combined").passed, 1 << n)
                 for n in (11, 13, 15, 17)]
        assert all(b < a for a, b in zip(exact, exact[1:]))
