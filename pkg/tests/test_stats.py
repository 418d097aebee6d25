import math
import random

import pytest
import scipy.special
import scipy.stats
from hypothesis import given, settings
from hypothesis import strategies as hs

from newsstyle.stats import (
    DomainError,
    OrderingReport,
    anova_oneway,
    chi2_sf,
    compare_feature,
    confidence_interval,
    derive_ordering,
    f_sf,
    kruskal_wallis,
    ln_gamma,
    normal_cdf,
    normality_test,
    rank_features,
    ranksum,
    reg_incomplete_beta,
    reg_incomplete_gamma_p,
    t_ppf,
)
from newsstyle.stats import TestResult as StatRow


class TestSpecialFunctionAnchors:
    def test_ln_gamma(self):
        assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-12)
        assert ln_gamma(2.0) == pytest.approx(0.0, abs=1e-12)
        assert ln_gamma(0.5) == pytest.approx(0.5723649429, abs=1e-9)
        assert ln_gamma(6.0) == pytest.approx(math.log(120.0), abs=1e-9)

    def test_ln_gamma_domain(self):
        with pytest.raises(DomainError):
            ln_gamma(0.0)
        with pytest.raises(DomainError):
            ln_gamma(-1.5)

    def test_incomplete_beta(self):
        assert reg_incomplete_beta(0.5, 3.0, 3.0) == pytest.approx(0.5, abs=1e-12)
        for x in (0.1, 0.33, 0.7, 0.95):
            assert reg_incomplete_beta(x, 1.0, 1.0) == pytest.approx(x, abs=1e-12)
        assert reg_incomplete_beta(0.25, 2.0, 2.0) == pytest.approx(0.15625, abs=1e-10)
        assert reg_incomplete_beta(0.0, 2.0, 5.0) == 0.0
        assert reg_incomplete_beta(1.0, 2.0, 5.0) == 1.0

    def test_incomplete_gamma(self):
        for x in (0.1, 1.0, 2.5, 10.0):
            assert reg_incomplete_gamma_p(1.0, x) == pytest.approx(1.0 - math.exp(-x), abs=1e-10)
        assert reg_incomplete_gamma_p(3.0, 0.0) == 0.0

    def test_chi2_sf(self):
        assert chi2_sf(2.0, 2.0) == pytest.approx(math.exp(-1.0), abs=1e-10)

    def test_normal_cdf(self):
        assert normal_cdf(0.0) == pytest.approx(0.5, abs=1e-12)
        assert normal_cdf(1.959963984540054) == pytest.approx(0.975, abs=1e-9)
        assert normal_cdf(-1.959963984540054) == pytest.approx(0.025, abs=1e-9)

    def test_t_ppf(self):
        assert t_ppf(0.975, 10) == pytest.approx(2.2281388519, abs=1e-6)
        assert t_ppf(0.5, 7) == pytest.approx(0.0, abs=1e-6)


class TestSpecialFunctionsAgainstScipy:
    def test_ln_gamma_sweep(self):
        rng = random.Random(101)
        for _ in range(500):
            x = math.exp(rng.uniform(math.log(0.5), math.log(1e6)))
            assert ln_gamma(x) == pytest.approx(scipy.special.gammaln(x), abs=1e-8)

    def test_beta_sweep(self):
        rng = random.Random(102)
        for _ in range(500):
            a, b = rng.uniform(0.5, 50), rng.uniform(0.5, 50)
            x = rng.random()
            assert reg_incomplete_beta(x, a, b) == pytest.approx(
                scipy.special.betainc(a, b, x), abs=1e-10)

    def test_gamma_sweep(self):
        rng = random.Random(103)
        for _ in range(500):
            a = rng.uniform(0.5, 50)
            x = rng.uniform(0.0, 100.0)
            assert reg_incomplete_gamma_p(a, x) == pytest.approx(
                scipy.special.gammainc(a, x), abs=1e-10)

    def test_f_sf_sweep(self):
        rng = random.Random(104)
        for _ in range(200):
            f = rng.uniform(0.01, 20)
            d1, d2 = rng.randint(1, 10), rng.randint(2, 200)
            assert f_sf(f, d1, d2) == pytest.approx(scipy.stats.f.sf(f, d1, d2), abs=1e-10)

    def test_t_ppf_sweep(self):
        rng = random.Random(105)
        for _ in range(100):
            q = rng.uniform(0.51, 0.999)
            df = rng.randint(2, 120)
            assert t_ppf(q, df) == pytest.approx(scipy.stats.t.ppf(q, df), abs=1e-6)


class TestNormalityTest:
    def test_matches_scipy_on_large_samples(self):
        rng = random.Random(42)
        for _ in range(20):
            xs = [rng.gauss(0, 1) for _ in range(rng.randint(25, 300))]
            k2, p, _ = normality_test(xs)
            ref_k2, ref_p = scipy.stats.normaltest(xs)
            assert k2 == pytest.approx(ref_k2, abs=1e-8)
            assert p == pytest.approx(ref_p, abs=1e-8)

    def test_small_sample_auto_nonnormal(self):
        assert normality_test([1.0, 2.0, 3.0])[2] is False
        assert normality_test([float(i) for i in range(19)])[2] is False

    def test_constant_sample_nonnormal(self):
        assert normality_test([5.0] * 40)[2] is False

    def test_gaussian_usually_passes(self):
        rng = random.Random(7)
        xs = [rng.gauss(10, 2) for _ in range(200)]
        assert normality_test(xs)[2] is True

    def test_exponential_fails(self):
        rng = random.Random(8)
        xs = [rng.expovariate(1.0) for _ in range(200)]
        assert normality_test(xs)[2] is False


class TestAnova:
    def test_anchor(self):
        f, p = anova_oneway([[1, 2, 3, 4], [3, 4, 5, 6]])
        assert f == pytest.approx(4.8, abs=1e-12)
        assert p == pytest.approx(scipy.stats.f_oneway([1, 2, 3, 4], [3, 4, 5, 6]).pvalue,
                                  abs=1e-10)

    def test_identical_groups(self):
        assert anova_oneway([[2.0, 2.0], [2.0, 2.0]]) == (0.0, 1.0)

    def test_zero_within_variance(self):
        f, p = anova_oneway([[1.0, 1.0], [2.0, 2.0]])
        assert math.isinf(f) and p == 0.0

    def test_too_small(self):
        with pytest.raises(DomainError):
            anova_oneway([[1.0], [2.0, 3.0]])
        with pytest.raises(DomainError):
            anova_oneway([[1.0, 2.0]])

    def test_matches_scipy_random(self):
        rng = random.Random(55)
        for _ in range(50):
            gs = [[rng.gauss(rng.uniform(-1, 1), 1) for _ in range(rng.randint(5, 40))]
                  for _ in range(rng.randint(2, 4))]
            f, p = anova_oneway(gs)
            ref = scipy.stats.f_oneway(*gs)
            assert f == pytest.approx(ref.statistic, abs=1e-6)
            assert p == pytest.approx(ref.pvalue, abs=1e-4)

    @settings(max_examples=100, deadline=None)
    @given(hs.floats(-50, 50), hs.floats(0.01, 10), hs.integers(0, 10_000))
    def test_shift_scale_invariance(self, shift, scale, seed):
        rng = random.Random(seed)
        gs = [[rng.gauss(0, 1) for _ in range(10)] for _ in range(3)]
        f1, _ = anova_oneway(gs)
        f2, _ = anova_oneway([[scale * x + shift for x in g] for g in gs])
        assert f2 == pytest.approx(f1, rel=1e-9, abs=1e-9)


class TestRanksum:
    def test_anchor(self):
        z, p = ranksum([1, 2, 3], [4, 5, 6])
        assert z == pytest.approx(-1.9640, abs=1e-4)
        assert p == pytest.approx(2 * (1 - normal_cdf(abs(z))), abs=1e-12)

    def test_all_tied(self):
        assert ranksum([3.0, 3.0], [3.0, 3.0, 3.0]) == (0.0, 1.0)

    def test_empty_sample(self):
        with pytest.raises(DomainError):
            ranksum([], [1.0])

    def test_matches_scipy_random(self):
        rng = random.Random(66)
        for _ in range(50):
            a = [rng.gauss(0, 1) for _ in range(rng.randint(5, 40))]
            b = [rng.gauss(0.5, 1.2) for _ in range(rng.randint(5, 40))]
            z, p = ranksum(a, b)
            ref_z, ref_p = scipy.stats.ranksums(a, b)
            assert z == pytest.approx(ref_z, abs=1e-6)
            assert p == pytest.approx(ref_p, abs=1e-4)

    def test_tie_correction_matches_mannwhitney(self):
        a = [1, 2, 2, 3, 3, 3, 4]
        b = [2, 3, 3, 4, 4, 5, 5, 6]
        z, p = ranksum(a, b)
        ref = scipy.stats.mannwhitneyu(a, b, alternative="two-sided",
                                       use_continuity=False, method="asymptotic")
        assert p == pytest.approx(ref.pvalue, abs=1e-10)

    @settings(max_examples=100, deadline=None)
    @given(hs.integers(0, 10_000))
    def test_monotone_transform_invariance(self, seed):
        rng = random.Random(seed)
        a = [rng.uniform(0, 5) for _ in range(12)]
        b = [rng.uniform(1, 6) for _ in range(9)]
        z1, p1 = ranksum(a, b)
        z2, p2 = ranksum([math.exp(x) for x in a], [math.exp(x) for x in b])
        assert z2 == pytest.approx(z1, abs=1e-9)
        assert p2 == pytest.approx(p1, abs=1e-9)


class TestKruskal:
    def test_anchor(self):
        h, p = kruskal_wallis([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        assert h == pytest.approx(7.2, abs=1e-10)
        ref = scipy.stats.kruskal([1, 2, 3], [4, 5, 6], [7, 8, 9])
        assert p == pytest.approx(ref.pvalue, abs=1e-10)

    def test_requires_three_groups(self):
        with pytest.raises(DomainError):
            kruskal_wallis([[1, 2], [3, 4]])

    def test_matches_scipy_random(self):
        rng = random.Random(77)
        for _ in range(50):
            gs = [[rng.gauss(rng.uniform(-1, 1), 1) for _ in range(rng.randint(5, 30))]
                  for _ in range(3)]
            h, p = kruskal_wallis(gs)
            ref = scipy.stats.kruskal(*gs)
            assert h == pytest.approx(ref.statistic, abs=1e-6)
            assert p == pytest.approx(ref.pvalue, abs=1e-4)

    def test_all_tied(self):
        assert kruskal_wallis([[1.0, 1.0], [1.0, 1.0], [1.0, 1.0]]) == (0.0, 1.0)


class TestBetaSymmetryProperty:
    @settings(max_examples=200, deadline=None)
    @given(hs.floats(0.001, 0.999), hs.floats(0.5, 40), hs.floats(0.5, 40))
    def test_complement_identity(self, x, a, b):
        lhs = reg_incomplete_beta(x, a, b) + reg_incomplete_beta(1.0 - x, b, a)
        assert lhs == pytest.approx(1.0, abs=1e-9)


class TestCompareFeature:
    def _gaussians(self, seed, means, n=60):
        rng = random.Random(seed)
        return {label: [rng.gauss(mu, 1.0) for _ in range(n)]
                for label, mu in means.items()}

    def test_routes_to_anova_when_normal(self):
        groups = self._gaussians(1, {"real": 0.0, "fake": 1.0})
        res = compare_feature("x", groups)
        assert res.test_used == "anova"
        assert res.significant

    def test_routes_to_ranksum_when_nonnormal(self):
        rng = random.Random(2)
        groups = {"real": [rng.expovariate(1.0) for _ in range(60)],
                  "fake": [rng.expovariate(0.4) for _ in range(60)]}
        res = compare_feature("x", groups)
        assert res.test_used == "ranksum"

    def test_routes_to_kruskal_three_groups(self):
        rng = random.Random(3)
        groups = {l: [rng.expovariate(r) for _ in range(60)]
                  for l, r in (("real", 1.0), ("fake", 0.5), ("satire", 0.7))}
        res = compare_feature("x", groups)
        assert res.test_used == "kruskal"

    def test_small_samples_use_rank_test(self):
        groups = {"real": [1.0, 2.0, 3.0], "fake": [4.0, 5.0, 6.0]}
        assert compare_feature("x", groups).test_used == "ranksum"

    def test_undefined_values_dropped(self):
        groups = self._gaussians(4, {"real": 0.0, "fake": 2.0}, n=40)
        groups["real"] = groups["real"] + [None, float("nan")]
        res = compare_feature("x", groups)
        assert res.test_used != "skipped"
        assert len(res.group_means) == 2

    def test_skip_when_group_too_sparse(self):
        groups = {"real": [1.0, 2.0, 3.0], "fake": [None, None, 1.0]}
        res = compare_feature("x", groups)
        assert res.test_used == "skipped"
        assert "fake" in res.skipped_reason
        assert not res.significant

    def test_degenerate_constant_data_flagged(self):
        groups = {"real": [2.0, 2.0, 2.0], "fake": [2.0, 2.0, 2.0]}
        res = compare_feature("x", groups)
        assert res.degenerate
        assert res.p_value == 1.0


class TestDeriveOrdering:
    def test_clear_separation(self):
        groups = {"real": [10.0 + i * 0.1 for i in range(20)],
                  "fake": [float(i) * 0.1 for i in range(20)]}
        means = {l: sum(v) / len(v) for l, v in groups.items()}
        assert derive_ordering(means, groups) == "Real > Fake"

    def test_equal_groups(self):
        rng = random.Random(9)
        a = [rng.gauss(0, 1) for _ in range(20)]
        groups = {"real": a, "fake": list(a)}
        means = {l: sum(v) / len(v) for l, v in groups.items()}
        assert "=" in derive_ordering(means, groups)

    def test_three_way(self):
        groups = {"satire": [30.0 + i for i in range(15)],
                  "fake": [15.0 + i * 0.1 for i in range(15)],
                  "real": [float(i) * 0.1 for i in range(15)]}
        means = {l: sum(v) / len(v) for l, v in groups.items()}
        assert derive_ordering(means, groups) == "Satire > Fake > Real"


class TestRankFeatures:
    def _r(self, name, p, stat=1.0, used="ranksum"):
        return StatRow(feature=name, test_used=used, statistic=stat, p_value=p,
                          group_means={}, ordering="", significant=p < 0.05)

    def test_p_ascending(self):
        rs = [self._r("a", 0.03), self._r("b", 0.001), self._r("c", 0.02)]
        assert rank_features(rs, 3) == ["b", "c", "a"]

    def test_only_significant(self):
        rs = [self._r("a", 0.001), self._r("b", 0.2)]
        assert rank_features(rs, 4) == ["a"]

    def test_tie_break_statistic_then_name(self):
        rs = [self._r("b", 0.01, stat=2.0), self._r("a", 0.01, stat=2.0),
              self._r("c", 0.01, stat=5.0)]
        assert rank_features(rs, 3) == ["c", "a", "b"]

    def test_skipped_excluded(self):
        rs = [self._r("a", 0.001, used="skipped"), self._r("b", 0.01)]
        assert rank_features(rs, 2) == ["b"]

    def test_k_truncates(self):
        rs = [self._r(n, 0.01 * (i + 1)) for i, n in enumerate("abcd")]
        assert rank_features(rs, 2) == ["a", "b"]


class TestOrderingReport:
    def test_sorted_rows_places_skipped_last(self):
        rows = [
            StatRow("a", "skipped", 0.0, 1.0, {}, "", False),
            StatRow("b", "ranksum", 2.0, 0.04, {}, "", True),
            StatRow("c", "anova", 9.0, 0.001, {}, "", True),
        ]
        rep = OrderingReport(part="body", dataset_id=1, alpha=0.05, rows=rows)
        assert [r.feature for r in rep.sorted_rows()] == ["c", "b", "a"]


class TestConfidenceInterval:
    def test_matches_scipy(self):
        rng = random.Random(11)
        xs = [rng.gauss(5, 2) for _ in range(40)]
        m, lo, hi = confidence_interval(xs)
        ref = scipy.stats.t.interval(0.95, len(xs) - 1,
                                     loc=sum(xs) / len(xs),
                                     scale=scipy.stats.sem(xs))
        assert lo == pytest.approx(ref[0], abs=1e-6)
        assert hi == pytest.approx(ref[1], abs=1e-6)
        assert lo < m < hi

    def test_singleton(self):
        assert confidence_interval([3.0]) == (3.0, 3.0, 3.0)
