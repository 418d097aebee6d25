"""
Group comparison with the normality gate
========================================

Generates two synthetic "feature columns" -- one Gaussian, one heavily
skewed -- and shows how the comparison protocol picks ANOVA for the
first and the rank-sum test for the second, then derives an ordering
string like "Real > Fake".
"""

import random

from newsstyle.stats import compare_feature, normality_test, rank_features

rng = random.Random(7)

# a Gaussian feature: word count per article, say
gaussian = {
    "real": [rng.gauss(900, 120) for _ in range(75)],
    "fake": [rng.gauss(640, 120) for _ in range(75)],
}

# a skewed feature: exclamation marks per article
skewed = {
    "real": [rng.expovariate(1.0) for _ in range(75)],
    "fake": [rng.expovariate(0.35) for _ in range(75)],
}

for label, sample in gaussian.items():
    k2, p, normal = normality_test(sample)
    print(f"WC[{label}]: K2={k2:.2f} p={p:.3f} normal={normal}")

results = [
    compare_feature("WC", gaussian),
    compare_feature("exclaim", skewed),
]
for r in results:
    print(f"{r.feature}: test={r.test_used} stat={r.statistic:.3f} "
          f"p={r.p_value:.2e} ordering={r.ordering!r}")

# ranking turns the comparisons into a feature shortlist for the classifier
print("top features:", rank_features(results, k=2))
