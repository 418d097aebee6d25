"""Hypothesis-testing protocol: normality gate, one-way ANOVA, Wilcoxon
rank-sum, Kruskal-Wallis, group orderings, and feature ranking.

The distribution CDFs are built on self-contained special functions
(Lanczos log-gamma, continued-fraction incomplete beta/gamma) so the
statistical core has no third-party dependency; the test suite checks them
against an independent reference implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

ALPHA_DEFAULT = 0.05


class DomainError(ValueError):
    pass


# ---------------------------------------------------------------------------
# special functions

# Lanczos g=7, n=9 coefficients
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def ln_gamma(x: float) -> float:
    """log Gamma(x) for x > 0 (Lanczos approximation)."""
    if x <= 0:
        raise DomainError(f"ln_gamma requires x > 0, got {x}")
    if x < 0.5:
        # reflection keeps the approximation accurate near 0
        return math.log(math.pi / math.sin(math.pi * x)) - ln_gamma(1.0 - x)
    x -= 1.0
    a = _LANCZOS[0]
    t = x + 7.5
    for i in range(1, 9):
        a += _LANCZOS[i] / (x + i)
    return 0.5 * math.log(2.0 * math.pi) + (x + 0.5) * math.log(t) - t + math.log(a)


def _betacf(x: float, a: float, b: float) -> float:
    """Continued fraction for the incomplete beta (modified Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 300):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            break
    return h


def reg_incomplete_beta(x: float, a: float, b: float) -> float:
    """Regularized incomplete beta I_x(a, b)."""
    if not (0.0 <= x <= 1.0) or a <= 0 or b <= 0:
        raise DomainError(f"reg_incomplete_beta domain violation: x={x}, a={a}, b={b}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    front = math.exp(
        ln_gamma(a + b) - ln_gamma(a) - ln_gamma(b)
        + a * math.log(x) + b * math.log1p(-x)
    )
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(x, a, b) / a
    return 1.0 - front * _betacf(1.0 - x, b, a) / b


def reg_incomplete_gamma_p(a: float, x: float) -> float:
    """Regularized lower incomplete gamma P(a, x)."""
    if a <= 0 or x < 0:
        raise DomainError(f"reg_incomplete_gamma_p domain violation: a={a}, x={x}")
    if x == 0.0:
        return 0.0
    if x < a + 1.0:
        # series representation
        term = 1.0 / a
        total = term
        n = a
        for _ in range(1000):
            n += 1.0
            term *= x / n
            total += term
            if abs(term) < abs(total) * 1e-16:
                break
        return total * math.exp(-x + a * math.log(x) - ln_gamma(a))
    # continued fraction for Q(a, x)
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1e300
    d = 1.0 / b
    h = d
    for i in range(1, 1000):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < tiny:
            d = tiny
        c = b + an / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            break
    q = h * math.exp(-x + a * math.log(x) - ln_gamma(a))
    return 1.0 - q


def normal_cdf(z: float) -> float:
    """Standard normal CDF."""
    return 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))


def chi2_sf(x: float, df: float) -> float:
    """Chi-square survival function 1 - CDF."""
    if x <= 0:
        return 1.0
    return 1.0 - reg_incomplete_gamma_p(df / 2.0, x / 2.0)


def f_sf(f: float, df1: float, df2: float) -> float:
    """F-distribution survival function via the incomplete beta."""
    if f <= 0:
        return 1.0
    x = df2 / (df2 + df1 * f)
    return reg_incomplete_beta(x, df2 / 2.0, df1 / 2.0)


def t_ppf(q: float, df: int) -> float:
    """Student-t quantile by bisection on the CDF (q in (0,1))."""
    if not (0.0 < q < 1.0):
        raise DomainError(f"t_ppf requires q in (0,1), got {q}")
    if df < 1:
        raise DomainError(f"t_ppf requires df >= 1, got {df}")

    def cdf(t: float) -> float:
        if t == 0.0:
            return 0.5
        p = 0.5 * reg_incomplete_beta(df / (df + t * t), df / 2.0, 0.5)
        return p if t < 0 else 1.0 - p

    lo, hi = -1e6, 1e6
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if cdf(mid) < q:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# sample statistics

def _mean(xs) -> float:
    return sum(xs) / len(xs)


def _moments(xs) -> tuple[float, float, float, float]:
    m = _mean(xs)
    m2 = _mean([(x - m) ** 2 for x in xs])
    m3 = _mean([(x - m) ** 3 for x in xs])
    m4 = _mean([(x - m) ** 4 for x in xs])
    return m, m2, m3, m4


def _skew_z(xs) -> float:
    """D'Agostino (1970) transformed skewness statistic."""
    n = len(xs)
    _, m2, m3, _ = _moments(xs)
    b1 = m3 / m2 ** 1.5
    y = b1 * math.sqrt((n + 1.0) * (n + 3.0) / (6.0 * (n - 2.0)))
    beta2 = (
        3.0 * (n * n + 27.0 * n - 70.0) * (n + 1.0) * (n + 3.0)
        / ((n - 2.0) * (n + 5.0) * (n + 7.0) * (n + 9.0))
    )
    w2 = -1.0 + math.sqrt(2.0 * (beta2 - 1.0))
    delta = 1.0 / math.sqrt(0.5 * math.log(w2))
    alpha = math.sqrt(2.0 / (w2 - 1.0))
    y = y / alpha
    return delta * math.log(y + math.sqrt(y * y + 1.0))


def _kurt_z(xs) -> float:
    """Anscombe-Glynn transformed kurtosis statistic."""
    n = len(xs)
    _, m2, _, m4 = _moments(xs)
    b2 = m4 / (m2 * m2)
    e = 3.0 * (n - 1.0) / (n + 1.0)
    var = 24.0 * n * (n - 2.0) * (n - 3.0) / ((n + 1.0) ** 2 * (n + 3.0) * (n + 5.0))
    x = (b2 - e) / math.sqrt(var)
    beta1 = (
        6.0 * (n * n - 5.0 * n + 2.0) / ((n + 7.0) * (n + 9.0))
        * math.sqrt(6.0 * (n + 3.0) * (n + 5.0) / (n * (n - 2.0) * (n - 3.0)))
    )
    a = 6.0 + 8.0 / beta1 * (2.0 / beta1 + math.sqrt(1.0 + 4.0 / (beta1 * beta1)))
    num = 1.0 - 2.0 / a
    denom = 1.0 + x * math.sqrt(2.0 / (a - 4.0))
    term = ((num / denom) ** (1.0 / 3.0)) if denom > 0 else -((num / -denom) ** (1.0 / 3.0))
    return ((1.0 - 2.0 / (9.0 * a)) - term) / math.sqrt(2.0 / (9.0 * a))


def normality_test(sample: list[float], alpha: float = ALPHA_DEFAULT) -> tuple[float, float, bool]:
    """D'Agostino-Pearson K-squared omnibus normality test.

    Samples smaller than 20 (or with zero variance) are auto-classified
    non-normal: the omnibus approximation is unreliable there and the
    rank-based fallback is always valid.
    """
    n = len(sample)
    if n < 20:
        return 0.0, 0.0, False
    _, m2, _, _ = _moments(sample)
    if m2 <= 0:
        return 0.0, 0.0, False
    zs = _skew_z(sample)
    zk = _kurt_z(sample)
    k2 = zs * zs + zk * zk
    p = chi2_sf(k2, 2.0)
    return k2, p, p > alpha


def anova_oneway(groups: list[list[float]]) -> tuple[float, float]:
    """One-way ANOVA F statistic and p-value.

    Zero within-group variance with unequal means gives (inf, 0);
    all-identical data gives (0, 1).
    """
    if len(groups) < 2 or any(len(g) < 2 for g in groups):
        raise DomainError("anova_oneway needs >= 2 groups with >= 2 values each")
    k = len(groups)
    n_total = sum(len(g) for g in groups)
    grand = sum(sum(g) for g in groups) / n_total
    ss_between = sum(len(g) * (_mean(g) - grand) ** 2 for g in groups)
    ss_within = sum(sum((x - _mean(g)) ** 2 for x in g) for g in groups)
    df1, df2 = k - 1, n_total - k
    if ss_within == 0.0:
        if ss_between == 0.0:
            return 0.0, 1.0
        return math.inf, 0.0
    f = (ss_between / df1) / (ss_within / df2)
    return f, f_sf(f, df1, df2)


def _midranks(pooled: list[float]) -> tuple[list[float], list[int]]:
    order = sorted(range(len(pooled)), key=lambda i: pooled[i])
    ranks = [0.0] * len(pooled)
    ties = []
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and pooled[order[j + 1]] == pooled[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for idx in order[i:j + 1]:
            ranks[idx] = avg
        if j > i:
            ties.append(j - i + 1)
        i = j + 1
    return ranks, ties


def ranksum(a: list[float], b: list[float]) -> tuple[float, float]:
    """Wilcoxon rank-sum z statistic and two-sided normal-approximation p,
    with tie-corrected variance and no continuity correction.

    All-tied pooled data degenerates to (0, 1).
    """
    if not a or not b:
        raise DomainError("ranksum requires two non-empty samples")
    n1, n2 = len(a), len(b)
    pooled = list(a) + list(b)
    ranks, ties = _midranks(pooled)
    w = sum(ranks[:n1])
    n = n1 + n2
    mean = n1 * (n + 1) / 2.0
    tie_term = sum(t ** 3 - t for t in ties) / (n * (n - 1.0)) if n > 1 else 0.0
    var = n1 * n2 / 12.0 * ((n + 1.0) - tie_term)
    if var <= 0:
        return 0.0, 1.0
    z = (w - mean) / math.sqrt(var)
    p = 2.0 * (1.0 - normal_cdf(abs(z)))
    return z, min(p, 1.0)


def kruskal_wallis(groups: list[list[float]]) -> tuple[float, float]:
    """Kruskal-Wallis H with tie correction; p from chi-square df=k-1."""
    if len(groups) < 3:
        raise DomainError("kruskal_wallis needs >= 3 groups")
    pooled = [x for g in groups for x in g]
    n = len(pooled)
    ranks, ties = _midranks(pooled)
    h = 0.0
    offset = 0
    for g in groups:
        r = sum(ranks[offset:offset + len(g)])
        h += r * r / len(g)
        offset += len(g)
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0)
    correction = 1.0 - sum(t ** 3 - t for t in ties) / (n ** 3 - n)
    if correction <= 0:
        return 0.0, 1.0
    h /= correction
    return h, chi2_sf(h, len(groups) - 1.0)


# ---------------------------------------------------------------------------
# comparison protocol

@dataclass
class TestResult:
    feature: str
    test_used: str  # anova | ranksum | kruskal | skipped
    statistic: float
    p_value: float
    group_means: dict[str, float]
    ordering: str
    significant: bool
    skipped_reason: str = ""
    degenerate: bool = False


@dataclass
class OrderingReport:
    part: str
    dataset_id: int
    alpha: float
    rows: list[TestResult] = field(default_factory=list)

    def sorted_rows(self) -> list[TestResult]:
        tested = [r for r in self.rows if r.test_used != "skipped"]
        skipped = [r for r in self.rows if r.test_used == "skipped"]
        tested.sort(key=lambda r: (r.p_value, -abs(r.statistic), r.feature))
        return tested + skipped


def derive_ordering(
    group_means: dict[str, float],
    groups: dict[str, list[float]],
    alpha: float = ALPHA_DEFAULT,
) -> str:
    """Ordering text like ``Real > Fake = Satire``.

    Groups are sorted by mean descending; adjacent pairs are separated by
    ``>`` when their pairwise rank-sum is significant at alpha, ``=``
    otherwise.
    """
    labels = sorted(group_means, key=lambda l: (-group_means[l], l))
    parts = [labels[0].capitalize()]
    for prev, cur in zip(labels, labels[1:]):
        _, p = ranksum(groups[prev], groups[cur])
        parts.append(">" if p < alpha else "=")
        parts.append(cur.capitalize())
    return " ".join(parts)


def compare_feature(
    feature: str,
    groups: dict[str, list[float | None]],
    alpha: float = ALPHA_DEFAULT,
) -> TestResult:
    """Route one feature through the normality gate and derive its ordering.

    Undefined values are dropped per group; all groups normal -> ANOVA,
    otherwise rank-sum (2 groups) or Kruskal-Wallis (3+).
    """
    clean = {
        label: [float(v) for v in vals if v is not None and not math.isnan(v)]
        for label, vals in groups.items()
    }
    small = [label for label, vals in clean.items() if len(vals) < 2]
    if len(clean) < 2 or small:
        return TestResult(
            feature=feature, test_used="skipped", statistic=0.0, p_value=1.0,
            group_means={}, ordering="", significant=False,
            skipped_reason=f"insufficient defined values in group(s): {', '.join(small) or 'n/a'}",
        )
    means = {label: _mean(vals) for label, vals in clean.items()}
    all_normal = all(normality_test(vals, alpha)[2] for vals in clean.values())
    samples = list(clean.values())
    degenerate = False
    if all_normal:
        test_used = "anova"
        stat, p = anova_oneway(samples)
    elif len(clean) == 2:
        test_used = "ranksum"
        stat, p = ranksum(samples[0], samples[1])
        degenerate = stat == 0.0 and p == 1.0 and len({x for s in samples for x in s}) == 1
    else:
        test_used = "kruskal"
        stat, p = kruskal_wallis(samples)
        degenerate = stat == 0.0 and p == 1.0 and len({x for s in samples for x in s}) == 1
    ordering = derive_ordering(means, clean, alpha)
    return TestResult(
        feature=feature, test_used=test_used, statistic=stat, p_value=p,
        group_means=means, ordering=ordering, significant=p < alpha,
        degenerate=degenerate,
    )


def rank_features(results: list[TestResult], k: int, alpha: float = ALPHA_DEFAULT) -> list[str]:
    """Top-k features by ascending p (ties: larger |statistic|, then name);
    only features significant at alpha qualify."""
    eligible = [r for r in results if r.test_used != "skipped" and r.p_value < alpha]
    eligible.sort(key=lambda r: (r.p_value, -abs(r.statistic), r.feature))
    return [r.feature for r in eligible[:k]]


def confidence_interval(sample: list[float], level: float = 0.95) -> tuple[float, float, float]:
    """(mean, lower, upper) t-based CI for the mean."""
    n = len(sample)
    m = _mean(sample)
    if n < 2:
        return m, m, m
    var = sum((x - m) ** 2 for x in sample) / (n - 1)
    half = t_ppf(0.5 + level / 2.0, n - 1) * math.sqrt(var / n)
    return m, m - half, m + half
