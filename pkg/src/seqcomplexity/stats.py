"""Correlation and two-sample tests: Pearson, Spearman, Welch's t, and
two-sample Kolmogorov-Smirnov.

Student-t tail probabilities go through a continued-fraction evaluation of
the regularized incomplete beta function; KS p-values use the asymptotic
Kolmogorov series on the effective sample size.  No continuity
corrections are applied anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "StatReport",
    "pearson",
    "spearman",
    "welch_t",
    "ks_two_sample",
    "student_t_sf",
    "regularized_incomplete_beta",
]


@dataclass(frozen=True)
class StatReport:
    """One test result: statistic, tail probabilities, optional df and CI."""

    statistic: float
    p_one_tail: float
    p_two_tail: float
    df: float | None = None
    ci_low: float | None = None
    ci_high: float | None = None
    method: str = ""
    notes: str = ""


def regularized_incomplete_beta(a: float, b: float, x: float, tol: float = 1e-12) -> float:
    """I_x(a, b) by the Lentz continued fraction, relative tolerance ``tol``."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("x outside [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    # converges fastest for x < (a+1)/(a+b+2); otherwise use the symmetry
    if x > (a + 1.0) / (a + b + 2.0):
        return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x, tol)

    ln_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(ln_front)

    tiny = 1e-300
    f, c, d = 1.0, 1.0, 0.0
    for i in range(0, 400):
        m = i // 2
        if i == 0:
            num = 1.0
        elif i % 2 == 0:
            num = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m))
        else:
            num = -(a + m) * (a + b + m) * x / ((a + 2.0 * m) * (a + 2.0 * m + 1.0))
        d = 1.0 + num * d
        if abs(d) < tiny:
            d = tiny
        d = 1.0 / d
        c = 1.0 + num / c
        if abs(c) < tiny:
            c = tiny
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < tol:
            return front * (f - 1.0) / a
    raise ArithmeticError("incomplete beta continued fraction did not converge")


def student_t_sf(t: float, df: float) -> float:
    """P(T > t) for Student's t with ``df`` degrees of freedom."""
    if df <= 0:
        raise ValueError("df must be positive")
    if math.isinf(t):
        return 0.0 if t > 0 else 1.0
    x = df / (df + t * t)
    p = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x)
    return p if t >= 0 else 1.0 - p


def _norm_ppf(p: float) -> float:
    """Standard normal quantile via bisection on erfc (p in (0, 1))."""
    if not 0.0 < p < 1.0:
        raise ValueError("p outside (0, 1)")
    lo, hi = -40.0, 40.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if 0.5 * math.erfc(-mid / math.sqrt(2.0)) < p:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _tails(t: float, df: float) -> tuple[float, float]:
    one = student_t_sf(abs(t), df)
    return one, min(1.0, 2.0 * one)


def _check_pair(xs, ys):
    if len(xs) != len(ys):
        raise ValueError("length mismatch")
    if len(xs) < 3:
        raise ValueError("need at least 3 pairs")
    if min(xs) == max(xs) or min(ys) == max(ys):
        raise ValueError("zero variance")


def pearson(xs, ys, ci_level: float = 0.99) -> StatReport:
    """Sample Pearson correlation with t-based p-values and Fisher-z CI."""
    _check_pair(xs, ys)
    if not 0.0 < ci_level < 1.0:
        raise ValueError("ci_level outside (0, 1)")
    n = len(xs)
    mx = math.fsum(xs) / n
    my = math.fsum(ys) / n
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    syy = math.fsum((y - my) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:  # constant at working precision (underflow)
        raise ValueError("zero variance")
    r = sxy / math.sqrt(sxx * syy)
    r = max(-1.0, min(1.0, r))

    df = float(n - 2)
    if abs(r) == 1.0:
        one, two = 0.0, 0.0
        return StatReport(
            statistic=r, p_one_tail=one, p_two_tail=two, df=df,
            method="pearson", notes="degenerate |r|=1; CI unavailable",
        )
    t = r * math.sqrt(df / (1.0 - r * r))
    one, two = _tails(t, df)
    if n > 3:
        z = math.atanh(r)
        half = _norm_ppf(1.0 - (1.0 - ci_level) / 2.0) / math.sqrt(n - 3)
        lo, hi = math.tanh(z - half), math.tanh(z + half)
    else:
        lo, hi = -1.0, 1.0  # n = 3 carries no Fisher-z information
    return StatReport(
        statistic=r, p_one_tail=one, p_two_tail=two, df=df,
        ci_low=lo, ci_high=hi, method="pearson", notes=f"fisher z CI, level {ci_level:g}",
    )


def _midranks(values) -> list[float]:
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def spearman(xs, ys, ci_level: float = 0.99) -> StatReport:
    """Spearman rho: Pearson correlation of mid-ranks (average-rank ties)."""
    _check_pair(xs, ys)
    rep = pearson(_midranks(xs), _midranks(ys), ci_level)
    return StatReport(
        statistic=rep.statistic, p_one_tail=rep.p_one_tail, p_two_tail=rep.p_two_tail,
        df=rep.df, ci_low=rep.ci_low, ci_high=rep.ci_high,
        method="spearman", notes="midranks; " + rep.notes,
    )


def welch_t(a, b) -> StatReport:
    """Unpaired two-sample t-test with Welch's correction."""
    if len(a) < 2 or len(b) < 2:
        raise ValueError("need at least 2 observations per sample")
    na, nb = len(a), len(b)
    ma = math.fsum(a) / na
    mb = math.fsum(b) / nb
    va = math.fsum((x - ma) ** 2 for x in a) / (na - 1)
    vb = math.fsum((x - mb) ** 2 for x in b) / (nb - 1)
    if va == 0.0 and vb == 0.0:
        if ma == mb:
            return StatReport(
                statistic=0.0, p_one_tail=0.5, p_two_tail=1.0, df=None,
                method="welch_t", notes="both samples constant and equal",
            )
        raise ValueError("zero variance in both samples with unequal means")
    se2 = va / na + vb / nb
    t = (ma - mb) / math.sqrt(se2)
    df = se2 * se2 / ((va / na) ** 2 / (na - 1) + (vb / nb) ** 2 / (nb - 1))
    one, two = _tails(t, df)
    return StatReport(statistic=t, p_one_tail=one, p_two_tail=two, df=df, method="welch_t")


def _ecdf_distance(a, b) -> float:
    xs = sorted(set(a) | set(b))
    sa, sb = sorted(a), sorted(b)
    na, nb = len(sa), len(sb)
    d = 0.0
    ia = ib = 0
    for x in xs:
        while ia < na and sa[ia] <= x:
            ia += 1
        while ib < nb and sb[ib] <= x:
            ib += 1
        d = max(d, abs(ia / na - ib / nb))
    return d


def kolmogorov_sf(lam: float) -> float:
    """Asymptotic Kolmogorov tail probability Q(lambda).

    The alternating series converges slowly for small lambda, where the
    equivalent theta-function form takes over (Marsaglia's cutoff).
    """
    if lam <= 0.0:
        return 1.0
    if lam < 1.18:
        cdf = 0.0
        for j in range(1, 101):
            term = math.exp(-((2 * j - 1) ** 2) * math.pi**2 / (8.0 * lam * lam))
            cdf += term
            if term < 1e-18:
                break
        cdf *= math.sqrt(2.0 * math.pi) / lam
        return min(1.0, max(0.0, 1.0 - cdf))
    total = 0.0
    for j in range(1, 101):
        term = 2.0 * (-1.0) ** (j - 1) * math.exp(-2.0 * j * j * lam * lam)
        total += term
        if abs(term) < 1e-16:
            break
    return min(1.0, max(0.0, total))


def ks_two_sample(a, b) -> StatReport:
    """Two-sample KS test: D = sup |ECDF_a - ECDF_b|, asymptotic p-value.

    The p-value uses the Kolmogorov series at the effective size
    ``na*nb/(na+nb)`` and is asymptotic even for small samples.
    """
    if not a or not b:
        raise ValueError("empty sample")
    d = _ecdf_distance(a, b)
    n_eff = len(a) * len(b) / (len(a) + len(b))
    p = 1.0 if d == 0.0 else kolmogorov_sf(math.sqrt(n_eff) * d)
    return StatReport(
        statistic=d, p_one_tail=p, p_two_tail=p, df=None,
        method="ks_two_sample", notes="asymptotic",
    )
