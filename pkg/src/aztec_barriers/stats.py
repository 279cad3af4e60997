"""Exact zig/zag distributions induced by uniform random tilings.

Two families live here: the law on balanced partitions of {1, ..., 2k}
(weights over 2^(k^2)) and the general diagonal law on k-subsets of
{1, ..., n} (weights over 2^(k(n-k))).  Every probability is an exact
Fraction; floats appear only in report rendering.  Anything conjectural
(opposite-parity negativity, variance growth) is reported, never asserted.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .partitions import BalancedPartition, enumerate_balanced, weight

PARTITION_CEILING = 10
SUBSET_TABLE_CEILING = 10**6


@dataclass(frozen=True)
class PartitionDistribution:
    """Exact law on balanced partitions: P(A, B) proportional to weight(a)*weight(b)."""

    k: int
    table: tuple[tuple[BalancedPartition, Fraction], ...]


@dataclass(frozen=True)
class SubsetDistribution:
    """Exact law on k-subsets of {1, ..., n} from the diagonal weight product."""

    n: int
    k: int
    table: tuple[tuple[tuple[int, ...], Fraction], ...]


@dataclass(frozen=True)
class MomentReport:
    """Exact mean/variance of a prefix zig count, with its variance ceiling."""

    m: int
    mean: Fraction
    variance: Fraction
    variance_bound: Fraction

    @property
    def within_bound(self) -> bool:
        return self.variance <= self.variance_bound


@dataclass(frozen=True)
class CovarianceReport:
    """Pairwise covariances of the membership indicators of a subset law."""

    n: int
    k: int
    matrix: tuple[tuple[Fraction, ...], ...]
    positive_pairs: tuple[tuple[int, int], ...]

    @property
    def all_nonpositive(self) -> bool:
        return not self.positive_pairs


def build_distribution(k: int) -> PartitionDistribution:
    """Full exact table over balanced partitions of {1, ..., 2k}.

    Normalization is checked at build time: the weights must sum to 2^(k^2).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > PARTITION_CEILING:
        raise ValueError(f"k={k} exceeds the table ceiling {PARTITION_CEILING}")
    denominator = 1 << (k * k)
    rows = []
    total = 0
    for p in enumerate_balanced(k):
        w = weight(p.a, k) * weight(p.b, k)
        total += w
        rows.append((p, Fraction(w, denominator)))
    if total != denominator:
        raise ArithmeticError(
            f"weights summed to {total}, expected {denominator}; counting bug"
        )
    return PartitionDistribution(k=k, table=tuple(rows))


def independence_check(dist: PartitionDistribution) -> dict[tuple[int, ...], Fraction]:
    """Probability of each possible trace of the zig side on the even positions.

    Every entry equals 2^-k exactly, i.e. the even positions behave like
    independent fair coins; any other value raises.
    """
    k = dist.k
    evens = frozenset(range(2, 2 * k + 1, 2))
    totals: dict[tuple[int, ...], Fraction] = {}
    for size in range(k + 1):
        for subset in combinations(sorted(evens), size):
            totals[subset] = Fraction(0)
    for p, prob in dist.table:
        key = tuple(sorted(evens.intersection(p.a)))
        totals[key] += prob
    expected = Fraction(1, 1 << k)
    for subset, prob in totals.items():
        if prob != expected:
            raise AssertionError(
                f"even trace {subset} has probability {prob}, expected {expected}"
            )
    return totals


def membership_probability(dist: PartitionDistribution, s: int) -> Fraction:
    """P(position s carries a zig)."""
    if not 1 <= s <= 2 * dist.k:
        raise ValueError(f"position must lie in [1, {2 * dist.k}]")
    return sum((prob for p, prob in dist.table if s in p.a), Fraction(0))


def prefix_zig_moments(dist: PartitionDistribution, m: int) -> MomentReport:
    """Exact moments of the number of zigs among spine squares 1..m.

    The mean is always m/2; the variance never exceeds m/2 (so the standard
    deviation is at most sqrt(m/2), compared here at the variance level to
    stay in exact arithmetic).
    """
    if not 1 <= m <= 2 * dist.k:
        raise ValueError(f"m must lie in [1, {2 * dist.k}]")
    mean = Fraction(0)
    second = Fraction(0)
    for p, prob in dist.table:
        c = sum(1 for x in p.a if x <= m)
        mean += prob * c
        second += prob * (c * c)
    return MomentReport(
        m=m, mean=mean, variance=second - mean * mean, variance_bound=Fraction(m, 2)
    )


def variance_profile(k: int) -> list[tuple[int, Fraction]]:
    """Var(prefix zig count) for m = 1..2k, from the exact table.

    Exploratory output: the empirical growth of the peak is reported for
    inspection, not asserted.
    """
    dist = build_distribution(k)
    return [(m, prefix_zig_moments(dist, m).variance) for m in range(1, 2 * k + 1)]


def pair_correlation(dist: PartitionDistribution, s: int, t: int) -> Fraction:
    """Exact covariance of the indicators "s is a zig" and "t is a zig".

    Same-parity pairs come out exactly zero.  Opposite-parity values are
    whatever they are; their conjectured negativity is reported by the CLI,
    never asserted.
    """
    if not 1 <= s < t <= 2 * dist.k:
        raise ValueError(f"need 1 <= s < t <= {2 * dist.k}")
    joint = Fraction(0)
    p_s = Fraction(0)
    p_t = Fraction(0)
    for p, prob in dist.table:
        zigs = set(p.a)
        if s in zigs:
            p_s += prob
        if t in zigs:
            p_t += prob
        if s in zigs and t in zigs:
            joint += prob
    return joint - p_s * p_t


def build_subset_distribution(n: int, k: int) -> SubsetDistribution:
    """Exact table of the diagonal law on k-subsets of {1, ..., n}.

    A subset a and its complement b weigh the product of their pair ratios;
    the weights must sum to 2^(k(n-k)), which is checked at build time.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= k <= n:
        raise ValueError("k must lie in [0, n]")
    from math import comb

    if comb(n, k) > SUBSET_TABLE_CEILING:
        raise ValueError(f"C({n},{k}) exceeds the table ceiling {SUBSET_TABLE_CEILING}")
    denominator = 1 << (k * (n - k))
    rows = []
    total = 0
    for a in combinations(range(1, n + 1), k):
        members = set(a)
        b = tuple(x for x in range(1, n + 1) if x not in members)
        w = weight(a) * weight(b)
        total += w
        rows.append((a, Fraction(w, denominator)))
    if total != denominator:
        raise ArithmeticError(
            f"weights summed to {total}, expected {denominator}; counting bug"
        )
    return SubsetDistribution(n=n, k=k, table=tuple(rows))


def subset_correlation_report(dist: SubsetDistribution) -> CovarianceReport:
    """Full covariance matrix of the membership indicators X_1..X_n.

    ``positive_pairs`` lists the off-diagonal entries with strictly positive
    covariance; the open conjecture expects none, and zero entries count as
    consistent with it.
    """
    n = dist.n
    marginal = [Fraction(0)] * (n + 1)
    joint = {pair: Fraction(0) for pair in combinations(range(1, n + 1), 2)}
    for subset, prob in dist.table:
        for s in subset:
            marginal[s] += prob
        for pair in combinations(subset, 2):
            joint[pair] += prob
    matrix = []
    positive = []
    for s in range(1, n + 1):
        row = []
        for t in range(1, n + 1):
            if s == t:
                row.append(marginal[s] * (1 - marginal[s]))
            else:
                lo, hi = min(s, t), max(s, t)
                row.append(joint[(lo, hi)] - marginal[s] * marginal[t])
        matrix.append(tuple(row))
    for (s, t), j in joint.items():
        if j - marginal[s] * marginal[t] > 0:
            positive.append((s, t))
    return CovarianceReport(
        n=n, k=dist.k, matrix=tuple(matrix), positive_pairs=tuple(positive)
    )


def sample_partitions(
    dist: PartitionDistribution, count: int, seed: int
) -> list[BalancedPartition]:
    """Seeded i.i.d. draws from the exact table by cumulative inversion.

    The table's probabilities share the denominator 2^(k^2), so each draw is
    a single exact ``randrange``; identical seeds give identical output.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    denominator = 1 << (dist.k * dist.k)
    cumulative: list[int] = []
    running = 0
    for _, prob in dist.table:
        scaled = prob * denominator
        if scaled.denominator != 1:
            raise ArithmeticError("table probability does not divide the denominator")
        running += scaled.numerator
        cumulative.append(running)
    rng = random.Random(seed)
    draws = []
    for _ in range(count):
        r = rng.randrange(running)
        draws.append(dist.table[bisect_right(cumulative, r)][0])
    return draws


def fraction_str(value: Fraction | int) -> str:
    """Canonical exact rendering in lowest terms: '3/4', '-1/16', '2', '0'."""
    return str(Fraction(value))


def fraction_decimal(value: Fraction | int, digits: int = 12) -> str:
    """Decimal rendering with the given significant digits (reports only)."""
    return f"{float(value):.{digits}g}"
