"""Quality harness for hash outputs.

Collects hash values into bucket histograms and derives a collision rate,
a chi-squared uniformity statistic with its p-value, and an avalanche
score.  The collision rate is (mean bucket count + population standard
deviation over all buckets) / 2^n; lower is better.  The p-value is the
chi-squared survival function with 2^n - 1 degrees of freedom, computed
from a self-contained regularized incomplete gamma (no statistics
library).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qhash import HashConfig, hash_batch, hash_bits, to_bitstring

_EPS = 1e-16
_MAX_ITER = 10_000


@dataclass
class BucketHistogram:
    """Counts of hash outcomes over all 2^n buckets."""

    n_qubits: int
    counts: np.ndarray
    total: int


@dataclass
class MetricsReport:
    histogram: BucketHistogram
    collision_rate: float
    chi_squared: float
    p_value: float
    avalanche_mean: float | None = None


def bucket_histogram(hashes: Sequence[str], n_qubits: int) -> BucketHistogram:
    """Tally hash bitstrings into 2^n buckets indexed by basis value."""
    counts = np.zeros(1 << n_qubits, dtype=np.int64)
    for value in hashes:
        if len(value) != n_qubits:
            raise ValueError(
                f"hash {value!r} has length {len(value)}, expected {n_qubits}"
            )
        counts[int(value, 2)] += 1
    return BucketHistogram(n_qubits, counts, int(counts.sum()))


def collision_rate(hist: BucketHistogram) -> float:
    """(mean bucket count + population stdev of bucket counts) / 2^n."""
    if hist.total < 1:
        raise ValueError("histogram is empty")
    buckets = hist.counts.size
    f_avg = hist.total / buckets
    stdev = math.sqrt(float(((hist.counts - f_avg) ** 2).sum()) / buckets)
    return (f_avg + stdev) / buckets


def _gamma_p_series(a: float, x: float) -> float:
    # Lower regularized gamma P(a, x) by power series; good for x < a + 1.
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_q_contfrac(a: float, x: float) -> float:
    # Upper regularized gamma Q(a, x) by modified Lentz continued fraction.
    tiny = 1e-300
    b = x + 1.0 - a
    c = 1.0 / tiny
    d = 1.0 / b if b != 0.0 else 1.0 / tiny
    frac = d
    for i in range(1, _MAX_ITER):
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
        frac *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * frac


def regularized_gamma_q(a: float, x: float) -> float:
    """Upper regularized incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a)."""
    if a <= 0.0:
        raise ValueError(f"a must be positive, got {a}")
    if x < 0.0:
        raise ValueError(f"x must be non-negative, got {x}")
    if x == 0.0:
        return 1.0
    if x < a + 1.0:
        return 1.0 - _gamma_p_series(a, x)
    return _gamma_q_contfrac(a, x)


def chi_squared_survival(x: float, df: int) -> float:
    """P(X >= x) for a chi-squared variable with df degrees of freedom."""
    if df < 1:
        raise ValueError(f"df must be >= 1, got {df}")
    if x <= 0.0:
        return 1.0
    return min(1.0, max(0.0, regularized_gamma_q(df / 2.0, x / 2.0)))


def chi_squared_p(hist: BucketHistogram) -> tuple[float, float]:
    """Chi-squared statistic against uniform expectation, and its p-value."""
    if hist.total < 1:
        raise ValueError("histogram is empty")
    buckets = hist.counts.size
    expected = hist.total / buckets
    chi2 = float(((hist.counts - expected) ** 2 / expected).sum())
    return chi2, chi_squared_survival(chi2, buckets - 1)


def _hamming(a: str, b: str) -> int:
    return sum(ca != cb for ca, cb in zip(a, b))


def avalanche_score(cfg: HashConfig, inputs: Sequence[str]) -> float:
    """Mean normalized output distance under every single-bit input flip.

    Averages HammingDistance(hash(x), hash(x with bit i flipped)) / n_qubits
    over all inputs x and all bit positions i.  Always in [0, 1]; exactly 0
    for a constant hasher.
    """
    if not inputs:
        raise ValueError("empty input list")
    length = len(inputs[0])
    if length == 0 or any(len(x) != length for x in inputs):
        raise ValueError("inputs must be non-empty and of equal length")
    total = 0.0
    for bits in inputs:
        base = hash_bits(bits, cfg)
        for i in range(length):
            flipped = bits[:i] + ("1" if bits[i] == "0" else "0") + bits[i + 1:]
            total += _hamming(base, hash_bits(flipped, cfg)) / cfg.n_qubits
    return total / (len(inputs) * length)


def _sweep_width(n_qubits: int, size: int) -> int:
    width = 2 * n_qubits
    while (1 << width) < size:
        width += 2 * n_qubits
    return width


def evaluate_batch(cfg: HashConfig, size: int,
                   input_width: int | None = None) -> MetricsReport:
    """Hash the integers 0..size-1 and compute the full metrics report."""
    if size < 1:
        raise ValueError(f"batch size must be >= 1, got {size}")
    width = input_width if input_width is not None else _sweep_width(cfg.n_qubits, size)
    if size > (1 << width):
        raise ValueError(f"batch size {size} exceeds 2^{width} distinct inputs")
    inputs = [to_bitstring(i, width) for i in range(size)]
    hashes = hash_batch(inputs, cfg)
    hist = bucket_histogram(hashes, cfg.n_qubits)
    chi2, p = chi_squared_p(hist)
    return MetricsReport(
        histogram=hist,
        collision_rate=collision_rate(hist),
        chi_squared=chi2,
        p_value=p,
        avalanche_mean=avalanche_score(cfg, inputs),
    )


def batch_sweep(cfg: HashConfig, batch_sizes: Sequence[int],
                input_width: int | None = None) -> list[tuple[int, MetricsReport]]:
    """Evaluate a config over several batch sizes of integer inputs."""
    return [(size, evaluate_batch(cfg, size, input_width)) for size in batch_sizes]


def histogram_csv(hist: BucketHistogram) -> str:
    """Render a histogram as CSV with the fixed header ``bucket,count``."""
    lines = ["bucket,count"]
    lines += [f"{i},{int(c)}" for i, c in enumerate(hist.counts)]
    return "\n".join(lines) + "\n"


def summary_csv(reports: Sequence[MetricsReport]) -> str:
    """Render report rows under the fixed header
    ``total,collision_rate,chi_squared,p_value,avalanche``."""
    lines = ["total,collision_rate,chi_squared,p_value,avalanche"]
    for r in reports:
        avalanche = "" if r.avalanche_mean is None else repr(r.avalanche_mean)
        lines.append(
            f"{r.histogram.total},{r.collision_rate!r},{r.chi_squared!r},"
            f"{r.p_value!r},{avalanche}"
        )
    return "\n".join(lines) + "\n"
