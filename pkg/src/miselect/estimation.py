"""Histogram-based differential entropy and MI estimation from samples.

Univariate entropies use m = ceil(sqrt(n)) equal-width bins over the
observed range, plug-in entropy of the bin frequencies plus the ln(bin
width) correction.  Bivariate histograms keep the total cell count near
m by using ceil(sqrt(m)) bins per axis; feature-feature MI evaluates
H(X) + H(Y) - H(X,Y) with all three entropies on that shared grid, and
class MI evaluates H(V) - sum_c p(c) H(V | C=c) on pooled bin edges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .oracle import FEATURES, FeatureId
from .xreal import XReal, finite

CSV_HEADER = "v1,v2,v3,v4,v5,v6,v7,v8,v9,v10,class"


class DegenerateSampleError(ValueError):
    """All observations equal: the histogram has zero width.

    The differential entropy of a point mass is -inf, which would poison
    every objective downstream, so it is an error rather than a value.
    """


def bin_count(n: int) -> int:
    """Univariate bin count, m = ceil(sqrt(n))."""
    if n < 4:
        raise ValueError(f"need at least 4 observations, got {n}")
    return math.ceil(math.sqrt(n))


def pair_bin_count(n: int) -> int:
    """Per-axis bin count of a bivariate histogram with ~m cells in total."""
    return math.ceil(math.sqrt(bin_count(n)))


@dataclass(frozen=True)
class BinningScheme:
    """Equal-width bins over the observed range; top edge is closed."""

    count: int
    edges: np.ndarray
    width: float

    @classmethod
    def for_values(cls, x: np.ndarray, count: int) -> "BinningScheme":
        lo = float(np.min(x))
        hi = float(np.max(x))
        if hi <= lo:
            raise DegenerateSampleError("all observations are equal")
        edges = np.linspace(lo, hi, count + 1)
        return cls(count, edges, (hi - lo) / count)


def _plugin(counts: np.ndarray, n: int) -> float:
    p = counts[counts > 0] / n
    terms = p * np.log(p)
    terms.sort()  # canonical summation order: symmetric and reproducible
    return float(-terms.sum())


def _entropy_on(x: np.ndarray, scheme: BinningScheme) -> float:
    counts, _ = np.histogram(x, bins=scheme.edges)
    return _plugin(counts, x.size) + math.log(scheme.width)


def estimate_entropy_1d(x: np.ndarray, bins: int | None = None) -> float:
    """Differential entropy estimate; may legitimately be negative."""
    x = np.asarray(x, dtype=float)
    m = bins if bins is not None else bin_count(x.size)
    return _entropy_on(x, BinningScheme.for_values(x, m))


def estimate_entropy_2d(
    x: np.ndarray, y: np.ndarray, bins: int | None = None
) -> float:
    """Joint differential entropy on a bins-per-axis equal-width grid."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size != y.size:
        raise ValueError("length mismatch")
    m = bins if bins is not None else pair_bin_count(x.size)
    sx = BinningScheme.for_values(x, m)
    sy = BinningScheme.for_values(y, m)
    counts, _, _ = np.histogram2d(x, y, bins=[sx.edges, sy.edges])
    return _plugin(counts.ravel(), x.size) + math.log(sx.width * sy.width)


def estimate_mi_features(
    x: np.ndarray, y: np.ndarray, bins: int | None = None
) -> float:
    """MI between two features via H(X) + H(Y) - H(X,Y) on a shared grid.

    All three entropies use the bivariate resolution, so their bin-width
    corrections cancel exactly and the result equals the discrete MI of
    the binned pair.  Not clamped: small negative values are reported.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size != y.size:
        raise ValueError("length mismatch")
    m = bins if bins is not None else pair_bin_count(x.size)
    sx = BinningScheme.for_values(x, m)
    sy = BinningScheme.for_values(y, m)
    counts, _, _ = np.histogram2d(x, y, bins=[sx.edges, sy.edges])
    n = x.size
    h_x = _plugin(counts.sum(axis=1), n)
    h_y = _plugin(counts.sum(axis=0), n)
    h_xy = _plugin(counts.ravel(), n)
    return h_x + h_y - h_xy


def estimate_mi_class(
    x: np.ndarray, labels: np.ndarray, bins: int | None = None
) -> float:
    """MI between a feature and the class: H(V) - sum_c p(c) H(V|C=c).

    The class-conditional entropies reuse the pooled-sample bin edges so
    that an independent pair centers on zero instead of inheriting a
    per-class rebinning offset.
    """
    x = np.asarray(x, dtype=float)
    labels = np.asarray(labels)
    if x.size != labels.size:
        raise ValueError("length mismatch")
    values = np.unique(labels)
    if values.size < 2:
        raise ValueError("need both class labels in the sample")
    m = bins if bins is not None else bin_count(x.size)
    scheme = BinningScheme.for_values(x, m)
    out = _entropy_on(x, scheme)
    n = x.size
    for c in values:
        slice_ = x[labels == c]
        out -= (slice_.size / n) * _entropy_on(slice_, scheme)
    return out


# ---------------------------------------------------------------------------
# Samples
# ---------------------------------------------------------------------------

class Sample:
    """n observations of the ten features plus a binary class label."""

    def __init__(self, features: np.ndarray, labels: np.ndarray):
        features = np.asarray(features, dtype=float)
        labels = np.asarray(labels, dtype=np.int64)
        if features.ndim != 2 or features.shape[1] != len(FEATURES):
            raise ValueError(f"features must be (n, {len(FEATURES)})")
        if labels.shape != (features.shape[0],):
            raise ValueError("labels must align with feature rows")
        if features.shape[0] < 4:
            raise ValueError("need at least 4 observations")
        if not np.isin(labels, (0, 1)).all():
            raise ValueError("labels must be 0/1")
        self.features = features
        self.labels = labels

    @property
    def n(self) -> int:
        return self.features.shape[0]

    def column(self, f: FeatureId) -> np.ndarray:
        return self.features[:, f - 1]

    def to_csv(self, path: str) -> None:
        data = np.column_stack([self.features, self.labels])
        fmt = ["%.17g"] * len(FEATURES) + ["%d"]
        np.savetxt(path, data, delimiter=",", header=CSV_HEADER, comments="", fmt=fmt)

    @classmethod
    def from_csv(cls, path: str) -> "Sample":
        with open(path) as fh:
            header = fh.readline().strip()
            if header != CSV_HEADER:
                raise ValueError(
                    f"bad sample header {header!r}; expected {CSV_HEADER!r}"
                )
            data = np.loadtxt(fh, delimiter=",", ndmin=2)
        if data.shape[1] != len(FEATURES) + 1:
            raise ValueError(f"expected {len(FEATURES) + 1} columns")
        return cls(data[:, :-1], data[:, -1])


class EstimatedProvider:
    """MIProvider computing histogram estimates lazily with memoization."""

    def __init__(self, sample: Sample):
        self.sample = sample
        self.feature_order = FEATURES
        self._entropy: dict[FeatureId, XReal] = {}
        self._class_mi: dict[FeatureId, XReal] = {}
        self._pairwise: dict[frozenset, XReal] = {}

    def entropy(self, f: FeatureId) -> XReal:
        if f not in self._entropy:
            self._entropy[f] = finite(estimate_entropy_1d(self.sample.column(f)))
        return self._entropy[f]

    def class_mi(self, f: FeatureId) -> XReal:
        if f not in self._class_mi:
            self._class_mi[f] = finite(
                estimate_mi_class(self.sample.column(f), self.sample.labels)
            )
        return self._class_mi[f]

    def pairwise_mi(self, i: FeatureId, j: FeatureId) -> XReal:
        key = frozenset((i, j))
        if key not in self._pairwise:
            self._pairwise[key] = finite(
                estimate_mi_features(self.sample.column(i), self.sample.column(j))
            )
        return self._pairwise[key]


def estimated_provider(sample: Sample) -> EstimatedProvider:
    return EstimatedProvider(sample)
