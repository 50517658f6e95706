"""Euclidean distances stored as a condensed upper-triangular vector."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import FeatureSet
from .errors import DimensionError, ValidationError


def n_pairs(n):
    return n * (n - 1) // 2


def condensed_index(i, j, n):
    """Flat position of pair ``(i, j)``, ``i < j``, in a condensed matrix of ``n`` items."""
    if not 0 <= i < j < n:
        raise IndexError(f"need 0 <= i < j < n, got i={i}, j={j}, n={n}")
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def pair_from_index(k, n):
    """Inverse of :func:`condensed_index`."""
    if not 0 <= k < n_pairs(n):
        raise IndexError(f"flat index {k} out of range for n={n}")
    i = 0
    row_len = n - 1
    while k >= row_len:
        k -= row_len
        i += 1
        row_len -= 1
    return i, i + 1 + k


def row_indices(i, n):
    """Flat indices of every pair ``(i, j)``, ordered by ``j``.

    The slot ``j == i`` holds 0 and must be masked by the caller.
    """
    j = np.arange(n)
    lo = np.minimum(i, j)
    hi = np.maximum(i, j)
    idx = lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)
    idx[i] = 0
    return idx


def _sq_sums(a, b):
    # accumulate coordinates in ascending order so every caller gets identical bits
    acc = np.zeros(a.shape[0])
    for k in range(a.shape[1]):
        diff = a[:, k] - b[:, k]
        acc += diff * diff
    return acc


def euclidean(u, v) -> float:
    """Euclidean distance between two equal-length vectors."""
    u = np.asarray(u, dtype=np.float64).reshape(1, -1)
    v = np.asarray(v, dtype=np.float64).reshape(1, -1)
    if u.shape != v.shape:
        raise DimensionError(f"dimension mismatch: {u.shape[1]} vs {v.shape[1]}")
    if u.shape[1] < 1:
        raise DimensionError("vectors need at least one dimension")
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise ValidationError("vectors must be finite")
    return float(np.sqrt(_sq_sums(u, v))[0])


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Symmetric zero-diagonal distances among ``n`` labelled items."""

    n: int
    condensed: np.ndarray
    labels: tuple = None

    def __post_init__(self):
        condensed = np.array(self.condensed, dtype=np.float64).reshape(-1)
        n = int(self.n)
        if n < 1:
            raise DimensionError("a distance matrix needs at least one item")
        if condensed.size != n_pairs(n):
            raise DimensionError(
                f"condensed length {condensed.size} does not match n={n}")
        if not np.all(np.isfinite(condensed)):
            raise ValidationError("distances must be finite")
        if np.any(condensed < 0):
            raise ValidationError("distances must be non-negative")
        labels = self.labels
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        labels = tuple(str(label) for label in labels)
        if len(labels) != n:
            raise DimensionError(f"{len(labels)} labels for {n} items")
        condensed.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "condensed", condensed)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_square(cls, square, labels=None):
        square = np.asarray(square, dtype=np.float64)
        if square.ndim != 2 or square.shape[0] != square.shape[1]:
            raise DimensionError("expected a square matrix")
        if not np.array_equal(square, square.T):
            raise ValidationError("matrix is not symmetric")
        if np.any(np.diag(square) != 0):
            raise ValidationError("matrix diagonal is not zero")
        iu = np.triu_indices(square.shape[0], 1)
        return cls(square.shape[0], square[iu], labels)

    def __getitem__(self, pair):
        i, j = pair
        if i == j:
            return 0.0
        if i > j:
            i, j = j, i
        return float(self.condensed[condensed_index(i, j, self.n)])

    def to_square(self):
        out = np.zeros((self.n, self.n))
        iu = np.triu_indices(self.n, 1)
        out[iu] = self.condensed
        out.T[iu] = self.condensed
        return out


def pairwise(f: FeatureSet) -> DistanceMatrix:
    """Condensed Euclidean distances between all items of ``f``."""
    x = f.vectors
    n = x.shape[0]
    if n < 2:
        raise DimensionError(f"need at least 2 items, got {n}")
    i, j = np.triu_indices(n, 1)
    return DistanceMatrix(n, np.sqrt(_sq_sums(x[i], x[j])), f.labels)
