"""Respondent x course frequency tables and the item vectors derived from them."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionError, ValidationError


class Orientation(str, enum.Enum):
    """Which axis of the table becomes the set of clustered items."""

    COURSES = "courses"
    RESPONDENTS = "respondents"


def _check_labels(labels, axis):
    labels = tuple(str(label) for label in labels)
    seen = set()
    for label in labels:
        if not label:
            raise ValidationError(f"empty {axis} label")
        if label in seen:
            raise ValidationError(f"duplicate {axis} label {label!r}")
        seen.add(label)
    return labels


def _frozen(array):
    array = np.array(array, dtype=np.float64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class DataMatrix:
    """Frequency table: rows are respondents, columns are course codes.

    Values must be finite and non-negative. At least one respondent and two
    courses are required.
    """

    values: np.ndarray
    row_labels: tuple
    col_labels: tuple

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise ValidationError(f"values must be 2-D, got {values.ndim}-D")
        n_rows, n_cols = values.shape
        if n_rows < 1:
            raise ValidationError("at least one respondent row is required")
        if n_cols < 2:
            raise ValidationError("at least two course columns are required")
        if not np.all(np.isfinite(values)):
            r, c = np.argwhere(~np.isfinite(values))[0]
            raise ValidationError(f"non-finite frequency at ({r}, {c})")
        if np.any(values < 0):
            r, c = np.argwhere(values < 0)[0]
            raise ValidationError(f"negative frequency at ({r}, {c})")
        rows = _check_labels(self.row_labels, "row")
        cols = _check_labels(self.col_labels, "column")
        if len(rows) != n_rows:
            raise ValidationError(f"{len(rows)} row labels for {n_rows} rows")
        if len(cols) != n_cols:
            raise ValidationError(f"{len(cols)} column labels for {n_cols} columns")
        object.__setattr__(self, "values", _frozen(values))
        object.__setattr__(self, "row_labels", rows)
        object.__setattr__(self, "col_labels", cols)

    @property
    def shape(self):
        return self.values.shape

    def select_columns(self, labels: Sequence[str]) -> "DataMatrix":
        """Sub-table restricted to the given course columns, in the given order."""
        index = {label: i for i, label in enumerate(self.col_labels)}
        try:
            cols = [index[label] for label in labels]
        except KeyError as exc:
            raise ValidationError(f"unknown column {exc.args[0]!r}") from None
        return DataMatrix(self.values[:, cols], self.row_labels, tuple(labels))


@dataclass(frozen=True, eq=False)
class FeatureSet:
    """Item vectors (one per row of ``vectors``) ready for distance computation."""

    vectors: np.ndarray
    labels: tuple
    orientation: Orientation = Orientation.COURSES

    def __post_init__(self):
        vectors = np.asarray(self.vectors, dtype=np.float64)
        if vectors.ndim != 2:
            raise DimensionError("vectors must form a 2-D array (items x dims)")
        if vectors.shape[1] < 1:
            raise DimensionError("item vectors need at least one dimension")
        if vectors.shape[0] < 2:
            raise DimensionError(f"need at least 2 items, got {vectors.shape[0]}")
        labels = _check_labels(self.labels, "item")
        if len(labels) != vectors.shape[0]:
            raise DimensionError(f"{len(labels)} labels for {vectors.shape[0]} items")
        object.__setattr__(self, "vectors", _frozen(vectors))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "orientation", Orientation(self.orientation))

    def __len__(self):
        return self.vectors.shape[0]

    @property
    def dim(self):
        return self.vectors.shape[1]


def extract_items(m: DataMatrix, orientation=Orientation.COURSES) -> FeatureSet:
    """Turn one axis of the table into item vectors.

    With ``COURSES`` every column becomes a vector of its values across
    respondents; with ``RESPONDENTS`` every row is used as is.
    """
    orientation = Orientation(orientation)
    if orientation is Orientation.COURSES:
        vectors, labels = m.values.T, m.col_labels
    else:
        vectors, labels = m.values, m.row_labels
    if vectors.shape[0] < 2:
        raise DimensionError(
            f"need at least 2 {orientation.value}, got {vectors.shape[0]}")
    return FeatureSet(vectors, labels, orientation)


def standardize_zscore(f: FeatureSet) -> FeatureSet:
    """Scale each coordinate to mean 0 and (population) standard deviation 1.

    Constant coordinates become all zeros instead of dividing by zero.
    """
    x = f.vectors
    centered = x - x.mean(axis=0)
    sd = np.sqrt((centered ** 2).mean(axis=0))
    out = np.zeros_like(centered)
    nonzero = (sd > 0) & (np.ptp(x, axis=0) > 0)
    out[:, nonzero] = centered[:, nonzero] / sd[nonzero]
    return FeatureSet(out, f.labels, f.orientation)
