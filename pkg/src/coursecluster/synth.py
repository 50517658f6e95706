"""Seeded synthetic course-frequency tables shaped like the industrial-training survey."""

from __future__ import annotations

import numpy as np

from .data import DataMatrix

# category prefix -> number of courses
CATEGORIES = {
    "university": ("SCU01", 14),
    "faculty": ("SCU02", 17),
    "study_program": ("SCU03", 9),
    "elective": ("SCU04", 3),
}

MAX_FREQUENCY = 5


def course_codes(category):
    prefix, count = CATEGORIES[category]
    return [f"{prefix}{k:02d}" for k in range(1, count + 1)]


def category_columns():
    return {name: course_codes(name) for name in CATEGORIES}


def generate(seed=42, respondents=30, max_frequency=MAX_FREQUENCY, noise=0.9) -> DataMatrix:
    """Integer frequencies in ``[0, max_frequency]`` with planted block structure.

    Each category is split into a few latent groups. Courses in a group share
    a per-respondent usage profile and add independent Gaussian noise before
    rounding and clipping.
    """
    if respondents < 1:
        raise ValueError("respondents must be >= 1")
    rng = np.random.default_rng(seed)
    columns, labels = [], []
    for name in CATEGORIES:
        codes = course_codes(name)
        n_groups = max(1, round(len(codes) / 5))
        profiles = rng.uniform(0, max_frequency, size=(n_groups, respondents))
        groups = rng.integers(0, n_groups, size=len(codes))
        for code, g in zip(codes, groups):
            col = profiles[g] + rng.normal(0.0, noise, size=respondents)
            columns.append(np.clip(np.rint(col), 0, max_frequency))
            labels.append(code)
    values = np.column_stack(columns)
    rows = [f"S{i}" for i in range(1, respondents + 1)]
    return DataMatrix(values, rows, labels)
