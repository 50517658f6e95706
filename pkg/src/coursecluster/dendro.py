"""Flat cuts, cophenetic distances, course ranking and linkage comparison."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import DataMatrix, Orientation, extract_items, standardize_zscore
from .distance import DistanceMatrix, pairwise
from .engine import Dendrogram, Linkage, cluster_nn_chain
from .errors import RangeError

DEFAULT_RELATIVE_HEIGHT = 0.7


@dataclass(frozen=True)
class ByCount:
    k: int

    def describe(self):
        return f"count k={self.k}"


@dataclass(frozen=True)
class ByHeight:
    h: float

    def describe(self):
        return f"height h={self.h!r}"


@dataclass(frozen=True)
class ByRelativeHeight:
    """Cut at ``fraction`` times the root height of each dendrogram."""

    fraction: float = DEFAULT_RELATIVE_HEIGHT

    def describe(self):
        return f"height = {self.fraction!r} x root height"

    def resolve(self, d: Dendrogram) -> ByHeight:
        return ByHeight(self.fraction * d.root_height)


DEFAULT_CUT = ByRelativeHeight()


@dataclass(frozen=True)
class ClusterAssignment:
    """Flat partition of the leaves of a dendrogram.

    ``cluster_of[i]`` is the cluster index of leaf ``i``; indices run
    ``0..k-1`` ordered by each cluster's smallest leaf.
    """

    labels: tuple
    cluster_of: tuple
    k: int
    cut: object

    def clusters(self):
        """Leaf indices grouped per cluster."""
        out = [[] for _ in range(self.k)]
        for leaf, c in enumerate(self.cluster_of):
            out[c].append(leaf)
        return out

    def members(self):
        """Leaf labels grouped per cluster."""
        return [[self.labels[i] for i in group] for group in self.clusters()]


def _components(d: Dendrogram, keep, cut):
    n = d.n_leaves
    parent = list(range(2 * n - 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t, m in enumerate(d.merges):
        if keep[t]:
            parent[find(m.left)] = n + t
            parent[find(m.right)] = n + t
    roots = [find(i) for i in range(n)]
    renumber = {}
    cluster_of = []
    for r in roots:  # leaves scanned in order, so numbering follows smallest leaf
        cluster_of.append(renumber.setdefault(r, len(renumber)))
    return ClusterAssignment(d.labels, tuple(cluster_of), len(renumber), cut)


def cut_by_count(d: Dendrogram, k: int) -> ClusterAssignment:
    """Undo the last ``k - 1`` merges."""
    n = d.n_leaves
    if not 1 <= k <= n:
        raise RangeError(f"k must be in [1, {n}], got {k}")
    keep = [t < n - k for t in range(n - 1)]
    return _components(d, keep, ByCount(int(k)))


def cut_by_height(d: Dendrogram, h: float) -> ClusterAssignment:
    """Keep exactly the merges at height ``<= h``."""
    if not h >= 0:
        raise RangeError(f"cut height must be >= 0, got {h}")
    keep = [m.height <= h for m in d.merges]
    return _components(d, keep, ByHeight(float(h)))


def apply_cut(d: Dendrogram, rule) -> ClusterAssignment:
    if isinstance(rule, ByRelativeHeight):
        rule = rule.resolve(d)
    if isinstance(rule, ByCount):
        return cut_by_count(d, rule.k)
    if isinstance(rule, ByHeight):
        return cut_by_height(d, rule.h)
    raise TypeError(f"unknown cut rule {rule!r}")


def cophenetic(d: Dendrogram) -> DistanceMatrix:
    """Height of the lowest merge joining each pair of leaves."""
    n = d.n_leaves
    out = np.zeros(n * (n - 1) // 2)
    members = [[i] for i in range(n)]
    for m in d.merges:
        left = np.array(members[m.left])
        right = np.array(members[m.right])
        lo = np.minimum.outer(left, right).ravel()
        hi = np.maximum.outer(left, right).ravel()
        out[lo * n - lo * (lo + 1) // 2 + (hi - lo - 1)] = m.height
        members.append(members[m.left] + members[m.right])
    return DistanceMatrix(n, out, d.labels)


def rank_strength(m: DataMatrix):
    """Courses by descending column sum; ties broken by ascending label.

    Returns a list of ``(label, score)`` pairs.
    """
    sums = m.values.sum(axis=0)
    pairs = [(label, float(s)) for label, s in zip(m.col_labels, sums)]
    return sorted(pairs, key=lambda p: (-p[1], p[0]))


def rand_index(a, b) -> float:
    """Unadjusted Rand index between two label sequences of equal length."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError("partitions cover different numbers of items")
    n = a.size
    if n < 2:
        return 1.0
    iu = np.triu_indices(n, 1)
    same_a = (a[:, None] == a[None, :])[iu]
    same_b = (b[:, None] == b[None, :])[iu]
    return float(np.mean(same_a == same_b))


@dataclass(frozen=True)
class LinkageResult:
    dendrogram: Dendrogram
    assignment: ClusterAssignment
    cut_height: float = None  # resolved threshold for height-based rules

    @property
    def n_clusters(self):
        return self.assignment.k


@dataclass(frozen=True)
class ComparisonReport:
    dataset_id: str
    cut: object
    per_linkage: dict
    ranking: list
    strongest: list
    weakest: list
    agreement: float
    orientation: Orientation = Orientation.COURSES
    standardized: bool = False

    def counts(self):
        return {l.value: r.n_clusters for l, r in self.per_linkage.items()}

    def summary(self):
        lines = [f"dataset: {self.dataset_id}", f"cut: {self.cut.describe()}"]
        for linkage, res in self.per_linkage.items():
            extra = "" if res.cut_height is None else f" (cut at {res.cut_height:.6g})"
            lines.append(f"{linkage.value:>8}: {res.n_clusters} clusters, "
                         f"root height {res.dendrogram.root_height:.6g}{extra}")
        lines.append("strongest: " + ", ".join(self.strongest))
        lines.append("weakest:   " + ", ".join(self.weakest))
        lines.append(f"agreement (Rand): {self.agreement:.4f}")
        return "\n".join(lines)


def compare_linkages(m: DataMatrix, cut=DEFAULT_CUT, *, dataset_id="dataset",
                     orientation=Orientation.COURSES, standardize=False,
                     top=3) -> ComparisonReport:
    """Cluster the same items under single and complete linkage and compare.

    Both dendrograms are cut with the same rule. A relative-height rule is
    resolved against each dendrogram's own root height.
    """
    items = extract_items(m, orientation)
    if standardize:
        items = standardize_zscore(items)
    dist = pairwise(items)
    per_linkage = {}
    for linkage in (Linkage.SINGLE, Linkage.COMPLETE):
        dendro = cluster_nn_chain(dist, linkage)
        rule = cut.resolve(dendro) if isinstance(cut, ByRelativeHeight) else cut
        per_linkage[linkage] = LinkageResult(
            dendro, apply_cut(dendro, rule),
            rule.h if isinstance(rule, ByHeight) else None)
    agreement = rand_index(per_linkage[Linkage.SINGLE].assignment.cluster_of,
                           per_linkage[Linkage.COMPLETE].assignment.cluster_of)
    ranking = rank_strength(m)
    labels = [label for label, _ in ranking]
    top = min(top, len(labels) // 2)
    return ComparisonReport(
        dataset_id=dataset_id,
        cut=cut,
        per_linkage=per_linkage,
        ranking=ranking,
        strongest=labels[:top],
        weakest=labels[::-1][:top],
        agreement=agreement,
        orientation=Orientation(orientation),
        standardized=bool(standardize),
    )
