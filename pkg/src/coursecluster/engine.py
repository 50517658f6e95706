"""Agglomerative clustering under single and complete linkage.

Two engines produce the same :class:`Dendrogram`:

* :func:`cluster_naive` scans every active pair at each step (O(n^3)); it is
  kept as the reference implementation.
* :func:`cluster_nn_chain` follows nearest-neighbour chains over the condensed
  matrix in O(n^2) time.

Cluster ids follow the usual linkage-matrix convention: leaves are
``0..n-1`` and the merge at step ``t`` creates id ``n + t``. Within a merge
the child whose smallest leaf index is lower is stored first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .distance import DistanceMatrix, row_indices
from .errors import DimensionError, ValidationError


class Linkage(str, enum.Enum):
    SINGLE = "single"
    COMPLETE = "complete"


def lance_williams(d_ik, d_jk, linkage):
    """Distance from the union of clusters i and j to cluster k.

    Works elementwise on arrays; scalars come back as ``float``.
    """
    linkage = Linkage(linkage)
    if linkage is Linkage.SINGLE:
        out = np.minimum(d_ik, d_jk)
    else:
        out = np.maximum(d_ik, d_jk)
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class Merge:
    left: int
    right: int
    height: float
    size: int


@dataclass(frozen=True)
class Dendrogram:
    """Ordered merge history over ``n_leaves`` labelled leaves."""

    n_leaves: int
    merges: tuple
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "merges", tuple(self.merges))
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        self.validate()

    def validate(self):
        """Raise :class:`ValidationError` naming the first broken invariant."""
        n = self.n_leaves
        if not isinstance(n, (int, np.integer)) or n < 2:
            raise ValidationError(f"n_leaves must be an integer >= 2, got {n!r}")
        if len(self.labels) != n:
            raise ValidationError(f"expected {n} labels, got {len(self.labels)}")
        if len(self.merges) != n - 1:
            raise ValidationError(
                f"expected {n - 1} merges for {n} leaves, got {len(self.merges)}")
        sizes = [1] * n
        used = [False] * (2 * n - 1)
        prev = -np.inf
        for t, m in enumerate(self.merges):
            limit = n + t
            for child in (m.left, m.right):
                if not 0 <= child < limit:
                    raise ValidationError(
                        f"merge {t} references unknown cluster id {child}")
                if used[child]:
                    raise ValidationError(
                        f"merge {t} reuses cluster id {child} as a child")
            if m.left == m.right:
                raise ValidationError(f"merge {t} joins cluster {m.left} with itself")
            if not np.isfinite(m.height) or m.height < 0:
                raise ValidationError(
                    f"merge {t} height must be finite and >= 0, got {m.height}")
            if m.height < prev:
                raise ValidationError(
                    f"merge heights must be non-decreasing: step {t} has "
                    f"{m.height} after {prev}")
            expected = sizes[m.left] + sizes[m.right]
            if m.size != expected:
                raise ValidationError(
                    f"merge {t} size {m.size} != {expected} leaves in its children")
            used[m.left] = used[m.right] = True
            sizes.append(expected)
            prev = m.height

    @property
    def heights(self):
        return np.array([m.height for m in self.merges])

    @property
    def root_height(self):
        return self.merges[-1].height

    def to_array(self):
        """``(n-1) x 4`` float array ``[left, right, height, size]``."""
        return np.array([[m.left, m.right, m.height, m.size] for m in self.merges],
                        dtype=np.float64)

    def members(self, cluster_id):
        """Leaf indices under ``cluster_id``, ascending."""
        n = self.n_leaves
        stack, out = [cluster_id], []
        while stack:
            c = stack.pop()
            if c < n:
                out.append(c)
            else:
                m = self.merges[c - n]
                stack.extend((m.left, m.right))
        return sorted(out)


def _validate_input(d):
    if not isinstance(d, DistanceMatrix):
        raise TypeError("expected a DistanceMatrix")
    if d.n < 2:
        raise DimensionError(f"need at least 2 items, got {d.n}")
    if not np.all(np.isfinite(d.condensed)):
        raise ValidationError("distances must be finite")
    return d.n


def cluster_naive(d: DistanceMatrix, linkage) -> Dendrogram:
    """Reference AHC: merge the globally closest active pair at every step.

    Ties go to the pair whose (smaller id, larger id) is lexicographically
    least under the current cluster ids.
    """
    linkage = Linkage(linkage)
    n = _validate_input(d)
    dist = d.to_square()
    ids = np.arange(n)
    minleaf = np.arange(n)
    sizes = np.ones(n, dtype=int)
    active = np.ones(n, dtype=bool)
    merges = []
    for t in range(n - 1):
        slots = np.flatnonzero(active)
        iu, ju = np.triu_indices(slots.size, 1)
        a_all, b_all = slots[iu], slots[ju]
        vals = dist[a_all, b_all]
        best = vals.min()
        hit = np.flatnonzero(vals == best)
        a_all, b_all = a_all[hit], b_all[hit]
        lo = np.minimum(ids[a_all], ids[b_all])
        hi = np.maximum(ids[a_all], ids[b_all])
        pick = np.lexsort((hi, lo))[0]
        a, b = a_all[pick], b_all[pick]

        first, second = (a, b) if minleaf[a] < minleaf[b] else (b, a)
        size = int(sizes[a] + sizes[b])
        merges.append(Merge(int(ids[first]), int(ids[second]), float(best), size))

        new_row = lance_williams(dist[a], dist[b], linkage)
        dist[a, :] = new_row
        dist[:, a] = new_row
        dist[a, a] = 0.0
        active[b] = False
        ids[a] = n + t
        sizes[a] = size
        minleaf[a] = min(minleaf[a], minleaf[b])
    return Dendrogram(n, merges, d.labels)


def cluster_nn_chain(d: DistanceMatrix, linkage) -> Dendrogram:
    """Nearest-neighbour-chain AHC over the condensed matrix.

    Produces the same merge heights as :func:`cluster_naive`, and the same
    tree whenever the inter-cluster distances met along the way are distinct.
    """
    linkage = Linkage(linkage)
    n = _validate_input(d)
    work = np.array(d.condensed, dtype=np.float64)
    active = np.ones(n, dtype=bool)
    raw = []  # (representative leaf a, representative leaf b, height), discovery order
    chain = []
    while len(raw) < n - 1:
        if not chain:
            chain.append(int(np.argmax(active)))
        x = chain[-1]
        idx = row_indices(x, n)
        row = work[idx]
        row[x] = np.inf
        row[~active] = np.inf
        y = int(np.argmin(row))
        if len(chain) > 1 and row[chain[-2]] == row[y]:
            y = chain[-2]  # keeps the chain from cycling on ties
        if len(chain) > 1 and y == chain[-2]:
            chain.pop()
            chain.pop()
            raw.append((x, y, row[y]))
            keep, drop = (x, y) if x < y else (y, x)
            keep_idx = idx if keep == x else row_indices(keep, n)
            drop_idx = idx if drop == x else row_indices(drop, n)
            others = active.copy()
            others[[keep, drop]] = False
            work[keep_idx[others]] = lance_williams(
                work[keep_idx[others]], work[drop_idx[others]], linkage)
            active[drop] = False
        else:
            chain.append(y)
    # merges of equal height stay in discovery order, so children precede parents
    order = np.argsort([h for _, _, h in raw], kind="stable")
    return _label(n, [raw[k] for k in order], d.labels)


def _label(n, raw, labels):
    """Assign ``n + t`` ids to merges given as pairs of representative leaves."""
    parent = list(range(n))
    cluster = list(range(n))
    size = [1] * n
    minleaf = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    merges = []
    for t, (a, b, h) in enumerate(raw):
        ra, rb = find(a), find(b)
        if minleaf[ra] > minleaf[rb]:
            ra, rb = rb, ra
        merges.append(Merge(cluster[ra], cluster[rb], float(h), size[ra] + size[rb]))
        parent[rb] = ra
        size[ra] += size[rb]
        cluster[ra] = n + t
    return Dendrogram(n, merges, labels)
