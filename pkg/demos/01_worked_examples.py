"""Tracing single and complete linkage by hand on tiny 1-D data sets.

Run with ``python demos/01_worked_examples.py``.
"""
import numpy as np

from coursecluster import (ByHeight, DataMatrix, Linkage, cluster_naive, cluster_nn_chain,
                           compare_linkages, cophenetic, cut_by_count, pairwise)
from coursecluster.data import FeatureSet

# Three points on a line. The two nearest (0 and 1) always merge first; the
# linkages disagree only on how far the pair {0, 1} is from the point at 3.
items = FeatureSet(np.array([[0.0], [1.0], [3.0]]), ["c0", "c1", "c3"])
dist = pairwise(items)
print("condensed distances:", dist.condensed)

for linkage in Linkage:
    tree = cluster_nn_chain(dist, linkage)
    print(f"\n{linkage.value} linkage")
    for t, m in enumerate(tree.merges):
        print(f"  step {t}: {m.left} + {m.right} -> id {tree.n_leaves + t} "
              f"at height {m.height} ({m.size} leaves)")
    print("  two clusters:", cut_by_count(tree, 2).members())
    print("  cophenetic:", cophenetic(tree).condensed)

# The naive O(n^3) scan and the nearest-neighbour chain agree.
assert cluster_naive(dist, "complete") == cluster_nn_chain(dist, "complete")

# Four points where chaining matters: single linkage strings them together
# below 1.5, complete linkage still sees two groups at that height.
chain = DataMatrix([[0, 1, 2.1, 3.3]], ["s1"], ["A", "B", "C", "D"])
report = compare_linkages(chain, ByHeight(1.5), dataset_id="chain4")
print()
print(report.summary())
