"""Agglomerative hierarchical clustering of course-frequency survey tables."""

from .data import DataMatrix, FeatureSet, Orientation, extract_items, standardize_zscore
from .dendro import (ByCount, ByHeight, ByRelativeHeight, ClusterAssignment,
                     ComparisonReport, apply_cut, compare_linkages, cophenetic,
                     cut_by_count, cut_by_height, rand_index, rank_strength)
from .distance import DistanceMatrix, condensed_index, euclidean, pairwise
from .engine import (Dendrogram, Linkage, Merge, cluster_naive, cluster_nn_chain,
                     lance_williams)
from .errors import (ClusteringError, DimensionError, ParseError, RangeError,
                     ValidationError)
from .formats import (CsvSchema, dendrogram_to_json, dendrogram_to_newick,
                      json_to_dendrogram, matrix_to_csv, parse_csv, render_svg,
                      report_to_json)

__version__ = "0.1.0"
