"""Independent reference computations used by the tests.

Nothing here calls into the clustering engine.
"""

import itertools
import math
import re

import numpy as np


def random_points(rng, n=None, dim=None):
    n = int(rng.integers(2, 41)) if n is None else n
    dim = int(rng.integers(1, 11)) if dim is None else dim
    return rng.normal(size=(n, dim)) * rng.uniform(0.1, 10.0)


def brute_square(points):
    n = len(points)
    out = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            out[i, j] = math.sqrt(sum((a - b) ** 2 for a, b in zip(points[i], points[j])))
    return out


def prim_mst_weights(square):
    """Edge weights of a minimum spanning tree of the complete graph."""
    n = square.shape[0]
    in_tree = [False] * n
    best = [math.inf] * n
    best[0] = 0.0
    weights = []
    for _ in range(n):
        u = min((i for i in range(n) if not in_tree[i]), key=lambda i: best[i])
        in_tree[u] = True
        if _ > 0:
            weights.append(best[u])
        for v in range(n):
            if not in_tree[v] and square[u, v] < best[v]:
                best[v] = square[u, v]
    return sorted(weights)


def leaf_sets(merges, n):
    """Leaf sets of each merged cluster, from a raw (left, right, ...) table."""
    sets = [frozenset([i]) for i in range(n)]
    children = []
    for rec in merges:
        left, right = int(rec[0]), int(rec[1])
        children.append((sets[left], sets[right]))
        sets.append(sets[left] | sets[right])
    return children


def brute_partition_after(merges, n, n_kept):
    """Partition (as a set of frozensets) after applying the first ``n_kept`` merges."""
    sets = [frozenset([i]) for i in range(n)]
    alive = set(range(n))
    for t, rec in enumerate(merges[:n_kept]):
        left, right = int(rec[0]), int(rec[1])
        sets.append(sets[left] | sets[right])
        alive -= {left, right}
        alive.add(n + t)
    return {sets[c] for c in alive}


def rand_by_enumeration(a, b):
    pairs = list(itertools.combinations(range(len(a)), 2))
    agree = sum((a[i] == a[j]) == (b[i] == b[j]) for i, j in pairs)
    return agree / len(pairs)


_TOKEN = re.compile(r"\s*(\(|\)|,|;|:|'(?:[^']|'')*'|[^(),:;\s]+)")


def parse_newick(text):
    """Tiny recursive-descent Newick parser.

    Returns ``(tree, leaves)`` where a tree node is ``(label, length, children)``.
    """
    tokens = _TOKEN.findall(text.strip())
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, got {tok!r}")
        pos += 1
        return tok

    def node():
        children = []
        label = None
        if peek() == "(":
            take("(")
            children.append(node())
            while peek() == ",":
                take(",")
                children.append(node())
            take(")")
        if peek() not in ("(", ")", ",", ":", ";", None):
            label = take()
            if label.startswith("'"):
                label = label[1:-1].replace("''", "'")
        length = None
        if peek() == ":":
            take(":")
            length = float(take())
        return (label, length, children)

    tree = node()
    take(";")
    if pos != len(tokens):
        raise ValueError("trailing tokens after ';'")
    leaves = []

    def collect(t):
        if not t[2]:
            leaves.append(t[0])
        for c in t[2]:
            collect(c)

    collect(tree)
    return tree, leaves


def root_to_leaf_sums(tree, acc=0.0):
    label, length, children = tree
    if not children:
        return [acc]
    out = []
    for c in children:
        out.extend(root_to_leaf_sums(c, acc + (c[1] or 0.0)))
    return out
