"""CART-style random decision tree: Gini splits over random feature subsets."""

import numpy as np

from .base import BaseModel
from .datasets import Dataset, IndexSample
from .rng import Seed, make_rng

_NO_SPLIT = -1
_IMPROVE_EPS = 1e-12


def _gini(counts: np.ndarray) -> float:
    n = counts.sum()
    if n == 0:
        return 0.0
    p = counts / n
    return float(1.0 - np.dot(p, p))


def _best_split_on_feature(values: np.ndarray, y: np.ndarray, k: int):
    """Minimal weighted child Gini over thresholds of one feature.

    Returns (weighted_gini, threshold) or None when the feature is constant.
    """
    order = np.argsort(values, kind="stable")
    v = values[order]
    cuts = np.flatnonzero(v[1:] > v[:-1])  # split after position i
    if cuts.size == 0:
        return None
    onehot = np.zeros((v.size, k), dtype=np.float64)
    onehot[np.arange(v.size), y[order]] = 1.0
    left = np.cumsum(onehot, axis=0)[cuts]
    total = np.bincount(y, minlength=k).astype(np.float64)
    right = total[None, :] - left
    n_left = left.sum(axis=1)
    n_right = right.sum(axis=1)
    g_left = 1.0 - (left**2).sum(axis=1) / n_left**2
    g_right = 1.0 - (right**2).sum(axis=1) / n_right**2
    weighted = (n_left * g_left + n_right * g_right) / v.size
    best = int(np.argmin(weighted))
    pos = cuts[best]
    return float(weighted[best]), float(0.5 * (v[pos] + v[pos + 1]))


class TreeModel(BaseModel):
    """Flattened tree: per-node split feature/threshold and child links."""

    kind = "tree"

    def __init__(self, feature, threshold, left, right, leaf_class,
                 n_features, n_classes, train_indices, hyperparams):
        super().__init__(n_features, n_classes, train_indices, hyperparams)
        self.feature = np.asarray(feature, dtype=np.int32)
        self.threshold = np.asarray(threshold, dtype=np.float64)
        self.left = np.asarray(left, dtype=np.int32)
        self.right = np.asarray(right, dtype=np.int32)
        self.leaf_class = np.asarray(leaf_class, dtype=np.int32)

    @property
    def n_nodes(self) -> int:
        return self.feature.size

    def _predict_raw(self, X: np.ndarray) -> np.ndarray:
        out = np.empty(X.shape[0], dtype=np.int64)
        stack = [(0, np.arange(X.shape[0]))]
        while stack:
            node, rows = stack.pop()
            if rows.size == 0:
                continue
            f = self.feature[node]
            if f == _NO_SPLIT:
                out[rows] = self.leaf_class[node]
                continue
            go_left = X[rows, f] <= self.threshold[node]
            stack.append((self.left[node], rows[go_left]))
            stack.append((self.right[node], rows[~go_left]))
        return out


def train_tree(ds: Dataset, sample: IndexSample, mtry: int, seed: Seed) -> TreeModel:
    """Grow a tree to purity on the sampled rows.

    At each node the best Gini split is chosen among mtry features drawn
    uniformly without replacement; when none of the drawn features yields an
    improving split, further features are considered in the same random
    order, so a node only becomes a leaf impure when no feature at all can
    split it. Deterministic given seed.
    """
    if len(sample) == 0:
        raise ValueError("empty training sample")
    if not 1 <= mtry <= ds.d:
        raise ValueError(f"mtry must lie in [1, {ds.d}], got {mtry}")
    X = ds.features[sample.indices]
    y = ds.labels[sample.indices]
    k = ds.n_classes
    rng = make_rng(seed)

    feature: list[int] = []
    threshold: list[float] = []
    left: list[int] = []
    right: list[int] = []
    leaf_class: list[int] = []

    def new_node() -> int:
        feature.append(_NO_SPLIT)
        threshold.append(0.0)
        left.append(-1)
        right.append(-1)
        leaf_class.append(-1)
        return len(feature) - 1

    root = new_node()
    stack = [(root, np.arange(len(sample)))]
    while stack:
        node, rows = stack.pop()
        counts = np.bincount(y[rows], minlength=k)
        parent_gini = _gini(counts)
        if rows.size < 2 or parent_gini == 0.0:
            leaf_class[node] = int(np.argmax(counts))
            continue
        best = None
        for rank, f in enumerate(rng.permutation(ds.d)):
            if rank >= mtry and best is not None:
                break
            found = _best_split_on_feature(X[rows, f], y[rows], k)
            if found is None:
                continue
            gini, thr = found
            if gini < parent_gini - _IMPROVE_EPS and (best is None or gini < best[0]):
                best = (gini, int(f), thr)
        if best is None:
            leaf_class[node] = int(np.argmax(counts))
            continue
        _, f, thr = best
        go_left = X[rows, f] <= thr
        feature[node] = f
        threshold[node] = thr
        lid, rid = new_node(), new_node()
        left[node], right[node] = lid, rid
        stack.append((rid, rows[~go_left]))
        stack.append((lid, rows[go_left]))
    return TreeModel(feature, threshold, left, right, leaf_class,
                     ds.d, k, sample, {"mtry": int(mtry)})


def default_mtry(d: int) -> int:
    """Random-forest default: floor(sqrt(d)), at least 1."""
    return max(1, int(np.sqrt(d)))
