"""Dataset container, CSV ingestion, stratified splitting and row sampling."""

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .rng import Seed, make_rng


class DataError(ValueError):
    """Raised for malformed or unusable input data."""


@dataclass(frozen=True)
class Dataset:
    """Immutable feature matrix plus integer class labels.

    features: (n, d) float64, finite everywhere.
    labels:   (n,) int64 with values in [0, K) where K = len(class_names).
    """

    features: np.ndarray
    labels: np.ndarray
    class_names: tuple[str, ...]
    feature_names: tuple[str, ...]

    def __post_init__(self):
        feats = np.ascontiguousarray(self.features, dtype=np.float64)
        labs = np.ascontiguousarray(self.labels, dtype=np.int64)
        object.__setattr__(self, "features", feats)
        object.__setattr__(self, "labels", labs)
        object.__setattr__(self, "class_names", tuple(self.class_names))
        object.__setattr__(self, "feature_names", tuple(self.feature_names))
        if feats.ndim != 2 or feats.shape[0] < 1 or feats.shape[1] < 1:
            raise DataError(f"features must be a nonempty 2-D matrix, got shape {feats.shape}")
        if labs.shape != (feats.shape[0],):
            raise DataError(f"labels shape {labs.shape} does not match {feats.shape[0]} rows")
        if len(self.class_names) < 2:
            raise DataError("single-class dataset: at least 2 classes required")
        if len(set(self.class_names)) != len(self.class_names):
            raise DataError("duplicate class names")
        if len(self.feature_names) != feats.shape[1]:
            raise DataError(f"{len(self.feature_names)} feature names for {feats.shape[1]} columns")
        if labs.min() < 0 or labs.max() >= len(self.class_names):
            raise DataError("label index outside [0, K)")
        if not np.all(np.isfinite(feats)):
            r, c = np.argwhere(~np.isfinite(feats))[0]
            raise DataError(f"non-finite feature value at row {r}, column {self.feature_names[c]!r}")
        feats.setflags(write=False)
        labs.setflags(write=False)

    @property
    def n(self) -> int:
        return self.features.shape[0]

    @property
    def d(self) -> int:
        return self.features.shape[1]

    @property
    def n_classes(self) -> int:
        return len(self.class_names)

    def class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.n_classes)

    def take(self, indices) -> "Dataset":
        """Row subset as a new Dataset (class/feature names preserved)."""
        idx = np.asarray(indices, dtype=np.int64)
        return Dataset(self.features[idx], self.labels[idx], self.class_names, self.feature_names)


@dataclass(frozen=True)
class IndexSample:
    """Row indices drawn from a dataset of n_source rows.

    Distinct when with_replacement is False. The out-of-bag set is the
    complement of the distinct drawn indices.
    """

    indices: np.ndarray
    with_replacement: bool
    n_source: int

    def __post_init__(self):
        idx = np.ascontiguousarray(self.indices, dtype=np.int64)
        object.__setattr__(self, "indices", idx)
        if idx.ndim != 1 or idx.size == 0:
            raise ValueError("index sample must be a nonempty 1-D sequence")
        if idx.min() < 0 or idx.max() >= self.n_source:
            raise ValueError(f"index outside [0, {self.n_source})")
        if not self.with_replacement and np.unique(idx).size != idx.size:
            raise ValueError("duplicate indices in a without-replacement sample")
        idx.setflags(write=False)

    def __len__(self) -> int:
        return self.indices.size

    def in_bag_mask(self) -> np.ndarray:
        """Boolean (n_source,) mask: True where the row was drawn."""
        mask = np.zeros(self.n_source, dtype=bool)
        mask[self.indices] = True
        return mask

    def oob_indices(self) -> np.ndarray:
        return np.flatnonzero(~self.in_bag_mask())


@dataclass(frozen=True)
class SplitSpec:
    """Train/test split request: fraction of rows (per class if stratified)."""

    train_fraction: float
    stratified: bool = True
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.train_fraction < 1.0:
            raise ValueError(f"train_fraction must lie in (0, 1), got {self.train_fraction}")


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def stratified_split(ds: Dataset, spec: SplitSpec) -> tuple[Dataset, Dataset]:
    """Split rows into train/test, preserving class proportions.

    Each class c with n_c rows contributes round(n_c * train_fraction) rows
    (half-up) to train, chosen uniformly at random; the rest go to test.
    Row order within each part follows the original dataset. Deterministic
    for a given spec.seed.
    """
    rng = make_rng(spec.seed)
    n = ds.n
    if spec.stratified:
        train_idx = []
        for c in range(ds.n_classes):
            rows_c = np.flatnonzero(ds.labels == c)
            if rows_c.size < 2:
                raise DataError(
                    f"class {ds.class_names[c]!r} has {rows_c.size} instance(s); need at least 2"
                )
            k_c = _round_half_up(rows_c.size * spec.train_fraction)
            train_idx.append(rng.permutation(rows_c)[:k_c])
        train_mask = np.zeros(n, dtype=bool)
        if train_idx:
            train_mask[np.concatenate(train_idx)] = True
    else:
        k = _round_half_up(n * spec.train_fraction)
        train_mask = np.zeros(n, dtype=bool)
        train_mask[rng.permutation(n)[:k]] = True

    train_rows = np.flatnonzero(train_mask)
    test_rows = np.flatnonzero(~train_mask)
    if train_rows.size == 0 or test_rows.size == 0:
        raise DataError(
            f"train_fraction {spec.train_fraction} leaves an empty "
            f"{'train' if train_rows.size == 0 else 'test'} part"
        )
    return ds.take(train_rows), ds.take(test_rows)


def subbag(n: int, rate: float, seed: Seed) -> IndexSample:
    """floor(n * rate) distinct row indices drawn uniformly without replacement."""
    if n < 2:
        raise ValueError(f"subbag needs n >= 2, got {n}")
    if not 0.0 < rate <= 1.0:
        raise ValueError(f"subbag rate must lie in (0, 1], got {rate}")
    k = int(math.floor(n * rate))
    if k < 1:
        raise ValueError(f"subbag of {n} rows at rate {rate} would be empty")
    idx = make_rng(seed).choice(n, size=k, replace=False)
    return IndexSample(idx, with_replacement=False, n_source=n)


def bootstrap(n: int, seed: Seed) -> IndexSample:
    """n row indices drawn uniformly with replacement (standard bootstrap)."""
    if n < 1:
        raise ValueError(f"bootstrap needs n >= 1, got {n}")
    idx = make_rng(seed).integers(0, n, size=n)
    return IndexSample(idx, with_replacement=True, n_source=n)


_MISSING_TOKENS = {"", "?", "na", "nan", "n/a", "null"}


def _is_missing(value: str) -> bool:
    return value.strip().lower() in _MISSING_TOKENS


def _try_float(value: str) -> float | None:
    try:
        return float(value)
    except ValueError:
        return None


def load_csv(path, label_column=None, delimiter: str = ",") -> Dataset:
    """Load a labelled dataset from a CSV file with a header row.

    label_column selects the class column by header name (str) or position
    (int); None means the last column. Feature columns that fail to parse as
    numbers are treated as categorical and one-hot encoded, categories in
    first-appearance order; class labels are mapped to indices in
    first-appearance order. Missing values and non-finite numbers are
    rejected with their location (1-based data row numbers).
    """
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh, delimiter=delimiter))
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise DataError(f"{path}: empty file (header row required)")
    header = [h.strip() for h in rows[0]]
    if len(set(header)) != len(header):
        raise DataError(f"{path}: duplicate column names in header")
    data = rows[1:]
    if not data:
        raise DataError(f"{path}: no data rows")
    for i, row in enumerate(data, start=1):
        if len(row) != len(header):
            raise DataError(f"{path}: row {i} has {len(row)} fields, expected {len(header)}")

    if label_column is None:
        label_pos = len(header) - 1
    elif isinstance(label_column, int):
        if not -len(header) <= label_column < len(header):
            raise DataError(f"{path}: label column index {label_column} out of range")
        label_pos = label_column % len(header)
    else:
        if label_column not in header:
            raise DataError(f"{path}: no column named {label_column!r}")
        label_pos = header.index(label_column)

    feature_pos = [j for j in range(len(header)) if j != label_pos]
    if not feature_pos:
        raise DataError(f"{path}: no feature columns besides the label")

    class_names: list[str] = []
    labels = np.empty(len(data), dtype=np.int64)
    for i, row in enumerate(data):
        value = row[label_pos].strip()
        if _is_missing(value):
            raise DataError(f"{path}: missing label at row {i + 1}")
        if value not in class_names:
            class_names.append(value)
        labels[i] = class_names.index(value)
    if len(class_names) < 2:
        raise DataError(f"{path}: single-class dataset ({class_names[0]!r} only)")

    columns: list[np.ndarray] = []
    feature_names: list[str] = []
    for j in feature_pos:
        name = header[j]
        raw = [row[j].strip() for row in data]
        for i, value in enumerate(raw):
            if _is_missing(value):
                raise DataError(f"{path}: missing value at row {i + 1}, column {name!r}")
        parsed = [_try_float(v) for v in raw]
        if all(p is not None for p in parsed):
            col = np.array(parsed, dtype=np.float64)
            bad = np.flatnonzero(~np.isfinite(col))
            if bad.size:
                raise DataError(
                    f"{path}: non-finite value at row {bad[0] + 1}, column {name!r}"
                )
            columns.append(col)
            feature_names.append(name)
        else:
            categories: list[str] = []
            for v in raw:
                if v not in categories:
                    categories.append(v)
            for cat in categories:
                columns.append(np.array([1.0 if v == cat else 0.0 for v in raw]))
                feature_names.append(f"{name}={cat}")

    features = np.column_stack(columns)
    return Dataset(features, labels, tuple(class_names), tuple(feature_names))
