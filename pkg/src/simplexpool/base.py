"""Shared plumbing for trained base classifiers."""

import numpy as np

from .datasets import IndexSample


def as_matrix(x, d: int) -> np.ndarray:
    """Coerce a single d-vector or an (n, d) matrix to 2-D, checking width."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != d:
        raise ValueError(f"expected {d}-dimensional inputs, got shape {np.shape(x)}")
    return arr


class BaseModel:
    """A trained classifier: total prediction over d-vectors, OOB bookkeeping.

    Subclasses set kind/n_features/n_classes/train_indices/hyperparams and
    implement _predict_raw on an already-scaled (n, d) matrix. The optional
    scaler (shared with the owning ensemble) is applied inside predict.
    """

    kind: str = ""

    def __init__(self, n_features: int, n_classes: int, train_indices: IndexSample,
                 hyperparams: dict):
        self.n_features = n_features
        self.n_classes = n_classes
        self.train_indices = train_indices
        self.hyperparams = dict(hyperparams)
        self.scaler = None  # set once by the ensemble builder, then treated immutable

    def _predict_raw(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def predict_batch(self, X) -> np.ndarray:
        """Class indices for each row of X (scaler applied if present)."""
        X = as_matrix(X, self.n_features)
        if self.scaler is not None:
            X = self.scaler.transform(X)
        return self._predict_raw(X)

    def predict(self, x) -> int:
        return int(self.predict_batch(x)[0])
