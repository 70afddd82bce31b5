"""Single-hidden-layer perceptron trained by full-batch gradient descent.

Logistic units throughout; one-vs-all 0/1 targets; the loss is the squared
error averaged over samples and summed over the K output units. Weights and
biases start uniform in [-0.5, 0.5].
"""

import numpy as np

from .base import BaseModel
from .datasets import Dataset, IndexSample
from .rng import Seed, make_rng

DEFAULT_EPOCHS = 500
DEFAULT_LEARNING_RATE = 0.1


def sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


def init_weights(d: int, hidden: int, k: int, seed: Seed):
    """(W1, b1, W2, b2) with every entry uniform in [-0.5, 0.5]."""
    rng = make_rng(seed)
    w1 = rng.uniform(-0.5, 0.5, size=(d, hidden))
    b1 = rng.uniform(-0.5, 0.5, size=hidden)
    w2 = rng.uniform(-0.5, 0.5, size=(hidden, k))
    b2 = rng.uniform(-0.5, 0.5, size=k)
    return w1, b1, w2, b2


def loss_and_grad(weights, X: np.ndarray, targets: np.ndarray):
    """Loss (1/n) * sum_i ||o_i - y_i||^2 and its gradient per weight array."""
    w1, b1, w2, b2 = weights
    n = X.shape[0]
    hidden = sigmoid(X @ w1 + b1)
    out = sigmoid(hidden @ w2 + b2)
    diff = out - targets
    loss = float((diff**2).sum() / n)

    dz2 = (2.0 / n) * diff * out * (1.0 - out)
    dw2 = hidden.T @ dz2
    db2 = dz2.sum(axis=0)
    dz1 = (dz2 @ w2.T) * hidden * (1.0 - hidden)
    dw1 = X.T @ dz1
    db1 = dz1.sum(axis=0)
    return loss, (dw1, db1, dw2, db2)


class MLPModel(BaseModel):
    kind = "mlp"

    def __init__(self, w1, b1, w2, b2, train_indices, hyperparams):
        super().__init__(w1.shape[0], w2.shape[1], train_indices, hyperparams)
        self.w1 = np.asarray(w1, dtype=np.float64)
        self.b1 = np.asarray(b1, dtype=np.float64)
        self.w2 = np.asarray(w2, dtype=np.float64)
        self.b2 = np.asarray(b2, dtype=np.float64)

    def output(self, X: np.ndarray) -> np.ndarray:
        return sigmoid(sigmoid(X @ self.w1 + self.b1) @ self.w2 + self.b2)

    def _predict_raw(self, X: np.ndarray) -> np.ndarray:
        # argmax takes the first maximum, so exact ties go to the lowest class
        return np.argmax(self.output(X), axis=1)


def train_mlp(ds: Dataset, sample: IndexSample, hidden: int, seed: Seed,
              epochs: int = DEFAULT_EPOCHS,
              learning_rate: float = DEFAULT_LEARNING_RATE) -> MLPModel:
    """Train on the sampled rows (features are expected pre-standardized)."""
    if len(sample) == 0:
        raise ValueError("empty training sample")
    if hidden < 1:
        raise ValueError(f"hidden must be >= 1, got {hidden}")
    X = ds.features[sample.indices]
    y = ds.labels[sample.indices]
    k = ds.n_classes
    targets = np.zeros((X.shape[0], k), dtype=np.float64)
    targets[np.arange(X.shape[0]), y] = 1.0

    weights = list(init_weights(ds.d, hidden, k, seed))
    for _ in range(epochs):
        _, grads = loss_and_grad(weights, X, targets)
        for w, g in zip(weights, grads):
            w -= learning_rate * g

    return MLPModel(*weights, train_indices=sample,
                    hyperparams={"hidden": int(hidden), "epochs": int(epochs),
                                 "learning_rate": float(learning_rate)})
