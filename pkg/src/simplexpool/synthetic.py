"""Gaussian synthetic classification problems (twonorm, threenorm, ringnorm).

All three use d = 20 features and the classic offset a = 2/sqrt(20); class
labels are drawn by a fair coin, so classes are balanced in expectation.
"""

import numpy as np

from .datasets import Dataset
from .rng import Seed, make_rng

DIM = 20
OFFSET = 2.0 / np.sqrt(DIM)

_CLASS_NAMES = ("0", "1")
_FEATURE_NAMES = tuple(f"x{i + 1:02d}" for i in range(DIM))


def _labels_and_noise(n: int, seed: Seed):
    if n < 2:
        raise ValueError(f"need n >= 2 samples, got {n}")
    rng = make_rng(seed)
    y = rng.integers(0, 2, size=n)
    z = rng.standard_normal((n, DIM))
    return rng, y, z


def gen_twonorm(n: int, seed: Seed) -> Dataset:
    """Class 0 ~ N(+a*1, I), class 1 ~ N(-a*1, I)."""
    _, y, z = _labels_and_noise(n, seed)
    sign = np.where(y == 0, 1.0, -1.0)
    x = z + sign[:, None] * OFFSET
    return Dataset(x, y, _CLASS_NAMES, _FEATURE_NAMES)


def gen_threenorm(n: int, seed: Seed) -> Dataset:
    """Class 0: equal mixture of N(+a*1, I) and N(-a*1, I); class 1 ~ N(a*(+,-,+,-,...), I)."""
    rng, y, z = _labels_and_noise(n, seed)
    mix = rng.integers(0, 2, size=n)  # drawn for every row to keep the stream fixed
    alternating = OFFSET * np.where(np.arange(DIM) % 2 == 0, 1.0, -1.0)
    mean0 = np.where(mix == 0, 1.0, -1.0)[:, None] * OFFSET
    x = np.where((y == 0)[:, None], z + mean0, z + alternating)
    return Dataset(x, y, _CLASS_NAMES, _FEATURE_NAMES)


def gen_ringnorm(n: int, seed: Seed) -> Dataset:
    """Class 0 ~ N(0, 4I), class 1 ~ N(a*1, I)."""
    _, y, z = _labels_and_noise(n, seed)
    x = np.where((y == 0)[:, None], 2.0 * z, z + OFFSET)
    return Dataset(x, y, _CLASS_NAMES, _FEATURE_NAMES)


GENERATORS = {
    "twonorm": gen_twonorm,
    "threenorm": gen_threenorm,
    "ringnorm": gen_ringnorm,
}

SYNTHETIC_PREFIX = "synthetic:"


def is_synthetic_uri(uri: str) -> bool:
    return uri.startswith(SYNTHETIC_PREFIX)


def generate(uri: str, n: int, seed: Seed) -> Dataset:
    """Sample a dataset for a pseudo-dataset URI like ``synthetic:twonorm``."""
    name = uri[len(SYNTHETIC_PREFIX):] if is_synthetic_uri(uri) else uri
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise ValueError(
            f"unknown synthetic problem {name!r}; expected one of {sorted(GENERATORS)}"
        ) from None
    return gen(n, seed)
