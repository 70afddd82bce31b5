"""Seed derivation for reproducible, scheduling-independent randomness.

Every stochastic operation in the package takes an explicit seed. Builders
derive per-task seeds from a master seed plus a stream path (a tuple of small
integers identifying the task: stage, model index, ...), so results never
depend on execution order or on how work is distributed over processes.
"""

import numpy as np

Seed = int | np.random.SeedSequence


def derive_seed(master_seed: int, *stream: int) -> int:
    """Deterministic 64-bit child seed for (master_seed, stream...).

    Distinct stream paths give statistically independent seeds.
    """
    ss = np.random.SeedSequence([int(master_seed), *(int(s) for s in stream)])
    return int(ss.generate_state(1, np.uint64)[0])


def make_rng(seed: Seed) -> np.random.Generator:
    """Generator for an explicit seed (int or SeedSequence)."""
    return np.random.default_rng(seed)
