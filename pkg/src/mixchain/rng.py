"""Deterministic random-stream derivation.

All randomness in the package flows from a single master seed. Independent
tasks (replications, datasets, chains, cells of a table) get their own
generator derived from ``(master_seed, *path)`` where ``path`` is a tuple of
small integers identifying the task, e.g. ``(cell_index, replication)``.

The derivation uses ``numpy.random.SeedSequence`` with the path as the spawn
key, so streams are independent, reproducible across platforms, and
bit-identical regardless of execution order or worker count.
"""

from __future__ import annotations

import numpy as np


def derive_rng(master_seed: int, *path: int) -> np.random.Generator:
    """Return the generator for task ``path`` under ``master_seed``."""
    ss = np.random.SeedSequence(master_seed, spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.PCG64(ss))


def as_generator(rng) -> tuple[np.random.Generator, int | None]:
    """Coerce an int seed or a Generator to (generator, seed-or-None)."""
    if isinstance(rng, (int, np.integer)):
        return derive_rng(int(rng)), int(rng)
    if isinstance(rng, np.random.Generator):
        return rng, None
    raise TypeError(f"expected int seed or numpy Generator, got {type(rng)!r}")
