"""Deterministic derivation of independent RNG seeds.

Training evaluates the objective many times per epoch (all shifted
parameter vectors plus a tracking evaluation) and each evaluation must
draw fresh measurement samples from its own reproducible stream. Seeds
are derived by feeding the integer coordinates of an evaluation into a
``numpy.random.SeedSequence``, which mixes them into well-separated
streams regardless of how close the inputs are.
"""
from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1


def derive_seed(*parts: int) -> int:
    """Mix integer coordinates into one seed, deterministically."""
    entropy = [int(p) & _MASK for p in parts]
    return int(np.random.SeedSequence(entropy).generate_state(1, np.uint64)[0])
