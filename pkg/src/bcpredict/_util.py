"""Small shared helpers."""

from __future__ import annotations

import math

import numpy as np


def round_half_up(x: float) -> int:
    """Round to the nearest integer, halves away from zero.

    Python's built-in round() is banker's rounding; count targets in the
    split and oversampling contracts are defined with the conventional rule.
    """
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


def derive_seeds(seed: int, n: int) -> list[int]:
    """Derive n independent child seeds from one root seed.

    Deterministic in (seed, n); children are safe to consume in any order,
    so stages or iterations seeded this way may run in parallel without
    changing results.
    """
    state = np.random.SeedSequence(seed).generate_state(n, dtype=np.uint64)
    return [int(s) for s in state]
