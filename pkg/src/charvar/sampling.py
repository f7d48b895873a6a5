"""Deterministic character sampling from growing integer boxes.

Coordinates are nonzero integers in [-B, B]; the box doubles every batch,
so any fixed proper hypersurface is escaped quickly.  The trivial
character (all coordinates 1) is never produced.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .laurent import Character

BATCH = 16
INITIAL_BOX = 2


def box_for_trial(trial: int) -> int:
    return INITIAL_BOX * (2 ** (trial // BATCH))


def sample_character(rng: random.Random, nvars: int, box: int) -> Character:
    """One nontrivial rational character with coordinates in the box."""
    while True:
        coords = []
        for _ in range(nvars):
            x = 0
            while x == 0:
                x = rng.randint(-box, box)
            coords.append(Fraction(x))
        if any(c != 1 for c in coords):
            return Character(coords)


def character_stream(seed: int, nvars: int):
    """Infinite deterministic stream with the doubling box schedule."""
    rng = random.Random(seed)
    trial = 0
    while True:
        yield sample_character(rng, nvars, box_for_trial(trial))
        trial += 1
