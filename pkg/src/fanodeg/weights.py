"""Integer evaluation points for the torus weights ``h_1, ..., h_{n+1}``."""
from __future__ import annotations

import random
from typing import Sequence, Tuple

from .errors import DistinctnessViolation, InvalidArgument

WeightVector = Tuple[int, ...]


def sequential_weights(n_plus_1: int) -> WeightVector:
    """``(1, 2, ..., n_plus_1)``: the smallest distinct positive point."""
    if n_plus_1 < 1:
        raise InvalidArgument("need at least one weight")
    return tuple(range(1, n_plus_1 + 1))


def random_weights(n_plus_1: int, seed: int, range_bound: int) -> WeightVector:
    """Pairwise distinct integers drawn from ``[-range_bound, range_bound]``.

    Pure function of its arguments.
    """
    if n_plus_1 < 1:
        raise InvalidArgument("need at least one weight")
    if range_bound < 2 * n_plus_1:
        raise InvalidArgument(
            f"range_bound {range_bound} < 2*{n_plus_1}; "
            "not enough headroom for distinct weights"
        )
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < n_plus_1:
        h = rng.randint(-range_bound, range_bound)
        if h in seen:
            continue
        seen.add(h)
        out.append(h)
    return tuple(out)


def validate(w: Sequence[int]) -> WeightVector:
    """Return ``w`` as a tuple, raising if two entries coincide."""
    first_seen = {}
    for pos, h in enumerate(w, start=1):
        if not isinstance(h, int) or isinstance(h, bool):
            raise InvalidArgument(f"weight {h!r} is not an integer")
        if h in first_seen:
            raise DistinctnessViolation((first_seen[h], pos), h)
        first_seen[h] = pos
    return tuple(w)
