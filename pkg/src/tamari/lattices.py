"""Builders turning the enumerated Tamari elements into Poset objects."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .elements import enumerate_type_a, enumerate_type_b
from .poset import Poset

# Posets store dense n x n matrices; |T_8^B| = 12870 would already need
# gigabytes and terascale validation matmuls, so poset building stops at 7
# (3432 elements) even though plain enumeration runs further.
POSET_MAX_N = 7


@lru_cache(maxsize=16)
def tamari_poset(kind: str, n: int) -> Poset:
    """The Tamari lattice of the given kind ("a" or "b") as a Poset.

    Elements are the lexicographically ordered tuples from the enumerators;
    the order is componentwise comparison, computed vectorized and then
    validated like any other poset.  Results are cached (posets are
    immutable), so repeated verification runs share the same object.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > POSET_MAX_N:
        raise ValueError(
            f"n={n} exceeds the poset cap {POSET_MAX_N}; the dense order "
            "matrix would be impractically large"
        )
    if kind == "b":
        elements = enumerate_type_b(n)
    elif kind == "a":
        elements = enumerate_type_a(n)
    else:
        raise ValueError(f"kind must be 'a' or 'b', got {kind!r}")
    grid = np.array(elements, dtype=float)  # inf survives the float cast
    leq = (grid[:, None, :] <= grid[None, :, :]).all(axis=2)
    return Poset(elements, leq)
