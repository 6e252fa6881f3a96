import random

import numpy as np
import pytest

from tamari import Poset


def random_poset(rng: random.Random, n: int, edge_prob: float = 0.35) -> Poset:
    """Random DAG on 0..n-1 (arcs i->j for i<j), transitively closed."""
    mat = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                mat[i, j] = True
    for k in range(n):
        for i in range(n):
            if mat[i, k]:
                mat[i] |= mat[k]
    return Poset(list(range(n)), mat)


def check_chain_family(p: Poset, family) -> None:
    seen: set[int] = set()
    for chain in family.chains:
        for a, b in zip(chain, chain[1:]):
            assert a != b and p.leq(a, b)
        assert not (set(chain) & seen)
        seen |= set(chain)
    assert family.total == sum(len(c) for c in family.chains)


def check_antichain_family(p: Poset, family) -> None:
    seen: set[int] = set()
    for antichain in family.antichains:
        for a in antichain:
            for b in antichain:
                if a != b:
                    assert not p.leq(a, b)
        assert not (set(antichain) & seen)
        seen |= set(antichain)
    assert family.total == sum(len(a) for a in family.antichains)


@pytest.fixture(scope="session")
def chain_poset() -> Poset:
    return Poset.from_predicate(list("abc"), lambda x, y: x <= y)


@pytest.fixture(scope="session")
def diamond_poset() -> Poset:
    return Poset.from_covers(list("abcd"), [(0, 1), (0, 2), (1, 3), (2, 3)])
