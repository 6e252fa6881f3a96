"""Finite poset engine: order validation, Hasse diagrams, levels, duality.

A :class:`Poset` stores the full order relation as a dense boolean numpy
matrix (``leq[i, j]`` iff element i is below or equal to element j), which is
validated to be reflexive, antisymmetric and transitive at construction.
Cover edges (the Hasse diagram) are the transitive reduction of the strict
part.  Everything here is immutable after construction and safe to share
between threads; target sizes are a few thousand elements at most.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np


class PosetError(ValueError):
    """Raised when a claimed order relation fails a partial-order axiom."""

    def __init__(self, message: str, kind: str | None = None, witness=None):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


def _two_step(m: np.ndarray) -> np.ndarray:
    # Boolean matrix square via float32 matmul; BLAS keeps this fast for the
    # ~1000-element posets this library targets.
    f = m.astype(np.float32)
    return (f @ f) > 0.5


def _validate_order(labels: list, leq: np.ndarray) -> None:
    n = leq.shape[0]
    diag = np.diagonal(leq)
    if not diag.all():
        i = int(np.nonzero(~diag)[0][0])
        raise PosetError(
            f"relation is not reflexive at {labels[i]!r}",
            kind="reflexivity",
            witness=(labels[i],),
        )
    sym = leq & leq.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = (int(x) for x in np.argwhere(sym)[0])
        raise PosetError(
            f"relation is not antisymmetric: {labels[i]!r} <= {labels[j]!r} and back",
            kind="antisymmetry",
            witness=(labels[i], labels[j]),
        )
    bad = _two_step(leq) & ~leq
    if bad.any():
        i, j = (int(x) for x in np.argwhere(bad)[0])
        k = int(np.nonzero(leq[i] & leq[:, j])[0][0])
        raise PosetError(
            f"relation is not transitive: {labels[i]!r} <= {labels[k]!r} <= "
            f"{labels[j]!r} but not {labels[i]!r} <= {labels[j]!r}",
            kind="transitivity",
            witness=(labels[i], labels[k], labels[j]),
        )


@dataclass(frozen=True)
class LevelAssignment:
    """A map element index -> level whose fibers partition into antichains.

    ``mode`` is one of ``"lowest"`` (longest chain up from a minimal
    element), ``"highest"`` (mirrored from the top so that elements on a
    maximum chain keep the same level in both modes) or ``"shifted"`` (the
    lowest map with every unleveled element raised by one).
    """

    levels: tuple[int, ...]
    mode: str

    def __getitem__(self, i: int) -> int:
        return self.levels[i]

    def fibers(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for lv in sorted(set(self.levels)):
            out[lv] = [i for i, l in enumerate(self.levels) if l == lv]
        return out


@dataclass(frozen=True)
class LeveledSubposet:
    """Elements lying on some maximum-length chain, with their levels.

    ``members`` are indices into the ambient poset (ascending), ``levels``
    restricts the lowest-level map to them, and ``poset`` is the induced
    subposet (labels inherited from the ambient poset, in member order).
    """

    members: tuple[int, ...]
    levels: dict[int, int] = field(repr=False)
    poset: "Poset" = field(repr=False)

    def level_sizes(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for m in self.members:
            lv = self.levels[m]
            out[lv] = out.get(lv, 0) + 1
        return dict(sorted(out.items()))


class Poset:
    """Immutable finite poset over an indexed sequence of labels."""

    def __init__(self, labels: Sequence, leq: np.ndarray, *, validate: bool = True):
        labels = list(labels)
        if not labels:
            raise PosetError("poset needs at least one element", kind="empty")
        leq = np.asarray(leq, dtype=bool)
        n = len(labels)
        if leq.shape != (n, n):
            raise PosetError(f"relation shape {leq.shape} does not match {n} labels")
        if validate:
            _validate_order(labels, leq)
        leq = leq.copy()
        leq.setflags(write=False)
        self.labels = labels
        self._leq = leq

    @classmethod
    def from_predicate(cls, labels: Sequence, leq: Callable) -> "Poset":
        """Build from a binary order predicate, validating the axioms."""
        labels = list(labels)
        n = len(labels)
        mat = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(labels):
            for j, b in enumerate(labels):
                mat[i, j] = bool(leq(a, b))
        return cls(labels, mat)

    @classmethod
    def from_covers(cls, labels: Sequence, covers: Iterable[tuple[int, int]]) -> "Poset":
        """Rebuild a poset from cover pairs (lower, upper) by transitive closure."""
        labels = list(labels)
        n = len(labels)
        reach = np.eye(n, dtype=bool)
        for u, v in covers:
            if not (0 <= u < n and 0 <= v < n):
                raise PosetError(f"cover ({u},{v}) out of range for {n} elements")
            reach[u, v] = True
        while True:
            nxt = reach | _two_step(reach)
            if (nxt == reach).all():
                break
            reach = nxt
        return cls(labels, reach)  # validation rejects cyclic cover sets

    # -- basic structure ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def leq_matrix(self) -> np.ndarray:
        return self._leq

    def leq(self, i: int, j: int) -> bool:
        return bool(self._leq[i, j])

    @cached_property
    def strict_matrix(self) -> np.ndarray:
        m = self._leq & ~np.eye(self.n, dtype=bool)
        m.setflags(write=False)
        return m

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.strict_matrix
        cov = lt & ~_two_step(lt)
        cov.setflags(write=False)
        return cov

    @property
    def covers(self) -> list[tuple[int, int]]:
        """Sorted cover pairs (lower, upper): the Hasse diagram edges."""
        return [(int(u), int(v)) for u, v in np.argwhere(self.cover_matrix)]

    def minimal_elements(self) -> list[int]:
        return [int(i) for i in np.nonzero(~self.strict_matrix.any(axis=0))[0]]

    def maximal_elements(self) -> list[int]:
        return [int(i) for i in np.nonzero(~self.strict_matrix.any(axis=1))[0]]

    def index(self, label) -> int:
        return self._label_index[label]

    @cached_property
    def _label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def topological_order(self) -> list[int]:
        """A linear extension: ascending number of elements below, index tiebreak."""
        below = self._leq.sum(axis=0)
        return sorted(range(self.n), key=lambda v: (int(below[v]), v))

    def __repr__(self) -> str:
        return f"Poset(n={self.n})"

    # -- levels and chains ---------------------------------------------------

    @cached_property
    def _level_arrays(self) -> tuple[list[int], list[int]]:
        cov = self.cover_matrix
        order = self.topological_order()
        up_adj = [np.nonzero(cov[u])[0] for u in range(self.n)]
        low = [0] * self.n
        for u in order:
            du = low[u] + 1
            for v in up_adj[u]:
                if low[v] < du:
                    low[v] = du
        up = [0] * self.n
        down_adj = [np.nonzero(cov[:, v])[0] for v in range(self.n)]
        for v in reversed(order):
            dv = up[v] + 1
            for u in down_adj[v]:
                if up[u] < dv:
                    up[u] = dv
        return low, up

    def longest_chain_length(self) -> int:
        """Number of cover steps in a maximum chain (elements minus one)."""
        low, _ = self._level_arrays
        return max(low)

    def level_map(self, mode: str = "lowest") -> LevelAssignment:
        low, up = self._level_arrays
        if mode == "lowest":
            return LevelAssignment(tuple(low), "lowest")
        if mode == "highest":
            top = self.longest_chain_length()
            return LevelAssignment(tuple(top - u for u in up), "highest")
        raise ValueError(f"unknown level mode {mode!r}")

    def leveled_subposet(self) -> LeveledSubposet:
        """The subposet of elements on a chain of globally maximal length."""
        low, up = self._level_arrays
        top = max(low)
        members = tuple(v for v in range(self.n) if low[v] + up[v] == top)
        levels = {v: low[v] for v in members}
        return LeveledSubposet(members, levels, self.induced(members))

    # -- derived posets ------------------------------------------------------

    def dual(self) -> "Poset":
        """Same elements with the order reversed (an involution)."""
        return Poset(self.labels, self._leq.T, validate=False)

    def induced(self, indices: Sequence[int]) -> "Poset":
        idx = list(indices)
        sub = self._leq[np.ix_(idx, idx)]
        return Poset([self.labels[i] for i in idx], sub, validate=False)


# -- isomorphism -------------------------------------------------------------


def _refine_colors(p: Poset, q: Poset) -> tuple[list[int], list[int]] | None:
    """Iterated neighborhood refinement over the cover digraphs.

    Returns stable color vectors for both posets, or None as soon as the
    color histograms diverge (no isomorphism can exist then).
    """

    def initial(r: Poset) -> list[tuple]:
        below = r.leq_matrix.sum(axis=0)
        above = r.leq_matrix.sum(axis=1)
        cov = r.cover_matrix
        return [
            (int(below[v]), int(above[v]), int(cov[:, v].sum()), int(cov[v].sum()))
            for v in range(r.n)
        ]

    def step(r: Poset, colors: list[int]) -> list[tuple]:
        cov = r.cover_matrix
        out = []
        for v in range(r.n):
            ups = tuple(sorted(colors[int(u)] for u in np.nonzero(cov[v])[0]))
            downs = tuple(sorted(colors[int(u)] for u in np.nonzero(cov[:, v])[0]))
            out.append((colors[v], ups, downs))
        return out

    interned: dict[tuple, int] = {}

    def intern(keys: list[tuple]) -> list[int]:
        out = []
        for k in keys:
            if k not in interned:
                interned[k] = len(interned)
            out.append(interned[k])
        return out

    pc = intern(initial(p))
    qc = intern(initial(q))
    while True:
        if sorted(pc) != sorted(qc):
            return None
        classes = len(set(pc))
        interned.clear()
        pc2 = intern(step(p, pc))
        qc2 = intern(step(q, qc))
        if sorted(pc2) != sorted(qc2):
            return None
        if len(set(pc2)) == classes:
            return pc2, qc2
        pc, qc = pc2, qc2


def find_isomorphism(p: Poset, q: Poset) -> list[int] | None:
    """Exact order-isomorphism search: refinement plus backtracking.

    Returns a mapping ``m`` with ``m[i]`` the q-index matched to p-index i,
    or None if the posets are not isomorphic.  Exhaustive, not heuristic:
    a None answer is a proof of non-isomorphism.
    """
    if p.n != q.n:
        return None
    refined = _refine_colors(p, q)
    if refined is None:
        return None
    pc, qc = refined
    candidates: dict[int, list[int]] = {}
    for j, c in enumerate(qc):
        candidates.setdefault(c, []).append(j)
    # most-constrained p-vertices first
    order = sorted(range(p.n), key=lambda v: (len(candidates.get(pc[v], ())), pc[v], v))
    pm = p.leq_matrix
    qm = q.leq_matrix
    mapping = [-1] * p.n
    used = [False] * q.n
    mapped: list[int] = []

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 2 * p.n + 200))

    def place(d: int) -> bool:
        if d == len(order):
            return True
        u = order[d]
        mp = mapping
        for x in candidates.get(pc[u], ()):
            if used[x]:
                continue
            tgt = [mp[v] for v in mapped]
            if not np.array_equal(pm[u, mapped], qm[x, tgt]):
                continue
            if not np.array_equal(pm[mapped, u], qm[tgt, x]):
                continue
            mapping[u] = x
            used[x] = True
            mapped.append(u)
            if place(d + 1):
                return True
            mapped.pop()
            used[x] = False
            mapping[u] = -1
        return False

    return mapping if place(0) else None


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return find_isomorphism(p, q) is not None
