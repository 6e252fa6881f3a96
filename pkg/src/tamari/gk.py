"""Greene-Kleitman machinery: maximum unions of k chains and k antichains.

The chain side is a profit-flow reduction.  Each element v is split into
v_in -> v_out with a capacity-one, profit-one arc plus a free bypass of
unlimited capacity; u_out -> v_in arcs exist for every strict relation
u < v (not just covers, so later units can skip saturated elements); the
source feeds every v_in and every v_out reaches the sink.  Sending k units
of maximum-profit flow (min-cost flow with unit profits negated) collects
exactly the maximum number of elements coverable by k chains, and the flow
decomposes into k paths whose collected elements are the chains.

Marginal profits of successive augmentations are the parts of the
Greene-Kleitman partition; its conjugate certifies the antichain totals.
Exhaustive oracles for small posets live here too, so every flow answer can
be cross-checked by an independent search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .flow import MinCostFlow
from .poset import Poset

_BIG = 10**9


@dataclass(frozen=True)
class ChainFamily:
    """k pairwise-disjoint chains (element indices, increasing in the order)."""

    chains: tuple[tuple[int, ...], ...]
    total: int


@dataclass(frozen=True)
class AntichainFamily:
    """k pairwise-disjoint antichains (sorted element indices)."""

    antichains: tuple[tuple[int, ...], ...]
    total: int


@dataclass(frozen=True)
class GKPartition:
    """The partition whose first-k partial sums are the max k-chain unions."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("partition parts must be weakly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def prefix(self, k: int) -> int:
        return sum(self.parts[:k])

    def conjugate(self) -> tuple[int, ...]:
        if not self.parts:
            return ()
        return conjugate_partition(self.parts)


def conjugate_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram of a weakly decreasing partition."""
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


# -- the chain-side flow reduction --------------------------------------------


class _ChainNetwork:
    """The split-element profit network for one poset, plus bookkeeping."""

    S = 0
    T = 1

    def __init__(self, p: Poset):
        order = p.topological_order()
        n = p.n
        net = MinCostFlow(2 + 2 * n)
        profit: list[int] = []
        for r in range(n):
            net.add_arc(self.S, 2 + 2 * r, _BIG, 0)
            profit.append(net.add_arc(2 + 2 * r, 3 + 2 * r, 1, -1))
            net.add_arc(2 + 2 * r, 3 + 2 * r, _BIG, 0)  # free bypass
            net.add_arc(3 + 2 * r, self.T, _BIG, 0)
        lt = p.strict_matrix
        for ri in range(n):
            oi = order[ri]
            for rj in range(ri + 1, n):
                if lt[oi, order[rj]]:
                    net.add_arc(3 + 2 * ri, 2 + 2 * rj, _BIG, 0)
        topo_nodes = [self.S]
        for r in range(n):
            topo_nodes.append(2 + 2 * r)
            topo_nodes.append(3 + 2 * r)
        topo_nodes.append(self.T)
        net.init_potentials(topo_nodes, self.S)
        self.net = net
        self.order = order
        self.profit_arcs = profit

    def augment(self, require_gain: bool = False) -> int | None:
        """One more unit of flow; returns the number of newly collected elements.

        With ``require_gain``, a unit that would collect nothing is not sent
        at all and None is returned; marginals are weakly decreasing, so no
        later unit could collect anything either.  Keeping zero-profit units
        out of the flow guarantees every decomposed path is nonempty.
        """
        found = self.net.cheapest_path(self.S, self.T)
        if found is None:
            raise RuntimeError("flow network unexpectedly disconnected")
        cost, arcs = found
        if require_gain and cost >= 0:
            return None
        self.net.apply_path(arcs)
        return -cost

    def decompose(self, k: int) -> list[list[int]]:
        """Peel the k unit paths off the flow; chains as original element indices."""
        net = self.net
        chains: list[list[int]] = []
        profit_rank = {a: r for r, a in enumerate(self.profit_arcs)}
        for _ in range(k):
            chain: list[int] = []
            u = self.S
            while u != self.T:
                for a in net.adj[u]:
                    if a % 2 == 0 and net.flow_on(a) > 0:
                        break
                else:
                    raise RuntimeError("flow decomposition ran out of arcs")
                net.cap[a] += 1
                net.cap[a ^ 1] -= 1
                r = profit_rank.get(a)
                if r is not None:
                    chain.append(self.order[r])
                u = net.to[a]
            chains.append(chain)
        return chains


def max_chain_union(p: Poset, k: int) -> ChainFamily:
    """A maximum-size union of k chains, as an explicit disjoint family.

    The family is deterministic for a given poset; when fewer than k chains
    suffice for the maximum, the extras come back empty.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    network = _ChainNetwork(p)
    total = 0
    units = 0
    for _ in range(k):
        gain = network.augment(require_gain=True)
        if gain is None:
            break
        total += gain
        units += 1
    chains = network.decompose(units)
    if total != sum(len(c) for c in chains) or any(not c for c in chains):
        raise RuntimeError("flow decomposition lost elements")
    chains.extend([] for _ in range(k - units))
    return ChainFamily(tuple(tuple(c) for c in chains), total)


def chain_union_sizes(p: Poset, k: int) -> list[int]:
    """Cumulative maximum union sizes for 1, 2, ..., k chains (one flow run)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    network = _ChainNetwork(p)
    sizes: list[int] = []
    total = 0
    growing = True
    while len(sizes) < k:
        if growing:
            gain = network.augment(require_gain=True)
            if gain is None:
                growing = False  # marginals hit zero; the totals plateau
            else:
                total += gain
        sizes.append(total)
    return sizes


def gk_partition(p: Poset) -> GKPartition:
    """The full Greene-Kleitman partition of the poset.

    Successive augmentations stay optimal at every intermediate k, so the
    marginal profits are exactly the parts; the run stops once every element
    is collected.  Violations of the guaranteed shape (positive, weakly
    decreasing marginals, first part = longest chain size) are internal
    errors, not data.
    """
    network = _ChainNetwork(p)
    parts: list[int] = []
    covered = 0
    while covered < p.n:
        gain = network.augment()
        if gain <= 0:
            raise RuntimeError("flow produced a nonpositive marginal before covering")
        if parts and gain > parts[-1]:
            raise RuntimeError("flow marginals are not weakly decreasing")
        parts.append(gain)
        covered += gain
    result = GKPartition(tuple(parts))
    if result.parts[0] != p.longest_chain_length() + 1:
        raise RuntimeError("first part disagrees with the level structure")
    return result


# -- antichain side ------------------------------------------------------------


def _max_antichain_matching(p: Poset) -> list[int]:
    """A maximum antichain via bipartite matching and a Koenig cover.

    Minimum chain partitions correspond to maximum matchings on the strict
    relation; the elements whose two copies both avoid the minimum vertex
    cover form an antichain of exactly the complementary size.
    """
    from scipy.sparse import csr_matrix
    from scipy.sparse.csgraph import maximum_bipartite_matching

    n = p.n
    lt = p.strict_matrix
    if not lt.any():
        return list(range(n))
    match_left = [-1] * n
    match_right = [-1] * n
    row_of_col = maximum_bipartite_matching(csr_matrix(lt), perm_type="row")
    for v in range(n):
        u = int(row_of_col[v])
        if u != -1:
            match_left[u] = v
            match_right[v] = u
    adj = [list(map(int, np.nonzero(lt[u])[0])) for u in range(n)]
    in_z_left = [match_left[u] == -1 for u in range(n)]
    in_z_right = [False] * n
    queue = [u for u in range(n) if in_z_left[u]]
    while queue:
        u = queue.pop()
        for v in adj[u]:
            if not in_z_right[v]:
                in_z_right[v] = True
                w = match_right[v]
                if w != -1 and not in_z_left[w]:
                    in_z_left[w] = True
                    queue.append(w)
    antichain = [v for v in range(n) if in_z_left[v] and not in_z_right[v]]
    matched = sum(1 for u in range(n) if match_left[u] != -1)
    if len(antichain) != n - matched:
        raise RuntimeError("Koenig construction out of balance")
    return antichain


def _bounded_height_subset(p: Poset, k: int, target: int, start: set[int]) -> set[int]:
    """Largest subset with no chain of k+1 elements, stopping at ``target``.

    Depth-first include/exclude over a linear extension; the depth of each
    selected element (longest selected chain ending there) may not exceed k.
    ``target`` is certified reachable by the conjugate partition, so the
    search acts as a repair step for the greedy start, not a gamble.
    """
    order = p.topological_order()
    lt = p.strict_matrix
    n = p.n
    best = set(start)

    selected: list[int] = []
    depths: list[int] = []

    def dfs(pos: int) -> bool:
        nonlocal best
        if len(selected) > len(best):
            best = set(selected)
            if len(best) >= target:
                return True
        if pos == n or len(selected) + (n - pos) <= len(best):
            return len(best) >= target
        e = order[pos]
        depth = 1
        for v, dv in zip(selected, depths):
            if dv >= depth and lt[v, e]:
                depth = dv + 1
        if depth <= k:
            selected.append(e)
            depths.append(depth)
            if dfs(pos + 1):
                return True
            selected.pop()
            depths.pop()
        return dfs(pos + 1)

    if len(best) < target:
        dfs(0)
    if len(best) < target:
        raise RuntimeError("height-bounded search missed the certified total")
    return best


def _split_by_height(p: Poset, members: set[int], k: int) -> list[list[int]]:
    """Partition a height-<=k subset into at most k antichains by inner level."""
    lt = p.strict_matrix
    order = [v for v in p.topological_order() if v in members]
    level: dict[int, int] = {}
    for v in order:
        level[v] = 1 + max((level[u] for u in order if u in level and lt[u, v]), default=-1)
    fibers: list[list[int]] = [[] for _ in range(k)]
    for v in sorted(members):
        fibers[level[v]].append(v)
    return fibers


def max_antichain_union(p: Poset, k: int) -> AntichainFamily:
    """A union of k disjoint antichains achieving the certified maximum.

    The total is the contract: it equals the sum of the first k parts of the
    conjugate of the Greene-Kleitman partition.  The family itself is built
    greedily from level fibers and repaired by search when the greedy pick
    falls short; for k = 1 a matching-based maximum antichain is used
    directly.  Intended for posets up to a few hundred elements when k >= 2.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    conj = gk_partition(p).conjugate()
    target = sum(conj[:k])
    if k == 1:
        chosen = [sorted(_max_antichain_matching(p))]
    else:
        fibers = sorted(p.level_map("lowest").fibers().values(), key=len, reverse=True)
        start = set().union(*fibers[:k]) if fibers else set()
        members = _bounded_height_subset(p, k, target, start)
        chosen = [f for f in _split_by_height(p, members, k) if f]
    total = sum(len(a) for a in chosen)
    if total != target:
        raise RuntimeError("constructed antichain family misses the certified total")
    while len(chosen) < k:
        chosen.append([])
    return AntichainFamily(tuple(tuple(a) for a in chosen), total)


# -- exhaustive oracles --------------------------------------------------------

ORACLE_MAX_ELEMENTS = 24


def oracle_chain_union(p: Poset, k: int) -> int:
    """Exact maximum k-chain union size by memoized exhaustive search.

    Walks a linear extension deciding, element by element, whether to skip
    it or append it to one of k chains (tracked by their current tops);
    completely independent of the flow reduction.  Hard caps: at most
    24 elements and k <= 3.
    """
    if p.n > ORACLE_MAX_ELEMENTS:
        raise ValueError(f"oracle capped at {ORACLE_MAX_ELEMENTS} elements, got {p.n}")
    if not 1 <= k <= 3:
        raise ValueError("oracle supports 1 <= k <= 3")
    order = p.topological_order()
    lt = p.strict_matrix
    n = p.n
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def best(pos: int, tops: tuple[int, ...]) -> int:
        if pos == n:
            return 0
        key = (pos, tops)
        cached = memo.get(key)
        if cached is not None:
            return cached
        e = order[pos]
        value = best(pos + 1, tops)
        for slot in range(k):
            t = tops[slot]
            if t == -1 or lt[t, e]:
                nxt = tuple(sorted(tops[:slot] + (e,) + tops[slot + 1 :]))
                value = max(value, 1 + best(pos + 1, nxt))
        memo[key] = value
        return value

    return best(0, (-1,) * k)


def oracle_max_antichain(p: Poset) -> int:
    """Exact maximum antichain size by branch-and-bound over subsets."""
    if p.n > ORACLE_MAX_ELEMENTS:
        raise ValueError(f"oracle capped at {ORACLE_MAX_ELEMENTS} elements, got {p.n}")
    n = p.n
    comp = p.leq_matrix | p.leq_matrix.T
    incompatible = [int(sum(1 << j for j in range(n) if comp[i, j])) for i in range(n)]
    best = 0

    def dfs(pos: int, count: int, blocked: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if pos == n or count + (n - pos) <= best:
            return
        if not (blocked >> pos) & 1:
            dfs(pos + 1, count + 1, blocked | incompatible[pos])
        dfs(pos + 1, count, blocked)

    dfs(0, 0, 0)
    return best
