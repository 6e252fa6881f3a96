"""Minimum-cost flow by successive shortest augmenting paths with potentials.

Arcs are stored in pairs: arc ``2k`` is the forward arc, arc ``2k+1`` its
zero-capacity residual reverse.  The solver assumes an acyclic network whose
only negative costs sit on forward arcs, which is all the chain-packing
reduction needs: one exact single-pass relaxation in topological node order
establishes initial potentials, and every later augmentation runs Dijkstra
on reduced costs (nonnegative by the usual invariant).  All costs and
capacities are integers, so the computed flows are exactly integral.
"""

from __future__ import annotations

import heapq

_UNREACHED = float("inf")


class MinCostFlow:
    def __init__(self, num_nodes: int):
        self.n = num_nodes
        self.adj: list[list[int]] = [[] for _ in range(num_nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.cost: list[int] = []
        self.potential: list[float] | None = None

    def add_arc(self, u: int, v: int, cap: int, cost: int) -> int:
        a = len(self.to)
        self.adj[u].append(a)
        self.to.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.adj[v].append(a + 1)
        self.to.append(u)
        self.cap.append(0)
        self.cost.append(-cost)
        return a

    def flow_on(self, a: int) -> int:
        """Units currently routed through forward arc ``a``."""
        return self.cap[a ^ 1]

    def init_potentials(self, topo_nodes: list[int], source: int) -> None:
        """Exact shortest-path distances on the initial DAG, one pass."""
        dist = [_UNREACHED] * self.n
        dist[source] = 0.0
        for u in topo_nodes:
            du = dist[u]
            if du is _UNREACHED:
                continue
            for a in self.adj[u]:
                if self.cap[a] <= 0:
                    continue
                v = self.to[a]
                nd = du + self.cost[a]
                if nd < dist[v]:
                    dist[v] = nd
        self.potential = dist

    def cheapest_path(self, s: int, t: int) -> tuple[int, list[int]] | None:
        """Dijkstra on reduced costs; returns (original cost, arc list) or None.

        Potentials are advanced by the computed distances, which is valid
        whether or not the caller then applies the path (the residual graph
        is unchanged until :meth:`apply_path` runs).
        """
        pi = self.potential
        if pi is None:
            raise RuntimeError("init_potentials must run before augmenting")
        dist = [_UNREACHED] * self.n
        dist[s] = 0.0
        prev = [-1] * self.n
        heap: list[tuple[float, int]] = [(0.0, s)]
        while heap:
            d, u = heapq.heappop(heap)
            if d > dist[u]:
                continue
            for a in self.adj[u]:
                if self.cap[a] <= 0:
                    continue
                v = self.to[a]
                nd = d + self.cost[a] + pi[u] - pi[v]
                if nd < dist[v]:
                    dist[v] = nd
                    prev[v] = a
                    heapq.heappush(heap, (nd, v))
        if dist[t] == _UNREACHED:
            return None
        dt = dist[t]
        for v in range(self.n):
            pi[v] += dist[v] if dist[v] < dt else dt
        arcs: list[int] = []
        v = t
        while v != s:
            a = prev[v]
            arcs.append(a)
            v = self.to[a ^ 1]
        arcs.reverse()
        return sum(self.cost[a] for a in arcs), arcs

    def apply_path(self, arcs: list[int]) -> None:
        for a in arcs:
            self.cap[a] -= 1
            self.cap[a ^ 1] += 1

    def augment_unit(self, s: int, t: int) -> int | None:
        """Send one unit along a cheapest s->t path; return its original cost."""
        found = self.cheapest_path(s, t)
        if found is None:
            return None
        cost, arcs = found
        self.apply_path(arcs)
        return cost
