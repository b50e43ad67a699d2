"""Exact integral min-cost transportation over the category grid.

The network is two-layered: source -> one node per tilde category (capacity
= required count, cost 0) -> one unit-capacity arc per item into its hat
category node (cost = the item's exact cost) -> sink (capacity = required
count per hat category).  An integral minimum-cost flow of value w selects
exactly the optimal item set of the scalarized subproblem.

Solved by successive shortest augmenting paths with node potentials: one
topological-order relaxation pass over the initial layered network yields
exact starting potentials even with negative item costs (maximized real
objective), after which reduced costs stay non-negative and Dijkstra
suffices.  All arithmetic is exact (`Fraction`); ties are broken
deterministically, by node index when choosing the next settled node and by
(cost, item index) arc order within each cell, so repeated runs return the
same selection.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .subproblem import TransportInstance


class _Arc:
    __slots__ = ("to", "cap", "cost", "flow", "rev", "item")

    def __init__(self, to: int, cap: int, cost, item: int | None):
        self.to = to
        self.cap = cap
        self.cost = cost
        self.flow = 0
        self.rev: "_Arc" = None  # type: ignore[assignment]
        self.item = item

    @property
    def residual(self) -> int:
        return self.cap - self.flow


class FlowNetwork:
    """Layered transportation network for one subproblem.

    Node order: 0 = source, 1..R = supply (tilde) categories,
    R+1..R+C = demand (hat) categories, last = sink.  Item arcs keep their
    item index for direct solution recovery.
    """

    def __init__(self, num_supplies: int, num_demands: int):
        self.num_supplies = num_supplies
        self.num_demands = num_demands
        self.num_nodes = num_supplies + num_demands + 2
        self.source = 0
        self.sink = self.num_nodes - 1
        self.adj: list[list[_Arc]] = [[] for _ in range(self.num_nodes)]
        self.item_arcs: list[_Arc] = []
        self.required = 0

    def add_arc(self, u: int, v: int, cap: int, cost, item: int | None = None) -> None:
        fwd = _Arc(v, cap, cost, item)
        bwd = _Arc(u, 0, -cost, None)
        fwd.rev = bwd
        bwd.rev = fwd
        self.adj[u].append(fwd)
        self.adj[v].append(bwd)
        if item is not None:
            self.item_arcs.append(fwd)

    @classmethod
    def from_transport(cls, ti: TransportInstance) -> "FlowNetwork":
        net = cls(len(ti.supplies), len(ti.demands))
        net.required = sum(ti.supplies)
        for i, s in enumerate(ti.supplies):
            net.add_arc(net.source, 1 + i, s, Fraction(0))
        for (row, col), items in ti.cells.items():
            for item in sorted(items, key=lambda it: (ti.item_costs[it], it)):
                net.add_arc(1 + row, 1 + net.num_supplies + col, 1, ti.item_costs[item], item)
        for j, d in enumerate(ti.demands):
            net.add_arc(1 + net.num_supplies + j, net.sink, d, Fraction(0))
        return net


@dataclass(frozen=True)
class FlowResult:
    """Outcome of one subproblem solve; infeasible is a normal status."""

    status: str  # "optimal" | "infeasible"
    selected_items: tuple[int, ...]
    objective: Fraction

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


INFEASIBLE = FlowResult(status="infeasible", selected_items=(), objective=Fraction(0))


def _initial_potentials(net: FlowNetwork) -> list:
    """Exact shortest distances over the initial layered network.

    Node indices are already topologically sorted, so a single relaxation
    sweep is exact; unreachable nodes (zero-capacity branches) keep
    potential 0 and can never join an augmenting path later.
    """
    dist: list = [None] * net.num_nodes
    dist[net.source] = Fraction(0)
    for u in range(net.num_nodes):
        if dist[u] is None:
            continue
        for arc in net.adj[u]:
            if arc.residual > 0 and arc.to > u:
                cand = dist[u] + arc.cost
                if dist[arc.to] is None or cand < dist[arc.to]:
                    dist[arc.to] = cand
    return [d if d is not None else Fraction(0) for d in dist]


def min_cost_flow(net: FlowNetwork) -> FlowResult:
    """Minimum-cost integral flow of the required value, or infeasible.

    Deterministic: the settled-node scan prefers the smallest node index
    among equal distances and arcs are relaxed in (cost, item index) order,
    so equal-cost augmenting paths resolve the same way on every run.
    """
    potential = _initial_potentials(net)
    pushed = 0
    while pushed < net.required:
        dist: list = [None] * net.num_nodes
        parent: list[_Arc | None] = [None] * net.num_nodes
        done = [False] * net.num_nodes
        dist[net.source] = Fraction(0)
        while True:
            u = -1
            for v in range(net.num_nodes):
                if not done[v] and dist[v] is not None and (u < 0 or dist[v] < dist[u]):
                    u = v
            if u < 0:
                break
            done[u] = True
            for arc in net.adj[u]:
                if arc.residual <= 0:
                    continue
                cand = dist[u] + arc.cost + potential[u] - potential[arc.to]
                if dist[arc.to] is None or cand < dist[arc.to]:
                    dist[arc.to] = cand
                    parent[arc.to] = arc
        if dist[net.sink] is None:
            return INFEASIBLE

        for v in range(net.num_nodes):
            if dist[v] is not None:
                potential[v] += dist[v]

        bottleneck = net.required - pushed
        v = net.sink
        while v != net.source:
            arc = parent[v]
            bottleneck = min(bottleneck, arc.residual)
            v = arc.rev.to
        v = net.sink
        while v != net.source:
            arc = parent[v]
            arc.flow += bottleneck
            arc.rev.flow -= bottleneck
            v = arc.rev.to
        pushed += bottleneck

    selected = tuple(sorted(arc.item for arc in net.item_arcs if arc.flow == 1))
    objective = sum((arc.cost for arc in net.item_arcs if arc.flow == 1), Fraction(0))
    return FlowResult(status="optimal", selected_items=selected, objective=objective)


def solve_transport(ti: TransportInstance) -> FlowResult:
    """Build the network for `ti` and solve it."""
    if sum(ti.supplies) != sum(ti.demands):
        return INFEASIBLE
    return min_cost_flow(FlowNetwork.from_transport(ti))
