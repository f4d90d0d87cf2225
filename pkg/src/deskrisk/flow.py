"""Minimum-cost circulation with edge lower bounds, and the load-capped solver.

The load-capped nomination problem reduces to a circulation on a four-layer
network (source, authors, papers, sink, plus a return edge); because all
capacities are integral, the optimal circulation is integral and converts
directly back into an assignment, with infeasibility surfacing as an
unroutable excess.

The solver reduces lower bounds (and fully saturates negative-cost edges)
to node excesses, then routes the excess from a super source with
successive shortest augmenting paths: Dijkstra on reduced costs with vertex
potentials, batching all augmentations at one path cost through a
level-restricted blocking flow so large instances need few Dijkstra rounds.
No rounding is ever applied; every flow value stays a nonnegative integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from heapq import heappop, heappush

from .instance import (
    Assignment,
    Instance,
    SolveReport,
    SolveStatus,
    author_loads,
    basic_objective,
    require_valid,
)


class MalformedNetworkError(ValueError):
    """Raised when a network violates its own structural invariants."""


@dataclass(frozen=True)
class FlowEdge:
    tail: int
    head: int
    lower: int
    capacity: int
    cost: float


@dataclass
class FlowNetwork:
    """Directed graph with per-edge lower bound, capacity, and cost.

    Vertices are numbered ``1..num_vertices``.  ``supply[v - 1]`` is the
    required net outflow of vertex ``v`` (all zero for a pure circulation);
    supplies must sum to zero.  Edge order is insertion order and is part of
    the contract: reruns produce identical optima.
    """

    num_vertices: int
    edges: list[FlowEdge] = field(default_factory=list)
    supply: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.supply:
            self.supply = [0] * self.num_vertices

    def add_edge(
        self, tail: int, head: int, lower: int, capacity: int, cost: float
    ) -> int:
        """Append an edge and return its index."""
        self.edges.append(FlowEdge(tail, head, lower, capacity, cost))
        return len(self.edges) - 1


@dataclass(frozen=True)
class Circulation:
    """Integral per-edge flow (aligned with the network's edge list) and its cost."""

    flow: tuple[int, ...]
    cost: float


def _validate_network(network: FlowNetwork) -> None:
    n = network.num_vertices
    if n < 1:
        raise MalformedNetworkError(f"network needs at least one vertex, got {n}")
    if len(network.supply) != n:
        raise MalformedNetworkError(
            f"supply vector has length {len(network.supply)}, expected {n}"
        )
    if sum(network.supply) != 0:
        raise MalformedNetworkError(f"supplies must sum to 0, got {sum(network.supply)}")
    for idx, e in enumerate(network.edges):
        if not (1 <= e.tail <= n and 1 <= e.head <= n):
            raise MalformedNetworkError(f"edge {idx} endpoints ({e.tail}, {e.head}) out of range")
        if not (0 <= e.lower <= e.capacity):
            raise MalformedNetworkError(
                f"edge {idx} needs 0 <= lower <= capacity, got [{e.lower}, {e.capacity}]"
            )
        if not math.isfinite(e.cost):
            raise MalformedNetworkError(f"edge {idx} has non-finite cost {e.cost}")


def _exact_integer_costs(edges: list[FlowEdge]) -> list[int]:
    # Doubles are dyadic rationals, so a common power-of-two rescaling turns
    # every cost into an exact (arbitrary-precision) integer.  All shortest-
    # path arithmetic then stays exact: tightness tests are true equalities
    # and no rounding noise can stall or misroute an augmentation.
    shift = 0
    for e in edges:
        if e.cost != 0.0:
            _, exp = math.frexp(e.cost)
            shift = max(shift, 53 - exp)
    scaled: list[int] = []
    for e in edges:
        if e.cost == 0.0:
            scaled.append(0)
        else:
            mantissa, exp = math.frexp(e.cost)
            scaled.append(int(mantissa * (1 << 53)) << (shift + exp - 53))
    return scaled


def min_cost_circulation(network: FlowNetwork) -> Circulation | None:
    """Cheapest integral flow meeting all lower bounds; ``None`` if none exists.

    Handles negative edge costs by saturating those edges up front, so the
    residual network never carries a negative-cost arc and plain Dijkstra
    potentials stay valid throughout.
    """
    _validate_network(network)
    n = network.num_vertices
    size = n + 2  # internal node ids: 0 = super source, 1..n = vertices, n+1 = super sink
    s, t = 0, n + 1
    int_costs = _exact_integer_costs(network.edges)

    head: list[int] = []
    cap: list[int] = []
    cost: list[int] = []
    adj: list[list[int]] = [[] for _ in range(size)]

    def add_arc(u: int, v: int, forward: int, backward: int, w: int) -> int:
        arc = len(head)
        head.append(v)
        cap.append(forward)
        cost.append(w)
        adj[u].append(arc)
        head.append(u)
        cap.append(backward)
        cost.append(-w)
        adj[v].append(arc + 1)
        return arc

    # Excess r(v) = net flow v still has to emit once forced units are in place.
    excess = [0] * size
    for v in range(1, n + 1):
        excess[v] = network.supply[v - 1]
    edge_arc: list[int] = []
    for e, w in zip(network.edges, int_costs):
        span = e.capacity - e.lower
        forced = e.capacity if w < 0 else e.lower
        init = forced - e.lower  # pre-routed units beyond the lower bound
        excess[e.head] += forced
        excess[e.tail] -= forced
        edge_arc.append(add_arc(e.tail, e.head, span - init, init, w))

    need = 0
    for v in range(1, n + 1):
        if excess[v] > 0:
            add_arc(s, v, excess[v], 0, 0)
            need += excess[v]
        elif excess[v] < 0:
            add_arc(v, t, -excess[v], 0, 0)

    pot = [0] * size
    pushed = 0
    while pushed < need:
        dist = _dijkstra(adj, head, cap, cost, pot, s, t, size)
        limit = dist[t]
        if limit == math.inf:
            return None
        progress = _blocking_flow(adj, head, cap, cost, pot, dist, s, t, size)
        assert progress > 0, "admissible graph must carry the shortest-path tree"
        pushed += progress
        for v in range(size):
            pot[v] += dist[v] if dist[v] < limit else limit

    flow = tuple(e.capacity - cap[arc] for e, arc in zip(network.edges, edge_arc))
    total = 0.0
    for e, f in zip(network.edges, flow):
        total += e.cost * f
    return Circulation(flow=flow, cost=total)


def _dijkstra(adj, head, cap, cost, pot, s, t, size):
    dist: list = [math.inf] * size
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, u = heappop(heap)
        if d > dist[u]:
            continue
        if u == t:
            break
        pu = pot[u]
        for arc in adj[u]:
            if cap[arc] <= 0:
                continue
            v = head[arc]
            nd = d + cost[arc] + pu - pot[v]
            if nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, v))
    return dist


def _admissible(u, arc, head, cap, cost, pot, dist):
    # Exact integer equality: the arc lies on some shortest path.  The
    # shortest-path tree always qualifies, so every phase makes progress.
    return cap[arc] > 0 and dist[u] + cost[arc] + pot[u] - pot[head[arc]] == dist[head[arc]]


def _blocking_flow(adj, head, cap, cost, pot, dist, s, t, size):
    level = [-1] * size
    level[s] = 0
    queue = [s]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for arc in adj[u]:
            v = head[arc]
            if level[v] < 0 and _admissible(u, arc, head, cap, cost, pot, dist):
                level[v] = level[u] + 1
                queue.append(v)
    if level[t] < 0:
        return 0

    it = [0] * size
    total = 0
    path: list[int] = []
    u = s
    while True:
        if u == t:
            push = min(cap[arc] for arc in path)
            for arc in path:
                cap[arc] -= push
                cap[arc ^ 1] += push
            total += push
            cut = next(i for i, arc in enumerate(path) if cap[arc] == 0)
            del path[cut:]
            u = head[path[-1]] if path else s
            continue
        moved = False
        arcs = adj[u]
        while it[u] < len(arcs):
            arc = arcs[it[u]]
            v = head[arc]
            if level[v] == level[u] + 1 and _admissible(u, arc, head, cap, cost, pot, dist):
                path.append(arc)
                u = v
                moved = True
                break
            it[u] += 1
        if moved:
            continue
        if u == s:
            return total
        level[u] = -1
        arc = path.pop()
        u = head[arc ^ 1]
        it[u] += 1


def check_circulation(network: FlowNetwork, circulation: Circulation) -> list[str]:
    """Verify bounds and per-vertex conservation; returns violations (empty = ok)."""
    violations: list[str] = []
    balance = [-supply for supply in network.supply]
    for idx, (e, f) in enumerate(zip(network.edges, circulation.flow)):
        if not (e.lower <= f <= e.capacity):
            violations.append(f"edge {idx} flow {f} outside [{e.lower}, {e.capacity}]")
        balance[e.tail - 1] += f
        balance[e.head - 1] -= f
    for v, net in enumerate(balance, start=1):
        if net != 0:
            violations.append(f"vertex {v} violates conservation by {net}")
    return violations


def build_hard_network(
    instance: Instance, b: int | None = None
) -> tuple[FlowNetwork, dict[tuple[int, int], int]]:
    """Translate a load-capped instance into a circulation network.

    Layout: vertex 1 is the source, 2 the sink, authors sit at ``j + 2`` and
    papers at ``i + m + 2``.  Author capacity ``b`` lives on the source
    edges, the exactly-one-nomination rule on the unit lower bounds of the
    paper-to-sink edges, and nomination risk as the cost of the author-paper
    edges.  Returns the network plus a map from incident pairs to the index
    of their author-paper edge.
    """
    require_valid(instance)
    if b is None:
        b = instance.b
    if b is None or b < 1:
        raise ValueError(f"hard variant requires a nomination limit b >= 1, got {b}")
    n, m = instance.n, instance.m
    net = FlowNetwork(num_vertices=m + n + 2)
    for j in range(1, m + 1):
        net.add_edge(1, j + 2, 0, b, 0.0)
    pair_edges = {
        (i, j): net.add_edge(j + 2, i + m + 2, 0, 1, instance.p[j - 1])
        for i, j in instance.authorship
    }
    for i in range(1, n + 1):
        net.add_edge(i + m + 2, 2, 1, 1, 0.0)
    net.add_edge(2, 1, 0, n, 0.0)
    return net, pair_edges


def solve_hard(
    instance: Instance, b: int | None = None
) -> tuple[Assignment | None, SolveReport]:
    """Exact optimum under a hard per-author nomination limit.

    Returns ``(None, report)`` with an Infeasible status when no assignment
    keeps every author within the limit.
    """
    network, pair_edges = build_hard_network(instance, b)
    circulation = min_cost_circulation(network)
    if circulation is None:
        return None, SolveReport(status=SolveStatus.INFEASIBLE, solver="hard-flow")
    nominee = [0] * instance.n
    for (i, j), edge in pair_edges.items():
        if circulation.flow[edge] == 1:
            nominee[i - 1] = j
    assignment = Assignment(nominee=tuple(nominee))
    objective = basic_objective(instance, assignment)
    report = SolveReport(
        status=SolveStatus.OPTIMAL,
        objective=objective,
        expected_rejections=objective,
        penalty=0.0,
        loads=tuple(author_loads(instance, assignment)),
        solver="hard-flow",
    )
    return assignment, report
