"""
Sign-constraint systems behind ordinal potentials.

Nodes are hashable states (network bitmasks or strategy profiles). Every
constraint says the potential must go up, down, or stay level along one
edge. Level edges are contracted with a union-find, strict edges become
arcs between the contracted classes, and the potential is the topological
generation of a node's class.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Hashable

import networkx as nx
from networkx.utils import UnionFind

log = logging.getLogger(__name__)


@dataclass
class OrderConstraints:
    nodes: list[Hashable]
    level: list[tuple[Hashable, Hashable]] = field(default_factory=list)
    rising: list[tuple[Hashable, Hashable]] = field(default_factory=list)  # (low, high)

    def add(self, low: Hashable, high: Hashable, sign: int) -> None:
        """Constrain potential(high) − potential(low) to have the given sign."""
        if sign == 0:
            self.level.append((low, high))
        elif sign > 0:
            self.rising.append((low, high))
        else:
            self.rising.append((high, low))


@dataclass
class OrderSolution:
    levels: dict[Hashable, int] | None
    conflict: list[Hashable] | None = None
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.levels is not None


def solve(constraints: OrderConstraints) -> OrderSolution:
    classes = UnionFind(constraints.nodes)
    for a, b in constraints.level:
        classes.union(a, b)

    dag = nx.DiGraph()
    dag.add_nodes_from({classes[v] for v in constraints.nodes})
    for low, high in constraints.rising:
        a, b = classes[low], classes[high]
        if a == b:
            return OrderSolution(None, [low, high], "a strict change joins two states forced to be level")
        dag.add_edge(a, b, low=low, high=high)

    if not nx.is_directed_acyclic_graph(dag):
        cycle = nx.find_cycle(dag)
        states = [dag.edges[u, v]["low"] for u, v in cycle]
        return OrderSolution(None, states, "strict improvements run in a cycle")

    rank: dict[Hashable, int] = {}
    for depth, generation in enumerate(nx.topological_generations(dag)):
        for root in generation:
            rank[root] = depth
    log.debug("ordinal constraints: %d states, %d classes, %d generations",
              len(constraints.nodes), dag.number_of_nodes(), len(set(rank.values())))
    return OrderSolution({v: rank[classes[v]] for v in constraints.nodes})

