"""
Closed diagrams as trivalent graphs.

Crossings, cups and caps only route strands, so a closed term is determined by its
vertices and by which legs the strands join. Each vertex keeps its legs in the order
(V, S in, S out) of the merge box; exchanging the two S legs costs a factor kappa.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from src.diagram import Diagram, Gen, Term
from src.exactnum import ParamScalar
from src.utils.errors import UnsupportedBox


class NotClosed(ValueError):
    """Raised when a diagram with a non-empty domain or codomain is evaluated."""

    pass


class _Strands:
    """Union-find over strand segments."""

    def __init__(self) -> None:
        self.parent: List[int] = []
        self.color: List[str] = []

    def new(self, color: str) -> int:
        self.parent.append(len(self.parent))
        self.color.append(color)
        return len(self.parent) - 1

    def find(self, s: int) -> int:
        while self.parent[s] != s:
            self.parent[s] = self.parent[self.parent[s]]
            s = self.parent[s]
        return s

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


@dataclass
class ClosedGraph:
    """
    Trivalent graph of a closed, dot-free term.

    Attributes:
        cycles: S-cycles as vertex lists in traversal order. Vertices in ``reversed``
            are passed from S out to S in.
        partner: V-edges, stored both ways between vertex ids.
        s_loops: Vertex-free S loops.
        v_loops: Vertex-free V loops.
    """

    cycles: List[List[int]] = field(default_factory=list)
    reversed: List[int] = field(default_factory=list)
    partner: Dict[int, int] = field(default_factory=dict)
    s_loops: int = 0
    v_loops: int = 0

    @property
    def vertex_count(self) -> int:
        return sum(len(cycle) for cycle in self.cycles)

    @property
    def kappa_power(self) -> int:
        return len(self.reversed)


def _wire_term(term: Term) -> Tuple[_Strands, List[Tuple[int, int, int]]]:
    strands = _Strands()
    positions: List[int] = []
    vertices: List[Tuple[int, int, int]] = []
    for offset, g in term.atomize():
        if g in (Gen.CUP_S, Gen.CUP_V):
            s = strands.new(g.codomain[0])
            positions[offset:offset] = [s, s]
        elif g in (Gen.CAP_S, Gen.CAP_V):
            strands.union(positions[offset], positions[offset + 1])
            del positions[offset : offset + 2]
        elif g.is_crossing:
            positions[offset], positions[offset + 1] = positions[offset + 1], positions[offset]
        elif g is Gen.MERGE_VSS:
            out = strands.new("S")
            vertices.append((positions[offset], positions[offset + 1], out))
            positions[offset : offset + 2] = [out]
        elif g is Gen.SPLIT_VSS:
            v, out = strands.new("V"), strands.new("S")
            vertices.append((v, positions[offset], out))
            positions[offset : offset + 1] = [v, out]
        else:
            raise UnsupportedBox(f"{g} cannot appear in a closed graph")
    return strands, vertices


def term_graph(term: Term) -> ClosedGraph:
    """Graph of a single closed, dot-free term."""
    if term.domain or term.codomain:
        raise NotClosed(f"term {term} is not closed")
    strands, vertices = _wire_term(term)
    # legs[root] lists (vertex, leg) pairs attached to the strand; leg 0 is V
    legs: Dict[int, List[Tuple[int, int]]] = {}
    for k, triple in enumerate(vertices):
        for leg, segment in enumerate(triple):
            legs.setdefault(strands.find(segment), []).append((k, leg))
    graph = ClosedGraph()
    roots = {strands.find(s) for s in range(len(strands.parent))}
    for root in roots:
        if root not in legs:
            if strands.color[root] == "S":
                graph.s_loops += 1
            else:
                graph.v_loops += 1
    s_next: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for attached in legs.values():
        (a, leg_a), (b, leg_b) = attached
        if leg_a == 0:
            graph.partner[a] = b
            graph.partner[b] = a
        else:
            s_next[(a, leg_a)] = (b, leg_b)
            s_next[(b, leg_b)] = (a, leg_a)
    seen = set()
    for start in range(len(vertices)):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        vertex, leg = s_next[(start, 2)]
        while vertex != start:
            cycle.append(vertex)
            seen.add(vertex)
            if leg == 2:
                graph.reversed.append(vertex)
            vertex, leg = s_next[(vertex, 3 - leg)]
        graph.cycles.append(cycle)
    return graph


def to_graph(f: Diagram) -> List[Tuple[ClosedGraph, ParamScalar]]:
    """
    Graphs of the terms of a closed diagram, paired with their coefficients.

    Raises:
        NotClosed: When f has a non-empty domain or codomain.
        UnsupportedBox: When f carries dots.
    """
    if not f.is_closed:
        raise NotClosed(f"diagram {f.domain or 'empty'} -> {f.codomain or 'empty'} is not closed")
    if f.has_dots:
        raise UnsupportedBox("dots have no generic closed evaluation")
    return [(term_graph(term), coeff) for term, coeff in f.items()]
