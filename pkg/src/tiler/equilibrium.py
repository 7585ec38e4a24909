"""Equilibrium functions built from cut lines and step values.

An equilibrium function is a skew-symmetric arc weight eq with eq(C) = 0
around every cell and eq(C) = -sp(C) around every clockwise hole contour.
It neutralizes holes so that height functions stay single-valued.  The
derived weights t and b are the two admissible height differences per arc.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import TilerError
from .grid import Cell, E, FigureGraph, W, cycle_spin, spin


@dataclass(frozen=True)
class CutLine:
    """Vertical segment from the top of a hole up to the next non-figure
    cell; predecessor None means the infinite component."""

    hole_id: int
    x_half: float
    y_start: float
    y_end: float
    predecessor: Optional[int]
    crossed_edges: tuple  # horizontal edges ((x,y),(x+1,y)), bottom to top


@dataclass
class EquilibriumFunction:
    """Sparse skew-symmetric arc weights plus the per-hole step values."""

    steps: dict
    values: dict = field(default_factory=dict)

    def __call__(self, a) -> int:
        return self.values.get(a, 0)


@dataclass
class ArcWeights:
    """Per-arc weights eq_r, t, b and the eq = 0 spanning tree."""

    graph: FigureGraph
    eqfn: EquilibriumFunction
    eq_r: dict
    t: dict
    b: dict
    tree_parent: dict  # vertex -> parent vertex (w0 -> None)
    tree_order: list  # BFS order from w0


def build_cut_lines(graph: FigureGraph):
    """One cut line per hole, issued upward from its leftmost highest cell."""
    cells = graph.figure.cells
    lines = []
    for hole in graph.holes:
        top = max(c.y for c in hole.cells)
        cx = min(c.x for c in hole.cells if c.y == top)
        k = 1
        while Cell(cx, top + k) in cells:
            k += 1
        crossed = tuple(((cx, y), (cx + 1, y)) for y in range(top + 1, top + k + 1))
        lines.append(
            CutLine(
                hole_id=hole.id,
                x_half=cx + 0.5,
                y_start=top + 0.5,
                y_end=top + k + 0.5,
                predecessor=graph.complement_component(Cell(cx, top + k)),
                crossed_edges=crossed,
            )
        )
    return lines


def step_values(graph: FigureGraph, cutlines) -> dict:
    """Step value per hole: children's steps minus the contour spin, bottom-up
    over the predecessor tree."""
    children = {}
    for cl in cutlines:
        children.setdefault(cl.predecessor, []).append(cl.hole_id)
    steps = {}

    def compute(hid):
        if hid not in steps:
            steps[hid] = sum(compute(j) for j in children.get(hid, ())) - cycle_spin(
                graph.holes[hid].clockwise_contour
            )
        return steps[hid]

    for hole in graph.holes:
        compute(hole.id)
    return steps


def make_weights(graph: FigureGraph, eqfn: EquilibriumFunction, require_tree=True):
    """Derive eq_r, t, b and (optionally) the eq = 0 spanning tree."""
    eq_r = {}
    t = {}
    b = {}
    for a in graph.arcs:
        sp = spin(graph, a)
        e = eqfn(a)
        eq_r[a] = e - sp
        if a in graph.boundary_arcs:
            t[a] = b[a] = e + sp
        else:
            t[a] = e - sp + 2
            b[a] = e - sp - 2

    tree_parent = {graph.w0: None}
    tree_order = [graph.w0]
    queue = deque(tree_order)
    while queue:
        u = queue.popleft()
        for v in graph.adjacency[u]:
            if v not in tree_parent and eqfn((u, v)) == 0:
                tree_parent[v] = u
                tree_order.append(v)
                queue.append(v)
    if require_tree and len(tree_order) != len(graph.vertices):
        raise TilerError("eq = 0 arcs do not span the figure graph")
    return ArcWeights(graph, eqfn, eq_r, t, b, tree_parent, tree_order)


def build_equilibrium(graph: FigureGraph):
    """Construct the cut-line equilibrium function and its arc weights."""
    cutlines = build_cut_lines(graph)
    steps = step_values(graph, cutlines)
    values = {}
    for cl in cutlines:
        s = steps[cl.hole_id]
        for p, q in cl.crossed_edges:
            east = (graph.vertex(p, E), graph.vertex(q, W))
            west = (east[1], east[0])
            assert east not in values, "cut lines overlap"
            values[east] = s
            values[west] = -s
    eqfn = EquilibriumFunction(steps=steps, values=values)
    return eqfn, make_weights(graph, eqfn)


def cycle_eq(eqfn, cycle) -> int:
    return sum(eqfn((u, v)) for u, v in zip(cycle, cycle[1:]))


def verify_equilibrium(graph: FigureGraph, eqfn) -> bool:
    """Exhaustive check of the two defining conditions."""
    for a, val in eqfn.values.items():
        if eqfn((a[1], a[0])) != -val:
            return False
    for cell in graph.figure.cells:
        if cycle_eq(eqfn, graph.cell_cycle(cell)) != 0:
            return False
    for hole in graph.holes:
        c = hole.clockwise_contour
        if cycle_eq(eqfn, c) != -cycle_spin(c):
            return False
    return True
