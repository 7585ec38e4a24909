"""Figures on the plane grid: parsing, coloring, spin, holes and the
duplicated-vertex graph.

Cells are unit squares addressed by their lower-left corner.  A figure is a
finite 4-connected set of cells; the finite 8-connected components of its
complement are its holes.  Lattice points where the figure pinches (two
diagonally adjacent cells present, the other two absent) are split into two
vertex copies so that every contour is an elementary cycle.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import (
    ArcNotInFigure,
    Empty,
    NotClockwise,
    NotConnected,
    NotElementary,
    ParseError,
)

MAX_EXTENT = 4096

N, S, E, W = (0, 1), (0, -1), (1, 0), (-1, 0)
DIRECTIONS = (N, S, E, W)


class Cell(NamedTuple):
    x: int
    y: int


class GridVertex(NamedTuple):
    x: int
    y: int
    copy: int = 0

    @property
    def point(self):
        return (self.x, self.y)


# An arc is an ordered pair of GridVertex; a cycle is a vertex list with
# first == last.
Arc = tuple
Cycle = list


def is_black(cell) -> bool:
    """Checkerboard coloring: cell (x, y) is black iff x + y is even."""
    return (cell[0] + cell[1]) % 2 == 0


def left_cell(p, d) -> Cell:
    """Cell on the left of a unit move from lattice point p in direction d."""
    x, y = p
    dx, dy = d
    return Cell((2 * x + dx - dy - 1) // 2, (2 * y + dy + dx - 1) // 2)


def right_cell(p, d) -> Cell:
    x, y = p
    dx, dy = d
    return Cell((2 * x + dx + dy - 1) // 2, (2 * y + dy - dx - 1) // 2)


def spin_of_move(p, d) -> int:
    """Spin of the move p -> p + d: +1 with a white cell on the left."""
    return 1 if not is_black(left_cell(p, d)) else -1


@dataclass(frozen=True)
class Figure:
    """Finite 4-connected union of unit cells."""

    cells: frozenset
    min_x: int
    min_y: int
    width: int
    height: int

    def __contains__(self, cell) -> bool:
        return Cell(cell[0], cell[1]) in self.cells

    def __len__(self) -> int:
        return len(self.cells)


def make_figure(cells) -> Figure:
    cells = frozenset(Cell(x, y) for x, y in cells)
    if not cells:
        raise Empty("figure has no cells")
    xs = [c.x for c in cells]
    ys = [c.y for c in cells]
    width = max(xs) - min(xs) + 1
    height = max(ys) - min(ys) + 1
    if width > MAX_EXTENT or height > MAX_EXTENT:
        raise ParseError(f"bounding box exceeds {MAX_EXTENT}x{MAX_EXTENT}")
    seen = {next(iter(sorted(cells)))}
    queue = deque(seen)
    while queue:
        c = queue.popleft()
        for dx, dy in DIRECTIONS:
            nb = Cell(c.x + dx, c.y + dy)
            if nb in cells and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    if seen != cells:
        raise NotConnected("cells are not 4-connected")
    return Figure(cells, min(xs), min(ys), width, height)


def parse_figure(text: str) -> Figure:
    """Parse an ASCII grid: '#' = cell present, '.' = absent.

    Row r from the top, column c maps to Cell(c, rows - 1 - r).
    """
    rows = text.splitlines()
    while rows and rows[-1] == "":
        rows.pop()
    if not rows:
        raise Empty("empty input")
    if len({len(r) for r in rows}) != 1:
        raise ParseError("ragged rows")
    bad = {ch for r in rows for ch in r} - {"#", "."}
    if bad:
        raise ParseError(f"bad characters: {sorted(bad)!r}")
    nrows = len(rows)
    cells = [
        (c, nrows - 1 - r)
        for r, row in enumerate(rows)
        for c, ch in enumerate(row)
        if ch == "#"
    ]
    return make_figure(cells)


@dataclass
class Hole:
    """Finite 8-connected component of the figure's complement."""

    id: int
    cells: frozenset
    clockwise_contour: Cycle


@dataclass
class FigureGraph:
    """Symmetric directed graph of a figure, after vertex duplication."""

    figure: Figure
    vertices: frozenset
    arcs: frozenset
    adjacency: dict
    boundary_arcs: frozenset
    outer_boundary_arcs: frozenset
    holes: list
    w0: GridVertex
    outer_contour: Cycle  # counterclockwise around the figure, from w0
    _dup: dict = field(repr=False, default_factory=dict)
    _comp_of_cell: dict = field(repr=False, default_factory=dict)

    def vertex(self, p, d) -> GridVertex:
        """Vertex copy at lattice point p attached to the edge leaving in
        direction d."""
        pattern = self._dup.get((p[0], p[1]))
        if pattern is None:
            return GridVertex(p[0], p[1], 0)
        if pattern == "NE/SW":
            copy = 0 if d in (N, E) else 1
        else:  # "NW/SE"
            copy = 0 if d in (N, W) else 1
        return GridVertex(p[0], p[1], copy)

    def complement_component(self, cell) -> Optional[int]:
        """Hole id containing the cell, or None for the infinite component."""
        return self._comp_of_cell.get(Cell(cell[0], cell[1]))

    def cell_cycle(self, cell) -> Cycle:
        """Clockwise elementary 4-cycle around one cell of the figure."""
        x, y = cell
        corners = [((x, y + 1), E), ((x + 1, y + 1), S), ((x + 1, y), W), ((x, y), N)]
        cyc = [self.vertex(p, d) for p, d in corners]
        cyc.append(cyc[0])
        return cyc

    @property
    def boundary_vertices(self) -> frozenset:
        return frozenset(v for a in self.boundary_arcs for v in a)


def _edge_side_cells(p, q):
    """The two grid cells flanking the undirected edge p-q (p < q)."""
    if q[0] == p[0] + 1:  # horizontal edge
        return Cell(p[0], p[1]), Cell(p[0], p[1] - 1)
    return Cell(p[0], p[1]), Cell(p[0] - 1, p[1])  # vertical edge


def build_graph(figure: Figure) -> FigureGraph:
    cells = figure.cells

    edges = set()
    for x, y in cells:
        edges.add(((x, y), (x + 1, y)))
        edges.add(((x, y + 1), (x + 1, y + 1)))
        edges.add(((x, y), (x, y + 1)))
        edges.add(((x + 1, y), (x + 1, y + 1)))

    boundary_edges = set()
    for p, q in edges:
        c1, c2 = _edge_side_cells(p, q)
        if (c1 in cells) != (c2 in cells):
            boundary_edges.add((p, q))

    # Pinch points: exactly two diagonally opposite quadrant cells present.
    dup = {}
    points = {p for e in edges for p in e}
    for x, y in points:
        ne = Cell(x, y) in cells
        nw = Cell(x - 1, y) in cells
        sw = Cell(x - 1, y - 1) in cells
        se = Cell(x, y - 1) in cells
        if ne and sw and not nw and not se:
            dup[(x, y)] = "NE/SW"
        elif nw and se and not ne and not sw:
            dup[(x, y)] = "NW/SE"

    graph = FigureGraph(
        figure=figure,
        vertices=frozenset(),
        arcs=frozenset(),
        adjacency={},
        boundary_arcs=frozenset(),
        outer_boundary_arcs=frozenset(),
        holes=[],
        w0=GridVertex(0, 0),
        outer_contour=[],
        _dup=dup,
    )

    arcs = set()
    for p, q in edges:
        d = (q[0] - p[0], q[1] - p[1])
        nd = (-d[0], -d[1])
        u = graph.vertex(p, d)
        v = graph.vertex(q, nd)
        arcs.add((u, v))
        arcs.add((v, u))
    vertices = frozenset(v for a in arcs for v in a)

    adjacency = {}
    for u, v in arcs:
        adjacency.setdefault(u, []).append(v)
    adjacency = {u: tuple(sorted(vs)) for u, vs in adjacency.items()}

    # Complement components (8-connected), found inside a 1-cell pad of the
    # bounding box.  The component touching the pad ring is the infinite one.
    x0, y0 = figure.min_x - 1, figure.min_y - 1
    x1, y1 = figure.min_x + figure.width, figure.min_y + figure.height
    comp_of_cell = {}
    comp_cells = []
    for sx in range(x0, x1 + 1):
        for sy in range(y0, y1 + 1):
            start = Cell(sx, sy)
            if start in cells or start in comp_of_cell:
                continue
            comp_id = len(comp_cells)
            comp = [start]
            comp_of_cell[start] = comp_id
            queue = deque([start])
            infinite = False
            while queue:
                cx, cy = queue.popleft()
                if cx in (x0, x1) or cy in (y0, y1):
                    infinite = True
                for dx in (-1, 0, 1):
                    for dy in (-1, 0, 1):
                        nb = Cell(cx + dx, cy + dy)
                        if (
                            x0 <= nb.x <= x1
                            and y0 <= nb.y <= y1
                            and nb not in cells
                            and nb not in comp_of_cell
                        ):
                            comp_of_cell[nb] = comp_id
                            comp.append(nb)
                            queue.append(nb)
            comp_cells.append((infinite, comp))

    hole_ids = {}  # flood id -> hole id
    holes_raw = []
    for flood_id, (infinite, comp) in enumerate(comp_cells):
        if infinite:
            continue
        hole_ids[flood_id] = len(holes_raw)
        holes_raw.append(frozenset(comp))
    comp_map = {}
    for cell, flood_id in comp_of_cell.items():
        if flood_id in hole_ids:
            comp_map[cell] = hole_ids[flood_id]

    boundary_arcs = set()
    outer_boundary_arcs = set()
    f_on_left = {}  # tail vertex -> arc, for arcs with the figure on the left
    arc_right_comp = {}
    for p, q in boundary_edges:
        d = (q[0] - p[0], q[1] - p[1])
        if left_cell(p, d) in cells:
            tail, head, td = p, q, d
        else:
            tail, head, td = q, p, (-d[0], -d[1])
        u = graph.vertex(tail, td)
        v = graph.vertex(head, (-td[0], -td[1]))
        boundary_arcs.add((u, v))
        boundary_arcs.add((v, u))
        outside = right_cell(tail, td)
        comp = comp_map.get(outside)  # None = infinite component
        if comp is None:
            outer_boundary_arcs.add((u, v))
            outer_boundary_arcs.add((v, u))
        assert u not in f_on_left, "non-elementary contour at %s" % (u,)
        f_on_left[u] = (u, v)
        arc_right_comp[(u, v)] = comp

    # Extract contour cycles: one counterclockwise outer contour, one
    # clockwise contour per hole (the complement sits on the walker's right).
    contours = {}
    remaining = dict(f_on_left)
    while remaining:
        u0, a0 = next(iter(remaining.items()))
        cyc = [u0]
        comp = arc_right_comp[a0]
        a = a0
        while True:
            del remaining[a[0]]
            assert arc_right_comp[a] == comp
            cyc.append(a[1])
            if a[1] == u0:
                break
            a = remaining[a[1]]
        assert comp not in contours, "complement component with two contours"
        contours[comp] = cyc

    def rotate(cyc, start):
        i = cyc.index(start)
        return cyc[i:-1] + cyc[: i + 1]

    outer_vertices = {v for a in outer_boundary_arcs for v in a}
    w0 = min(outer_vertices)
    outer_ccw = rotate(contours[None], w0)

    holes = []
    for hid, hcells in enumerate(holes_raw):
        # Walking with the figure on the left keeps the hole on the right,
        # i.e. contours[hid] is already clockwise around the hole.
        cw_cyc = rotate(contours[hid], min(contours[hid][:-1]))
        holes.append(Hole(id=hid, cells=hcells, clockwise_contour=cw_cyc))

    graph.vertices = vertices
    graph.arcs = frozenset(arcs)
    graph.adjacency = adjacency
    graph.boundary_arcs = frozenset(boundary_arcs)
    graph.outer_boundary_arcs = frozenset(outer_boundary_arcs)
    graph.holes = holes
    graph.w0 = w0
    graph.outer_contour = outer_ccw
    graph._comp_of_cell = comp_map
    return graph


def spin(graph: FigureGraph, a) -> int:
    """Spin of an arc of the figure graph."""
    if a not in graph.arcs:
        raise ArcNotInFigure(f"{a} is not an arc of the figure")
    u, v = a
    return spin_of_move((u.x, u.y), (v.x - u.x, v.y - u.y))


def cycle_spin(cycle) -> int:
    """Sum of spins along a closed vertex walk."""
    return sum(
        spin_of_move((u.x, u.y), (v.x - u.x, v.y - u.y))
        for u, v in zip(cycle, cycle[1:])
    )


def disequilibrium(figure: Figure, cycle) -> int:
    """Black-minus-white count over the cells of the figure enclosed by an
    elementary clockwise cycle."""
    if len(cycle) < 2 or cycle[0] != cycle[-1]:
        raise NotElementary("cycle must be closed")
    interior = cycle[:-1]
    if len(set(interior)) != len(interior):
        raise NotElementary("cycle repeats a vertex")
    for u, v in zip(cycle, cycle[1:]):
        d = (v.x - u.x, v.y - u.y)
        if d not in DIRECTIONS:
            raise NotElementary(f"{u} -> {v} is not a unit step")
        if left_cell((u.x, u.y), d) not in figure and right_cell((u.x, u.y), d) not in figure:
            raise NotElementary(f"edge {u} -> {v} is not a side of a figure cell")
    area2 = sum(u.x * v.y - v.x * u.y for u, v in zip(cycle, cycle[1:]))
    if area2 >= 0:
        raise NotClockwise("cycle is not clockwise")

    # Vertical steps, for a winding count per cell row.
    down = {}
    up = {}
    for u, v in zip(cycle, cycle[1:]):
        if v.x == u.x:
            if v.y == u.y + 1:
                up.setdefault(u.y, []).append(u.x)
            else:
                down.setdefault(v.y, []).append(u.x)

    total = 0
    for cell in figure.cells:
        w = sum(1 for x in down.get(cell.y, ()) if x > cell.x)
        w -= sum(1 for x in up.get(cell.y, ()) if x > cell.x)
        if w == 1:
            total += 1 if is_black(cell) else -1
    return total
