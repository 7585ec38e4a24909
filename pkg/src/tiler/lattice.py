"""The distributive lattice of height functions: inf/sup, comparison,
distance, and the worklist algorithms for minimal and maximal tilings."""

from __future__ import annotations

import enum
from collections import deque

from .equilibrium import ArcWeights
from .errors import DifferentFigures, Untileable
from .grid import FigureGraph, spin
from .tiling import HeightFunction, Tiling, same_figure, tiling_of_height


class OrderRelation(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def inf(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    if not same_figure(h1, h2):
        raise DifferentFigures("inf of heights on different figures")
    return HeightFunction(h1.graph, {v: min(x, h2.h[v]) for v, x in h1.h.items()})


def sup(h1: HeightFunction, h2: HeightFunction) -> HeightFunction:
    if not same_figure(h1, h2):
        raise DifferentFigures("sup of heights on different figures")
    return HeightFunction(h1.graph, {v: max(x, h2.h[v]) for v, x in h1.h.items()})


def compare(h1: HeightFunction, h2: HeightFunction) -> OrderRelation:
    if not same_figure(h1, h2):
        raise DifferentFigures("comparing heights on different figures")
    le = all(x <= h2.h[v] for v, x in h1.h.items())
    ge = all(x >= h2.h[v] for v, x in h1.h.items())
    if le and ge:
        return OrderRelation.EQUAL
    if le:
        return OrderRelation.LESS
    if ge:
        return OrderRelation.GREATER
    return OrderRelation.INCOMPARABLE


def delta(h1: HeightFunction, h2: HeightFunction, components) -> int:
    """Distance: sum over forced components of |h1 - h2| at the
    representative vertex."""
    if not same_figure(h1, h2):
        raise DifferentFigures("delta of heights on different figures")
    return sum(abs(h1.h[v] - h2.h[v]) for v in components.representatives)


def _boundary_heights(graph: FigureGraph, weights: ArcWeights) -> dict:
    """Integrate g_F = eq + sp along the outer contour; every tiling agrees
    with these values."""
    eqfn = weights.eqfn
    contour = graph.outer_contour
    h = {contour[0]: 0}
    for u, v in zip(contour, contour[1:]):
        val = h[u] + eqfn((u, v)) + spin(graph, (u, v))
        if v in h:
            if h[v] != val:
                raise Untileable("outer boundary heights are contradictory")
        else:
            h[v] = val
    return h


def _tree_sums(graph: FigureGraph, weights: ArcWeights, table: dict) -> dict:
    out = {graph.w0: 0}
    for v in weights.tree_order[1:]:
        p = weights.tree_parent[v]
        out[v] = out[p] + table[(p, v)]
    return out


def minimal_height(graph: FigureGraph, weights: ArcWeights, pinned=None):
    """Worklist construction of the minimal height function.

    Vertices start at their lower bound and violating vertices are raised by
    4 until no arc difference exceeds t.  `pinned` maps vertices to frozen
    height values (used by the lexicographic successor computation).
    Returns (height function, number of updates); raises Untileable.
    """
    n = len(graph.figure)
    t = weights.t
    h = _boundary_heights(graph, weights)
    boundary = set(h)
    tsum = _tree_sums(graph, weights, t)
    bsum = _tree_sums(graph, weights, weights.b)
    supv = {}
    low = {}
    for v in graph.vertices:
        if v in boundary:
            supv[v] = low[v] = h[v]
        else:
            supv[v] = tsum[v]
            low[v] = bsum[v]
            h[v] = low[v]
    if pinned:
        for v, val in pinned.items():
            h[v] = supv[v] = low[v] = val

    adj = graph.adjacency

    def violating(v):
        hv = h[v]
        return any(hv + t[(v, u)] < h[u] for u in adj[v])

    queue = deque(v for v in sorted(graph.vertices) if violating(v))
    inq = set(queue)
    passes = 0
    limit = n * n
    while queue:
        v = queue.popleft()
        inq.discard(v)
        if not violating(v):
            continue
        h[v] += 4
        passes += 1
        if passes > limit:
            raise AssertionError("minimal-height pass counter exceeded n^2")
        if h[v] > supv[v]:
            raise Untileable(f"no tiling: height at {v} exceeds its bound")
        if violating(v) and v not in inq:
            queue.append(v)
            inq.add(v)
        for u in adj[v]:
            if u not in inq and h[u] + t[(u, v)] < h[v]:
                queue.append(u)
                inq.add(u)
    return HeightFunction(graph, h), passes


def maximal_height(graph: FigureGraph, weights: ArcWeights):
    """Mirror image of minimal_height: start at the upper bound, lower
    violators by 4, fail below the lower bound."""
    n = len(graph.figure)
    t = weights.t
    h = _boundary_heights(graph, weights)
    boundary = set(h)
    tsum = _tree_sums(graph, weights, t)
    bsum = _tree_sums(graph, weights, weights.b)
    supv = {}
    low = {}
    for v in graph.vertices:
        if v in boundary:
            supv[v] = low[v] = h[v]
        else:
            supv[v] = tsum[v]
            low[v] = bsum[v]
            h[v] = supv[v]

    adj = graph.adjacency

    def violating(v):
        hv = h[v]
        return any(h[u] + t[(u, v)] < hv for u in adj[v])

    queue = deque(v for v in sorted(graph.vertices) if violating(v))
    inq = set(queue)
    passes = 0
    limit = n * n
    while queue:
        v = queue.popleft()
        inq.discard(v)
        if not violating(v):
            continue
        h[v] -= 4
        passes += 1
        if passes > limit:
            raise AssertionError("maximal-height pass counter exceeded n^2")
        if h[v] < low[v]:
            raise Untileable(f"no tiling: height at {v} falls below its bound")
        if violating(v) and v not in inq:
            queue.append(v)
            inq.add(v)
        for u in adj[v]:
            if u not in inq and h[v] + t[(v, u)] < h[u]:
                queue.append(u)
                inq.add(u)
    return HeightFunction(graph, h), passes


def min_tiling(graph: FigureGraph, weights: ArcWeights) -> Tiling:
    h, _ = minimal_height(graph, weights)
    return tiling_of_height(graph, weights, h)


def max_tiling(graph: FigureGraph, weights: ArcWeights) -> Tiling:
    h, _ = maximal_height(graph, weights)
    return tiling_of_height(graph, weights, h)
