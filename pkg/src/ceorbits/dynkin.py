"""Graph algorithms on Dynkin diagrams: components, boundaries, rays.

Node sets are plain ``frozenset`` instances over the 1-based node numbering
of a :class:`~ceorbits.rootsys.RootSystem`.
"""
from __future__ import annotations

from typing import Iterable

from .rootsys import RootSystem


def components(sys: RootSystem, nodes: Iterable[int]) -> list[frozenset]:
    """Connected components of the induced subdiagram, ordered by least node."""
    s = sys.check_nodes(nodes)
    remaining = set(s)
    out = []
    while remaining:
        start = min(remaining)
        comp = {start}
        queue = [start]
        while queue:
            v = queue.pop()
            for u in sys.adjacency[v]:
                if u in remaining and u not in comp:
                    comp.add(u)
                    queue.append(u)
        remaining -= comp
        out.append(frozenset(comp))
    return sorted(out, key=min)


def boundary(sys: RootSystem, nodes: Iterable[int]) -> frozenset:
    """Nodes outside ``nodes`` adjacent to it on the diagram."""
    s = sys.check_nodes(nodes)
    out = set()
    for v in s:
        out |= sys.adjacency[v]
    return frozenset(out - s)


def singularity(sys: RootSystem) -> int | None:
    """The branch node, or the long node of the multiple edge; None for type A.

    For B/C/F/G the singularity is the long root neighbouring a short one
    across the multiple edge (for B2/C2/G2 both nodes touch that edge and the
    long one is taken).
    """
    if not sys.is_simple():
        raise ValueError("singularity is defined for simple systems only")
    for v in sys.nodes:
        if len(sys.adjacency[v]) >= 3:
            return v
    for pair, mult in sys.edge_mult.items():
        if mult > 1:
            return max(pair, key=lambda v: sys.d[v - 1])
    return None


def extreme_nodes(sys: RootSystem) -> frozenset:
    """Nodes of degree at most 1 (the single node of A1 counts as extreme)."""
    if not sys.is_simple():
        raise ValueError("extreme nodes are defined for simple systems only")
    return frozenset(v for v in sys.nodes if len(sys.adjacency[v]) <= 1)


def rays(sys: RootSystem) -> list[tuple[int, ...]]:
    """Maximal paths from the singularity (exclusive) to each extreme node.

    Each ray is listed from the node adjacent to the singularity outward;
    rays are ordered by their smallest contained node.
    """
    s = singularity(sys)
    if s is None:
        raise ValueError(f"{sys!r} has no singularity node")
    out = []
    for first in sorted(sys.adjacency[s]):
        path = [first]
        prev, cur = s, first
        while True:
            nxt = [u for u in sys.adjacency[cur] if u != prev]
            if not nxt:
                break
            (nxt,) = nxt
            path.append(nxt)
            prev, cur = cur, nxt
        out.append(tuple(path))
    return sorted(out, key=min)


def path_between(sys: RootSystem, a: int, b: int) -> tuple[int, ...]:
    """The unique path from node a to node b in the diagram (inclusive)."""
    sys.check_nodes([a, b])
    stack = [(a, (a,))]
    seen = {a}
    while stack:
        v, path = stack.pop()
        if v == b:
            return path
        for u in sys.adjacency[v]:
            if u not in seen:
                seen.add(u)
                stack.append((u, path + (u,)))
    raise ValueError(f"nodes {a} and {b} lie in different components")
