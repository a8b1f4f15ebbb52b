"""Minimal ambient module of CE(G/Ru(P)) at the fixed point, for simple G.

The retained summands of Hom(V(w_i)^{Ru P}, V(w_i)) are found by a walk on
the Dynkin diagram; walks start at extreme Levi nodes and remove the
fundamental weights that are generated by the remaining ones.  A complete
bounded search over tensor products (:func:`removal_set_oracle`) provides
the ground truth for low rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import dynkin
from .orbits import positive_root_count
from .repcalc import is_L_generated, weyl_dim
from .rootsys import RootSystem


@dataclass(frozen=True)
class SummandReport:
    node: int
    retained: bool
    g_dim: int
    l_dim: int
    contribution: int


def dim_CE(sys: RootSystem, levi: Iterable[int]) -> int:
    """Dimension of the open orbit G/Ru(P): |Delta+| + |Delta_L+| + rank."""
    lv = sys.check_nodes(levi)
    return sys.num_positive_roots() + positive_root_count(sys, lv) + sys.rank


def _check_simple_proper(sys: RootSystem, lv: frozenset) -> None:
    if not sys.is_simple():
        raise ValueError("the tangent module is computed for simple systems only")
    if lv == frozenset(sys.nodes):
        raise ValueError("levi = Pi means P = G: there is no fixed point")


def _walk(sys: RootSystem, lv: frozenset, start: int, sing: int | None) -> set[int]:
    """Nodes removed by the walk from one extreme Levi node.

    The walk follows the unique path away from ``start``.  It never crosses
    the multiple edge toward short roots; it stops after removing the first
    node outside the Levi, or at the singularity, where the branch/long-root
    extensions may carry it further.
    """
    removed: set[int] = set()
    prev, cur = None, start
    while True:
        nxt = [u for u in sys.adjacency[cur] if u != prev]
        if not nxt:
            return removed
        if len(nxt) > 1:
            # Only the singularity branches; walks stop there before this.
            return removed
        (v,) = nxt
        mult = sys.edge_mult[frozenset((cur, v))]
        if mult > 1 and sys.d[v - 1] < sys.d[cur - 1]:
            # Crossing toward short roots: stop at the multiple edge.
            return removed
        removed.add(v)
        if v not in lv:
            return removed
        if sing is not None and v == sing:
            crossed_multiple = mult > 1
            if crossed_multiple:
                # Toward long roots: keep removing under the same rule.
                prev, cur = cur, v
                continue
            removed |= _third_ray_extension(sys, lv, sing)
            return removed
        prev, cur = cur, v


def _third_ray_extension(sys: RootSystem, lv: frozenset, sing: int) -> set[int]:
    """Continuation along the third branch after a removed branch node.

    Fires when the diagram branches, the singularity is in the Levi, and at
    least two rays lie inside the Levi; removal then proceeds along the ray
    not contained in the Levi.  For the E series it also stops as soon as
    the removed segment (counted from the singularity) gets strictly longer
    than both other rays.
    """
    if len(sys.adjacency[sing]) < 3:
        return set()
    all_rays = dynkin.rays(sys)
    inside = [r for r in all_rays if set(r) <= lv]
    if len(inside) < 2:
        return set()
    outside = [r for r in all_rays if not set(r) <= lv]
    assert len(outside) == 1, "levi = Pi is excluded, exactly one ray can remain"
    third = outside[0]
    others = sorted(len(r) for r in all_rays if r != third)
    is_e_type = sys.components[0][0] == "E"
    removed: set[int] = set()
    segment = 1  # the singularity itself
    for v in third:
        removed.add(v)
        segment += 1
        if v not in lv:
            break
        if is_e_type and segment > others[-1]:
            break
    return removed


def removal_set(sys: RootSystem, levi: Iterable[int]) -> frozenset:
    """Nodes whose summands are removed from the ambient module."""
    lv = sys.check_nodes(levi)
    _check_simple_proper(sys, lv)
    sing = dynkin.singularity(sys)
    removed: set[int] = set()
    for k in sorted(dynkin.extreme_nodes(sys) & lv):
        removed |= _walk(sys, lv, k, sing)
    return frozenset(removed)


def tangent_report(sys: RootSystem, levi: Iterable[int]):
    """Per-node summand report and the tangent space dimension at the fixed point."""
    lv = sys.check_nodes(levi)
    _check_simple_proper(sys, lv)
    removed = removal_set(sys, lv)
    full = frozenset(sys.nodes)
    reports = []
    total = 0
    for i in sys.nodes:
        w = sys.fundamental_weight(i)
        g_dim = weyl_dim(sys, full, w)
        l_dim = weyl_dim(sys, lv, w)
        retained = i not in removed
        contribution = g_dim * l_dim if retained else 0
        total += contribution
        reports.append(SummandReport(i, retained, g_dim, l_dim, contribution))
    return reports, total


def removal_set_oracle(sys: RootSystem, levi: Iterable[int], max_rank: int = 4) -> frozenset:
    """Ground-truth removal set by complete bounded tensor search.

    Node i is removable iff its fundamental weight is generated, over the
    Levi, by the other fundamental weights.  The search cost grows quickly
    with rank; ranks above ``max_rank`` must be opted into explicitly.
    """
    lv = sys.check_nodes(levi)
    _check_simple_proper(sys, lv)
    if sys.rank > max_rank:
        raise ValueError(
            f"rank {sys.rank} exceeds the oracle bound {max_rank}; raise max_rank to opt in"
        )
    removed = set()
    for i in sys.nodes:
        pool = [sys.fundamental_weight(j) for j in sys.nodes if j != i]
        if is_L_generated(sys, lv, sys.fundamental_weight(i), pool):
            removed.add(i)
    return frozenset(removed)
