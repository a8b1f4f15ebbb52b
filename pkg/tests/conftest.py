from __future__ import annotations

from ceorbits import build_root_system


def simple_specs(max_rank: int, min_rank: int = 1) -> list[str]:
    """All admissible simple type strings with min_rank <= rank <= max_rank."""
    out = []
    for n in range(max(1, min_rank), max_rank + 1):
        out.append(f"A{n}")
    for n in range(max(2, min_rank), max_rank + 1):
        out.append(f"B{n}")
        out.append(f"C{n}")
    for n in range(max(3, min_rank), max_rank + 1):
        out.append(f"D{n}")
    for n in (6, 7, 8):
        if min_rank <= n <= max_rank:
            out.append(f"E{n}")
    if min_rank <= 4 <= max_rank:
        out.append("F4")
    if min_rank <= 2 <= max_rank:
        out.append("G2")
    return out


def all_levis(sys):
    """Every node subset, as frozensets, smallest first."""
    nodes = sorted(sys.nodes)
    for mask in range(1 << len(nodes)):
        yield frozenset(nodes[i] for i in range(len(nodes)) if mask >> i & 1)


def sys_of(spec: str):
    return build_root_system(spec)
