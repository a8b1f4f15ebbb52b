"""Orbit classification of canonical and general affine embeddings of G/Ru(P).

The canonical case walks Dynkin subdiagrams Pi_Y with no component inside
Pi_L; the general case walks faces of the cone spanned by the W_L-orbit of a
generator set whose relative interiors meet the dominant chamber.  Both emit
the same record type so the two routes can be cross-checked orbit by orbit.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from . import dynkin
from .conegeom import (
    Cone,
    Face,
    cone_hull,
    dominant_part,
    face_meets_dominant_interior,
    face_spans,
    faces,
    in_span,
    rank_of,
    rref,
)
from .rootsys import RootSystem, Weight, is_dominant, weyl_orbit_fund


@dataclass(frozen=True)
class OrbitDatum:
    """One orbit record; exactly one of pi_y / face is set."""

    pi_y: frozenset | None
    face: Face | None
    boundary: frozenset | None
    d_g: int
    dim_stab_g: int
    dim_g_orbit: int
    dim_y: int
    stab_unipotent_dim: int
    stab_levi_semisimple_nodes: frozenset | None
    stab_torus_dim: int
    torus_saturated: bool = True


def positive_root_count(sys: RootSystem, nodes: Iterable[int]) -> int:
    """Number of positive roots supported on the given node set."""
    ns = sys.check_nodes(nodes)
    key = ("pos_count", ns)
    if key in sys._memo:
        return sys._memo[key]
    count = 0
    for rc in sys._positive_roots_rc:
        if all(rc[j] == 0 or (j + 1) in ns for j in range(sys.rank)):
            count += 1
    sys._memo[key] = count
    return count


def dim_group(sys: RootSystem) -> int:
    """dim G = 2 |Delta+| + rank, the semisimple group on all nodes."""
    return 2 * sys.num_positive_roots() + sys.rank


def admissible_subdiagrams(sys: RootSystem, levi: frozenset) -> list[frozenset]:
    """All Pi_Y with no connected component contained in Pi_L."""
    nodes = sorted(sys.nodes)
    out = []
    for mask in range(1 << len(nodes)):
        piy = frozenset(nodes[i] for i in range(len(nodes)) if mask >> i & 1)
        if all(not comp <= levi for comp in dynkin.components(sys, piy)):
            out.append(piy)
    return out


def _canonical_datum(sys: RootSystem, levi: frozenset, piy: frozenset) -> OrbitDatum:
    bd = dynkin.boundary(sys, piy)
    phi_stab = piy | (levi - bd)
    n_pos = sys.num_positive_roots()
    stab_unip = n_pos - positive_root_count(sys, phi_stab)
    levi_ss = 2 * positive_root_count(sys, piy) + len(piy)
    dim_stab = stab_unip + levi_ss
    d_g = positive_root_count(sys, levi) - positive_root_count(sys, levi - bd)
    dim_g = dim_group(sys)
    dim_orbit = dim_g - dim_stab
    return OrbitDatum(
        pi_y=piy,
        face=None,
        boundary=bd,
        d_g=d_g,
        dim_stab_g=dim_stab,
        dim_g_orbit=dim_orbit,
        dim_y=dim_orbit + d_g,
        stab_unipotent_dim=stab_unip,
        stab_levi_semisimple_nodes=piy,
        stab_torus_dim=len(piy),
    )


def enumerate_canonical_orbits(sys: RootSystem, levi: Iterable[int]) -> list[OrbitDatum]:
    """One record per admissible Pi_Y, ordered by (dim_Y desc, Pi_Y)."""
    lv = sys.check_nodes(levi)
    data = [_canonical_datum(sys, lv, piy) for piy in admissible_subdiagrams(sys, lv)]
    return sorted(data, key=lambda o: (-o.dim_y, tuple(sorted(o.pi_y))))


def modality_canonical(sys: RootSystem, levi: Iterable[int]) -> int:
    """Maximum of d_G over the canonical orbits."""
    lv = sys.check_nodes(levi)
    return max(
        positive_root_count(sys, lv) - positive_root_count(sys, lv - dynkin.boundary(sys, piy))
        for piy in admissible_subdiagrams(sys, lv)
    )


def modality_canonical_restricted(sys: RootSystem, levi: Iterable[int]) -> int:
    """Max of d_G over Pi_Y containing Pi \\ Pi_L only (optimised search)."""
    lv = sys.check_nodes(levi)
    best = 0
    for piy in admissible_subdiagrams(sys, lv):
        if piy >= (frozenset(sys.nodes) - lv):
            d = positive_root_count(sys, lv) - positive_root_count(sys, lv - dynkin.boundary(sys, piy))
            best = max(best, d)
    return best


def has_finitely_many_orbits(sys: RootSystem, levi: Iterable[int]) -> bool:
    """True iff each diagram component lies inside the Levi or misses it."""
    lv = sys.check_nodes(levi)
    return all(comp <= lv or not (comp & lv) for comp in sys.component_nodes)


def _is_path_simply_laced(sys: RootSystem, comp: frozenset) -> bool:
    degrees = [len(sys.adjacency[v] & comp) for v in comp]
    if any(d > 2 for d in degrees):
        return False
    for v in comp:
        for u in sys.adjacency[v] & comp:
            if sys.edge_mult[frozenset((u, v))] != 1:
                return False
    return len(set(sys.d[v - 1] for v in comp)) == 1


def is_smooth_canonical(sys: RootSystem, levi: Iterable[int]):
    """Smoothness of CE(G/Ru(P)) with a per-component decomposition report.

    Smooth iff every component is inside the Levi (a group factor), or is a
    type-A chain whose Levi part is the chain minus one extreme node (the
    SL(n) acting on matrices by hyperplane / line stabilizers).
    """
    lv = sys.check_nodes(levi)
    report = []
    smooth = True
    for comp in sys.component_nodes:
        entry = {"nodes": frozenset(comp)}
        if comp <= lv:
            entry["role"] = "group-factor"
        else:
            missing = comp - lv
            comp_extreme = {v for v in comp if len(sys.adjacency[v] & comp) <= 1}
            if (
                _is_path_simply_laced(sys, comp)
                and len(missing) == 1
                and next(iter(missing)) in comp_extreme
            ):
                entry["role"] = "sl-matrix-factor"
            else:
                entry["role"] = "not-smooth"
                smooth = False
        report.append(entry)
    return smooth, report


# -- general (G x L)-embeddings via cone faces ---------------------------------------


def _snf_diagonal(rows: list, ncols: int, track_cols: bool = False):
    """Diagonalise an integer matrix by unimodular row/column operations.

    Returns (diagonal entries, column vectors) where the column vectors give
    the unimodular column transform (only when ``track_cols``).
    """
    M = [list(r) for r in rows if any(r)]
    cols = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)] if track_cols else None

    def col_op(j, k, q):
        for r in M:
            r[j] -= q * r[k]
        if cols is not None:
            for i in range(ncols):
                cols[j][i] -= q * cols[k][i]

    def col_swap(j, k):
        for r in M:
            r[j], r[k] = r[k], r[j]
        if cols is not None:
            cols[j], cols[k] = cols[k], cols[j]

    t = 0
    nrows = len(M)
    while t < nrows and t < ncols:
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if M[i][j] != 0 and (piv is None or abs(M[i][j]) < abs(M[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        M[t], M[piv[0]] = M[piv[0]], M[t]
        if piv[1] != t:
            col_swap(t, piv[1])
        stable = False
        while not stable:
            stable = True
            for i in range(t + 1, nrows):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    for j in range(ncols):
                        M[i][j] -= q * M[t][j]
                    if M[i][t]:
                        M[t], M[i] = M[i], M[t]
                        stable = False
            for j in range(t + 1, ncols):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    col_op(j, t, q)
                    if M[t][j]:
                        col_swap(t, j)
                        stable = False
        t += 1
    diag = [abs(M[k][k]) for k in range(t)]
    return diag, cols, t


def _integer_kernel(eq_rows: list, m: int) -> list[tuple[int, ...]]:
    """Saturated Z-basis of {x in Z^m : eq . x = 0 for all rows}."""
    if not eq_rows or all(not any(r) for r in eq_rows):
        return [tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]
    _, cols, t = _snf_diagonal(eq_rows, m, track_cols=True)
    return [tuple(cols[j]) for j in range(t, m)]


def _lattice_saturated(rows: list, m: int) -> bool:
    """Whether the row lattice is saturated (primitive) in Z^m."""
    rows = [r for r in rows if any(r)]
    if not rows:
        return True
    diag, _, _ = _snf_diagonal(rows, m)
    return all(d == 1 for d in diag)


def weight_cone(sys: RootSystem, levi: Iterable[int], generators: list[Weight]) -> tuple[Cone, Cone]:
    """(Sigma, Sigma+): the cone over the W_L-orbit of the generators and its
    dominant part C ∩ Q+(W_L {lambda_1, ..., lambda_m})."""
    lv = sys.check_nodes(levi)
    fcs = [w.fundamental() for w in generators]
    orbit_vecs = sorted({v for fc in fcs for v in weyl_orbit_fund(sys, fc, lv)})
    sigma = cone_hull(orbit_vecs)
    return sigma, dominant_part(sys, sigma)


def enumerate_general_orbits(
    sys: RootSystem, levi: Iterable[int], generators: list[Weight]
) -> list[OrbitDatum]:
    """Orbits of the affine (G x L)-embedding attached to dominant generators.

    Builds the cone over the W_L-orbit of the generators, keeps the faces
    whose relative interiors meet the dominant chamber, and books stabilizer
    and modality dimensions face by face.
    """
    lv = sys.check_nodes(levi)
    if not generators:
        raise ValueError("at least one generator weight is required")
    fcs = []
    for w in generators:
        if not is_dominant(w):
            raise ValueError(f"generator {w!r} is not dominant")
        fcs.append(w.fundamental())
    if rank_of(fcs) < sys.rank:
        warnings.warn("generators do not span the weight lattice; the embedding is degenerate")

    orbit_vecs = sorted({v for fc in fcs for v in weyl_orbit_fund(sys, fc, lv)})
    cone = cone_hull(orbit_vecs)
    kept = [f for f in faces(cone) if face_meets_dominant_interior(sys, f)]

    n_pos = sys.num_positive_roots()
    n_pos_levi = positive_root_count(sys, lv)
    dim_g = dim_group(sys)
    levi_simple_fund = {i: sys.simple_root(i).fundamental() for i in sorted(lv)}

    out = []
    for f in kept:
        sp = face_spans(sys, lv, f)
        norm_red = rref(list(sp.norm)) if sp.norm else ([], [])
        perp_red = rref(list(sp.perp)) if sp.perp else ([], [])
        n_norm = 0
        n_norm_levi = 0
        n_perp = 0
        for k, rc in enumerate(sys._positive_roots_rc):
            fc = sys._root_fund[k]
            if in_span(norm_red, fc):
                n_norm += 1
                if all(rc[j] == 0 or (j + 1) in lv for j in range(sys.rank)):
                    n_norm_levi += 1
            if in_span(perp_red, fc):
                n_perp += 1

        d_g = n_pos_levi - n_norm_levi
        stab_unip = n_pos - n_norm
        stab_torus = sys.rank - f.dim
        dim_stab = stab_unip + 2 * n_perp + stab_torus
        dim_orbit = dim_g - dim_stab

        perp_nodes = frozenset(
            i for i in sys.nodes if in_span(perp_red, sys.simple_root(i).fundamental())
        )
        levi_nodes = perp_nodes if positive_root_count(sys, perp_nodes) == n_perp else None

        lattice_rows = [v for v in orbit_vecs if _vec_in_face(cone, f, v)]
        eqs = _span_equations(sp.span, sys.rank)
        if lv:
            dmat = [
                [sum(e[j] * levi_simple_fund[i][j] for j in range(sys.rank)) for i in sorted(lv)]
                for e in eqs
            ]
            for c in _integer_kernel(dmat, len(lv)):
                x = [0] * sys.rank
                for ci, i in zip(c, sorted(lv)):
                    row = levi_simple_fund[i]
                    for j in range(sys.rank):
                        x[j] += ci * row[j]
                lattice_rows.append(tuple(x))
        saturated = _lattice_saturated(lattice_rows, sys.rank)

        out.append(
            OrbitDatum(
                pi_y=None,
                face=f,
                boundary=None,
                d_g=d_g,
                dim_stab_g=dim_stab,
                dim_g_orbit=dim_orbit,
                dim_y=dim_orbit + d_g,
                stab_unipotent_dim=stab_unip,
                stab_levi_semisimple_nodes=levi_nodes,
                stab_torus_dim=stab_torus,
                torus_saturated=saturated,
            )
        )
    return sorted(out, key=lambda o: (-o.dim_y, o.face.sort_key()))


def _vec_in_face(cone, face: Face, vec) -> bool:
    return cone.contains(vec) and all(
        sum(cone.halfspaces[j][k] * vec[k] for k in range(len(vec))) == 0
        for j in face.tight_halfspace_indices
    )


def _span_equations(span_rows, dim: int) -> list[tuple[int, ...]]:
    from .conegeom import nullspace

    return nullspace(list(span_rows), dim)


def closure_contains(a: OrbitDatum, b: OrbitDatum) -> bool:
    """Whether the closure of orbit ``a`` contains orbit ``b``."""
    if a.pi_y is not None and b.pi_y is not None:
        return a.pi_y <= b.pi_y
    if a.face is not None and b.face is not None:
        return b.face <= a.face
    raise ValueError("orbits come from different classification routes")


def face_pi_y(sys: RootSystem, levi: Iterable[int], face: Face) -> frozenset | None:
    """The Pi_Y matching a face under the canonical correspondence, if any.

    Returns the simple roots spanning <Gamma>^perp when they form a base of
    the full root subsystem cut out by the perp, else None.
    """
    lv = sys.check_nodes(levi)
    sp = face_spans(sys, lv, face)
    perp_red = rref(list(sp.perp)) if sp.perp else ([], [])
    nodes = frozenset(
        i for i in sys.nodes if in_span(perp_red, sys.simple_root(i).fundamental())
    )
    n_perp = sum(1 for fc in sys._root_fund if in_span(perp_red, fc))
    if positive_root_count(sys, nodes) != n_perp or rank_of(
        [sys.simple_root(i).fundamental() for i in nodes] or [[0] * sys.rank]
    ) != len(sp.perp):
        return None
    return nodes
