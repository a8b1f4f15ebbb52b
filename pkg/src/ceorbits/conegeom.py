"""Exact rational polyhedral cones via the double description method.

Cones are represented both by generators (extreme rays plus a lineality
basis) and by halfspaces (facet inequalities plus span equations), all as
primitive integer vectors.  Insertion order is lexicographic and adjacency
is decided combinatorially, so every description is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .rootsys import ROOT, RootSystem, Weight


# -- small exact linear algebra ----------------------------------------------------


def _primitive(vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector (same orientation)."""
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ints = [int(f * denom) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _sign_normalize(vec: tuple[int, ...]) -> tuple[int, ...]:
    for x in vec:
        if x != 0:
            return vec if x > 0 else tuple(-y for y in vec)
    return vec


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns nonzero rows and pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_of(rows) -> int:
    if not rows:
        return 0
    return len(rref(rows)[0])


def nullspace(rows, dim: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of {x : row . x = 0 for every row}."""
    if not rows:
        return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    red, pivots = rref(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * dim
        v[fc] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(_primitive(v))
    return basis


def span_basis_of(rows) -> tuple[tuple[int, ...], ...]:
    """Canonical primitive basis of the row span."""
    red, _ = rref(rows)
    return tuple(_primitive(r) for r in red)


def in_span(red_pivots, vec) -> bool:
    """Membership of vec in a span given by (rref rows, pivots)."""
    red, pivots = red_pivots
    v = [Fraction(x) for x in vec]
    for row, pc in zip(red, pivots):
        f = v[pc]
        if f != 0:
            v = [a - f * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)


def intersect_spans(rows_a, rows_b, dim: int) -> list[tuple[int, ...]]:
    """Basis of the intersection of two row spans."""
    eqs = nullspace(rows_a, dim) + nullspace(rows_b, dim)
    return nullspace(eqs, dim)


# -- double description --------------------------------------------------------------


def _dd(constraints: list[tuple[int, ...]], dim: int):
    """V-description of {x : h . x >= 0 for all h}.

    Returns (lineality basis, rays); each ray carries the bitmask of
    constraints it is tight on.
    """
    lin = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays: list[tuple[tuple[int, ...], int]] = []
    for idx, h in enumerate(constraints):
        hl = [_dot(h, b) for b in lin]
        j = next((k for k, v in enumerate(hl) if v != 0), None)
        if j is not None:
            b = lin[j]
            hb = hl[j]
            if hb < 0:
                b = tuple(-x for x in b)
                hb = -hb
            new_lin = []
            for k, l in enumerate(lin):
                if k == j:
                    continue
                new_lin.append(_primitive([hb * x - hl[k] * y for x, y in zip(l, b)]))
            new_rays = []
            for vec, mask in rays:
                hv = _dot(h, vec)
                nv = _primitive([hb * x - hv * y for x, y in zip(vec, b)])
                new_rays.append((nv, mask | (1 << idx)))
            new_rays.append((b, (1 << idx) - 1))
            lin = new_lin
            rays = new_rays
            continue
        values = [_dot(h, vec) for vec, _ in rays]
        plus = [k for k, v in enumerate(values) if v > 0]
        zero = [k for k, v in enumerate(values) if v == 0]
        minus = [k for k, v in enumerate(values) if v < 0]
        if not minus:
            rays = [(rays[k][0], rays[k][1]) for k in plus] + [
                (rays[k][0], rays[k][1] | (1 << idx)) for k in zero
            ]
            continue
        new_rays = [(rays[k][0], rays[k][1]) for k in plus]
        new_rays += [(rays[k][0], rays[k][1] | (1 << idx)) for k in zero]
        seen = {v for v, _ in new_rays}
        for p in plus:
            for m in minus:
                common = rays[p][1] & rays[m][1]
                adjacent = True
                for o in range(len(rays)):
                    if o != p and o != m and rays[o][1] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vm = rays[p][0], rays[m][0]
                hp, hm = values[p], values[m]
                nv = _primitive([hp * x - hm * y for x, y in zip(vm, vp)])
                if nv in seen:
                    continue
                seen.add(nv)
                new_rays.append((nv, common | (1 << idx)))
        rays = new_rays
    return lin, rays


def _reduce_mod(red_pivots, vec) -> tuple[int, ...]:
    """Canonical representative of vec modulo a span (given as rref/pivots)."""
    red, pivots = red_pivots
    v = [Fraction(x) for x in vec]
    for row, pc in zip(red, pivots):
        f = v[pc]
        if f != 0:
            v = [a - f * b for a, b in zip(v, row)]
    return _primitive(v)


class Cone:
    """A polyhedral cone with both generator and halfspace descriptions.

    ``generators`` are the extreme rays (reduced modulo the lineality space),
    ``halfspaces`` the facet inequalities (reduced modulo the span equations)
    and ``equations`` the functionals cutting out the linear span.
    """

    def __init__(self, ambient_dim, generators, halfspaces, equations, lineality_basis):
        self.ambient_dim = ambient_dim
        self.generators = tuple(generators)
        self.halfspaces = tuple(halfspaces)
        self.equations = tuple(equations)
        self.lineality_basis = tuple(lineality_basis)
        self.lineality_dim = len(self.lineality_basis)
        self.dim = rank_of(list(self.generators) + list(self.lineality_basis))
        self._gen_tight = tuple(
            frozenset(j for j, h in enumerate(self.halfspaces) if _dot(h, g) == 0)
            for g in self.generators
        )

    @property
    def all_generators(self) -> tuple:
        """Rays plus a signed lineality basis: a spanning generator list."""
        return self.generators + self.lineality_basis + tuple(
            tuple(-x for x in b) for b in self.lineality_basis
        )

    def contains(self, vec) -> bool:
        v = _primitive(vec)
        return all(_dot(e, v) == 0 for e in self.equations) and all(
            _dot(h, v) >= 0 for h in self.halfspaces
        )

    def __repr__(self):
        return (
            f"Cone(dim={self.dim}, ambient={self.ambient_dim}, "
            f"rays={len(self.generators)}, facets={len(self.halfspaces)}, "
            f"lineality={self.lineality_dim})"
        )


def cone_hull(vectors: Iterable[Sequence]) -> Cone:
    """Double-description pair of the cone spanned by the given vectors."""
    vecs = [_primitive(v) for v in vectors]
    if not vecs:
        raise ValueError("cone_hull requires a non-empty vector list")
    dim = len(vecs[0])
    if any(len(v) != dim for v in vecs):
        raise ValueError("generators of mixed dimension")
    gens = sorted({v for v in vecs if any(x != 0 for x in v)})

    if not gens:
        eqs = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
        return Cone(dim, (), (), eqs, ())

    # Facets are the extreme rays of the polar dual; the dual lineality cuts
    # out the linear span of the cone.
    dual_lin, dual_rays = _dd(gens, dim)
    equations = sorted(_sign_normalize(b) for b in span_basis_of(dual_lin)) if dual_lin else []
    eq_red = rref(equations) if equations else ([], [])
    facets = sorted(
        f for f in {_reduce_mod(eq_red, v) for v, _ in dual_rays} if any(x != 0 for x in f)
    )

    constraints = []
    for e in equations:
        constraints.append(e)
        constraints.append(tuple(-x for x in e))
    constraints += facets
    lin, rays = _dd(constraints, dim)
    lin_basis = sorted(_sign_normalize(b) for b in span_basis_of(lin)) if lin else []
    lin_red = rref(lin_basis) if lin_basis else ([], [])
    ray_vecs = sorted({_reduce_mod(lin_red, v) for v, _ in rays} - {tuple(0 for _ in range(dim))})

    cone = Cone(dim, ray_vecs, facets, equations, lin_basis)
    for g in gens:
        assert cone.contains(g), "double description round-trip failed"
    assert cone.dim == rank_of(gens)
    return cone


@dataclass(frozen=True)
class Face:
    """A face of a cone, identified by its tight facet set."""

    cone: Cone
    generator_indices: frozenset
    tight_halfspace_indices: frozenset
    dim: int
    span_basis: tuple

    def generators(self) -> tuple:
        return tuple(self.cone.generators[i] for i in sorted(self.generator_indices))

    def sort_key(self):
        return (self.dim, tuple(sorted(self.tight_halfspace_indices)))

    def __le__(self, other: "Face") -> bool:
        """Face containment (self a face of other)."""
        return self.generator_indices <= other.generator_indices

    def __eq__(self, other):
        return (
            isinstance(other, Face)
            and self.cone is other.cone
            and self.generator_indices == other.generator_indices
        )

    def __hash__(self):
        return hash((id(self.cone), self.generator_indices))


def _make_face(cone: Cone, gen_idx: frozenset) -> Face:
    if gen_idx:
        tight = frozenset.intersection(*(cone._gen_tight[i] for i in gen_idx))
    else:
        tight = frozenset(range(len(cone.halfspaces)))
    rows = [cone.generators[i] for i in sorted(gen_idx)] + list(cone.lineality_basis)
    basis = span_basis_of(rows) if rows else ()
    return Face(cone, gen_idx, tight, len(basis), basis)


def faces(cone: Cone) -> list[Face]:
    """The full face lattice, including the cone itself and its minimal face.

    Faces are returned in canonical order (dimension, then tight set).  The
    minimal face is the lineality space; faces below it are not enumerated.
    """
    start = frozenset(range(len(cone.generators)))
    found = {start: _make_face(cone, start)}
    queue = [start]
    while queue:
        s = queue.pop()
        tight = found[s].tight_halfspace_indices
        for j in range(len(cone.halfspaces)):
            if j in tight:
                continue
            sub = frozenset(i for i in s if j in cone._gen_tight[i])
            if sub not in found:
                found[sub] = _make_face(cone, sub)
                queue.append(sub)
    return sorted(found.values(), key=Face.sort_key)


def _chamber_section(sys: RootSystem, face: Face):
    """Generators of face ∩ C, C the dominant chamber (in fundamental coords)."""
    cone = face.cone
    constraints = []
    for e in cone.equations:
        constraints.append(e)
        constraints.append(tuple(-x for x in e))
    for j in sorted(face.tight_halfspace_indices):
        h = cone.halfspaces[j]
        constraints.append(h)
        constraints.append(tuple(-x for x in h))
    for j in range(len(cone.halfspaces)):
        if j not in face.tight_halfspace_indices:
            constraints.append(cone.halfspaces[j])
    n = cone.ambient_dim
    for i in range(n):
        constraints.append(tuple(1 if j == i else 0 for j in range(n)))
    lin, rays = _dd(constraints, n)
    assert not lin, "a face section of the dominant chamber cannot contain a line"
    return [v for v, _ in rays if any(x != 0 for x in v)]


def dominant_part(sys: RootSystem, cone: Cone) -> Cone:
    """The cone cut to the dominant chamber (Sigma+ = Sigma ∩ C)."""
    constraints = []
    for e in cone.equations:
        constraints.append(e)
        constraints.append(tuple(-x for x in e))
    constraints += list(cone.halfspaces)
    n = cone.ambient_dim
    for i in range(n):
        constraints.append(tuple(1 if j == i else 0 for j in range(n)))
    lin, rays = _dd(constraints, n)
    assert not lin, "the dominant chamber is pointed"
    vecs = [v for v, _ in rays if any(x != 0 for x in v)]
    return cone_hull(vecs) if vecs else cone_hull([tuple(0 for _ in range(n))])


def face_meets_dominant_interior(sys: RootSystem, face: Face) -> bool:
    """Whether the relative interior of the face meets the dominant chamber.

    Decided exactly as dim(face ∩ C) == dim(face); the section is built by
    double description.
    """
    sec = _chamber_section(sys, face)
    return rank_of(sec) == face.dim


def face_relint_meets_dominant(sys: RootSystem, face: Face) -> bool:
    """Strict test: some point of face ∩ C avoids every non-tight facet."""
    sec = _chamber_section(sys, face)
    cone = face.cone
    for j in range(len(cone.halfspaces)):
        if j in face.tight_halfspace_indices:
            continue
        if not any(_dot(cone.halfspaces[j], v) > 0 for v in sec):
            return False
    return True


@dataclass(frozen=True)
class FaceSpans:
    """Exact bases of the subspaces attached to a face by the orbit theory."""

    span: tuple            # <Gamma>
    levi_part: tuple       # |Gamma| = span(Delta_L) ∩ <Gamma>
    perp: tuple            # <Gamma>^perp for the W-invariant form
    norm: tuple            # ||Gamma|| = |Gamma| + <Gamma>^perp
    phi: tuple             # simple-root base of Delta ∩ ||Gamma||, as Weights


def face_spans(sys: RootSystem, levi: Iterable[int], face: Face) -> FaceSpans:
    """Compute <Gamma>, |Gamma|, <Gamma>^perp, ||Gamma|| and the base Phi."""
    lv = sys.check_nodes(levi)
    n = sys.rank
    span = list(face.span_basis)

    levi_simple = [sys.simple_root(i).fundamental() for i in sorted(lv)]
    levi_part = intersect_spans(levi_simple, span, n) if (levi_simple and span) else []

    # <Gamma>^perp w.r.t. the invariant form: B(g, x) = sum_j rc(g)_j d_j x_j.
    functionals = []
    for g in span:
        rc = sys._fund_to_root(g)
        functionals.append(tuple(rc[j] * sys.d[j] for j in range(n)))
    perp = nullspace(functionals, n)

    norm = span_basis_of(levi_part + perp) if (levi_part or perp) else ()
    assert len(norm) == len(levi_part) + len(perp), "|Gamma| and the perp must be independent"

    norm_red = rref(norm) if norm else ([], [])
    inside = [k for k in range(len(sys._positive_roots_rc))
              if in_span(norm_red, sys._root_fund[k])]
    inside_set = {sys._root_fund[k] for k in inside}
    phi = []
    for k in inside:
        fc = sys._root_fund[k]
        decomposable = any(
            tuple(fc[j] - other[j] for j in range(n)) in inside_set
            for other in inside_set
            if other != fc
        )
        if not decomposable:
            phi.append(Weight(sys, sys._positive_roots_rc[k], ROOT))
    return FaceSpans(
        span=tuple(span),
        levi_part=tuple(levi_part),
        perp=tuple(perp),
        norm=tuple(norm),
        phi=tuple(phi),
    )
