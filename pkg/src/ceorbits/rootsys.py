"""Exact Cartan data for simple and semisimple root systems.

Everything is carried out over exact rationals (``fractions.Fraction``);
no floating point appears anywhere.  Node numbering follows the Bourbaki
convention, with components of a semisimple system numbered consecutively
(first component 1..r1, second r1+1..r1+r2, and so on).
"""
from __future__ import annotations

import re
from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

# Admissible ranks per simple type letter.
_ADMISSIBLE = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

# Basis tags for Weight coordinates.
FUNDAMENTAL = "fundamental"   # coefficients of the fundamental weights
ROOT = "root"                 # coefficients of the simple roots
COROOT = "coroot"             # coefficients of the simple coroots (dual side)
COWEIGHT = "coweight"         # coefficients of the fundamental coweights (dual side)

_PRIMAL = (FUNDAMENTAL, ROOT)
_DUAL = (COROOT, COWEIGHT)


def _simple_diagram(letter: str, n: int):
    """Edges (i, j, multiplicity) and length factors d_i for one simple type.

    d_i = (alpha_i, alpha_i)/2 with short roots normalised to d = 1.
    """
    edges = []
    d = [1] * n
    if letter == "A":
        edges = [(i, i + 1, 1) for i in range(1, n)]
    elif letter == "B":
        edges = [(i, i + 1, 1) for i in range(1, n - 1)] + [(n - 1, n, 2)]
        d = [2] * (n - 1) + [1]
    elif letter == "C":
        edges = [(i, i + 1, 1) for i in range(1, n - 1)] + [(n - 1, n, 2)]
        d = [1] * (n - 1) + [2]
    elif letter == "D":
        edges = [(i, i + 1, 1) for i in range(1, n - 2)]
        edges += [(n - 2, n - 1, 1), (n - 2, n, 1)]
    elif letter == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        edges = [(chain[k], chain[k + 1], 1) for k in range(len(chain) - 1)]
        edges.append((2, 4, 1))
    elif letter == "F":
        edges = [(1, 2, 1), (2, 3, 2), (3, 4, 1)]
        d = [2, 2, 1, 1]
    elif letter == "G":
        edges = [(1, 2, 3)]
        d = [1, 3]
    return edges, d


def _parse_spec(spec) -> tuple[tuple[str, int], ...]:
    """Normalise a system spec: 'A3xB2', ['A3', 'B2'] or [('A', 3), ('B', 2)]."""
    if isinstance(spec, str):
        parts = spec.replace(" ", "").split("x")
        out = []
        for p in parts:
            m = re.fullmatch(r"([A-Ga-g])(\d+)", p)
            if m is None:
                raise ValueError(f"cannot parse component {p!r} of group spec {spec!r}")
            out.append((m.group(1).upper(), int(m.group(2))))
        return tuple(out)
    out = []
    for item in spec:
        if isinstance(item, str):
            out.extend(_parse_spec(item))
        else:
            letter, n = item
            out.append((str(letter).upper(), int(n)))
    return tuple(out)


class RootSystem:
    """Immutable Cartan datum of a (semi)simple root system.

    The Cartan matrix convention is ``cartan[i][j] = <alpha_j^vee, alpha_i>``
    (0-indexed rows/columns for nodes i+1, j+1).
    """

    def __init__(self, spec):
        comps = _parse_spec(spec)
        if not comps:
            raise ValueError("empty group spec")
        for letter, n in comps:
            if letter not in _ADMISSIBLE or not _ADMISSIBLE[letter](n):
                raise ValueError(f"inadmissible simple type {letter}{n}")
        self.components = comps
        self.rank = sum(n for _, n in comps)
        self.nodes = tuple(range(1, self.rank + 1))

        # Component bookkeeping and the glued diagram.
        self.component_nodes: tuple[frozenset, ...]
        comp_nodes = []
        edges = []
        d = []
        offset = 0
        comp_of = {}
        for ci, (letter, n) in enumerate(comps):
            es, ds = _simple_diagram(letter, n)
            edges += [(i + offset, j + offset, m) for i, j, m in es]
            d += ds
            comp_nodes.append(frozenset(range(offset + 1, offset + n + 1)))
            for v in range(offset + 1, offset + n + 1):
                comp_of[v] = ci
            offset += n
        self.component_nodes = tuple(comp_nodes)
        self.component_of = comp_of
        self.d = tuple(d)  # (alpha_i, alpha_i)/2, 1-indexed via d[i-1]
        self.edge_mult = {frozenset((i, j)): m for i, j, m in edges}
        adj = {v: set() for v in self.nodes}
        for i, j, _ in edges:
            adj[i].add(j)
            adj[j].add(i)
        self.adjacency = {v: frozenset(ns) for v, ns in adj.items()}

        # Cartan matrix from the diagram: A[i][j] = -max(d_i, d_j)/d_j off the
        # diagonal for adjacent nodes.
        r = self.rank
        A = [[0] * r for _ in range(r)]
        for i in range(r):
            A[i][i] = 2
        for i, j, m in edges:
            aij = -max(self.d[i - 1], self.d[j - 1]) // self.d[j - 1]
            aji = -max(self.d[i - 1], self.d[j - 1]) // self.d[i - 1]
            A[i - 1][j - 1] = aij
            A[j - 1][i - 1] = aji
            assert aij * aji == m
        self.cartan = tuple(tuple(row) for row in A)
        self.cartan_inverse = _invert(self.cartan)

        self._positive_roots_rc = self._closure_positive_roots()
        # Per-root data: fundamental coords, d_alpha, coroot pairing vector.
        self._root_fund = []
        self._root_d = []
        self._coroot_vec = []
        for rc in self._positive_roots_rc:
            fc = self._root_to_fund(rc)
            da = sum(rc[j] * self.d[j] * fc[j] for j in range(r)) // 2
            cv = []
            for j in range(r):
                num = rc[j] * self.d[j]
                assert num % da == 0
                cv.append(num // da)
            self._root_fund.append(fc)
            self._root_d.append(da)
            self._coroot_vec.append(tuple(cv))
        self._root_fund = tuple(self._root_fund)
        self._root_d = tuple(self._root_d)
        self._coroot_vec = tuple(self._coroot_vec)
        self._memo: dict = {}

    # -- construction helpers -------------------------------------------------

    def _closure_positive_roots(self):
        """All positive roots, by reflection closure from the simple roots."""
        r = self.rank
        simple = [tuple(1 if k == j else 0 for k in range(r)) for j in range(r)]
        seen = set(simple)
        queue = list(simple)
        while queue:
            rc = queue.pop()
            for i in range(r):
                c = sum(rc[j] * self.cartan[j][i] for j in range(r))
                new = list(rc)
                new[i] -= c
                new = tuple(new)
                if all(x >= 0 for x in new) and new not in seen:
                    seen.add(new)
                    queue.append(new)
        return tuple(sorted(seen, key=lambda rc: (sum(rc), rc)))

    def _root_to_fund(self, rc):
        return tuple(
            sum(rc[j] * self.cartan[j][i] for j in range(self.rank))
            for i in range(self.rank)
        )

    def _fund_to_root(self, fc):
        inv = self.cartan_inverse
        return tuple(
            sum(fc[i] * inv[i][j] for i in range(self.rank)) for j in range(self.rank)
        )

    # -- basic queries ---------------------------------------------------------

    def is_simple(self) -> bool:
        return len(self.components) == 1

    @property
    def positive_roots(self) -> tuple["Weight", ...]:
        return tuple(Weight(self, rc, ROOT) for rc in self._positive_roots_rc)

    def num_positive_roots(self) -> int:
        return len(self._positive_roots_rc)

    def fundamental_weight(self, i: int) -> "Weight":
        self._check_node(i)
        return Weight(self, tuple(1 if k == i - 1 else 0 for k in range(self.rank)), FUNDAMENTAL)

    def simple_root(self, i: int) -> "Weight":
        self._check_node(i)
        return Weight(self, tuple(1 if k == i - 1 else 0 for k in range(self.rank)), ROOT)

    def simple_coroot(self, i: int) -> "Weight":
        self._check_node(i)
        return Weight(self, tuple(1 if k == i - 1 else 0 for k in range(self.rank)), COROOT)

    def fundamental_coweight(self, i: int) -> "Weight":
        self._check_node(i)
        return Weight(self, tuple(1 if k == i - 1 else 0 for k in range(self.rank)), COWEIGHT)

    def rho(self) -> "Weight":
        return Weight(self, (1,) * self.rank, FUNDAMENTAL)

    def weight(self, coords, basis: str = FUNDAMENTAL) -> "Weight":
        return Weight(self, tuple(coords), basis)

    def zero(self) -> "Weight":
        return Weight(self, (0,) * self.rank, FUNDAMENTAL)

    def _check_node(self, i) -> None:
        if i not in self.adjacency:
            raise ValueError(f"node {i} out of range 1..{self.rank}")

    def check_nodes(self, nodes: Iterable[int]) -> frozenset:
        ns = frozenset(nodes)
        for i in ns:
            self._check_node(i)
        return ns

    # -- exact bilinear data ----------------------------------------------------

    def inner_fund(self, x: Sequence, y: Sequence) -> Fraction:
        """W-invariant inner product of two fundamental-coordinate vectors."""
        rx = self._fund_to_root(x)
        return Fraction(
            sum(rx[j] * self.d[j] * y[j] for j in range(self.rank))
        )

    def reflect_fund(self, fc, i: int):
        """Simple reflection s_i on a fundamental-coordinate vector."""
        c = fc[i - 1]
        if c == 0:
            return tuple(fc)
        row = self.cartan[i - 1]
        return tuple(fc[j] - c * row[j] for j in range(self.rank))

    # -- dunder ------------------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "x".join(f"{l}{n}" for l, n in self.components)


def _invert(matrix):
    """Exact inverse of a small integer matrix, as Fractions."""
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class Weight:
    """Exact coordinate vector over a RootSystem with a basis tag.

    Primal weights live in X(T) tensor Q (``fundamental`` or ``root`` basis),
    coweights in the dual space (``coroot`` or ``coweight`` basis).  Equality
    compares canonical coordinates, so basis conversions round-trip exactly.
    """

    __slots__ = ("system", "coords", "basis")

    def __init__(self, system: RootSystem, coords, basis: str = FUNDAMENTAL):
        if basis not in _PRIMAL and basis not in _DUAL:
            raise ValueError(f"unknown basis tag {basis!r}")
        coords = tuple(Fraction(c) if not isinstance(c, int) else c for c in coords)
        if len(coords) != system.rank:
            raise ValueError(f"expected {system.rank} coordinates, got {len(coords)}")
        self.system = system
        self.coords = coords
        self.basis = basis

    @property
    def dual(self) -> bool:
        return self.basis in _DUAL

    def fundamental(self):
        """Coordinates in the fundamental-weight basis."""
        if self.basis == FUNDAMENTAL:
            return self.coords
        if self.basis == ROOT:
            return self.system._root_to_fund(self.coords)
        raise TypeError("coweights have no fundamental-weight coordinates")

    def root_coords(self):
        """Coordinates in the simple-root basis."""
        if self.basis == ROOT:
            return self.coords
        if self.basis == FUNDAMENTAL:
            return self.system._fund_to_root(self.coords)
        raise TypeError("coweights have no simple-root coordinates")

    def coroot_coords(self):
        if self.basis == COROOT:
            return self.coords
        if self.basis == COWEIGHT:
            inv = self.system.cartan_inverse
            r = self.system.rank
            return tuple(
                sum(self.coords[i] * inv[j][i] for i in range(r)) for j in range(r)
            )
        raise TypeError("weights have no coroot coordinates")

    def to_basis(self, basis: str) -> "Weight":
        if basis == FUNDAMENTAL:
            return Weight(self.system, self.fundamental(), FUNDAMENTAL)
        if basis == ROOT:
            return Weight(self.system, self.root_coords(), ROOT)
        if basis == COROOT:
            return Weight(self.system, self.coroot_coords(), COROOT)
        if basis == COWEIGHT:
            r = self.system.rank
            b = self.coroot_coords()
            A = self.system.cartan
            return Weight(self.system, tuple(sum(b[j] * A[i][j] for j in range(r)) for i in range(r)), COWEIGHT)
        raise ValueError(f"unknown basis tag {basis!r}")

    def _canonical(self):
        return self.coroot_coords() if self.dual else self.fundamental()

    def __add__(self, other: "Weight") -> "Weight":
        self._compatible(other)
        return Weight(self.system, tuple(a + b for a, b in zip(self._canonical(), other._canonical())),
                      COROOT if self.dual else FUNDAMENTAL)

    def __sub__(self, other: "Weight") -> "Weight":
        self._compatible(other)
        return Weight(self.system, tuple(a - b for a, b in zip(self._canonical(), other._canonical())),
                      COROOT if self.dual else FUNDAMENTAL)

    def __mul__(self, scalar) -> "Weight":
        return Weight(self.system, tuple(c * scalar for c in self.coords), self.basis)

    __rmul__ = __mul__

    def __neg__(self) -> "Weight":
        return Weight(self.system, tuple(-c for c in self.coords), self.basis)

    def _compatible(self, other: "Weight") -> None:
        if self.system != other.system:
            raise ValueError("weights over different root systems")
        if self.dual != other.dual:
            raise TypeError("cannot mix weights and coweights")

    def __eq__(self, other):
        return (
            isinstance(other, Weight)
            and self.system == other.system
            and self.dual == other.dual
            and self._canonical() == other._canonical()
        )

    def __hash__(self):
        return hash((self.system, self.dual, self._canonical()))

    def __lt__(self, other: "Weight"):
        self._compatible(other)
        return self._canonical() < other._canonical()

    def __repr__(self):
        return f"Weight({self.system!r}, {list(self.coords)}, {self.basis!r})"


# -- spec operations -------------------------------------------------------------


def build_root_system(spec) -> RootSystem:
    """Construct the full Cartan datum for a (semi)simple type list."""
    return RootSystem(spec)


def pairing(coweight: Weight, weight: Weight) -> Fraction:
    """Canonical X_*(T) x X(T) pairing, extended bilinearly to rationals."""
    if not coweight.dual or weight.dual:
        raise TypeError("pairing expects (coweight, weight)")
    if coweight.system != weight.system:
        raise ValueError("pairing of vectors over different root systems")
    b = coweight.coroot_coords()
    f = weight.fundamental()
    return Fraction(sum(x * y for x, y in zip(b, f)))


def is_dominant(w: Weight) -> bool:
    """Membership in the dominant chamber C."""
    return all(c >= 0 for c in w.fundamental())


def weyl_orbit(w: Weight, generators: Iterable[int]) -> tuple[Weight, ...]:
    """Orbit of ``w`` under the reflections s_i, i in ``generators``.

    Breadth-first closure; output is canonically ordered (lexicographic on
    fundamental coordinates) so repeated runs are reproducible byte for byte.
    """
    sys = w.system
    gens = sys.check_nodes(generators)
    return tuple(
        Weight(sys, fc, FUNDAMENTAL)
        for fc in weyl_orbit_fund(sys, w.fundamental(), gens)
    )


def weyl_orbit_fund(sys: RootSystem, fc: tuple, generators: Iterable[int]) -> list[tuple]:
    """Raw-coordinate variant of :func:`weyl_orbit` used in inner loops."""
    start = tuple(fc)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in generators:
            new = sys.reflect_fund(v, i)
            if new not in seen:
                seen.add(new)
                queue.append(new)
    return sorted(seen)


def degree_labels(sys: RootSystem, i: int) -> tuple[Fraction, ...]:
    """Row i of the inverse transposed Cartan matrix.

    Entry j is <omega_i^vee, omega_j>, the degree of omega_j for the grading
    by the i-th fundamental coweight.
    """
    if not sys.is_simple():
        raise ValueError("degree labels are defined for simple systems only")
    sys._check_node(i)
    inv = sys.cartan_inverse
    return tuple(inv[j][i - 1] for j in range(sys.rank))
