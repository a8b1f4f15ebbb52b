"""Representation calculus for G and its Levi subsystems.

Weyl dimension formula, Freudenthal weight multiplicities and Klimyk-style
tensor product decomposition, all relative to a sub-root-system spanned by a
set of Dynkin nodes (``levi``).  Highest weights are kept in full X(T)
coordinates throughout, so tensor decompositions of Levi modules record the
whole-torus weight of each summand, not only its restriction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rootsys import FUNDAMENTAL, RootSystem, Weight, is_dominant, weyl_orbit_fund


@dataclass(frozen=True)
class IsotypicSummand:
    highest_weight: Weight
    multiplicity: int


def _levi_data(sys: RootSystem, levi: frozenset):
    """Positive roots of the Levi subsystem with precomputed pairing vectors.

    Returns (fund0, coroot_vec, inner_vec) triples: the root in fundamental
    coordinates, its coroot pairings with the fundamental weights, and the
    vector u with (x, alpha) = sum_j u_j x_j for x in fundamental coordinates.
    """
    key = ("levi_data", levi)
    if key in sys._memo:
        return sys._memo[key]
    out = []
    for rc, fc, cv in zip(sys._positive_roots_rc, sys._root_fund, sys._coroot_vec):
        if all(rc[j] == 0 or (j + 1) in levi for j in range(sys.rank)):
            u = tuple(rc[j] * sys.d[j] for j in range(sys.rank))
            out.append((fc, cv, u))
    sys._memo[key] = tuple(out)
    return sys._memo[key]


def _rho_of(sys: RootSystem, levi: frozenset):
    return tuple(1 if (j + 1) in levi else 0 for j in range(sys.rank))


def _check_levi_dominant(sys: RootSystem, levi: frozenset, fc) -> None:
    for i in levi:
        if fc[i - 1] < 0:
            raise ValueError(f"weight {list(fc)} is not dominant for the levi {sorted(levi)}")


def _dominantize(sys: RootSystem, levi_sorted, fc):
    """Levi-dominant representative of the W_L-orbit of ``fc``."""
    v = list(fc)
    while True:
        for i in levi_sorted:
            if v[i - 1] < 0:
                c = v[i - 1]
                row = sys.cartan[i - 1]
                for j in range(sys.rank):
                    v[j] -= c * row[j]
                break
        else:
            return tuple(v)


def _dominantize_signed(sys: RootSystem, levi_sorted, fc):
    """Strictly dominant representative with the sign of the Weyl element.

    Returns None when ``fc`` lies on a reflection wall of the Levi Weyl group.
    """
    v = list(fc)
    sign = 1
    while True:
        for i in levi_sorted:
            if v[i - 1] < 0:
                c = v[i - 1]
                row = sys.cartan[i - 1]
                for j in range(sys.rank):
                    v[j] -= c * row[j]
                sign = -sign
                break
        else:
            break
    for i in levi_sorted:
        if v[i - 1] == 0:
            return None
    return tuple(v), sign


def weyl_dim(sys: RootSystem, levi: Iterable[int], hw: Weight) -> int:
    """Dimension of the simple module of the Levi subsystem with highest weight hw.

    With ``levi`` the full node set this is the Weyl dimension formula for G.
    """
    lv = sys.check_nodes(levi)
    fc = hw.fundamental()
    _check_levi_dominant(sys, lv, fc)
    key = ("weyl_dim", lv, fc)
    if key in sys._memo:
        return sys._memo[key]
    rho = _rho_of(sys, lv)
    num = 1
    den = 1
    for _, cv, _ in _levi_data(sys, lv):
        num *= sum(cv[j] * (fc[j] + rho[j]) for j in range(sys.rank))
        den *= sum(cv[j] * rho[j] for j in range(sys.rank))
    q, r = divmod(num, den)
    assert r == 0, "Weyl dimension did not come out integral"
    sys._memo[key] = q
    return q


def _dominant_mults(sys: RootSystem, levi: frozenset, hw_fc):
    """Freudenthal multiplicities on the levi-dominant weights of V(hw)."""
    key = ("dom_mults", levi, hw_fc)
    if key in sys._memo:
        return sys._memo[key]
    levi_sorted = sorted(levi)
    roots = _levi_data(sys, levi)
    rho = _rho_of(sys, levi)

    # All levi-dominant weights hw - beta, beta a sum of levi positive roots.
    dom = {hw_fc}
    frontier = [hw_fc]
    while frontier:
        new = []
        for mu in frontier:
            for fc, _, _ in roots:
                cand = tuple(mu[j] - fc[j] for j in range(sys.rank))
                if cand in dom:
                    continue
                if all(cand[i - 1] >= 0 for i in levi_sorted):
                    dom.add(cand)
                    new.append(cand)
        frontier = new

    def height(mu):
        rc = sys._fund_to_root(tuple(hw_fc[j] - mu[j] for j in range(sys.rank)))
        h = sum(rc)
        assert h.denominator == 1
        return int(h)

    ordered = sorted(dom, key=lambda mu: (height(mu), mu))
    hw_rho = tuple(hw_fc[j] + rho[j] for j in range(sys.rank))
    top_norm = sys.inner_fund(hw_rho, hw_rho)
    mults: dict[tuple, int] = {hw_fc: 1}
    for mu in ordered:
        if mu == hw_fc:
            continue
        num = 0
        for fc, _, u in roots:
            k = 1
            while True:
                nu = tuple(mu[j] + k * fc[j] for j in range(sys.rank))
                m = mults.get(_dominantize(sys, levi_sorted, nu), 0)
                if m == 0:
                    break
                num += m * sum(u[j] * nu[j] for j in range(sys.rank))
                k += 1
        mu_rho = tuple(mu[j] + rho[j] for j in range(sys.rank))
        denom = top_norm - sys.inner_fund(mu_rho, mu_rho)
        assert denom > 0
        val = Fraction(2 * num) / denom
        assert val.denominator == 1 and val > 0
        mults[mu] = int(val)
    sys._memo[key] = mults
    return mults


def _weight_diagram(sys: RootSystem, levi: frozenset, hw_fc):
    """Full weight diagram {weight: multiplicity} of the Levi module V(hw)."""
    key = ("diagram", levi, hw_fc)
    if key in sys._memo:
        return sys._memo[key]
    diagram: dict[tuple, int] = {}
    for mu, m in _dominant_mults(sys, levi, hw_fc).items():
        for nu in weyl_orbit_fund(sys, mu, levi):
            diagram[nu] = m
    sys._memo[key] = diagram
    return diagram


def weight_multiplicities(sys: RootSystem, levi: Iterable[int], hw: Weight) -> dict[Weight, int]:
    """Exact weight multiplicities of the Levi module with highest weight hw."""
    lv = sys.check_nodes(levi)
    fc = hw.fundamental()
    _check_levi_dominant(sys, lv, fc)
    diagram = _weight_diagram(sys, lv, fc)
    return {Weight(sys, nu, FUNDAMENTAL): m for nu, m in sorted(diagram.items())}


def _tensor_pair(sys: RootSystem, levi: frozenset, lam, mu):
    """Klimyk decomposition of V(lam) (x) V(mu) over the Levi subsystem."""
    if weyl_dim(sys, levi, Weight(sys, lam, FUNDAMENTAL)) < weyl_dim(
        sys, levi, Weight(sys, mu, FUNDAMENTAL)
    ):
        lam, mu = mu, lam
    key = ("tensor", levi, lam, mu)
    if key in sys._memo:
        return sys._memo[key]
    levi_sorted = sorted(levi)
    rho = _rho_of(sys, levi)
    out: dict[tuple, int] = {}
    for nu, m in _weight_diagram(sys, levi, mu).items():
        t = tuple(lam[j] + nu[j] + rho[j] for j in range(sys.rank))
        ds = _dominantize_signed(sys, levi_sorted, t)
        if ds is None:
            continue
        dom, sign = ds
        res = tuple(dom[j] - rho[j] for j in range(sys.rank))
        out[res] = out.get(res, 0) + sign * m
    out = {k: v for k, v in out.items() if v != 0}
    assert all(v > 0 for v in out.values()), "Klimyk produced a negative multiplicity"
    sys._memo[key] = out
    return out


def _tensor_fold(sys: RootSystem, levi: frozenset, hw_fcs):
    """Left-to-right fold of a list of highest weights, decomposing each step."""
    current: dict[tuple, int] = {tuple(hw_fcs[0]): 1}
    for nxt in hw_fcs[1:]:
        acc: dict[tuple, int] = {}
        for hw, mult in current.items():
            for res, m in _tensor_pair(sys, levi, hw, tuple(nxt)).items():
                acc[res] = acc.get(res, 0) + mult * m
        current = acc
    return current


def tensor_decompose(sys: RootSystem, levi: Iterable[int], hws: list[Weight]) -> list[IsotypicSummand]:
    """Isotypic decomposition of a tensor product of Levi modules.

    The product is folded left to right; highest weights are reported in full
    X(T) coordinates, so every non-cartan summand reads lam+mu-beta with beta
    a non-negative integer combination of Levi simple roots.
    """
    lv = sys.check_nodes(levi)
    if not hws:
        return [IsotypicSummand(sys.zero(), 1)]
    fcs = []
    for hw in hws:
        fc = hw.fundamental()
        _check_levi_dominant(sys, lv, fc)
        fcs.append(fc)
    folded = _tensor_fold(sys, lv, fcs)
    return [
        IsotypicSummand(Weight(sys, hw, FUNDAMENTAL), m)
        for hw, m in sorted(folded.items())
    ]


def is_L_generated(sys: RootSystem, levi: Iterable[int], target: Weight, pool: list[Weight]) -> bool:
    """Whether ``target`` occurs as a highest weight of some tensor product of
    Levi modules with highest weights drawn (with repetition) from ``pool``.

    The search is complete: the grading by the fundamental coweights outside
    the Levi is strictly positive on nonzero dominant weights of a simple
    system, so candidate multisets are exactly the solutions of a bounded
    exact cover of the non-Levi root coordinates of ``target``.
    """
    if not sys.is_simple():
        raise ValueError("L-generation search requires a simple system")
    lv = sys.check_nodes(levi)
    outside = [j for j in range(sys.rank) if (j + 1) not in lv]
    if not outside:
        raise ValueError("levi must be a proper subset: the grading degenerates for levi = Pi")
    if not is_dominant(target) or not all(is_dominant(w) for w in pool):
        raise ValueError("target and pool weights must be dominant")

    targ = target.fundamental()
    if all(c == 0 for c in targ):
        return True
    targ_out = [sys._fund_to_root(targ)[j] for j in outside]

    pool_fc = sorted({w.fundamental() for w in pool if any(c != 0 for c in w.fundamental())})
    pool_out = []
    for fc in pool_fc:
        rc = sys._fund_to_root(fc)
        vec = [rc[j] for j in outside]
        assert all(v > 0 for v in vec)
        pool_out.append(vec)

    candidates: list[tuple[int, ...]] = []

    def search(idx, remaining, counts):
        if all(r == 0 for r in remaining):
            candidates.append(tuple(counts))
            return
        if idx == len(pool_fc):
            return
        vec = pool_out[idx]
        kmax = min(int(r / v) for r, v in zip(remaining, vec))
        for k in range(kmax + 1):
            counts.append(k)
            search(idx + 1, [r - k * v for r, v in zip(remaining, vec)], counts)
            counts.pop()

    search(0, list(targ_out), [])
    candidates.sort(key=lambda c: (sum(c), c))
    for counts in candidates:
        if sum(counts) == 0:
            continue
        factors = []
        for fc, k in zip(pool_fc, counts):
            factors.extend([fc] * k)
        if _tensor_fold(sys, lv, factors).get(targ, 0) >= 1:
            return True
    return False
