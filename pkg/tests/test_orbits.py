import warnings

import pytest

from ceorbits import (
    build_root_system,
    closure_contains,
    dim_group,
    enumerate_canonical_orbits,
    enumerate_general_orbits,
    face_pi_y,
    has_finitely_many_orbits,
    is_smooth_canonical,
    modality_canonical,
)
from ceorbits.orbits import modality_canonical_restricted, positive_root_count
from ceorbits.tangent import dim_CE

from conftest import all_levis, simple_specs


def fundamentals(sys):
    return [sys.fundamental_weight(i) for i in sys.nodes]


def test_mat_4_3_orbits():
    """SL(4) on Mat(4,3): suffix subdiagrams, d_G = (k-1)(n-k), determinantal dims."""
    a3 = build_root_system("A3")
    data = enumerate_canonical_orbits(a3, {1, 2})
    assert len(data) == 4
    got = {tuple(sorted(o.pi_y)): o for o in data}
    assert set(got) == {(), (3,), (2, 3), (1, 2, 3)}
    # Pi_Y = {alpha_k..alpha_3} is the rank k-1 orbit; n = 4, m x n = 4 x 3.
    for key, o in got.items():
        k = 4 - len(key)
        r = k - 1
        assert o.d_g == (k - 1) * (4 - k)
        assert o.dim_y == r * (4 + 3 - r)  # independent determinantal-variety dimension
    assert modality_canonical(a3, {1, 2}) == 2


def test_fixed_point_orbit():
    b3 = build_root_system("B3")
    data = enumerate_canonical_orbits(b3, {1, 2})
    fixed = next(o for o in data if o.pi_y == frozenset(b3.nodes))
    assert fixed.d_g == 0
    assert fixed.dim_stab_g == dim_group(b3)
    assert fixed.dim_y == 0


def test_open_orbit_dimensions():
    for spec in ("A3", "C3", "D4", "G2"):
        sys = build_root_system(spec)
        for levi in ({1}, frozenset(list(sys.nodes)[:-1])):
            data = enumerate_canonical_orbits(sys, levi)
            open_orbit = next(o for o in data if o.pi_y == frozenset())
            assert open_orbit.stab_unipotent_dim == sys.num_positive_roots() - positive_root_count(sys, levi)
            assert open_orbit.dim_y == dim_CE(sys, levi)
            assert open_orbit.d_g == 0


@pytest.mark.parametrize("n", range(2, 9))
def test_modality_type_a_table(n):
    sys = build_root_system(f"A{n-1}")
    levi = set(range(1, n - 1))
    assert modality_canonical(sys, levi) == (n - 1) ** 2 // 4


@pytest.mark.parametrize("l", range(2, 7))
def test_modality_type_c_table(l):
    sys = build_root_system(f"C{l}")
    levi = set(range(1, l))
    data = enumerate_canonical_orbits(sys, levi)
    assert len(data) == l + 1
    assert sorted(o.d_g for o in data) == sorted(k * (l - k) for k in range(l + 1))
    assert modality_canonical(sys, levi) == l * l // 4


def test_modality_trivial_levis():
    for spec in ("A3", "B3", "G2"):
        sys = build_root_system(spec)
        assert modality_canonical(sys, set()) == 0
        assert modality_canonical(sys, set(sys.nodes)) == 0


@pytest.mark.parametrize("spec", simple_specs(6))
def test_modality_restriction_is_lossless(spec):
    sys = build_root_system(spec)
    for levi in all_levis(sys):
        assert modality_canonical(sys, levi) == modality_canonical_restricted(sys, levi)


def test_modality_adds_over_components():
    a2 = build_root_system("A2")
    c2 = build_root_system("C2")
    prod = build_root_system("A2xC2")
    for levi in all_levis(prod):
        left = frozenset(i for i in levi if i <= 2)
        right = frozenset(i - 2 for i in levi if i > 2)
        assert modality_canonical(prod, levi) == modality_canonical(
            a2, left
        ) + modality_canonical(c2, right)


def test_finiteness_examples():
    assert not has_finitely_many_orbits(build_root_system("A2"), {1})
    assert has_finitely_many_orbits(build_root_system("A2xA1"), {1, 2})
    for spec in ("A3", "B2", "E6"):
        sys = build_root_system(spec)
        assert has_finitely_many_orbits(sys, set())
        assert has_finitely_many_orbits(sys, set(sys.nodes))


def test_orbit_record_consistency():
    for spec in ("A4", "B3", "C3", "D4", "F4", "G2", "A2xB2"):
        sys = build_root_system(spec)
        for levi in ({1}, frozenset(list(sys.nodes)[1:])):
            for o in enumerate_canonical_orbits(sys, levi):
                assert o.d_g >= 0
                assert o.dim_g_orbit + o.dim_stab_g == dim_group(sys)
                assert o.dim_y == o.dim_g_orbit + o.d_g
                assert o.stab_torus_dim == len(o.pi_y)
                if o.pi_y:
                    nbrs = frozenset().union(*(sys.adjacency[v] for v in o.pi_y))
                    assert o.boundary == nbrs - o.pi_y
                else:
                    assert o.boundary == frozenset()


def test_poset_extremes():
    for spec in ("A3", "B3", "D4"):
        sys = build_root_system(spec)
        for levi in all_levis(sys):
            data = enumerate_canonical_orbits(sys, levi)
            maxima = [a for a in data if all(closure_contains(a, b) for b in data)]
            assert len(maxima) == 1 and maxima[0].pi_y == frozenset()
            if levi != frozenset(sys.nodes):
                minima = [b for b in data if all(closure_contains(a, b) for a in data)]
                assert len(minima) == 1 and minima[0].pi_y == frozenset(sys.nodes)


def test_smoothness_examples():
    for n in range(2, 7):
        sys = build_root_system(f"A{n-1}")
        smooth, report = is_smooth_canonical(sys, set(range(1, n - 1)))
        assert smooth
        assert report[0]["role"] == "sl-matrix-factor"
    a3 = build_root_system("A3")
    smooth, report = is_smooth_canonical(a3, {1, 2, 3})
    assert smooth and report[0]["role"] == "group-factor"
    assert not is_smooth_canonical(build_root_system("C2"), {1})[0]
    smooth, report = is_smooth_canonical(build_root_system("A1"), set())
    assert smooth
    # Mixed product: a full component and a matrix component.
    sysx = build_root_system("B2xA2")
    smooth, report = is_smooth_canonical(sysx, {1, 2, 3})
    assert smooth
    assert [e["role"] for e in report] == ["group-factor", "sl-matrix-factor"]
    assert not is_smooth_canonical(sysx, {1, 3})[0]


def test_general_orbits_a2_example():
    a2 = build_root_system("A2")
    data = enumerate_general_orbits(a2, {1}, fundamentals(a2))
    assert len(data) == 3
    dims = sorted(o.face.dim for o in data)
    assert dims == [0, 1, 2]
    ray = next(o for o in data if o.face.dim == 1)
    assert ray.face.generators() == ((1, 0),)  # the dominant extreme ray, Q+ omega_1
    assert face_pi_y(a2, {1}, ray.face) == frozenset({2})
    canon = {o.pi_y: o for o in enumerate_canonical_orbits(a2, {1})}
    for o in data:
        c = canon[face_pi_y(a2, {1}, o.face)]
        assert (o.d_g, o.dim_stab_g, o.dim_y) == (c.d_g, c.dim_stab_g, c.dim_y)
        assert o.torus_saturated


def test_general_orbits_group_case():
    """levi = Pi with spanning W-stable generators: the trivial embedding family."""
    a2 = build_root_system("A2")
    data = enumerate_general_orbits(a2, {1, 2}, fundamentals(a2))
    assert len(data) == 1
    assert data[0].face.dim == 2
    assert data[0].d_g == 0
    canon = enumerate_canonical_orbits(a2, {1, 2})
    assert len(canon) == 1 and canon[0].dim_y == data[0].dim_y


def test_general_orbits_validation():
    a2 = build_root_system("A2")
    with pytest.raises(ValueError):
        enumerate_general_orbits(a2, {1}, [])
    with pytest.raises(ValueError):
        enumerate_general_orbits(a2, {1}, [a2.weight((-1, 0))])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        enumerate_general_orbits(a2, {1}, [a2.fundamental_weight(1)])
        assert any("span" in str(w.message) for w in caught)


def test_general_unsaturated_lattice_flagged():
    """A generator lattice of index two in the weight lattice trips the flag."""
    a1 = build_root_system("A1")
    data = enumerate_general_orbits(a1, set(), [a1.weight((2,))])
    ray = next(o for o in data if o.face.dim == 1)
    assert not ray.torus_saturated
    zero = next(o for o in data if o.face.dim == 0)
    assert zero.torus_saturated
    data = enumerate_general_orbits(a1, set(), [a1.weight((1,))])
    assert all(o.torus_saturated for o in data)


def test_general_orbits_semisimple():
    sysx = build_root_system("A1xA1")
    data = enumerate_general_orbits(sysx, {1}, fundamentals(sysx))
    canon = {o.pi_y: o for o in enumerate_canonical_orbits(sysx, {1})}
    assert len(data) == len(canon)
    for o in data:
        c = canon[face_pi_y(sysx, {1}, o.face)]
        assert (o.d_g, o.dim_stab_g, o.dim_y) == (c.d_g, c.dim_stab_g, c.dim_y)


def test_general_matches_canonical_rank3():
    for spec in simple_specs(3):
        sys = build_root_system(spec)
        for levi in all_levis(sys):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                gen = enumerate_general_orbits(sys, levi, fundamentals(sys))
            canon = {o.pi_y: o for o in enumerate_canonical_orbits(sys, levi)}
            assert len(gen) == len(canon)
            seen = set()
            for o in gen:
                piy = face_pi_y(sys, levi, o.face)
                assert piy is not None and piy in canon
                c = canon[piy]
                assert (o.d_g, o.dim_stab_g, o.dim_y) == (c.d_g, c.dim_stab_g, c.dim_y)
                seen.add(piy)
            assert len(seen) == len(canon)
