import pytest

from ceorbits import (
    build_root_system,
    dim_CE,
    is_smooth_canonical,
    removal_set,
    removal_set_oracle,
    tangent_report,
)
from ceorbits.dynkin import boundary, rays

from conftest import all_levis, simple_specs


def full(sys):
    return frozenset(sys.nodes)


def e7_levi_of_e8(e8):
    """Drop the extreme node of the longest ray: the E7 subdiagram."""
    longest = max(rays(e8), key=len)
    return full(e8) - {longest[-1]}


def test_dim_ce_values():
    e8 = build_root_system("E8")
    assert dim_CE(e8, e7_levi_of_e8(e8)) == 191
    f4 = build_root_system("F4")
    b3 = full(f4) - {max(rays(f4), key=len)[-1]}
    assert dim_CE(f4, b3) == 37
    for spec in ("A3", "C4", "G2"):
        sys = build_root_system(spec)
        assert dim_CE(sys, full(sys)) == 2 * sys.num_positive_roots() + sys.rank


def test_removal_type_a_hyperplane_levi():
    """Walking from the surviving end removes everything else: smooth Mat(n, n-1)."""
    for n in (2, 3, 4, 6):
        sys = build_root_system(f"A{n-1}")
        levi = frozenset(range(1, n - 1))
        removed = removal_set(sys, levi)
        assert removed == frozenset(range(2, n))
        reports, total = tangent_report(sys, levi)
        assert [r.node for r in reports if r.retained] == [1]
        assert total == n * (n - 1)
        assert total == dim_CE(sys, levi)


def test_e8_example():
    e8 = build_root_system("E8")
    reports, total = tangent_report(e8, e7_levi_of_e8(e8))
    retained = sorted((r.g_dim, r.l_dim) for r in reports if r.retained)
    assert retained == [(248, 1), (3875, 133), (30380, 56), (147250, 912)]
    assert total == 136508903


def test_f4_example():
    f4 = build_root_system("F4")
    levi = full(f4) - {max(rays(f4), key=len)[-1]}
    removed = removal_set(f4, levi)
    assert len(removed) == 1
    reports, total = tangent_report(f4, levi)
    assert sorted((r.g_dim, r.l_dim) for r in reports if r.retained) == [
        (26, 1),
        (52, 7),
        (273, 8),
    ]
    assert total == 2574


def test_a2_small_smooth_case():
    a2 = build_root_system("A2")
    reports, total = tangent_report(a2, {1})
    assert [r.node for r in reports if r.retained] == [1]
    assert total == 3 * 2 == dim_CE(a2, {1})


def test_summand_report_fields():
    b3 = build_root_system("B3")
    reports, total = tangent_report(b3, {1, 2})
    by_node = {r.node: r for r in reports}
    for i in b3.nodes:
        r = by_node[i]
        if i not in {1, 2}:
            assert r.l_dim == 1  # res omega_i = 0 off the Levi
        if r.retained:
            assert r.contribution == r.g_dim * r.l_dim
        else:
            assert r.contribution == 0
    assert total == sum(r.contribution for r in reports)


def test_removal_rejects_bad_inputs():
    a2 = build_root_system("A2")
    with pytest.raises(ValueError):
        removal_set(a2, {1, 2})
    ss = build_root_system("A1xA1")
    with pytest.raises(ValueError):
        removal_set(ss, {1})
    with pytest.raises(ValueError):
        removal_set_oracle(build_root_system("B5"), {1})


def test_one_node_levis_of_rank_two_types():
    """The multiple-edge direction rule, pinned by the oracle."""
    b2 = build_root_system("B2")
    assert removal_set(b2, {1}) == removal_set_oracle(b2, {1}) == frozenset()
    assert removal_set(b2, {2}) == removal_set_oracle(b2, {2}) == frozenset({1})
    g2 = build_root_system("G2")
    assert removal_set(g2, {1}) == removal_set_oracle(g2, {1}) == frozenset({2})
    assert removal_set(g2, {2}) == removal_set_oracle(g2, {2}) == frozenset()


def test_oracle_trivial_levi():
    for spec in ("A3", "B3", "G2"):
        sys = build_root_system(spec)
        assert removal_set_oracle(sys, set()) == frozenset()
        assert removal_set(sys, set()) == frozenset()


def test_a3_example_oracle():
    a3 = build_root_system("A3")
    assert removal_set_oracle(a3, {1}) == frozenset({2})
    assert removal_set(a3, {1}) == frozenset({2})


@pytest.mark.parametrize("spec", simple_specs(4))
def test_nodes_off_the_extended_levi_are_never_removed(spec):
    sys = build_root_system(spec)
    for levi in all_levis(sys):
        if levi == full(sys):
            continue
        removed = removal_set(sys, levi)
        allowed = levi | boundary(sys, levi)
        assert removed <= allowed


@pytest.mark.parametrize("spec", simple_specs(4))
def test_tangent_dominates_variety_dimension(spec):
    sys = build_root_system(spec)
    for levi in all_levis(sys):
        if levi == full(sys):
            continue
        _, total = tangent_report(sys, levi)
        assert total >= dim_CE(sys, levi)
        if is_smooth_canonical(sys, levi)[0]:
            assert total == dim_CE(sys, levi)
