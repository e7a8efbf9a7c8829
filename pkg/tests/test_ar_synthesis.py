import pytest

from lfrep.chains import chain_explore, neighbours, repeated_classes, thin_family
from lfrep.dot import count_dot, export_dot
from lfrep.fixtures import FIXTURES, a_n, coray, example2, example2_full, example2_module, ray, zigzag, zigzag_module
from lfrep.homs import is_isomorphic
from lfrep.inventory import OMEGA, component_inventory, inventory_from_representations
from lfrep.knitting import knit_finite, knit_preinjective, knit_preprojective
from lfrep.oracle import all_orientations, build_catalog, oracle_ar_quiver
from lfrep.quiver import TailVertex, classify_quiver
from lfrep.rep import injective_at, projective_at, simple_at
from lfrep.verify import knit_matches_oracle
from lfrep.wings import (
    Bounds,
    Interval,
    convexity_violations,
    quasi_simple,
    quasi_wing,
    tau,
    wing_generators,
    za_band,
    za_predecessors,
    za_successors,
)


# -- inventory -------------------------------------------------------------------------


def test_inventory_examples():
    inv = component_inventory(ray())
    assert (inv.preprojective_full, inv.preinjective_full, inv.quasi_wings, inv.linear_components) == (
        False,
        True,
        0,
        False,
    )
    inv = component_inventory(zigzag())
    assert (inv.preprojective_full, inv.preinjective_full, inv.quasi_wings, inv.linear_components) == (
        True,
        True,
        0,
        True,
    )
    inv = component_inventory(example2())
    assert (inv.preprojective_full, inv.preinjective_full, inv.quasi_wings, inv.linear_components) == (
        False,
        True,
        2,
        True,
    )


def test_inventory_json_shape():
    doc = component_inventory(FIXTURES["comb"]()).to_json()
    assert set(doc) == {"preprojective_full", "preinjective_full", "quasi_wings", "wing_constraints", "linear_components"}
    assert doc["quasi_wings"] == OMEGA
    assert component_inventory(FIXTURES["dinf"]()).quasi_wings == 1


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_inventory_routes_agree(name):
    qp = FIXTURES[name]()
    inv = component_inventory(qp)
    assert inv == inventory_from_representations(qp)
    r = classify_quiver(qp)
    assert inv.preprojective_full == (not r.has_infinite_sourced_paths)
    assert inv.preinjective_full == (not r.has_infinite_sinked_paths)
    assert inv.linear_components == (not r.is_star)
    assert inv.finite_wings == (r.has_infinite_sourced_paths and r.has_infinite_sinked_paths)


def test_inventory_rejects_finite_quivers():
    with pytest.raises(ValueError):
        component_inventory(a_n("R"))


# -- knitting ------------------------------------------------------------------------------


def test_knit_a2():
    comp = knit_preprojective(a_n("R"), 1)
    res = {kv.key: kv.dims for kv in comp.resolved()}
    assert res == {(0, "1"): (1, 1), (0, "2"): (0, 1), (1, "2"): (1, 0)}
    assert (1, "1") not in comp.vertices
    assert not comp.unresolved() and not comp.mesh_violations()


def test_knit_a3_matches_oracle():
    qp = a_n("RR")
    comp = knit_preprojective(qp, 2)
    assert len(comp.resolved()) == 6
    ok, detail = knit_matches_oracle(oracle_ar_quiver(build_catalog(qp), sequences=False), comp)
    assert ok, detail


@pytest.mark.parametrize("o", all_orientations(5))
def test_knitting_matches_oracle_a5(o):
    qp = a_n(o)
    ok, detail = knit_matches_oracle(oracle_ar_quiver(build_catalog(qp), sequences=False), knit_finite(qp))
    assert ok, detail


def test_knit_ray_slice_zero_and_boundary():
    qp = ray()
    comp = knit_preprojective(qp, 2, 6)
    for d in range(0, 7):
        v = "c" if d == 0 else TailVertex(0, d)
        kv = comp.vertices[(0, v)]
        if kv.resolved:
            assert comp.dim_vector((0, v)) == projective_at(qp, v).dim_vector((6,))
    # tail depth beyond R - (n + 1) cannot be resolved
    assert any(not kv.resolved for kv in comp.vertices.values())
    for kv in comp.unresolved():
        assert kv.vertex != "c" or kv.slice > 0
    assert not comp.mesh_violations() and comp.is_closed()


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_knitted_fixtures_are_meshed_and_closed(name):
    qp = FIXTURES[name]()
    for comp in (knit_preprojective(qp, 3, 6), knit_preinjective(qp, 3, 6)):
        assert not comp.mesh_violations()
        assert comp.is_closed()


def test_preinjective_of_a2():
    comp = knit_preinjective(a_n("R"), 1)
    assert sorted(kv.dims for kv in comp.resolved()) == [(0, 1), (1, 0), (1, 1)]
    assert all(kv.slice <= 0 for kv in comp.resolved())


def test_preinjective_of_coray_starts_with_injectives():
    qp = coray()
    comp = knit_preinjective(qp, 2, 6)
    kv = comp.vertices[(0, "c")]
    assert kv.resolved and comp.dim_vector((0, "c")) == injective_at(qp, "c").dim_vector((6,))


@pytest.mark.parametrize("name", sorted(FIXTURES) + ["A4"])
def test_preinjective_is_dual_of_opposite(name):
    qp = a_n("RLR") if name == "A4" else FIXTURES[name]()
    radius = None if name == "A4" else 6
    inj = knit_preinjective(qp, 3, radius)
    proj = knit_preprojective(qp.opposite(), 3, radius)
    assert {(-n, x): (kv.status, kv.dims) for (n, x), kv in proj.vertices.items()} == {
        k: (kv.status, kv.dims) for k, kv in inj.vertices.items()
    }


def test_knit_finite_rejects_tails():
    with pytest.raises(ValueError):
        knit_finite(ray())


# -- quasi-wings -------------------------------------------------------------------------------


def test_za_inf_translation():
    v = (2, 3)
    assert tau(v) == (1, 3)
    for w in za_successors(v):
        assert v in za_predecessors(w)
    assert len(za_predecessors(quasi_simple(0))) == 1 and len(za_successors(quasi_simple(0))) == 1


def hull(interval: Interval, box: Bounds) -> set:
    """Vertices on some path between two generators, by brute-force reachability."""
    ambient = set(za_band(box).vertices)

    def reach(start, step):
        seen, todo = {start}, [start]
        while todo:
            for w in step(todo.pop()):
                if w in ambient and w not in seen:
                    seen.add(w)
                    todo.append(w)
        return seen

    gens = [quasi_simple(i) for i in range(interval.lo, interval.hi + 1)]
    out = set()
    for a in gens:
        for b in gens:
            out |= reach(a, za_successors) & reach(b, za_predecessors)
    return out


@pytest.mark.parametrize("lo,hi", [(0, 0), (0, 2), (-1, 1), (-3, 4), (5, 9)])
def test_finite_wings_are_generated_hulls(lo, hi):
    iv = Interval(lo, hi)
    w = quasi_wing(iv)
    assert set(w.vertices) == hull(iv, Bounds(-hi - 2, -lo + 2, hi - lo + 4))
    assert len(w) == len(iv) * (len(iv) + 1) // 2
    assert not convexity_violations(w)


def test_wing_sizes():
    assert len(quasi_wing(Interval(3, 3))) == 1
    assert len(quasi_wing(Interval(0, 2))) == 6
    assert wing_generators(Interval(0, 2)) == [quasi_simple(2), quasi_simple(1), quasi_simple(0)]


def test_full_wing_is_a_band():
    box = Bounds(0, 3, 5)
    assert quasi_wing(Interval(None, None), box).vertices == za_band(box).vertices


@pytest.mark.parametrize("iv", [Interval(None, 2), Interval(-1, None), Interval(None, None)])
def test_windowed_infinite_wings_are_convex(iv):
    box = Bounds(-5, 5, 6)
    assert not convexity_violations(quasi_wing(iv, box), within=box)


def test_empty_interval_and_missing_window():
    with pytest.raises(ValueError):
        Interval(2, 1)
    with pytest.raises(ValueError):
        quasi_wing(Interval(0, None))


def test_convexity_detects_gaps():
    from lfrep.wings import Fragment

    # (0, 1) -> (0, 2) -> (1, 1) passes outside the fragment
    frag = Fragment(((0, 1), (1, 1)))
    assert convexity_violations(frag)


# -- chains -----------------------------------------------------------------------------


@pytest.fixture(scope="module")
def zigzag_chain():
    return chain_explore(zigzag(), zigzag_module(0), 4)


def test_example1_chain(zigzag_chain):
    c = zigzag_chain
    expect = [zigzag_module(i) for i in (4, 2, 0, 1, 3)]
    assert len(c.members) == 5
    assert all(is_isomorphic(a, b) for a, b in zip(c.members, expect))
    assert [l.kind for l in c.links] == ["mono", "mono", "epi", "epi"]
    assert (c.left_end, c.right_end) == ("steps", "steps")
    assert repeated_classes(c.members) == []


def test_chain_rejects_rrep_and_decomposable_seeds():
    with pytest.raises(ValueError, match="rrep"):
        chain_explore(zigzag(), simple_at(zigzag(), "0"), 2)
    from lfrep.rep import direct_sum

    with pytest.raises(ValueError, match="indecomposable"):
        chain_explore(zigzag(), direct_sum(zigzag_module(0), zigzag_module(2)), 2)


def test_example2_chain_ends_at_full_module():
    c = chain_explore(example2(), example2_full(), 3)
    assert c.right_end == "terminated"
    expect = [example2_module(i) for i in (6, 4, 2)] + [example2_full()]
    assert all(is_isomorphic(a, b) for a, b in zip(c.members, expect)) and len(c.members) == 4


def test_ambiguity_is_reported_not_resolved():
    qp = zigzag()
    fam = thin_family(qp, 8)
    # doubling every member makes every neighbour appear twice
    doubled = fam + fam
    found = neighbours(zigzag_module(0), "right", doubled)
    assert len(found) == 2
    c = chain_explore(qp, zigzag_module(0), 2, family=doubled)
    assert c.left_end == c.right_end == "ambiguous"
    assert len(c.members) == 1 and len(c.ambiguities) == 2


def test_thin_family_counts():
    # a 7-vertex line has 7 * 8 / 2 connected subsets
    assert len(thin_family(zigzag(), 6)) == 28


# -- DOT export -----------------------------------------------------------------------------


def test_dot_single_wing_vertex():
    text = export_dot(quasi_wing(Interval(0, 0)))
    assert count_dot(text) == (1, 0)
    assert text.startswith("digraph")


def test_dot_a2_knitting():
    assert count_dot(export_dot(knit_preprojective(a_n("R"), 1))) == (3, 2)


def test_dot_example1_chain(zigzag_chain):
    assert count_dot(export_dot(zigzag_chain)) == (5, 4)


def test_dot_marks_unresolved():
    text = export_dot(knit_preprojective(ray(), 2, 6))
    assert "UNRESOLVED" in text and "dashed" in text


def test_dot_oracle_and_determinism():
    ar = oracle_ar_quiver(build_catalog(a_n("RL")), sequences=False)
    text = export_dot(ar)
    assert count_dot(text) == (6, 6)
    assert text == export_dot(oracle_ar_quiver(build_catalog(a_n("RL")), sequences=False))


def test_dot_rejects_other_objects():
    with pytest.raises(TypeError):
        export_dot(42)
