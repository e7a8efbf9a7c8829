"""Randomized invariants over stable representations of the shipped fixtures."""

from collections import Counter

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from lfrep.homs import find_isomorphism, hom_dim, hom_space, is_indecomposable, morphism_parts
from lfrep.rep import common_extension, dualize, projective_at
from lfrep.status import is_in_rrep, presentation_status
from reps import same_quiver, stable_reps

EXAMPLES: Counter = Counter()  # representations drawn, per property

SETTINGS = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@SETTINGS
@given(stable_reps())
def test_double_dual_is_isomorphic_and_flags_swap(m):
    EXAMPLES["duality"] += 1
    dd = dualize(dualize(m))
    assert dd.qp == m.qp
    assert find_isomorphism(dd, m) is not None
    assert presentation_status(dualize(m)) == presentation_status(m).swapped()


@SETTINGS
@given(stable_reps(), st.data())
def test_yoneda(m, data):
    EXAMPLES["yoneda"] += 1
    a = data.draw(st.sampled_from(list(m.window.vertices)))
    assert hom_dim(projective_at(m.qp, a), m) == m.dim(a)


@SETTINGS
@given(stable_reps(max_dim=1), st.data())
def test_invariant_under_window_enlargement(m, data):
    n = data.draw(same_quiver(m))
    EXAMPLES["window"] += 2
    big = m.enlarged(3)
    assert big == m
    assert big.tags == m.tags and big.is_finite_dimensional == m.is_finite_dimensional
    assert big.dim_vector(m.depths) == m.dim_vector()
    assert presentation_status(big) == presentation_status(m)
    assert is_indecomposable(big) == is_indecomposable(m)
    assert is_in_rrep(big) == is_in_rrep(m)
    assert hom_dim(big, n.enlarged(3)) == hom_dim(m, n)


@SETTINGS
@given(stable_reps(max_dim=1), st.data())
def test_exact_sequences_are_additive(m, data):
    n = data.draw(same_quiver(m))
    EXAMPLES["exactness"] += 2
    for f in hom_space(m, n)[:3]:
        parts = morphism_parts(f)
        for out in (parts.kernel, parts.image, parts.cokernel):
            assert not out.problems()
        src, ker, img, tgt, cok = common_extension(f.source, parts.kernel, parts.image, f.target, parts.cokernel)
        for v in src.window.vertices:
            assert src.dims[v] == ker.dims[v] + img.dims[v]
            assert tgt.dims[v] == img.dims[v] + cok.dims[v]
        for k in range(len(src.tags)):
            assert src.tags[k] == ker.tags[k] + img.tags[k]
            assert tgt.tags[k] == img.tags[k] + cok.tags[k]
        assert parts.kernel_inclusion.is_mono() and parts.cokernel_projection.is_epi()
        assert parts.kernel_inclusion.then(f).is_zero()
        assert f.then(parts.cokernel_projection).is_zero()
