"""Hypothesis strategy for random stable representations on the shipped fixtures."""

from hypothesis import strategies as st

from lfrep.fixtures import FIXTURES
from lfrep.linalg import Matrix
from lfrep.quiver import TailArrow, TailVertex, Window
from lfrep.rep import StableRep

FIXTURE_NAMES = sorted(FIXTURES)
_QUIVERS = {name: make() for name, make in FIXTURES.items()}


@st.composite
def stable_reps(draw, names=FIXTURE_NAMES, max_dim: int = 2):
    """A random representation: small dimensions, entries in {-1, 0, 1, 2},
    each tail either eventually zero or eventually 1-dimensional."""
    name = draw(st.sampled_from(names))
    qp = _QUIVERS[name]
    n = len(qp.tails)
    depths = tuple(draw(st.integers(2, 3)) for _ in range(n))
    tags = tuple(draw(st.integers(0, 1)) for _ in range(n))
    win = Window(qp, depths)
    fixed = {}
    for k, d in enumerate(depths):
        fixed[qp.tail_vertex(k, d - 1)] = tags[k]
        fixed[TailVertex(k, d)] = tags[k]
    dims = {v: fixed[v] if v in fixed else draw(st.integers(0, max_dim)) for v in win.vertices}
    entry = st.sampled_from([-1, 0, 1, 2])
    maps = {}
    for a in win.arrows:
        r, c = dims[a.target], dims[a.source]
        if isinstance(a.id, TailArrow) and a.id.depth == depths[a.id.tail]:
            maps[a.id] = Matrix.identity(r)
        else:
            maps[a.id] = Matrix([[draw(entry) for _ in range(c)] for _ in range(r)], c)
    return StableRep(qp, depths, dims, maps, tags)


def fixture_name(qp) -> str:
    return next(name for name, q in _QUIVERS.items() if q == qp)


def same_quiver(m, max_dim: int = 1):
    """Strategy for a second representation on the quiver of ``m``."""
    return stable_reps(names=[fixture_name(m.qp)], max_dim=max_dim)
