"""Named quivers and representations used throughout the tests and demos.

Vertex naming for the two zigzag examples: the zigzag ``0 <- 1 -> 2 <- 3 -> 4 ...``
hangs off the core vertex ``"0"`` as tail 0, so integer vertex ``j > 0`` is
``TailVertex(0, j)``.  In the second example the ray ``0 -> -1 -> -2 -> ...``
is tail 1, so ``j < 0`` is ``TailVertex(1, -j)``.
"""

from __future__ import annotations

from .quiver import Arrow, FiniteQuiver, QuiverPresentation, TailArrow, TailSpec, TailVertex, make_walk
from .rep import StableRep, walk_rep


def _qp(vertices, arrows, tails) -> QuiverPresentation:
    core = FiniteQuiver(tuple(vertices), tuple(Arrow(*a) for a in arrows))
    return QuiverPresentation(core, tuple(TailSpec(*t) for t in tails))


def ray() -> QuiverPresentation:
    """``c -> . -> . -> ...``"""
    return _qp(["c"], [], [("c", "", "O")])


def coray() -> QuiverPresentation:
    """``... -> . -> . -> c``"""
    return _qp(["c"], [], [("c", "", "I")])


def zigzag() -> QuiverPresentation:
    """``0 <- 1 -> 2 <- 3 -> 4 <- ...``: no infinite path at all."""
    return _qp(["0"], [], [("0", "", "IO")])


def example2() -> QuiverPresentation:
    """The zigzag above, glued at ``0`` to the ray ``0 -> -1 -> -2 -> ...``."""
    return _qp(["0"], [], [("0", "", "IO"), ("0", "", "O")])


def dinf() -> QuiverPresentation:
    """Two leaves ``x0``, ``y`` feeding ``x1``, which starts a ray."""
    return _qp(["x0", "y", "x1"], [("a", "x0", "x1"), ("b", "y", "x1")], [("x1", "", "O")])


def figure1_star() -> QuiverPresentation:
    """A finite tree with three corays coming in and two rays going out."""
    vertices = ["l1", "l2", "l3", "g", "r1", "r2"]
    arrows = [("a1", "l1", "g"), ("a2", "l2", "g"), ("a3", "l3", "g"), ("b1", "g", "r1"), ("b2", "g", "r2")]
    tails = [("l1", "", "I"), ("l2", "", "I"), ("l3", "", "I"), ("r1", "", "O"), ("r2", "", "O")]
    return _qp(vertices, arrows, tails)


def comb() -> QuiverPresentation:
    """A tree with three branch points and two zigzag tails: neither star nor Dynkin."""
    vertices = ["c0", "c1", "c2", "p0", "p1", "p2"]
    arrows = [
        ("e0", "c0", "c1"),
        ("e1", "c2", "c1"),
        ("t0", "p0", "c0"),
        ("t1", "p1", "c1"),
        ("t2", "c2", "p2"),
    ]
    return _qp(vertices, arrows, [("c2", "", "IO"), ("c0", "", "OI")])


def a_n(orientation: str) -> QuiverPresentation:
    """Finite linear quiver ``1 - 2 - ... - n``; letter ``i`` is ``'R'`` for ``i -> i+1``, ``'L'`` otherwise."""
    n = len(orientation) + 1
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i, c in enumerate(orientation, start=1):
        if c not in "RL":
            raise ValueError("orientation letters must be 'R' or 'L'")
        s, t = (str(i), str(i + 1)) if c == "R" else (str(i + 1), str(i))
        arrows.append((f"e{i}", s, t))
    return _qp(vertices, arrows, [])


FIXTURES = {
    "ray": ray,
    "coray": coray,
    "zigzag": zigzag,
    "example2": example2,
    "dinf": dinf,
    "figure1-star": figure1_star,
    "comb": comb,
}


def zigzag_vertex(j: int):
    if j < 0:
        raise ValueError("the zigzag has no negative vertices")
    return "0" if j == 0 else TailVertex(0, j)


def example2_vertex(j: int):
    if j == 0:
        return "0"
    return TailVertex(0, j) if j > 0 else TailVertex(1, -j)


def zigzag_module(i: int, qp: QuiverPresentation | None = None) -> StableRep:
    """Thin module supported on every zigzag vertex ``j >= i``."""
    qp = qp or zigzag()
    return walk_rep(qp, make_walk(qp, start=zigzag_vertex(i), tail_out=0))


def example2_module(i: int, qp: QuiverPresentation | None = None) -> StableRep:
    """Thin module supported on ``j >= i`` in the second example (``i`` may be negative)."""
    qp = qp or example2()
    if i >= 0:
        return walk_rep(qp, make_walk(qp, start=example2_vertex(i), tail_out=0))
    steps = [(TailArrow(1, d), -1) for d in range(-i, 0, -1)]
    return walk_rep(qp, make_walk(qp, steps, start=example2_vertex(i), tail_out=0))


def example2_full(qp: QuiverPresentation | None = None) -> StableRep:
    """Thin module supported on every vertex of the second example."""
    qp = qp or example2()
    return walk_rep(qp, make_walk(qp, start="0", tail_in=1, tail_out=0))
